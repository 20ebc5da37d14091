#include "lipcoh/omega.hpp"

#include <sstream>

namespace lipcoh {

SupportCocycle SupportCocycle::generic(int dim, Rng& rng) {
    SupportCocycle w;
    w.dim = dim;
    for (int i = 0; i < dim; ++i) {
        long long jitter = 2 * rng.range(-255, 255) + 1; // odd, in [-509, 511]
        w.point.emplace_back(Rat(1024 + jitter) / Rat(2048));
    }
    return w;
}

std::string SupportCocycle::point_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) out << ",";
        out << point[i];
    }
    out << ")";
    return out.str();
}

namespace {

// rational Gaussian elimination; returns rank, optionally solves in place
int rational_rank(std::vector<std::vector<Rat>>& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

int omega_eval(const std::vector<std::vector<Rat>>& vertices, const SupportCocycle& omega) {
    const int n = omega.dim;
    if (static_cast<int>(vertices.size()) != n + 1)
        throw ValidationError("omega_eval expects an affine n-simplex (n+1 vertices)");
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != n)
            throw ValidationError("omega_eval vertex dimension mismatch");
    if (n == 0) return omega.orientation; // the point lies in the unique 0-simplex

    // edge matrix columns v_i - v_0, rhs p - v_0
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + 1));
    for (int r = 0; r < n; ++r) {
        for (int i = 1; i <= n; ++i) aug[r][i - 1] = vertices[i][r] - vertices[0][r];
        aug[r][n] = omega.point[r] - vertices[0][r];
    }

    // determinant of the edge matrix
    Rat det = 1;
    {
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m[r][c] = aug[r][c];
        int sign = 1;
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int i = col; i < n; ++i)
                if (m[i][col] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) {
                det = 0;
                break;
            }
            if (pivot != col) {
                std::swap(m[pivot], m[col]);
                sign = -sign;
            }
            for (int i = col + 1; i < n; ++i) {
                if (m[i][col] == 0) continue;
                Rat f = m[i][col] / m[col][col];
                for (int j = col; j < n; ++j) m[i][j] -= f * m[col][j];
            }
        }
        if (det != 0) {
            det = sign;
            for (int i = 0; i < n; ++i) det *= m[i][i];
        }
    }

    if (det == 0) {
        // degenerate simplex: 0 when the point avoids the affine span,
        // otherwise the point is non-generic for this run
        std::vector<std::vector<Rat>> edges(n, std::vector<Rat>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) edges[r][c] = aug[r][c];
        int rank_edges = rational_rank(edges);
        std::vector<std::vector<Rat>> full = aug;
        int rank_full = rational_rank(full);
        if (rank_full == rank_edges)
            throw GenericityViolation("base point lies on the affine span of a degenerate simplex");
        return 0;
    }

    // barycentric coordinates by elimination on the augmented system
    {
        std::vector<std::vector<Rat>> m = aug;
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int i = col; i < n; ++i)
                if (m[i][col] != 0) {
                    pivot = i;
                    break;
                }
            std::swap(m[pivot], m[col]);
            for (int i = 0; i < n; ++i) {
                if (i == col || m[i][col] == 0) continue;
                Rat f = m[i][col] / m[col][col];
                for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
            }
        }
        Rat total = 0;
        for (int i = 0; i < n; ++i) {
            Rat mu = m[i][n] / m[i][i];
            if (mu == 0) throw GenericityViolation("base point lies on a face hyperplane");
            if (mu < 0) return 0;
            total += mu;
        }
        if (total == 1) throw GenericityViolation("base point lies on a face hyperplane");
        if (total > 1) return 0;
    }
    return (det > 0 ? 1 : -1) * omega.orientation;
}

} // namespace lipcoh
