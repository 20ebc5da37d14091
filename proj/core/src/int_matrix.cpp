#include "lipcoh/int_matrix.hpp"

#include <algorithm>
#include <list>

namespace lipcoh {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b.at(k, j) != 0) out.at(i, j) += v * b.at(k, j);
        }
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("matrix difference shape mismatch");
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw ValidationError("matrix apply shape mismatch");
    std::vector<Int> y(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> f;
    for (int i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D.at(i, i) != 0) f.push_back(D.at(i, i));
    return f;
}

namespace {

// elementary operations tracked through U (rows) and V (cols)
struct SnfWork {
    IntMatrix D, U, V;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < D.cols(); ++c) std::swap(D.at(i, c), D.at(j, c));
        for (int c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < D.rows(); ++r) std::swap(D.at(r, i), D.at(r, j));
        for (int r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    void add_row(int dst, int src, const Int& q) { // row_dst += q * row_src
        if (q == 0) return;
        for (int c = 0; c < D.cols(); ++c) D.at(dst, c) += q * D.at(src, c);
        for (int c = 0; c < U.cols(); ++c) U.at(dst, c) += q * U.at(src, c);
    }
    void add_col(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < D.rows(); ++r) D.at(r, dst) += q * D.at(r, src);
        for (int r = 0; r < V.rows(); ++r) V.at(r, dst) += q * V.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < D.cols(); ++c) D.at(i, c) = -D.at(i, c);
        for (int c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
    }
};

} // namespace

SmithResult smith_normal_form(const IntMatrix& A) {
    SnfWork w{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols())};
    const int n = std::min(A.rows(), A.cols());

    for (int t = 0; t < n; ++t) {
        for (;;) {
            // pivot: minimal absolute value among nonzero entries of the tail
            int pi = -1, pj = -1;
            for (int i = t; i < w.D.rows(); ++i)
                for (int j = t; j < w.D.cols(); ++j) {
                    const Int& v = w.D.at(i, j);
                    if (v == 0) continue;
                    if (pi < 0 || int_abs(v) < int_abs(w.D.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done; // tail is zero
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < w.D.rows(); ++i) {
                if (w.D.at(i, t) == 0) continue;
                Int q = w.D.at(i, t) / w.D.at(t, t); // truncates toward zero
                w.add_row(i, t, -q);
                if (w.D.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < w.D.cols(); ++j) {
                if (w.D.at(t, j) == 0) continue;
                Int q = w.D.at(t, j) / w.D.at(t, t);
                w.add_col(j, t, -q);
                if (w.D.at(t, j) != 0) clean = false;
            }
            if (clean) break; // row t and column t cleared
        }
    }
done:

    // normalize signs
    for (int t = 0; t < n; ++t)
        if (w.D.at(t, t) < 0) w.negate_row(t);

    // enforce divisibility d_t | d_{t+1}; gcd-combine adjacent pairs
    for (bool again = true; again;) {
        again = false;
        for (int t = 0; t + 1 < n; ++t) {
            const Int &a = w.D.at(t, t), &b = w.D.at(t + 1, t + 1);
            if (a == 0 && b != 0) { // push zeros to the end
                w.swap_rows(t, t + 1);
                w.swap_cols(t, t + 1);
                again = true;
                continue;
            }
            if (a == 0 || b % a == 0) continue;
            // [[a,0],[0,b]] -> gcd shape via one column add then euclid steps
            w.add_col(t, t + 1, 1); // column t becomes (a, b)^T
            for (;;) {
                if (w.D.at(t + 1, t) == 0) break;
                Int q = w.D.at(t, t) / w.D.at(t + 1, t);
                w.add_row(t, t + 1, -q);
                if (w.D.at(t, t) == 0) {
                    w.swap_rows(t, t + 1);
                    continue;
                }
                q = w.D.at(t + 1, t) / w.D.at(t, t);
                w.add_row(t + 1, t, -q);
            }
            // clear the fill-in in row t
            {
                Int q = w.D.at(t, t + 1) / w.D.at(t, t);
                w.add_col(t + 1, t, -q);
            }
            if (w.D.at(t, t) < 0) w.negate_row(t);
            if (w.D.at(t + 1, t + 1) < 0) w.negate_row(t + 1);
            again = true;
        }
    }

    SmithResult res;
    res.rank = 0;
    for (int t = 0; t < n; ++t)
        if (w.D.at(t, t) != 0) ++res.rank;
    res.U = std::move(w.U);
    res.D = std::move(w.D);
    res.V = std::move(w.V);
    return res;
}

int matrix_rank(IntMatrix A) {
    // fraction-free Gaussian elimination (Bareiss), rank only
    int rank = 0;
    Int prev = 1;
    int rows = A.rows(), cols = A.cols();
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (A.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) std::swap(A.at(pivot, j), A.at(rank, j));
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                A.at(i, j) = (A.at(rank, col) * A.at(i, j) - A.at(i, col) * A.at(rank, j)) / prev;
            A.at(i, col) = 0;
        }
        prev = A.at(rank, col);
        ++rank;
    }
    return rank;
}

Int determinant(IntMatrix A) {
    if (A.rows() != A.cols()) throw ValidationError("determinant of a non-square matrix");
    int n = A.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (A.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                A.at(i, j) = (A.at(k, k) * A.at(i, j) - A.at(i, k) * A.at(k, j)) / prev;
        prev = A.at(k, k);
    }
    return sign > 0 ? A.at(n - 1, n - 1) : Int(-A.at(n - 1, n - 1));
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& A) {
    SmithResult s = smith_normal_form(A);
    int n = std::min(A.rows(), A.cols());
    int rank = 0;
    for (int i = 0; i < n; ++i)
        if (s.D.at(i, i) != 0) ++rank;
    std::vector<std::vector<Int>> basis;
    for (int j = rank; j < A.cols(); ++j) {
        std::vector<Int> v(A.cols());
        for (int i = 0; i < A.cols(); ++i) v[i] = s.V.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& A, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw ValidationError("solve shape mismatch");
    SmithResult s = smith_normal_form(A);
    std::vector<Int> ub = s.U.apply(b);
    std::vector<Int> y(A.cols(), 0);
    int n = std::min(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i) {
        Int d = (i < n) ? s.D.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return s.V.apply(y);
}

// ---------------------------------------------------------------------------

void IntLinearSystem::add_row(std::map<int, Int> coeffs, Int rhs) {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (it->first < 0 || it->first >= nvars_) throw ValidationError("row variable out of range");
        it = (it->second == 0) ? coeffs.erase(it) : std::next(it);
    }
    rows_.push_back(Row{std::move(coeffs), std::move(rhs)});
}

struct IntLinearSystem::Reduction {
    // pivot stack: (var, row) pairs in elimination order; row has coeff +-1 on var
    std::vector<std::pair<int, Row>> pivots;
    std::vector<Row> residual; // no +-1 coefficients left
    bool contradiction = false;
};

IntLinearSystem::Reduction IntLinearSystem::reduce() const {
    Reduction red;
    std::list<Row> active(rows_.begin(), rows_.end());

    auto drop_trivial = [&](std::list<Row>::iterator it) -> std::optional<std::list<Row>::iterator> {
        if (it->a.empty()) {
            if (it->rhs != 0) {
                red.contradiction = true;
                return std::nullopt;
            }
            return active.erase(it);
        }
        return std::next(it);
    };

    for (auto it = active.begin(); it != active.end();) {
        auto nx = drop_trivial(it);
        if (!nx) return red;
        it = *nx;
    }

    for (;;) {
        // first active row with a +-1 coefficient, lowest such variable
        auto pr = active.end();
        int pv = -1;
        for (auto it = active.begin(); it != active.end(); ++it) {
            for (const auto& [v, c] : it->a)
                if (c == 1 || c == -1) {
                    pr = it;
                    pv = v;
                    break;
                }
            if (pr != active.end()) break;
        }
        if (pr == active.end()) break;

        Row pivot = *pr;
        active.erase(pr);
        const Int pc = pivot.a.at(pv);
        // substitute into every remaining active row containing pv
        for (auto it = active.begin(); it != active.end();) {
            auto found = it->a.find(pv);
            if (found == it->a.end()) {
                ++it;
                continue;
            }
            Int factor = found->second / pc; // pc is +-1
            for (const auto& [v, c] : pivot.a) {
                Int& slot = it->a[v];
                slot -= factor * c;
                if (slot == 0) it->a.erase(v);
            }
            it->rhs -= factor * pivot.rhs;
            auto nx = drop_trivial(it);
            if (!nx) return red;
            it = *nx;
        }
        red.pivots.emplace_back(pv, std::move(pivot));
    }
    red.residual.assign(active.begin(), active.end());
    return red;
}

std::optional<std::vector<Int>> IntLinearSystem::solve() const {
    Reduction red = reduce();
    if (red.contradiction) return std::nullopt;

    std::vector<Int> x(nvars_, 0);

    if (!red.residual.empty()) {
        // dense Smith solve on the residual core
        std::vector<int> vars;
        {
            std::map<int, int> seen;
            for (const auto& r : red.residual)
                for (const auto& [v, c] : r.a) seen.emplace(v, 0);
            for (auto& [v, idx] : seen) {
                idx = static_cast<int>(vars.size());
                vars.push_back(v);
            }
            IntMatrix A(static_cast<int>(red.residual.size()), static_cast<int>(vars.size()));
            std::vector<Int> b(red.residual.size());
            for (std::size_t i = 0; i < red.residual.size(); ++i) {
                for (const auto& [v, c] : red.residual[i].a) A.at(static_cast<int>(i), seen.at(v)) = c;
                b[i] = red.residual[i].rhs;
            }
            auto sol = solve_integer(A, b);
            if (!sol) return std::nullopt;
            for (std::size_t j = 0; j < vars.size(); ++j) x[vars[j]] = (*sol)[j];
        }
    }

    // back-substitute pivots in reverse elimination order
    for (auto it = red.pivots.rbegin(); it != red.pivots.rend(); ++it) {
        const auto& [v, row] = *it;
        Int acc = row.rhs;
        for (const auto& [u, c] : row.a)
            if (u != v) acc -= c * x[u];
        x[v] = acc / row.a.at(v); // coefficient is +-1
    }
    return x;
}

int IntLinearSystem::rank() const {
    Reduction red = reduce();
    int r = static_cast<int>(red.pivots.size());
    if (red.contradiction) {
        // rank of the coefficient matrix ignores the rhs; recompute without it
        IntLinearSystem hom(nvars_);
        for (const auto& row : rows_) hom.add_row(row.a, 0);
        return hom.rank();
    }
    if (!red.residual.empty()) {
        std::map<int, int> seen;
        for (const auto& row : red.residual)
            for (const auto& [v, c] : row.a) seen.emplace(v, 0);
        int idx = 0;
        for (auto& [v, i] : seen) i = idx++;
        IntMatrix A(static_cast<int>(red.residual.size()), idx);
        for (std::size_t i = 0; i < red.residual.size(); ++i)
            for (const auto& [v, c] : red.residual[i].a) A.at(static_cast<int>(i), seen.at(v)) = c;
        r += matrix_rank(A);
    }
    return r;
}

} // namespace lipcoh
