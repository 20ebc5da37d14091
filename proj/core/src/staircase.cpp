#include "lipcoh/staircase.hpp"

#include <stdexcept>

namespace lipcoh {

std::vector<StaircasePiece> staircase_pieces(const std::vector<int>& dims) {
    for (int d : dims)
        if (d < 0) throw std::invalid_argument("negative simplex dimension");
    std::vector<StaircasePiece> out;
    const int m = static_cast<int>(dims.size());
    std::vector<int> pos(m, 0);
    std::vector<int> steps; // factor index per step
    auto rec = [&](auto&& self) -> void {
        bool done = true;
        for (int f = 0; f < m; ++f)
            if (pos[f] < dims[f]) done = false;
        if (done) {
            StaircasePiece piece;
            // parity: pairs of steps taken in inverted factor order
            piece.sign = 1;
            for (std::size_t a = 0; a < steps.size(); ++a)
                for (std::size_t b = a + 1; b < steps.size(); ++b)
                    if (steps[a] > steps[b]) piece.sign = -piece.sign;
            std::vector<int> v(m, 0);
            piece.vertices.push_back(v);
            for (int f : steps) {
                ++v[f];
                piece.vertices.push_back(v);
            }
            out.push_back(std::move(piece));
            return;
        }
        for (int f = 0; f < m; ++f) {
            if (pos[f] == dims[f]) continue;
            ++pos[f];
            steps.push_back(f);
            self(self);
            steps.pop_back();
            --pos[f];
        }
    };
    rec(rec);
    return out;
}

std::vector<std::pair<std::vector<std::pair<int, int>>, int>> staircase(int k, int l) {
    std::vector<std::pair<std::vector<std::pair<int, int>>, int>> out;
    for (const auto& piece : staircase_pieces({k, l})) {
        std::vector<std::pair<int, int>> path;
        path.reserve(piece.vertices.size());
        for (const auto& v : piece.vertices) path.emplace_back(v[0], v[1]);
        out.emplace_back(std::move(path), piece.sign);
    }
    return out;
}

} // namespace lipcoh
