#pragma once

// Test-side oracles, independent of the library paths they check:
//  - plain simplicial chain complexes built from facet lists (homology
//    reference values for the circle, torus, RP^2, ...)
//  - small random data generators

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "lipcoh/homology.hpp"
#include "lipcoh/rng.hpp"

namespace oracle {

/// boundary matrices of the simplicial complex generated by the given facets
/// (vertex-id lists); orientation by increasing vertex order
inline lipcoh::IntChainComplex complex_from_facets(const std::vector<std::vector<int>>& facets) {
    using Simplex = std::vector<int>;
    int dim = 0;
    for (const auto& f : facets) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    std::vector<std::set<Simplex>> simplices(dim + 1);
    // close downward
    auto add_with_faces = [&](auto&& self, Simplex s) -> void {
        std::sort(s.begin(), s.end());
        int k = static_cast<int>(s.size()) - 1;
        if (!simplices[k].insert(s).second) return;
        if (k == 0) return;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            self(self, std::move(face));
        }
    };
    for (const auto& f : facets) add_with_faces(add_with_faces, f);

    std::vector<std::map<Simplex, int>> index(dim + 1);
    for (int k = 0; k <= dim; ++k) {
        int i = 0;
        for (const auto& s : simplices[k]) index[k][s] = i++;
    }
    lipcoh::IntChainComplex c;
    c.ranks.resize(dim + 1);
    c.differentials.resize(dim + 1);
    for (int k = 0; k <= dim; ++k) c.ranks[k] = static_cast<int>(simplices[k].size());
    for (int k = 1; k <= dim; ++k) {
        lipcoh::IntMatrix m(c.ranks[k - 1], c.ranks[k]);
        for (const auto& s : simplices[k]) {
            int col = index[k].at(s);
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                m.at(index[k - 1].at(face), col) += (i % 2 == 0) ? 1 : -1;
            }
        }
        c.differentials[k] = std::move(m);
    }
    return c;
}

/// the minimal 6-vertex triangulation of RP^2 (every pair of vertices is an
/// edge; 10 facets, Euler characteristic 1)
inline std::vector<std::vector<int>> rp2_facets() {
    return {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
            {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
}

} // namespace oracle
