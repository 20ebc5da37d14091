#pragma once

#include <vector>

#include "lipcoh/int_matrix.hpp"

namespace lipcoh {

/// Chain complex of finitely generated free Z-modules.
struct IntChainComplex {
    std::vector<int> ranks;              // ranks[k]
    std::vector<IntMatrix> differentials; // differentials[k] = d_k : C_k -> C_{k-1}, k >= 1; index 0 unused

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
    int rank(int k) const { return (k < 0 || k > top_degree()) ? 0 : ranks[k]; }
    void validate() const; // shapes and d.d = 0
};

struct HomologyGroup {
    int betti = 0;
    std::vector<Int> torsion; // invariant factors > 1
    bool operator==(const HomologyGroup&) const = default;
};

/// integral homology per degree via Smith normal form of the differentials
std::vector<HomologyGroup> homology(const IntChainComplex& c);

} // namespace lipcoh
