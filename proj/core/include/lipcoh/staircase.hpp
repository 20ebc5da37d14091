#pragma once

#include <cstdint>
#include <vector>

namespace lipcoh {

/**
 * One simplex of the staircase triangulation of a product of simplices: a
 * monotone lattice path recorded as vertex index tuples, one index per
 * factor, plus the shuffle parity.
 */
struct StaircasePiece {
    std::vector<std::vector<int>> vertices; // path: vertices[p][factor]
    int sign = 1;
};

/**
 * Staircase triangulation of Delta^{d_0} x ... x Delta^{d_m}: all monotone
 * paths from (0,..,0) to (d_0,..,d_m), signed by shuffle parity (the number
 * of inverted step pairs between distinct factors).  The number of pieces is
 * the multinomial coefficient; for two factors, binomial(k+l, k).
 */
std::vector<StaircasePiece> staircase_pieces(const std::vector<int>& dims);

/// two-factor form: vertex sequences through the (k x l) grid with parity
std::vector<std::pair<std::vector<std::pair<int, int>>, int>> staircase(int k, int l);

} // namespace lipcoh
