#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lipcoh/group_ring.hpp"
#include "lipcoh/int_matrix.hpp"

namespace lipcoh {

using ZGMatrix = std::vector<std::vector<GroupRingElement>>; // [row][col]

/**
 * Chain complex of finitely generated free ZG-modules, one rank and one
 * differential matrix per degree.  Differential d[k] maps degree k to k-1 and
 * has shape rank(k-1) x rank(k).  When `augmentation` is set the complex is a
 * (truncated) resolution of Z: the listed integers are the images of the
 * degree-0 generators under C_0 -> Z.
 */
struct FreeZGComplex {
    GroupSpec spec;
    std::vector<int> ranks;                       // ranks[k], k = 0..top_degree
    std::vector<ZGMatrix> differentials;          // differentials[k] = d_k for k >= 1; index 0 unused
    std::vector<std::vector<std::string>> names;  // generator names per degree (reports)
    std::optional<std::vector<Int>> augmentation; // per degree-0 generator

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
    int rank(int k) const { return (k < 0 || k > top_degree()) ? 0 : ranks[k]; }

    /// exact check that d_{k} . d_{k+1} = 0 for all degrees (and eps . d_1 = 0
    /// when augmented)
    void validate() const;

    /// apply d_k to a ZG chain in degree k
    std::vector<GroupRingElement> boundary(int k, const std::vector<GroupRingElement>& chain) const;

    /// differential with coefficients pushed through the augmentation; this is
    /// the Z-complex computing H_*(G)
    IntMatrix trivialized_differential(int k) const;

    /// Z-cycles of the trivialized complex in degree k (basis of the kernel)
    std::vector<std::vector<Int>> cycle_basis(int k) const;
};

/// Cubical resolution of Z over Z[Z^d]: one generator per subset S of the
/// coordinate set, d(e_S) = sum_j (-1)^j (t_{i_j} - 1) e_{S - i_j}.
FreeZGComplex koszul_resolution(const GroupSpec& spec);

/// Length-1 resolution for F_r from the wedge of r circles.
FreeZGComplex wedge_resolution(const GroupSpec& spec);

/// Resolution for either supported family (d <= 1 for free groups).
FreeZGComplex cellular_resolution(const GroupSpec& spec);

} // namespace lipcoh
