#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "lipcoh/gamma_complex.hpp"

namespace lipcoh {

/**
 * One simplicial factor of the parameter space: R^dim carrying the standard
 * staircase (Kuhn) triangulation, on which the group acts by the lattice
 * translations rho . ab(gamma).  rho has dim rows and spec.rank columns.
 */
struct KuhnFactor {
    int dim = 1;
    std::vector<std::vector<std::int64_t>> rho;
};

/**
 * Simplex of a Kuhn factor at the origin: a strictly increasing chain of
 * nonempty subsets of the coordinate set, stored as bitmasks.  The simplex
 * spanned is [0, chi(B_1), ..., chi(B_j)] and its translates.
 */
struct KuhnFlag {
    std::vector<std::uint32_t> sets;
    int dim() const { return static_cast<int>(sets.size()); }
    bool operator==(const KuhnFlag&) const = default;
    auto operator<=>(const KuhnFlag&) const = default;
};

/// Orbit-representative cell of the product space: one flag per Kuhn factor
/// plus the canonical residue of the base vertex modulo the translation
/// lattice.  Line factors (if any) implicitly carry one unit edge each.
struct ParamCellRef {
    std::vector<KuhnFlag> flags;
    std::vector<std::int64_t> residue;
    bool operator==(const ParamCellRef&) const = default;
    auto operator<=>(const ParamCellRef&) const = default;
};

/**
 * Parameter space P = (product of Kuhn factors) x R^{lines} with the diagonal
 * translation action through the stacked lattice map.  Line factors carry the
 * infinite unit-interval cycle and no group action; chains over this space
 * implicitly tensor with that cycle once per line factor.
 *
 * Requires the translation lattice to have finite index in Z^M (otherwise the
 * quotient has infinitely many cells and the engine declines the input).
 */
class ParamSpace {
  public:
    ParamSpace(GroupSpec spec, std::vector<KuhnFactor> factors, int line_factors = 0);

    const GroupSpec& group() const { return spec_; }
    const std::vector<KuhnFactor>& factors() const { return factors_; }
    int line_factors() const { return lines_; }
    int lattice_dim() const { return lattice_dim_; }          // M
    int ambient_dim() const { return lattice_dim_ + lines_; } // n
    int top_degree() const;
    Int quotient_index() const { return index_; }

    std::shared_ptr<const OrbitCellComplex> complex() const { return complex_; }

    int orbit_index(int degree, const ParamCellRef& cell) const;
    const ParamCellRef& orbit_cell(int degree, int idx) const;
    int coordinate_offset(int factor) const { return factor_offset_[factor]; }

    // lattice arithmetic
    std::vector<std::int64_t> canonical_residue(std::vector<std::int64_t> v) const;
    bool in_lattice(const std::vector<std::int64_t>& u) const;
    /// deck translation vector of a group element
    std::vector<std::int64_t> translation_of(const GroupElement& g) const;
    /// minimal-word-length group element translating by u (ties: lex least)
    GroupElement lattice_preimage(const std::vector<std::int64_t>& u) const;
    /// sample generating set of the (uniform) cell stabilizer ker(rho . ab)
    const std::vector<GroupElement>& stabilizer_sample() const { return stabilizer_; }
    bool action_is_free() const { return stabilizer_.empty(); }

    // canonical chains (coefficients in Z)
    InvariantChain zero_chain(int degree, ModuleTag tag) const;
    /// orientation-coherent sum of the top cells; a cycle
    InvariantChain fundamental_cycle() const;
    /// sum of the edges of one coordinate direction of one factor; a cycle
    InvariantChain generator_cycle(int factor, int coordinate) const;
    /// sum of all vertices with coefficient 1 (degree = number of line factors)
    InvariantChain vertex_chain() const;

  private:
    GroupSpec spec_;
    std::vector<KuhnFactor> factors_;
    int lines_ = 0;
    int lattice_dim_ = 0;
    std::vector<int> factor_offset_;

    std::vector<std::vector<std::int64_t>> hnf_; // lower-triangular column basis of the lattice
    Int index_ = 1;
    std::vector<GroupElement> stabilizer_;
    mutable std::mutex preimage_mutex_;
    mutable std::map<std::vector<std::int64_t>, GroupElement> preimage_cache_;

    std::vector<std::vector<KuhnFlag>> flags_by_dim_; // per factor: all flags, grouped separately
    std::vector<std::vector<std::int64_t>> residues_;

    std::shared_ptr<OrbitCellComplex> complex_;
    std::vector<std::vector<ParamCellRef>> cells_;      // per degree
    std::vector<std::map<ParamCellRef, int>> cell_index_;

    void build_lattice();
    void build_cells();
};

/// subset bitmask -> 0/1 offset vector of length dim
std::vector<std::int64_t> mask_offset(std::uint32_t mask, int dim);

} // namespace lipcoh
