#pragma once

#include <functional>
#include <map>
#include <vector>

#include "lipcoh/module_element.hpp"

namespace lipcoh {

/// Simplex of the infinite simplex spanned by the group: an ordered tuple of
/// distinct group elements (orientation = the order).
using BarTuple = std::vector<GroupElement>;

struct BarNormalization {
    bool degenerate = false; // repeated vertex
    BarTuple rep;            // canonical orbit representative, sorted, contains e
    GroupElement translate;  // tuple = translate . (signed permutation of rep)
    int sign = 1;
};

/// Canonical form of a bar simplex: translate so the tuple contains e, sort,
/// and among the |S| translated candidates keep the lexicographically least.
BarNormalization bar_normalize(const BarTuple& t);

bool bar_is_canonical(const BarTuple& t);

/// faces with alternating signs: (-1)^i . (t with vertex i dropped)
std::vector<std::pair<BarTuple, int>> bar_faces(const BarTuple& t);

/// canonical degree-k generators whose representative vertices lie in
/// ball(radius); sorted deterministically
std::vector<BarTuple> bar_generators(const GroupSpec& spec, int radius, int degree,
                                     std::uint64_t cap = kDefaultBallCap);

std::string bar_tuple_to_string(const GroupSpec& spec, const BarTuple& t);

/**
 * Equivariant cochain on the normal resolution, backed by an evaluator on
 * canonical representatives.  Evaluation on an arbitrary simplex goes through
 * bar_normalize, so equivariance and antisymmetry are structural.
 */
class BarCochain {
  public:
    using Raw = std::function<ModuleElement(const BarTuple&)>; // on canonical reps only

    BarCochain() = default;
    BarCochain(GroupSpec spec, int degree, ModuleTag tag, Raw raw)
        : spec_(std::move(spec)), degree_(degree), tag_(tag), raw_(std::move(raw)) {}

    const GroupSpec& spec() const { return spec_; }
    int degree() const { return degree_; }
    const ModuleTag& tag() const { return tag_; }

    /// value on an arbitrary simplex (0 on degenerate or wrong-length tuples)
    ModuleElement eval(const BarTuple& t) const;

    /// coboundary: (delta c)(t) = c(boundary t)
    BarCochain delta() const;

    BarCochain operator+(const BarCochain& o) const;
    BarCochain operator-(const BarCochain& o) const;
    BarCochain scaled(const Int& c) const;

    /// lift through a section on generators, extended equivariantly
    BarCochain lifted(ModuleTag target, std::function<ModuleElement(const ModuleElement&)> section) const;

    /// reinterpret values in a smaller module; validates membership on the
    /// listed generators
    BarCochain reinterpret(ModuleTag target, const std::vector<BarTuple>& check_gens) const;

    /// same cochain with evaluations cached per canonical representative
    BarCochain memoized() const;

    /// the constant integer cochain in degree 0 (the augmentation class)
    static BarCochain constant(const GroupSpec& spec, const Int& value);

    /// degree-1 cocycle [g0, g1] -> g1 - g0 in I(G)
    static BarCochain berstein_schwarz(const GroupSpec& spec);

    bool is_zero_on(const std::vector<BarTuple>& gens) const;

  private:
    GroupSpec spec_;
    int degree_ = 0;
    ModuleTag tag_;
    Raw raw_;
};

/// Z-combination of canonical degree-k generators; represents a class of the
/// coinvariant complex (the canonical lift is the combination itself).
struct BarCycle {
    int degree = 0;
    std::map<BarTuple, Int> terms;
};

/// pairing <cochain, cycle> via the canonical lift; raw module value
ModuleElement bar_pairing(const BarCochain& c, const BarCycle& z);

/// basis of degree-k cycles of the coinvariant bar complex over the given
/// generator set
std::vector<BarCycle> bar_cycle_basis(const GroupSpec& spec, int radius, int degree,
                                      std::uint64_t cap = kDefaultBallCap);

} // namespace lipcoh
