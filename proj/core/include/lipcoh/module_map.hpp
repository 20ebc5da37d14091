#pragma once

#include <iosfwd>

#include "lipcoh/bar_complex.hpp"
#include "lipcoh/cochain.hpp"

namespace lipcoh {

/**
 * Homomorphism I(G)^{x k} -> Z, truncated to tensors whose factors are
 * supported in ball(radius): integer values on the basis tensors
 * (g_1 - e) (x) ... (x) (g_k - e) with g_i in ball(radius) - {e}.
 *
 * Evaluation uses the canonical multilinear extension that kills any tuple
 * containing e; on elements of I^{x k} this agrees with the stored map.
 */
class ModuleMap {
  public:
    ModuleMap() = default;
    ModuleMap(GroupSpec spec, int order, int radius,
              std::map<std::vector<GroupElement>, Int> values)
        : spec_(std::move(spec)), order_(order), radius_(radius), values_(std::move(values)) {}

    static ModuleMap zero(GroupSpec spec, int order, int radius) {
        return ModuleMap(std::move(spec), order, radius, {});
    }

    const GroupSpec& spec() const { return spec_; }
    int order() const { return order_; }
    int radius() const { return radius_; }
    const std::map<std::vector<GroupElement>, Int>& values() const { return values_; }

    Int evaluate(const ModuleElement& x) const;

    /// coefficientwise application; raises RadiusError when a value needs
    /// tensors beyond the truncation radius
    CellCochain pushforward(const CellCochain& c) const;
    BarCochain pushforward(const BarCochain& c) const;

    /// in-ball equivariance residual: the set of (tuple, gamma) constraints
    /// violated by the stored values (empty for solver outputs)
    std::size_t equivariance_violations(std::uint64_t cap = kDefaultBallCap) const;

    void save_table(std::ostream& out) const;
    static ModuleMap load_table(std::istream& in);

  private:
    GroupSpec spec_;
    int order_ = 1;
    int radius_ = 1;
    std::map<std::vector<GroupElement>, Int> values_;
};

/**
 * The k-th power of the Berstein-Schwarz class as an explicit cocycle over
 * I^{x k}: beta itself for k = 1, then iterated connecting homomorphisms
 * through the sequences 0 -> I^{x l} -> I^{x l-1} (x) ZG -> I^{x l-1} -> 0.
 */
CellCochain beta_power(std::shared_ptr<const FreeZGComplex> resolution, int k);

/**
 * Integer linear solve for a coefficient homomorphism phi: I^{x k} -> Z on
 * the ball(radius) basis, subject to every in-ball equivariance constraint
 * and to pairing conditions: the pushforward of beta^k must pair with every
 * cycle of the finite quotient model exactly as `target` does.  Throws
 * UnsatError when no integer solution exists at this radius and RadiusError
 * when beta^k itself needs a larger ball.
 */
ModuleMap solve_coefficient_hom(std::shared_ptr<const FreeZGComplex> resolution, int k, int radius,
                                const CellCochain& target, std::uint64_t cap = kDefaultBallCap);

/// rank of the ball-truncated coinvariant quotient of I^{x k}, reported at
/// radius and radius + 1 so the caller can check stabilization
std::pair<int, int> coinvariants_rank(const GroupSpec& spec, int order, int radius,
                                      std::uint64_t cap = kDefaultBallCap);

int coinvariants_rank_at(const GroupSpec& spec, int order, int radius,
                         std::uint64_t cap = kDefaultBallCap);

} // namespace lipcoh
