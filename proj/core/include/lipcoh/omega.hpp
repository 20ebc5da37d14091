#pragma once

#include <string>
#include <vector>

#include "lipcoh/bigint.hpp"
#include "lipcoh/errors.hpp"
#include "lipcoh/rng.hpp"

namespace lipcoh {

/**
 * Compactly supported generator of top cohomology, realized as a signed
 * point degree: omega(S) = orientation sign of the affine n-simplex S when
 * the generic base point lies in its open interior, 0 outside the closed
 * hull.  Exact over the rationals; landing on any affine span of encountered
 * vertices raises GenericityViolation so the caller can re-pick the point.
 */
struct SupportCocycle {
    int dim = 0;
    std::vector<Rat> point;
    int orientation = 1; // global sign convention

    /// deterministic generic point near the center of the unit cell: each
    /// coordinate is 1/2 + odd/2^{11} jitter drawn from the seeded stream
    static SupportCocycle generic(int dim, Rng& rng);

    std::string point_string() const;
};

/// signed membership of the base point in an affine n-simplex (n+1 rational
/// vertex rows); values -1, 0, +1
int omega_eval(const std::vector<std::vector<Rat>>& vertices, const SupportCocycle& omega);

} // namespace lipcoh
