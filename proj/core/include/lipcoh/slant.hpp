#pragma once

#include <memory>
#include <optional>

#include "lipcoh/bar_complex.hpp"
#include "lipcoh/omega.hpp"
#include "lipcoh/param_space.hpp"
#include "lipcoh/staircase.hpp"

namespace lipcoh {

/**
 * Evaluation context for the equivariant slant product.
 *
 * The alpha family is stored in blocks: each Diff block contributes
 * coordinates rho.ab(y) - x (y the group-side vertex of the named resolution
 * factor, x the matching Kuhn coordinates of P); each line factor contributes
 * a passthrough coordinate x.  This covers:
 *
 *   translation:  G = Z^d acting on R^d, alpha(g, x) = g - x
 *   cocycle:      f: G -> Z, P = R with g.x = x + f(g), alpha(g, x) = f(g) - x
 *   point:        P a point, target R^0
 *
 * together with their products (block concatenation over the diagonal
 * action) and products with a trivially-acted line (alpha x 1).
 */
class SlantContext {
  public:
    struct DiffBlock {
        int res_factor = 0; // which bar-resolution tensor factor drives rho
        KuhnFactor kuhn;
    };

    static std::shared_ptr<const SlantContext> translation(const GroupSpec& spec,
                                                           const SupportCocycle& omega,
                                                           int res_radius,
                                                           std::uint64_t cap = kDefaultBallCap);
    static std::shared_ptr<const SlantContext> cocycle(const GroupSpec& spec,
                                                       const std::vector<std::int64_t>& f,
                                                       const SupportCocycle& omega, int res_radius,
                                                       std::uint64_t cap = kDefaultBallCap);
    static std::shared_ptr<const SlantContext> point(const GroupSpec& spec, int res_radius,
                                                     std::uint64_t cap = kDefaultBallCap);

    /// product over the diagonal action; both factors must be line-free
    static std::shared_ptr<const SlantContext> product(const std::shared_ptr<const SlantContext>& a,
                                                       const std::shared_ptr<const SlantContext>& b);
    /// alpha x 1: appends a trivially-acted R factor; the new support
    /// coordinate is drawn from the seeded stream
    static std::shared_ptr<const SlantContext> with_line(const std::shared_ptr<const SlantContext>& a,
                                                         Rng& rng);

    const GroupSpec& group() const { return spec_; }
    const std::string& family_name() const { return family_; }
    const std::vector<DiffBlock>& blocks() const { return blocks_; }
    int lines() const { return lines_; }
    int ambient_dim() const { return ambient_; }
    int resolution_arity() const { return arity_; }
    int res_radius() const { return res_radius_; }
    std::uint64_t ball_cap() const { return cap_; }
    const SupportCocycle& omega() const { return omega_; }
    const std::shared_ptr<const ParamSpace>& space() const { return space_; }

    /// same context, different generic point (degree well-definedness tests)
    std::shared_ptr<const SlantContext> with_omega(const SupportCocycle& omega) const;

    /// squared Lipschitz rescale constant: max over generators of
    /// |rho . e_s|^2 across all blocks
    Int lipschitz_scale_sq() const;

    /// alpha at a single (group vertex per resolution factor, P point)
    std::vector<Rat> alpha_vertex(const std::vector<GroupElement>& res_vertices,
                                  const std::vector<Rat>& p_point) const;

  private:
    friend struct SlantAccess;
    GroupSpec spec_;
    std::string family_;
    std::vector<DiffBlock> blocks_;
    int lines_ = 0;
    int arity_ = 1;
    int res_radius_ = 3;
    int ambient_ = 0;
    std::uint64_t cap_ = kDefaultBallCap;
    SupportCocycle omega_;
    std::shared_ptr<const ParamSpace> space_;

    static std::shared_ptr<const SlantContext> build(GroupSpec spec, std::string family,
                                                     std::vector<DiffBlock> blocks, int lines,
                                                     int arity, int res_radius, SupportCocycle omega,
                                                     std::uint64_t cap);
};

/// one enumerated instance cell contributing to a slant sum
struct SupportCoset {
    GroupElement rep;                     // minimal-length coset representative
    std::vector<std::int64_t> translate;  // its lattice translation vector
    std::vector<std::int64_t> lines;      // line indices of the instance
};

/// finite superset of the cosets gamma.Gamma_sigma (and line positions) whose
/// translated cell can meet the support of omega
std::vector<SupportCoset> support_enumerate(const SlantContext& ctx,
                                            const std::vector<BarTuple>& simplices, int degree,
                                            int orbit);

/// the affine image of one staircase piece of (Delta x sigma-instance); for
/// the shipped families alpha-bar is affine on cells, which is asserted via
/// midpoint checks in validate_alpha
std::vector<std::vector<Rat>> alpha_on_cell(const SlantContext& ctx,
                                            const std::vector<BarTuple>& simplices, int degree,
                                            int orbit, const SupportCoset& coset,
                                            const StaircasePiece& piece);

struct SlantTrace {
    struct Entry {
        int orbit;
        GroupElement coset_rep;
        std::vector<std::int64_t> lines;
        Int weight; // summed omega values over the staircase pieces
    };
    std::vector<Entry> contributions;
};

/**
 * The slant value (phi-bar / z)(Delta) for one resolution simplex tuple:
 * the sum over orbit cells, contributing cosets and staircase pieces of
 * sign . omega(alpha-bar image) . (gamma . lambda_sigma).
 */
ModuleElement slant_eval(const SlantContext& ctx, const InvariantChain& z,
                         const std::vector<BarTuple>& simplices, SlantTrace* trace = nullptr);

/// equivariant cochain on the product of two bar resolutions
class ProductBarCochain {
  public:
    using Eval = std::function<ModuleElement(const BarTuple&, const BarTuple&)>;

    ProductBarCochain(GroupSpec spec, int degree, ModuleTag tag, Eval eval)
        : spec_(std::move(spec)), degree_(degree), tag_(tag), eval_(std::move(eval)) {}

    int degree() const { return degree_; }
    const ModuleTag& tag() const { return tag_; }
    ModuleElement eval(const BarTuple& a, const BarTuple& b) const { return eval_(a, b); }

    ProductBarCochain delta() const;
    ProductBarCochain operator-(const ProductBarCochain& o) const;

  private:
    GroupSpec spec_;
    int degree_ = 0;
    ModuleTag tag_;
    Eval eval_;
};

/// cross/cup product of bar cochains on the product resolution:
/// (u cup v)(T1, T2) = u(T1) (x) v(T2) on the matching bidegree
ProductBarCochain cup_bar(const BarCochain& u, const BarCochain& v);

/// slant output as a bar cochain (arity-1 contexts)
BarCochain slant_cochain(const std::shared_ptr<const SlantContext>& ctx, const InvariantChain& z);

/**
 * Class-level report for a slant image: the representing cochain, its
 * pairings against the cycle basis of the coinvariant bar complex at the
 * given radius, and certification flags.  A non-cycle input is a warning
 * (input_is_cycle = false); the output then need not be a cocycle.
 */
struct CapReport {
    int degree = 0;
    bool input_is_cycle = true;
    bool output_is_cocycle = true; // checked on the res_radius generator window
    BarCochain cochain;
    std::vector<std::pair<BarCycle, ModuleElement>> pairings;
};

CapReport alpha_cap(const std::shared_ptr<const SlantContext>& ctx, const InvariantChain& z,
                    int cycle_radius = 2);

/// coboundary witness certifying slant(z + boundary(w)) ~ slant(z): the
/// difference is delta of this cochain up to the locked global sign
BarCochain difference_witness(const std::shared_ptr<const SlantContext>& ctx,
                              const InvariantChain& w);

/// slant output on a product context (arity-2)
ProductBarCochain slant_cochain_product(const std::shared_ptr<const SlantContext>& ctx,
                                        const InvariantChain& z);

/// exact sampled checks of the alpha conditions: diagonal invariance,
/// 1-Lipschitz after rescaling, affineness of alpha-bar on cells
void validate_alpha(const SlantContext& ctx, Rng& rng, int samples = 32);

/// chain transport onto a lifted (with_line) context: same orbit data, line
/// edges appended implicitly (z (x) s per added line)
InvariantChain lift_chain(const SlantContext& lifted, const SlantContext& base,
                          const InvariantChain& z);

/// z1 (x) z2 on a product context
InvariantChain tensor_chain(const SlantContext& prod, const SlantContext& a,
                            const InvariantChain& za, const SlantContext& b,
                            const InvariantChain& zb);

} // namespace lipcoh
