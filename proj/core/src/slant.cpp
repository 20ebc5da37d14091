#include "lipcoh/slant.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lipcoh {

namespace {

Int rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int f = n / d;
    if (f * d > n) --f;
    return f;
}

std::int64_t rat_floor_i64(const Rat& q) { return static_cast<std::int64_t>(rat_floor(q)); }

std::vector<std::int64_t> rho_image(const KuhnFactor& kf, const GroupElement& g) {
    auto ab = g.abelianized();
    std::vector<std::int64_t> v(kf.dim, 0);
    for (int i = 0; i < kf.dim; ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < ab.size(); ++j) acc += kf.rho[i][j] * ab[j];
        v[i] = acc;
    }
    return v;
}

} // namespace

std::shared_ptr<const SlantContext> SlantContext::build(GroupSpec spec, std::string family,
                                                        std::vector<DiffBlock> blocks, int lines,
                                                        int arity, int res_radius,
                                                        SupportCocycle omega, std::uint64_t cap) {
    auto ctx = std::make_shared<SlantContext>();
    ctx->spec_ = std::move(spec);
    ctx->family_ = std::move(family);
    ctx->blocks_ = std::move(blocks);
    ctx->lines_ = lines;
    ctx->arity_ = arity;
    ctx->res_radius_ = res_radius;
    ctx->cap_ = cap;
    ctx->ambient_ = lines;
    std::vector<KuhnFactor> factors;
    for (const auto& b : ctx->blocks_) {
        ctx->ambient_ += b.kuhn.dim;
        factors.push_back(b.kuhn);
    }
    if (omega.dim != ctx->ambient_) throw ConfigError("support cocycle dimension mismatch");
    ctx->omega_ = std::move(omega);
    ctx->space_ = std::make_shared<const ParamSpace>(ctx->spec_, std::move(factors), lines);
    return ctx;
}

std::shared_ptr<const SlantContext> SlantContext::translation(const GroupSpec& spec,
                                                              const SupportCocycle& omega,
                                                              int res_radius, std::uint64_t cap) {
    if (spec.family != GroupFamily::FreeAbelian)
        throw ConfigError("the translation family requires a free abelian group");
    KuhnFactor kf;
    kf.dim = spec.rank;
    kf.rho.assign(spec.rank, std::vector<std::int64_t>(spec.rank, 0));
    for (int i = 0; i < spec.rank; ++i) kf.rho[i][i] = 1;
    return build(spec, "translation", {DiffBlock{0, std::move(kf)}}, 0, 1, res_radius, omega, cap);
}

std::shared_ptr<const SlantContext> SlantContext::cocycle(const GroupSpec& spec,
                                                          const std::vector<std::int64_t>& f,
                                                          const SupportCocycle& omega,
                                                          int res_radius, std::uint64_t cap) {
    if (static_cast<int>(f.size()) != spec.rank)
        throw ConfigError("cocycle family needs one f-value per generator");
    KuhnFactor kf;
    kf.dim = 1;
    kf.rho = {std::vector<std::int64_t>(f.begin(), f.end())};
    return build(spec, "cocycle", {DiffBlock{0, std::move(kf)}}, 0, 1, res_radius, omega, cap);
}

std::shared_ptr<const SlantContext> SlantContext::point(const GroupSpec& spec, int res_radius,
                                                        std::uint64_t cap) {
    SupportCocycle omega;
    omega.dim = 0;
    return build(spec, "point", {}, 0, 1, res_radius, omega, cap);
}

std::shared_ptr<const SlantContext> SlantContext::product(
    const std::shared_ptr<const SlantContext>& a, const std::shared_ptr<const SlantContext>& b) {
    if (!(a->spec_ == b->spec_)) throw ConfigError("product context requires matching groups");
    if (a->lines_ || b->lines_)
        throw ConfigError("product contexts are formed from line-free factors");
    std::vector<DiffBlock> blocks;
    for (const auto& blk : a->blocks_) blocks.push_back(blk);
    for (const auto& blk : b->blocks_) {
        DiffBlock shifted = blk;
        shifted.res_factor += a->arity_;
        blocks.push_back(shifted);
    }
    SupportCocycle omega;
    omega.dim = a->ambient_ + b->ambient_;
    omega.orientation = a->omega_.orientation * b->omega_.orientation;
    omega.point = a->omega_.point;
    omega.point.insert(omega.point.end(), b->omega_.point.begin(), b->omega_.point.end());
    return build(a->spec_, a->family_ + "*" + b->family_, std::move(blocks), 0,
                 a->arity_ + b->arity_, std::min(a->res_radius_, b->res_radius_), std::move(omega),
                 std::min(a->cap_, b->cap_));
}

std::shared_ptr<const SlantContext> SlantContext::with_line(
    const std::shared_ptr<const SlantContext>& a, Rng& rng) {
    SupportCocycle omega = a->omega_;
    omega.dim += 1;
    long long jitter = 2 * rng.range(-255, 255) + 1;
    omega.point.emplace_back(Rat(1024 + jitter) / Rat(2048));
    return build(a->spec_, a->family_ + "*line", a->blocks_, a->lines_ + 1, a->arity_,
                 a->res_radius_, std::move(omega), a->cap_);
}

std::shared_ptr<const SlantContext> SlantContext::with_omega(const SupportCocycle& omega) const {
    if (omega.dim != ambient_) throw ConfigError("support cocycle dimension mismatch");
    // share the parameter space: chains remain valid on the new context
    auto copy = std::make_shared<SlantContext>(*this);
    copy->omega_ = omega;
    return copy;
}

Int SlantContext::lipschitz_scale_sq() const {
    Int best = 0;
    for (int s = 0; s < spec_.rank; ++s) {
        Int acc = 0;
        for (const auto& b : blocks_)
            for (int i = 0; i < b.kuhn.dim; ++i) acc += Int(b.kuhn.rho[i][s]) * b.kuhn.rho[i][s];
        best = std::max(best, acc);
    }
    return best;
}

std::vector<Rat> SlantContext::alpha_vertex(const std::vector<GroupElement>& res_vertices,
                                            const std::vector<Rat>& p_point) const {
    if (static_cast<int>(res_vertices.size()) != arity_)
        throw ValidationError("alpha needs one vertex per resolution factor");
    if (static_cast<int>(p_point.size()) != space_->lattice_dim() + lines_)
        throw ValidationError("alpha parameter point dimension mismatch");
    std::vector<Rat> out;
    out.reserve(ambient_);
    int offset = 0;
    for (const auto& b : blocks_) {
        auto img = rho_image(b.kuhn, res_vertices[b.res_factor]);
        for (int i = 0; i < b.kuhn.dim; ++i) out.emplace_back(Rat(img[i]) - p_point[offset + i]);
        offset += b.kuhn.dim;
    }
    for (int l = 0; l < lines_; ++l) out.push_back(p_point[offset + l]);
    return out;
}

namespace {

struct InstanceGeometry {
    // stacked integer base of the Kuhn coordinates and line positions
    std::vector<std::int64_t> base;
    std::vector<std::int64_t> lines;
};

// vertex offsets chi(B_p) of a flag, including the base vertex chi(B_0) = 0
std::vector<std::vector<std::int64_t>> flag_offsets(const KuhnFlag& flag, int dim) {
    std::vector<std::vector<std::int64_t>> out;
    out.push_back(std::vector<std::int64_t>(dim, 0));
    for (std::uint32_t s : flag.sets) out.push_back(mask_offset(s, dim));
    return out;
}

} // namespace

std::vector<SupportCoset> support_enumerate(const SlantContext& ctx,
                                            const std::vector<BarTuple>& simplices, int degree,
                                            int orbit) {
    const ParamSpace& space = *ctx.space();
    const auto& cell = space.orbit_cell(degree, orbit);
    const int M = space.lattice_dim();

    // per stacked coordinate: integer window for the instance base
    std::vector<std::int64_t> lo(M), hi(M);
    {
        int coord = 0;
        for (std::size_t b = 0; b < ctx.blocks().size(); ++b) {
            const auto& blk = ctx.blocks()[b];
            const BarTuple& tuple = simplices[blk.res_factor];
            std::vector<std::int64_t> lo_img(blk.kuhn.dim), hi_img(blk.kuhn.dim);
            bool first = true;
            for (const auto& g : tuple) {
                auto img = rho_image(blk.kuhn, g);
                for (int i = 0; i < blk.kuhn.dim; ++i) {
                    if (first || img[i] < lo_img[i]) lo_img[i] = img[i];
                    if (first || img[i] > hi_img[i]) hi_img[i] = img[i];
                }
                first = false;
            }
            for (int i = 0; i < blk.kuhn.dim; ++i) {
                // p in [lo_img - base - 1, hi_img - base]  =>  base window
                std::int64_t pf = rat_floor_i64(ctx.omega().point[coord + i]);
                lo[coord + i] = lo_img[i] - pf - 2;
                hi[coord + i] = hi_img[i] - pf + 1;
            }
            coord += blk.kuhn.dim;
        }
    }

    // line windows around the support coordinate
    std::vector<std::int64_t> line_lo(ctx.lines()), line_hi(ctx.lines());
    for (int l = 0; l < ctx.lines(); ++l) {
        std::int64_t pf = rat_floor_i64(ctx.omega().point[M + l]);
        line_lo[l] = pf - 1;
        line_hi[l] = pf + 1;
    }

    std::vector<SupportCoset> out;
    std::vector<std::int64_t> u(M, 0);
    auto rec = [&](auto&& self, int c) -> void {
        if (c == M) {
            std::vector<std::int64_t> shift(M);
            for (int i = 0; i < M; ++i) shift[i] = u[i] - cell.residue[i];
            if (!space.in_lattice(shift)) return;
            SupportCoset sc;
            sc.translate = shift;
            sc.rep = space.lattice_preimage(shift);
            std::vector<std::int64_t> line(ctx.lines(), 0);
            auto lrec = [&](auto&& lself, int l) -> void {
                if (l == ctx.lines()) {
                    SupportCoset copy = sc;
                    copy.lines = line;
                    out.push_back(std::move(copy));
                    return;
                }
                for (std::int64_t m = line_lo[l]; m <= line_hi[l]; ++m) {
                    line[l] = m;
                    lself(lself, l + 1);
                }
            };
            lrec(lrec, 0);
            return;
        }
        for (std::int64_t v = lo[c]; v <= hi[c]; ++v) {
            u[c] = v;
            self(self, c + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<Rat>> alpha_on_cell(const SlantContext& ctx,
                                            const std::vector<BarTuple>& simplices, int degree,
                                            int orbit, const SupportCoset& coset,
                                            const StaircasePiece& piece) {
    const ParamSpace& space = *ctx.space();
    const auto& cell = space.orbit_cell(degree, orbit);
    const int nblocks = static_cast<int>(ctx.blocks().size());
    const int arity = ctx.resolution_arity();

    // factor order: resolution factors, Kuhn factors, line factors
    std::vector<std::vector<std::vector<std::int64_t>>> kuhn_offsets(nblocks);
    for (int f = 0; f < nblocks; ++f)
        kuhn_offsets[f] = flag_offsets(cell.flags[f], ctx.blocks()[f].kuhn.dim);

    // cache rho images per resolution vertex per block
    std::vector<std::vector<std::vector<std::int64_t>>> res_imgs(nblocks);
    for (int f = 0; f < nblocks; ++f)
        for (const auto& g : simplices[ctx.blocks()[f].res_factor])
            res_imgs[f].push_back(rho_image(ctx.blocks()[f].kuhn, g));

    std::vector<std::vector<Rat>> vertices;
    vertices.reserve(piece.vertices.size());
    for (const auto& pathpoint : piece.vertices) {
        std::vector<Rat> pt;
        pt.reserve(ctx.ambient_dim());
        for (int f = 0; f < nblocks; ++f) {
            const auto& blk = ctx.blocks()[f];
            const auto& img = res_imgs[f][pathpoint[blk.res_factor]];
            const auto& off = kuhn_offsets[f][pathpoint[arity + f]];
            const int at = space.coordinate_offset(f);
            for (int i = 0; i < blk.kuhn.dim; ++i) {
                std::int64_t x = cell.residue[at + i] + coset.translate[at + i] + off[i];
                pt.emplace_back(Rat(img[i] - x));
            }
        }
        for (int l = 0; l < ctx.lines(); ++l) {
            int idx = pathpoint[arity + nblocks + l];
            pt.emplace_back(Rat(coset.lines[l] + idx));
        }
        vertices.push_back(std::move(pt));
    }
    return vertices;
}

ModuleElement slant_eval(const SlantContext& ctx, const InvariantChain& z,
                         const std::vector<BarTuple>& simplices, SlantTrace* trace) {
    const ParamSpace& space = *ctx.space();
    if (z.complex != space.complex())
        throw ValidationError("chain does not live on the context parameter space");
    if (static_cast<int>(simplices.size()) != ctx.resolution_arity())
        throw ValidationError("slant expects one simplex per resolution factor");
    for (const auto& t : simplices)
        if (t.empty()) throw ValidationError("empty resolution simplex");

    ModuleElement acc = ModuleElement::zero(z.tag.order);
    int k_total = 0;
    for (const auto& t : simplices) k_total += static_cast<int>(t.size()) - 1;
    if (k_total + z.degree != ctx.ambient_dim()) return acc; // off-bidegree component

    // staircase factor dimensions: resolution factors, then per-cell flags,
    // then line edges
    const int arity = ctx.resolution_arity();
    const int nblocks = static_cast<int>(ctx.blocks().size());

    for (const auto& [orbit, lambda] : z.coeffs) {
        const auto& cell = space.orbit_cell(z.degree, orbit);
        std::vector<int> dims(arity + nblocks + ctx.lines());
        for (int r = 0; r < arity; ++r) dims[r] = static_cast<int>(simplices[r].size()) - 1;
        for (int f = 0; f < nblocks; ++f) dims[arity + f] = cell.flags[f].dim();
        for (int l = 0; l < ctx.lines(); ++l) dims[arity + nblocks + l] = 1;
        auto pieces = staircase_pieces(dims);

        for (const auto& coset : support_enumerate(ctx, simplices, z.degree, orbit)) {
            Int weight = 0;
            for (const auto& piece : pieces) {
                auto verts = alpha_on_cell(ctx, simplices, z.degree, orbit, coset, piece);
                int w = omega_eval(verts, ctx.omega());
                if (w != 0) weight += piece.sign * w;
            }
            if (weight == 0) continue;
            acc += weight * lambda.translated(coset.rep);
            if (trace) trace->contributions.push_back({orbit, coset.rep, coset.lines, weight});
        }
    }
    return acc;
}

ProductBarCochain ProductBarCochain::delta() const {
    ProductBarCochain self = *this;
    return ProductBarCochain(
        spec_, degree_ + 1, tag_, [self](const BarTuple& a, const BarTuple& b) {
            ModuleElement acc = ModuleElement::zero(self.tag().order);
            for (const auto& [face, sgn] : bar_faces(a)) {
                ModuleElement v = self.eval(face, b);
                acc += sgn > 0 ? v : -v;
            }
            int sign_a = (static_cast<int>(a.size()) - 1) % 2 == 0 ? 1 : -1;
            for (const auto& [face, sgn] : bar_faces(b)) {
                ModuleElement v = self.eval(a, face);
                acc += (sign_a * sgn) > 0 ? v : -v;
            }
            return acc;
        });
}

ProductBarCochain ProductBarCochain::operator-(const ProductBarCochain& o) const {
    if (degree_ != o.degree_ || !(tag_ == o.tag_))
        throw ValidationError("subtracting incompatible product cochains");
    ProductBarCochain a = *this, b = o;
    return ProductBarCochain(spec_, degree_, tag_, [a, b](const BarTuple& s, const BarTuple& t) {
        return a.eval(s, t) - b.eval(s, t);
    });
}

ProductBarCochain cup_bar(const BarCochain& u, const BarCochain& v) {
    BarCochain uu = u, vv = v;
    ModuleTag tag = tensor(u.tag(), v.tag());
    return ProductBarCochain(u.spec(), u.degree() + v.degree(), tag,
                             [uu, vv, tag](const BarTuple& a, const BarTuple& b) {
                                 if (static_cast<int>(a.size()) - 1 != uu.degree() ||
                                     static_cast<int>(b.size()) - 1 != vv.degree())
                                     return ModuleElement::zero(tag.order);
                                 return tensor(uu.eval(a), vv.eval(b));
                             });
}

BarCochain slant_cochain(const std::shared_ptr<const SlantContext>& ctx, const InvariantChain& z) {
    if (ctx->resolution_arity() != 1)
        throw ValidationError("slant_cochain requires an arity-1 context");
    int degree = ctx->ambient_dim() - z.degree;
    if (degree < 0) throw ValidationError("slant degree bookkeeping failed (k < 0)");
    auto zz = z;
    auto c = ctx;
    return BarCochain(ctx->group(), degree, z.tag,
                      [c, zz](const BarTuple& t) { return slant_eval(*c, zz, {t}); })
        .memoized();
}

CapReport alpha_cap(const std::shared_ptr<const SlantContext>& ctx, const InvariantChain& z,
                    int cycle_radius) {
    CapReport report;
    report.degree = ctx->ambient_dim() - z.degree;
    z.validate();
    report.input_is_cycle =
        (z.degree == 0) || invariant_boundary(z, /*validate=*/false).is_zero();
    report.cochain = slant_cochain(ctx, z);
    auto gens_above = bar_generators(ctx->group(), ctx->res_radius(), report.degree + 1,
                                     ctx->ball_cap());
    report.output_is_cocycle = report.cochain.delta().is_zero_on(gens_above);
    for (auto& cyc : bar_cycle_basis(ctx->group(), cycle_radius, report.degree, ctx->ball_cap()))
        report.pairings.emplace_back(cyc, bar_pairing(report.cochain, cyc));
    return report;
}

BarCochain difference_witness(const std::shared_ptr<const SlantContext>& ctx,
                              const InvariantChain& w) {
    return slant_cochain(ctx, w);
}

ProductBarCochain slant_cochain_product(const std::shared_ptr<const SlantContext>& ctx,
                                        const InvariantChain& z) {
    if (ctx->resolution_arity() != 2)
        throw ValidationError("slant_cochain_product requires an arity-2 context");
    int degree = ctx->ambient_dim() - z.degree;
    if (degree < 0) throw ValidationError("slant degree bookkeeping failed (k < 0)");
    auto zz = z;
    auto c = ctx;
    return ProductBarCochain(ctx->group(), degree, z.tag,
                             [c, zz](const BarTuple& a, const BarTuple& b) {
                                 return slant_eval(*c, zz, {a, b});
                             });
}

void validate_alpha(const SlantContext& ctx, Rng& rng, int samples) {
    const GroupSpec& spec = ctx.group();
    auto b2 = ball(spec, 2, ctx.ball_cap());
    auto random_el = [&]() { return b2[rng.below(b2.size())]; };
    const int P = ctx.space()->lattice_dim() + ctx.lines();

    auto random_point = [&]() {
        std::vector<Rat> x(P);
        for (int i = 0; i < P; ++i) x[i] = Rat(rng.range(-8, 8), 2);
        return x;
    };
    auto act_on_point = [&](const GroupElement& g, std::vector<Rat> x) {
        auto t = ctx.space()->translation_of(g);
        for (int i = 0; i < ctx.space()->lattice_dim(); ++i) x[i] += Rat(t[i]);
        return x;
    };

    for (int s = 0; s < samples; ++s) {
        std::vector<GroupElement> ys;
        for (int r = 0; r < ctx.resolution_arity(); ++r) ys.push_back(random_el());
        auto x = random_point();
        GroupElement g = random_el();

        // condition (1): diagonal invariance
        std::vector<GroupElement> gys;
        for (const auto& y : ys) gys.push_back(mul(g, y));
        if (!(ctx.alpha_vertex(gys, act_on_point(g, x)) == ctx.alpha_vertex(ys, x)))
            throw ValidationError("alpha is not diagonally invariant");

        // condition (3): 1-Lipschitz in the group variable after rescaling
        for (int i = 0; i < spec.rank; ++i) {
            std::vector<GroupElement> base = ys, stepped = ys;
            stepped[0] = mul(ys[0], GroupElement::generator(spec, i));
            auto a0 = ctx.alpha_vertex(base, x);
            auto a1 = ctx.alpha_vertex(stepped, x);
            Rat norm2 = 0;
            for (std::size_t c = 0; c < a0.size(); ++c) norm2 += (a1[c] - a0[c]) * (a1[c] - a0[c]);
            if (norm2 > Rat(ctx.lipschitz_scale_sq()))
                throw ValidationError("alpha violates the rescaled Lipschitz bound");
        }

        // affineness of the barycentric extension on cells (midpoint check)
        {
            std::vector<GroupElement> y1s;
            for (const auto& y : ys) y1s.push_back(mul(y, random_el()));
            auto x2 = random_point();
            auto a00 = ctx.alpha_vertex(ys, x);
            auto a11 = ctx.alpha_vertex(y1s, x2);
            // midpoint via barycentric extension: average of rho images and
            // of parameter points
            std::vector<Rat> mid(a00.size());
            { // evaluate alpha-bar at the midpoint directly
                std::vector<Rat> xm(P);
                for (int i = 0; i < P; ++i) xm[i] = (x[i] + x2[i]) / 2;
                int coord = 0;
                for (const auto& blk : ctx.blocks()) {
                    auto i0 = rho_image(blk.kuhn, ys[blk.res_factor]);
                    auto i1 = rho_image(blk.kuhn, y1s[blk.res_factor]);
                    for (int i = 0; i < blk.kuhn.dim; ++i)
                        mid[coord + i] = (Rat(i0[i]) + Rat(i1[i])) / 2 - xm[coord + i];
                    coord += blk.kuhn.dim;
                }
                for (int l = 0; l < ctx.lines(); ++l)
                    mid[coord + l] = xm[ctx.space()->lattice_dim() + l];
            }
            for (std::size_t c = 0; c < a00.size(); ++c)
                if (mid[c] != (a00[c] + a11[c]) / 2)
                    throw ValidationError("alpha-bar is not affine on cells");
        }
    }
}

InvariantChain lift_chain(const SlantContext& lifted, const SlantContext& base,
                          const InvariantChain& z) {
    const ParamSpace& to = *lifted.space();
    const ParamSpace& from = *base.space();
    if (z.complex != from.complex())
        throw ValidationError("chain does not live on the base context space");
    int shift = to.line_factors() - from.line_factors();
    if (shift < 0) throw ValidationError("lift target has fewer line factors than the base");
    // orbit refs (flags, residue) agree; only the implicit line edges differ
    InvariantChain out = to.zero_chain(z.degree + shift, z.tag);
    for (const auto& [orbit, lambda] : z.coeffs) {
        const ParamCellRef& ref = from.orbit_cell(z.degree, orbit);
        out.set(to.orbit_index(z.degree + shift, ref), lambda);
    }
    return out;
}

InvariantChain tensor_chain(const SlantContext& prod, const SlantContext& a,
                            const InvariantChain& za, const SlantContext& b,
                            const InvariantChain& zb) {
    const ParamSpace& ps = *prod.space();
    const ParamSpace& pa = *a.space();
    const ParamSpace& pb = *b.space();
    if (za.complex != pa.complex() || zb.complex != pb.complex())
        throw ValidationError("tensor_chain factors live on the wrong spaces");
    const int Ma = pa.lattice_dim();
    const int degree = za.degree + zb.degree;
    InvariantChain out = ps.zero_chain(degree, tensor(za.tag, zb.tag));
    const std::size_t nfa = pa.factors().size();

    for (int idx = 0; idx < ps.complex()->orbit_count(degree); ++idx) {
        const ParamCellRef& cell = ps.orbit_cell(degree, idx);
        int dim_a = 0;
        for (std::size_t f = 0; f < nfa; ++f) dim_a += cell.flags[f].dim();
        if (dim_a != za.degree) continue;

        // factor-a instance
        std::vector<std::int64_t> base_a(cell.residue.begin(), cell.residue.begin() + Ma);
        ParamCellRef ref_a;
        ref_a.flags.assign(cell.flags.begin(), cell.flags.begin() + nfa);
        ref_a.residue = pa.canonical_residue(base_a);
        std::vector<std::int64_t> ua(Ma);
        for (int i = 0; i < Ma; ++i) ua[i] = base_a[i] - ref_a.residue[i];
        ModuleElement ca = za.instance_coeff(pa.orbit_index(za.degree, ref_a), pa.lattice_preimage(ua));

        // factor-b instance
        std::vector<std::int64_t> base_b(cell.residue.begin() + Ma, cell.residue.end());
        ParamCellRef ref_b;
        ref_b.flags.assign(cell.flags.begin() + nfa, cell.flags.end());
        ref_b.residue = pb.canonical_residue(base_b);
        std::vector<std::int64_t> ub(static_cast<std::size_t>(pb.lattice_dim()));
        for (int i = 0; i < pb.lattice_dim(); ++i) ub[i] = base_b[i] - ref_b.residue[i];
        ModuleElement cb = zb.instance_coeff(pb.orbit_index(zb.degree, ref_b), pb.lattice_preimage(ub));

        ModuleElement lam = tensor(ca, cb);
        if (!lam.is_zero()) out.set(idx, std::move(lam));
    }
    return out;
}

} // namespace lipcoh
