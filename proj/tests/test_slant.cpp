#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lipcoh/ses.hpp"
#include "lipcoh/slant.hpp"

using namespace lipcoh;

namespace {

GroupElement idel(const GroupSpec& s) { return GroupElement::identity(s); }

SupportCocycle half_point(int dim) {
    SupportCocycle w;
    w.dim = dim;
    for (int i = 0; i < dim; ++i) w.point.emplace_back(Rat(1, 2) + Rat(i, 64));
    return w;
}

} // namespace

TEST_CASE("alpha families satisfy the conditions") {
    Rng rng(41);
    auto zc = SlantContext::translation(GroupSpec::free_abelian(2), half_point(2), 2);
    CHECK_NOTHROW(validate_alpha(*zc, rng));
    auto cc = SlantContext::cocycle(GroupSpec::free_group(2), {2, -1}, half_point(1), 2);
    CHECK_NOTHROW(validate_alpha(*cc, rng));
    CHECK(cc->lipschitz_scale_sq() == 4); // lambda = max |f(s)| = 2
    auto pt = SlantContext::point(GroupSpec::free_abelian(1), 2);
    CHECK_NOTHROW(validate_alpha(*pt, rng));
    auto prod = SlantContext::product(
        SlantContext::cocycle(GroupSpec::free_abelian(2), {1, 0}, half_point(1), 2),
        SlantContext::cocycle(GroupSpec::free_abelian(2), {0, 1}, half_point(1), 2));
    CHECK_NOTHROW(validate_alpha(*prod, rng));

    // family misuse
    CHECK_THROWS_AS(SlantContext::translation(GroupSpec::free_group(2), half_point(2), 2),
                    ConfigError);
    CHECK_THROWS_AS(SlantContext::cocycle(GroupSpec::free_abelian(2), {1}, half_point(1), 2),
                    ConfigError);
}

TEST_CASE("alpha_on_cell examples") {
    // point family: every cell maps to the unique 0-simplex of R^0
    {
        GroupSpec spec = GroupSpec::free_abelian(1);
        auto ctx = SlantContext::point(spec, 2);
        SupportCoset coset{idel(spec), {}, {}};
        StaircasePiece piece{{{0}}, 1};
        auto verts = alpha_on_cell(*ctx, {{idel(spec)}}, 0, 0, coset, piece);
        CHECK(verts.size() == 1);
        CHECK(verts[0].empty());
    }
    // translation on Z: Delta = [e], sigma = [m, m+1] maps to (-m, -m-1)
    {
        GroupSpec spec = GroupSpec::free_abelian(1);
        auto ctx = SlantContext::translation(spec, half_point(1), 2);
        const long long m = 3;
        SupportCoset coset{GroupElement::from_exponents(spec, {m}), {m}, {}};
        StaircasePiece piece{{{0, 0}, {0, 1}}, 1};
        auto verts = alpha_on_cell(*ctx, {{idel(spec)}}, 1, 0, coset, piece);
        REQUIRE(verts.size() == 2);
        CHECK(verts[0][0] == Rat(-m));
        CHECK(verts[1][0] == Rat(-m - 1));
    }
    // cocycle family: Delta = [e, gamma], sigma = vertex m maps to
    // (-m, f(gamma) - m)
    {
        GroupSpec spec = GroupSpec::free_abelian(1);
        auto ctx = SlantContext::cocycle(spec, {5}, half_point(1), 2);
        const long long m = 2;
        GroupElement gamma = GroupElement::generator(spec, 0); // f(gamma) = 5
        SupportCoset coset{GroupElement::from_exponents(spec, {0}), {m}, {}};
        // the cocycle space has 5 vertex orbits; pick the one whose instance
        // at translate m is the vertex m: residue of m mod 5
        int orbit = -1;
        for (int i = 0; i < ctx->space()->complex()->orbit_count(0); ++i)
            if (ctx->space()->orbit_cell(0, i).residue[0] == (m % 5)) orbit = i;
        REQUIRE(orbit >= 0);
        SupportCoset c2{idel(spec), {m - (m % 5)}, {}};
        StaircasePiece piece{{{0, 0}, {1, 0}}, 1};
        auto verts = alpha_on_cell(*ctx, {{idel(spec), gamma}}, 0, orbit, c2, piece);
        REQUIRE(verts.size() == 2);
        CHECK(verts[0][0] == Rat(-m));
        CHECK(verts[1][0] == Rat(5 - m));
    }
}

TEST_CASE("support enumeration") {
    // translation on Z, Delta = [e], edge orbit, p = 1/2: only the instance
    // [-1, 0] can hit, i.e. the coset of t^{-1}
    {
        GroupSpec spec = GroupSpec::free_abelian(1);
        SupportCocycle w;
        w.dim = 1;
        w.point = {Rat(1, 2)};
        auto ctx = SlantContext::translation(spec, w, 2);
        InvariantChain z = ctx->space()->fundamental_cycle();
        SlantTrace trace;
        slant_eval(*ctx, z, {{idel(spec)}}, &trace);
        REQUIRE(trace.contributions.size() == 1);
        CHECK(trace.contributions[0].coset_rep ==
              GroupElement::from_exponents(spec, {-1}));
        // the enumerated superset contains the survivor
        auto cosets = support_enumerate(*ctx, {{idel(spec)}}, 1, 0);
        bool found = false;
        for (const auto& c : cosets)
            if (c.rep == trace.contributions[0].coset_rep) found = true;
        CHECK(found);
    }
    // point family: single coset, e
    {
        GroupSpec spec = GroupSpec::free_group(2);
        auto ctx = SlantContext::point(spec, 2);
        auto cosets = support_enumerate(*ctx, {{idel(spec)}}, 0, 0);
        REQUIRE(cosets.size() == 1);
        CHECK(cosets[0].rep.is_identity());
    }
    // cocycle with f(gamma) = r > 0: exactly r translates contribute
    {
        GroupSpec spec = GroupSpec::free_abelian(1);
        auto ctx = SlantContext::cocycle(spec, {3}, half_point(1), 2);
        InvariantChain z = ctx->space()->vertex_chain();
        SlantTrace trace;
        ModuleElement v =
            slant_eval(*ctx, z, {{idel(spec), GroupElement::generator(spec, 0)}}, &trace);
        CHECK(v.as_int() == 3);
        CHECK(trace.contributions.size() == 3);
    }
}

TEST_CASE("slant: flat duality values (frozen from the enumeration oracle)") {
    Rng rng(7);
    // Z: fundamental 1-cycle evaluates to -1 on [e] (alpha(y,x) = y - x has
    // orientation-reversing linear part in odd dimensions)
    {
        GroupSpec spec = GroupSpec::free_abelian(1);
        auto ctx = SlantContext::translation(spec, SupportCocycle::generic(1, rng), 3);
        InvariantChain z = ctx->space()->fundamental_cycle();
        CHECK(slant_eval(*ctx, z, {{idel(spec)}}).as_int() == -1);
    }
    // Z^2: fundamental pairs to +1; the generator pairing matrix is the
    // intersection form
    {
        GroupSpec spec = GroupSpec::free_abelian(2);
        auto ctx = SlantContext::translation(spec, SupportCocycle::generic(2, rng), 3);
        InvariantChain z = ctx->space()->fundamental_cycle();
        CHECK(slant_eval(*ctx, z, {{idel(spec)}}).as_int() == 1);
        IntMatrix m(2, 2);
        for (int i = 0; i < 2; ++i) {
            InvariantChain zi = ctx->space()->generator_cycle(0, i);
            for (int j = 0; j < 2; ++j)
                m.at(i, j) =
                    slant_eval(*ctx, zi, {{idel(spec), GroupElement::generator(spec, j)}}).as_int();
        }
        CHECK(m.at(0, 0) == 0);
        CHECK(m.at(0, 1) == 1);
        CHECK(m.at(1, 0) == -1);
        CHECK(m.at(1, 1) == 0);
    }
}

TEST_CASE("slant output is an equivariant cocycle; boundaries map to coboundaries") {
    Rng rng(4);
    GroupSpec spec = GroupSpec::free_abelian(2);
    auto ctx = SlantContext::translation(spec, SupportCocycle::generic(2, rng), 2);

    InvariantChain z1 = ctx->space()->generator_cycle(0, 0);
    BarCochain c = slant_cochain(ctx, z1);

    // cocycle: delta vanishes on degree-2 generators
    CHECK(c.delta().is_zero_on(bar_generators(spec, 2, 2)));

    // equivariance of the direct formula on translated simplices
    for (const auto& g : ball(spec, 2)) {
        for (const auto& t : bar_generators(spec, 2, 1)) {
            BarTuple gt;
            for (const auto& v : t) gt.push_back(mul(g, v));
            CHECK(slant_eval(*ctx, z1, {gt}) == slant_eval(*ctx, z1, {t}).translated(g));
        }
    }

    // direct formula agrees with the normalized cochain wrapper
    for (const auto& t : bar_generators(spec, 2, 1)) {
        BarTuple swapped{t[1], t[0]};
        CHECK(c.eval(swapped) == slant_eval(*ctx, z1, {swapped}));
    }

    // phi-bar/(boundary) = +-delta(phi-bar/chain), exactly.  With trivial
    // coefficients on the torus both sides vanish (the slant of a top chain
    // is an equivariant-constant cochain), which is itself worth asserting;
    // the sign is pinned with I-coefficients, where twisting survives.
    {
        auto gens1 = bar_generators(spec, 2, 1);
        InvariantChain w = ctx->space()->zero_chain(2, ModuleTag::Z());
        for (int orbit = 0; orbit < ctx->space()->complex()->orbit_count(2); ++orbit)
            w.set(orbit, ModuleElement::from_int(Int(rng.range(-2, 2))));
        BarCochain a = slant_cochain(ctx, invariant_boundary(w));
        BarCochain b = slant_cochain(ctx, w).delta();
        CHECK(a.is_zero_on(gens1));
        CHECK(b.is_zero_on(gens1));
    }
    {
        auto b1 = ball(spec, 1);
        auto gens2 = bar_generators(spec, 2, 2);
        int pinned = 0;
        for (int trial = 0; trial < 40 && pinned < 3; ++trial) {
            InvariantChain w = ctx->space()->zero_chain(1, ModuleTag::aug_power(1));
            for (int orbit = 0; orbit < ctx->space()->complex()->orbit_count(1); ++orbit) {
                ModuleElement v = ModuleElement::zero(1);
                for (int t = 0; t < 2; ++t) {
                    const GroupElement& g = b1[rng.below(b1.size())];
                    if (!g.is_identity())
                        v += Int(rng.range(-2, 2)) *
                             ModuleElement::from_ring(GroupRingElement::aug_gen(spec, g));
                }
                w.set(orbit, v);
            }
            BarCochain a = slant_cochain(ctx, invariant_boundary(w));
            BarCochain b = slant_cochain(ctx, w).delta();
            bool plus = true, minus = true, nonzero = false;
            for (const auto& g : gens2) {
                ModuleElement va = a.eval(g), vb = b.eval(g);
                if (!va.is_zero()) nonzero = true;
                if (!(va == vb)) plus = false;
                if (!(va == -vb)) minus = false;
            }
            CHECK((plus || minus));
            if (nonzero) {
                CHECK(plus != minus); // exactly one global sign
                ++pinned;
            }
        }
        CHECK(pinned >= 3);
    }
}

TEST_CASE("two generic points give identical slant cochains") {
    Rng rng(12);
    GroupSpec spec = GroupSpec::free_abelian(2);
    auto c1 = SlantContext::translation(spec, SupportCocycle::generic(2, rng), 2);
    auto c2 = c1->with_omega(SupportCocycle::generic(2, rng));
    InvariantChain z = c1->space()->generator_cycle(0, 1);
    for (const auto& t : bar_generators(spec, 2, 1))
        CHECK(slant_eval(*c1, z, {t}) == slant_eval(*c2, z, {t}));
}

TEST_CASE("product with a line leaves slant values unchanged") {
    Rng rng(90);
    GroupSpec spec = GroupSpec::free_abelian(1);

    // point context lifted once: the 4.2-shaped context over P = R with the
    // trivial action; slant of (point (x) s) stays 1
    auto pt = SlantContext::point(spec, 2);
    InvariantChain zp = pt->space()->vertex_chain();
    CHECK(slant_eval(*pt, zp, {{idel(spec)}}).as_int() == 1);
    auto l1 = SlantContext::with_line(pt, rng);
    InvariantChain zp1 = lift_chain(*l1, *pt, zp);
    CHECK(zp1.degree == 1);
    CHECK(slant_eval(*l1, zp1, {{idel(spec)}}).as_int() == 1);
    // twice: n rises by 2, the value stays put
    auto l2 = SlantContext::with_line(l1, rng);
    InvariantChain zp2 = lift_chain(*l2, *l1, zp1);
    CHECK(l2->ambient_dim() == 2);
    CHECK(slant_eval(*l2, zp2, {{idel(spec)}}).as_int() == 1);

    // cocycle context lifted once and twice: the whole f-table survives
    auto base = SlantContext::cocycle(spec, {2}, SupportCocycle::generic(1, rng), 3);
    InvariantChain z = base->space()->vertex_chain();
    auto c1 = SlantContext::with_line(base, rng);
    InvariantChain z1 = lift_chain(*c1, *base, z);
    auto c2 = SlantContext::with_line(c1, rng);
    InvariantChain z2 = lift_chain(*c2, *c1, z1);
    for (int j = -3; j <= 3; ++j) {
        BarTuple t{idel(spec), GroupElement::generator(spec, 0, j)};
        ModuleElement v0 = slant_eval(*base, z, {t});
        CHECK(v0.as_int() == 2 * j);
        CHECK(slant_eval(*c1, z1, {t}) == v0);
        CHECK(slant_eval(*c2, z2, {t}) == v0);
    }

    // the lifted vertex chain is still a cycle (the line factor contributes
    // no boundary), and zero lifts to zero
    CHECK(invariant_boundary(c1->space()->fundamental_cycle()).is_zero());
    InvariantChain zero = base->space()->zero_chain(0, ModuleTag::Z());
    CHECK(lift_chain(*c1, *base, zero).is_zero());
    CHECK(slant_eval(*c1, lift_chain(*c1, *base, zero),
                     {{idel(spec), GroupElement::generator(spec, 0)}})
              .is_zero());
}

TEST_CASE("alpha_cap reports") {
    Rng rng(61);
    GroupSpec spec = GroupSpec::free_abelian(2);
    auto ctx = SlantContext::translation(spec, SupportCocycle::generic(2, rng), 2);

    CapReport cap = alpha_cap(ctx, ctx->space()->generator_cycle(0, 0));
    CHECK(cap.degree == 1);
    CHECK(cap.input_is_cycle);
    CHECK(cap.output_is_cocycle);
    CHECK_FALSE(cap.pairings.empty());

    // representative independence through the reported pairings
    InvariantChain w = ctx->space()->zero_chain(2, ModuleTag::Z());
    w.set(0, ModuleElement::from_int(2));
    w.set(1, ModuleElement::from_int(-1));
    InvariantChain moved = ctx->space()->generator_cycle(0, 0) + invariant_boundary(w);
    CapReport cap2 = alpha_cap(ctx, moved);
    REQUIRE(cap.pairings.size() == cap2.pairings.size());
    for (std::size_t i = 0; i < cap.pairings.size(); ++i)
        CHECK(cap.pairings[i].second == cap2.pairings[i].second);

    // the coboundary witness certifies the difference exactly, up to the
    // locked global sign
    BarCochain wit = difference_witness(ctx, w);
    BarCochain diff = cap2.cochain - cap.cochain;
    auto gens = bar_generators(spec, 2, 1);
    bool plus = true, minus = true;
    for (const auto& g : gens) {
        if (!(diff.eval(g) == wit.delta().eval(g))) plus = false;
        if (!(diff.eval(g) == -wit.delta().eval(g))) minus = false;
    }
    CHECK((plus || minus));

    // non-cycle input is a warning, not an error (a single edge orbit over
    // ZG has twisted boundary t^-1 - 1 at the vertex)
    InvariantChain notcycle = ctx->space()->zero_chain(1, ModuleTag::ZG());
    notcycle.set(0, ModuleElement::from_ring(GroupRingElement::unit(spec)));
    CapReport warn = alpha_cap(ctx, notcycle);
    CHECK_FALSE(warn.input_is_cycle);
}

TEST_CASE("product context: slant equals cup, units") {
    Rng rng(31);
    GroupSpec spec = GroupSpec::free_abelian(2);
    auto ctx1 = SlantContext::cocycle(spec, {1, 0}, SupportCocycle::generic(1, rng), 2);
    auto ctx2 = SlantContext::cocycle(spec, {0, 1}, SupportCocycle::generic(1, rng), 2);
    auto prod = SlantContext::product(ctx1, ctx2);

    InvariantChain z1 = ctx1->space()->vertex_chain();
    InvariantChain z2 = ctx2->space()->vertex_chain();
    InvariantChain zz = tensor_chain(*prod, *ctx1, z1, *ctx2, z2);

    BarCochain u = slant_cochain(ctx1, z1);
    BarCochain v = slant_cochain(ctx2, z2);
    ProductBarCochain cup = cup_bar(u, v);
    ProductBarCochain sp = slant_cochain_product(prod, zz);

    for (const auto& g : ball(spec, 2)) {
        if (g.is_identity()) continue;
        for (const auto& h : ball(spec, 2)) {
            if (h.is_identity()) continue;
            BarTuple a{idel(spec), g}, b{idel(spec), h};
            CHECK(sp.eval(a, b) == cup.eval(a, b));
        }
    }

    // the product of cycles is a cycle of the product space
    CHECK(zz.degree == 0);

    // point x point: 1 cup 1 = 1
    auto pt = SlantContext::point(spec, 2);
    auto pp = SlantContext::product(pt, pt);
    InvariantChain zpt = pt->space()->vertex_chain();
    InvariantChain zpp = tensor_chain(*pp, *pt, zpt, *pt, zpt);
    CHECK(slant_eval(*pp, zpp, {{idel(spec)}, {idel(spec)}}).as_int() == 1);

    // mismatched groups are rejected
    auto other = SlantContext::point(GroupSpec::free_abelian(1), 2);
    CHECK_THROWS_AS(SlantContext::product(pt, other), ConfigError);
}
