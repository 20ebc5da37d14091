#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lipcoh/module_map.hpp"
#include "lipcoh/rng.hpp"
#include "lipcoh/ses.hpp"
#include "lipcoh/tensor_complex.hpp"

using namespace lipcoh;

namespace {

std::shared_ptr<const FreeZGComplex> res_of(const char* group) {
    auto r = std::make_shared<FreeZGComplex>(cellular_resolution(GroupSpec::parse(group)));
    r->validate();
    return r;
}

} // namespace

TEST_CASE("berstein_schwarz on cellular resolutions") {
    // circle: beta(e1) = t - 1
    {
        auto res = res_of("Z");
        GroupSpec spec = res->spec;
        CellCochain beta = berstein_schwarz(res);
        CHECK(beta.degree() == 1);
        GroupRingElement want = GroupRingElement::aug_gen(spec, GroupElement::generator(spec, 0));
        CHECK(beta.value(0) == ModuleElement::from_ring(want));
        CHECK(beta.is_cocycle());
    }
    // torus and wedge: values are the aug_gens of the generators, all in ker eps
    for (const char* g : {"Z^2", "F_2"}) {
        auto res = res_of(g);
        GroupSpec spec = res->spec;
        CellCochain beta = berstein_schwarz(res);
        for (int i = 0; i < res->rank(1); ++i) {
            CHECK(beta.value(i) ==
                  ModuleElement::from_ring(GroupRingElement::aug_gen(spec, GroupElement::generator(spec, i))));
            CHECK(beta.value(i).satisfies(ModuleTag::aug_power(1)));
        }
        CHECK(beta.is_cocycle());
    }
    // resolution without augmentation data is rejected
    auto res = std::make_shared<FreeZGComplex>(cellular_resolution(GroupSpec::parse("Z")));
    res->augmentation.reset();
    CHECK_THROWS_AS(berstein_schwarz(std::shared_ptr<const FreeZGComplex>(res)), ValidationError);
}

TEST_CASE("connecting homomorphism: beta = delta(1), literally") {
    for (const char* g : {"Z", "Z^2", "F_2"}) {
        auto res = res_of(g);
        ShortExactSeq seq = ShortExactSeq::augmentation_seq(res->spec);
        CellCochain one(res, 0, ModuleTag::Z(),
                        std::vector<ModuleElement>(res->rank(0), ModuleElement::from_int(1)));
        CHECK(connecting_cohomology(one, seq) == berstein_schwarz(res));
    }
}

TEST_CASE("section choosers: composite and section laws, lift independence") {
    GroupSpec spec = GroupSpec::free_abelian(2);
    GroupElement t1 = GroupElement::generator(spec, 0);
    Rng rng(3);
    for (int ell : {1, 2, 3}) {
        ShortExactSeq seq = ShortExactSeq::augmentation_seq(spec, ell);
        for (int trial = 0; trial < 30; ++trial) {
            // random element of M
            ModuleElement m = ModuleElement::zero(ell - 1);
            auto b2 = ball(spec, 2);
            for (int t = 0; t < 2; ++t) {
                ModuleElement::Key key;
                for (int s = 0; s < ell - 1; ++s) key.push_back(b2[rng.below(b2.size())]);
                m.add_term(key, Int(rng.range(-3, 3)));
            }
            // projection . section = identity
            CHECK(seq.project(seq.section(m)) == m);
        }
        // inclusion then projection = 0 on K elements
        ModuleElement k = ModuleElement::elementary(std::vector<GroupRingElement>(
            ell, GroupRingElement::aug_gen(spec, t1)));
        CHECK(seq.project(seq.include(k)).is_zero());
    }

    // two section choosers give outputs differing by the coboundary of the
    // explicit witness (s1 - s2) . c
    auto res = res_of("Z^2");
    ShortExactSeq s1 = ShortExactSeq::augmentation_seq(spec);
    ShortExactSeq s2 = ShortExactSeq::with_section_base(spec, 1, t1);
    CellCochain one(res, 0, ModuleTag::Z(),
                    std::vector<ModuleElement>(res->rank(0), ModuleElement::from_int(1)));
    CellCochain d1 = connecting_cohomology(one, s1);
    CellCochain d2 = connecting_cohomology(one, s2);
    CellCochain witness = one.mapped(s1.L(), [&](const ModuleElement& v) {
        return s1.section(v) - s2.section(v);
    });
    CHECK(d1 - d2 == witness.delta().reinterpret(s1.K()));
}

TEST_CASE("connecting of a coboundary vanishes (additive sections)") {
    auto res = res_of("Z^2");
    GroupSpec spec = res->spec;
    ShortExactSeq seq = ShortExactSeq::augmentation_seq(spec);
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ModuleElement> vals;
        for (int i = 0; i < res->rank(0); ++i)
            vals.push_back(ModuleElement::from_int(Int(rng.range(-4, 4))));
        CellCochain u(res, 0, ModuleTag::Z(), vals);
        CellCochain conn = connecting_cohomology(u.delta(), seq);
        bool zero = true;
        for (const auto& v : conn.values())
            if (!v.is_zero()) zero = false;
        CHECK(zero);
    }
    // Z, l = 2: the circle resolution has no degree-2 generators, so the
    // connecting image of beta is forced to vanish
    auto circle = res_of("Z");
    CellCochain beta = berstein_schwarz(circle);
    ShortExactSeq seq2 = ShortExactSeq::augmentation_seq(circle->spec, 2);
    CellCochain conn = connecting_cohomology(beta, seq2);
    CHECK(conn.degree() == 1);
    for (const auto& v : conn.values()) CHECK(v.is_zero());
}

TEST_CASE("beta squared through the l=2 sequence") {
    auto res = res_of("Z^2");
    GroupSpec spec = res->spec;
    CellCochain b2 = beta_power(res, 2);
    CHECK(b2.degree() == 2);
    CHECK(b2.tag() == ModuleTag::aug_power(2));
    CHECK(b2.value(0).satisfies(ModuleTag::aug_power(2)));
    CHECK(b2.is_cocycle()); // top degree: trivially a cocycle

    // hand-expanded value: lift beta through x -> x (x) e and 
    //differential d(e12) = (t1-1) e2 - (t2-1) e1
    GroupElement e = GroupElement::identity(spec);
    GroupElement t1 = GroupElement::generator(spec, 0), t2 = GroupElement::generator(spec, 1);
    ModuleElement want(2);
    // (t1-1).((t2-1)(x)e) = (t1t2-t1)(x)t1 - (t2-1)(x)e
    want.add_term({mul(t1, t2), t1}, 1);
    want.add_term({t1, t1}, -1);
    want.add_term({t2, e}, -1);
    want.add_term({e, e}, 1);
    // -(t2-1).((t1-1)(x)e) = -(t2t1-t2)(x)t2 + (t1-1)(x)e
    want.add_term({mul(t2, t1), t2}, -1);
    want.add_term({t2, t2}, 1);
    want.add_term({t1, e}, 1);
    want.add_term({e, e}, -1);
    CHECK(b2.value(0) == want);
}

TEST_CASE("cup with the unit class") {
    // 1 cup v recovers v under the canonical identification of the product
    // resolution with the second factor: (1 cup v)(a_0 (x) g b_j) = g.v(b_j)
    auto res = res_of("Z^2");
    GroupSpec spec = res->spec;
    CellCochain one(res, 0, ModuleTag::Z(),
                    std::vector<ModuleElement>(res->rank(0), ModuleElement::from_int(1)));
    CellCochain v = berstein_schwarz(res);
    TensorCochain cup = cup_product(one, v);
    for (int j = 0; j < res->rank(1); ++j)
        for (const auto& g : ball(spec, 2)) {
            TensorKey key{0, 0, j, g};
            CHECK(cup.eval_basis(key) == v.value(j).translated(g));
        }
}

TEST_CASE("solve_coefficient_hom: examples") {
    // Z, k = 1: phi(t-1) = 1 forces phi(t^2-1) = 2
    {
        auto res = res_of("Z");
        GroupSpec spec = res->spec;
        CellCochain target(res, 1, ModuleTag::Z(), {ModuleElement::from_int(1)});
        ModuleMap phi = solve_coefficient_hom(res, 1, 3, target);
        GroupElement t = GroupElement::generator(spec, 0);
        CHECK(phi.evaluate(ModuleElement::from_ring(GroupRingElement::aug_gen(spec, t))) == 1);
        CHECK(phi.evaluate(ModuleElement::from_ring(
                  GroupRingElement::aug_gen(spec, GroupElement::generator(spec, 0, 2)))) == 2);
        CHECK(phi.evaluate(ModuleElement::from_ring(
                  GroupRingElement::aug_gen(spec, GroupElement::generator(spec, 0, -3)))) == -3);
        CHECK(phi.equivariance_violations() == 0);
    }
    // trivial target class -> the zero map works and pairings vanish
    {
        auto res = res_of("Z");
        CellCochain target(res, 1, ModuleTag::Z(), {ModuleElement::from_int(0)});
        ModuleMap phi = solve_coefficient_hom(res, 1, 2, target);
        CellCochain pushed = phi.pushforward(berstein_schwarz(res));
        for (const auto& cyc : res->cycle_basis(1)) CHECK(pushed.pairing(cyc).is_zero());
    }
    // Z^2, k = 1, target = dual of the first generator loop
    {
        auto res = res_of("Z^2");
        GroupSpec spec = res->spec;
        std::vector<ModuleElement> tv{ModuleElement::from_int(1), ModuleElement::from_int(0)};
        CellCochain target(res, 1, ModuleTag::Z(), tv);
        ModuleMap phi = solve_coefficient_hom(res, 1, 2, target);
        GroupElement t1 = GroupElement::generator(spec, 0), t2 = GroupElement::generator(spec, 1);
        CHECK(phi.evaluate(ModuleElement::from_ring(GroupRingElement::aug_gen(spec, t1))) == 1);
        CHECK(phi.evaluate(ModuleElement::from_ring(GroupRingElement::aug_gen(spec, t2))) == 0);
        CellCochain pushed = phi.pushforward(berstein_schwarz(res));
        for (const auto& cyc : res->cycle_basis(1))
            CHECK(pushed.pairing(cyc) == target.pairing(cyc));
    }
}

TEST_CASE("solve_coefficient_hom: unsat and radius errors") {
    auto res = res_of("Z");
    // inconsistent pairing demands cannot be satisfied: ask beta to pair as 1
    // with a cycle and as 0 with twice the same cycle by rigging the target
    // through a direct system (the public path reports UNSAT via UnsatError
    // only for genuinely contradictory systems, so build one directly)
    IntLinearSystem sys(1);
    sys.add_row({{0, 2}}, 1);
    CHECK_FALSE(sys.solve().has_value());

    // beta^2 on Z^2 needs factors of word length 2: radius 1 is insufficient
    auto res2 = res_of("Z^2");
    std::vector<ModuleElement> tv(res2->rank(2), ModuleElement::zero(0));
    tv[0] = ModuleElement::from_int(1);
    CellCochain target(res2, 2, ModuleTag::Z(), tv);
    CHECK_THROWS_AS(solve_coefficient_hom(res2, 2, 1, target), RadiusError);
    // and at radius 2 it solves with pairing 1 against the fundamental cycle
    ModuleMap phi2 = solve_coefficient_hom(res2, 2, 2, target);
    CellCochain pushed = phi2.pushforward(beta_power(res2, 2));
    std::vector<Int> fund(res2->rank(2), 0);
    fund[0] = 1;
    CHECK(pushed.pairing(fund) == ModuleElement::from_int(1));
}

TEST_CASE("pushforward naturality and radius guard") {
    auto res = res_of("Z^2");
    GroupSpec spec = res->spec;
    CellCochain target(res, 1, ModuleTag::Z(),
                       {ModuleElement::from_int(1), ModuleElement::from_int(0)});
    ModuleMap phi = solve_coefficient_hom(res, 1, 3, target);

    // pushforward(phi, delta u) = delta(pushforward(phi, u)) for I-valued u
    Rng rng(17);
    auto b2 = ball(spec, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ModuleElement> vals;
        for (int i = 0; i < res->rank(0); ++i) {
            ModuleElement v = ModuleElement::zero(1);
            for (int t = 0; t < 2; ++t) {
                const GroupElement& g = b2[rng.below(b2.size())];
                if (!g.is_identity())
                    v += Int(rng.range(-2, 2)) *
                         ModuleElement::from_ring(GroupRingElement::aug_gen(spec, g));
            }
            vals.push_back(std::move(v));
        }
        CellCochain u(res, 0, ModuleTag::aug_power(1), vals);
        CHECK(phi.pushforward(u.delta()) == phi.pushforward(u).delta());
    }

    // zero map pushes everything to zero
    ModuleMap zero = ModuleMap::zero(spec, 1, 2);
    CellCochain pushed = zero.pushforward(berstein_schwarz(res));
    for (const auto& v : pushed.values()) CHECK(v.is_zero());

    // value outside the truncation radius raises RadiusError
    ModuleMap tiny = ModuleMap::zero(spec, 1, 1);
    ModuleElement far = ModuleElement::from_ring(
        GroupRingElement::aug_gen(spec, GroupElement::from_exponents(spec, {3, 0})));
    CHECK_THROWS_AS(tiny.evaluate(far), RadiusError);
}

TEST_CASE("coinvariant ranks") {
    CHECK(coinvariants_rank(GroupSpec::parse("Z"), 1, 3) == std::pair<int, int>{1, 1});
    CHECK(coinvariants_rank(GroupSpec::parse("Z^2"), 1, 3) == std::pair<int, int>{2, 2});
    CHECK(coinvariants_rank(GroupSpec::parse("F_2"), 1, 3) == std::pair<int, int>{2, 2});
    // designed failure: I(F_2)^(x2) does not stabilize at tiny radius
    auto [r0, r1] = coinvariants_rank(GroupSpec::parse("F_2"), 2, 1);
    CHECK(r0 != r1);
}

TEST_CASE("module map table round trip") {
    auto res = res_of("Z^2");
    CellCochain target(res, 1, ModuleTag::Z(),
                       {ModuleElement::from_int(1), ModuleElement::from_int(0)});
    ModuleMap phi = solve_coefficient_hom(res, 1, 2, target);
    std::ostringstream out;
    phi.save_table(out);
    std::istringstream in(out.str());
    ModuleMap loaded = ModuleMap::load_table(in);
    CHECK(loaded.order() == phi.order());
    CHECK(loaded.radius() == phi.radius());
    CHECK(loaded.values() == phi.values());
}
