#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lipcoh/homology.hpp"
#include "lipcoh/int_matrix.hpp"
#include "lipcoh/rng.hpp"

using namespace lipcoh;

namespace {

IntMatrix random_matrix(Rng& rng, int maxdim = 8, int maxabs = 9) {
    int r = 1 + static_cast<int>(rng.below(maxdim));
    int c = 1 + static_cast<int>(rng.below(maxdim));
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Int(rng.range(-maxabs, maxabs));
    return m;
}

void check_snf_postconditions(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a);
    IntMatrix lhs = s.U * a * s.V;
    CHECK(lhs == s.D);
    CHECK(int_abs(determinant(s.U)) == 1);
    CHECK(int_abs(determinant(s.V)) == 1);
    int n = std::min(a.rows(), a.cols());
    for (int i = 0; i < s.D.rows(); ++i)
        for (int j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(s.D.at(i, j) == 0);
    for (int i = 0; i < n; ++i) CHECK(s.D.at(i, i) >= 0);
    for (int i = 0; i + 1 < n; ++i) {
        const Int &a0 = s.D.at(i, i), &a1 = s.D.at(i + 1, i + 1);
        if (a0 == 0)
            CHECK(a1 == 0);
        else
            CHECK(a1 % a0 == 0);
    }
}

} // namespace

TEST_CASE("smith normal form: examples") {
    CHECK(smith_normal_form(IntMatrix::identity(2)).D == IntMatrix::identity(2));
    IntMatrix z(3, 2);
    CHECK(smith_normal_form(z).D == z);

    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    SmithResult s = smith_normal_form(m);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 4);
    CHECK(int_abs(determinant(m)) == 8);
}

TEST_CASE("smith normal form: 200 random matrices") {
    Rng rng(4242);
    for (int i = 0; i < 200; ++i) check_snf_postconditions(random_matrix(rng));
}

TEST_CASE("kernel and integer solve") {
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        IntMatrix a = random_matrix(rng, 6, 5);
        for (const auto& v : integer_kernel(a)) {
            auto img = a.apply(v);
            for (const auto& x : img) CHECK(x == 0);
        }
        // build a solvable rhs and re-solve it
        std::vector<Int> x0(a.cols());
        for (auto& v : x0) v = Int(rng.range(-3, 3));
        auto b = a.apply(x0);
        auto sol = solve_integer(a, b);
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == b);
    }
    // 2x = 1 has no integer solution
    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK_FALSE(solve_integer(two, {Int(1)}).has_value());
}

TEST_CASE("sparse linear system") {
    // x0 + x1 = 3, x1 - x2 = 1, 2*x2 = 4
    IntLinearSystem sys(3);
    sys.add_row({{0, 1}, {1, 1}}, 3);
    sys.add_row({{1, 1}, {2, -1}}, 1);
    sys.add_row({{2, 2}}, 4);
    auto sol = sys.solve();
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] + (*sol)[1] == 3);
    CHECK((*sol)[1] - (*sol)[2] == 1);
    CHECK((*sol)[2] == 2);
    CHECK(sys.rank() == 3);

    IntLinearSystem bad(2);
    bad.add_row({{0, 2}}, 1);
    CHECK_FALSE(bad.solve().has_value());

    IntLinearSystem contradictory(2);
    contradictory.add_row({{0, 1}, {1, 1}}, 1);
    contradictory.add_row({{0, 1}, {1, 1}}, 2);
    CHECK_FALSE(contradictory.solve().has_value());
    CHECK(contradictory.rank() == 1);

    // agreement with dense rank on random systems
    Rng rng(555);
    for (int i = 0; i < 50; ++i) {
        IntMatrix a = random_matrix(rng, 7, 4);
        IntLinearSystem s(a.cols());
        for (int r = 0; r < a.rows(); ++r) {
            std::map<int, Int> row;
            for (int c = 0; c < a.cols(); ++c)
                if (a.at(r, c) != 0) row[c] = a.at(r, c);
            s.add_row(std::move(row), 0);
        }
        CHECK(s.rank() == matrix_rank(a));
    }
}

TEST_CASE("homology of small complexes") {
    // circle: one vertex orbit, one edge orbit, zero differential
    IntChainComplex circle;
    circle.ranks = {1, 1};
    circle.differentials.resize(2);
    circle.differentials[1] = IntMatrix(1, 1);
    auto h = homology(circle);
    CHECK(h[0] == HomologyGroup{1, {}});
    CHECK(h[1] == HomologyGroup{1, {}});

    // torus from the standard one-vertex CW structure: zero differentials
    IntChainComplex torus;
    torus.ranks = {1, 2, 1};
    torus.differentials.resize(3);
    torus.differentials[1] = IntMatrix(1, 2);
    torus.differentials[2] = IntMatrix(2, 1);
    h = homology(torus);
    CHECK(h[0] == HomologyGroup{1, {}});
    CHECK(h[1] == HomologyGroup{2, {}});
    CHECK(h[2] == HomologyGroup{1, {}});

    // non-complex input rejected
    IntChainComplex bad;
    bad.ranks = {1, 1, 1};
    bad.differentials.resize(3);
    bad.differentials[1] = IntMatrix(1, 1);
    bad.differentials[1].at(0, 0) = 1;
    bad.differentials[2] = IntMatrix(1, 1);
    bad.differentials[2].at(0, 0) = 1;
    CHECK_THROWS_AS(homology(bad), ValidationError);
}
