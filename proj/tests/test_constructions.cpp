#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "test_helpers.hpp"

using rotmap::DihedralPart;
using rotmap::Family;
using rotmap::Permutation;
using rotmap::vertex_id;
using rotmap::WreathElement;

namespace {

WreathElement wreath_of(int m, int n, const DihedralPart& dih,
                        const std::vector<Permutation>& alphas) {
    return WreathElement(alphas, dih);
}

}  // namespace

TEST_CASE("chiral recipe components", "[constructions]") {
    const auto rec = rotmap::chiral_recipe(3, 1);
    const auto gen = rotmap::standard_generators(3, 3);

    // sigma2 = (t, tc, tc^2) z since l_2 = 1, l_3 = 2
    CHECK(rec.sigma2 ==
          wreath_of(3, 3, gen.z,
                    {gen.t, compose(gen.t, gen.c), compose(gen.t, gen.c.pow(2))}));

    // sigma2^2 = (1, c, c^2)
    CHECK(wr_mul(rec.sigma2, rec.sigma2) ==
          wreath_of(3, 3, DihedralPart::identity(3),
                    {Permutation::identity(3), gen.c, gen.c.pow(2)}));

    CHECK(rec.type_p == 9);
    CHECK(rec.type_q == 6);
    CHECK(rec.expected_group_order == 54);
    CHECK_FALSE(rec.rho.has_value());
    CHECK(rec.base_vertex == vertex_id(1, 1, 3));
    CHECK(rec.base_w == vertex_id(2, 2, 3));

    CHECK(rotmap::chiral_recipe(5, 1).sigma1.order() == 25);
}

TEST_CASE("nonorientable odd recipe components", "[constructions]") {
    const auto rec = rotmap::nonorientable_odd_recipe(3, 3);
    const auto gen = rotmap::standard_generators(3, 9);
    // component pattern c^{(-1)^(i-1) (2i-3)}
    for (int i = 2; i <= 9; ++i) {
        const long long e = (i % 2 == 0 ? -1 : 1) * (2LL * i - 3);
        CHECK(rec.sigma2.alpha(i) == gen.c.pow(e));
    }
    CHECK(rec.sigma2.alpha(1) == gen.t);
    CHECK(rec.sigma2.alpha(9) == gen.c.pow(-3));  // c^(2n-3) = c^-3

    // sigma1^n = (tc^-1, ..., tc^-1)
    const auto rec31 = rotmap::nonorientable_odd_recipe(3, 1);
    const auto gen3 = rotmap::standard_generators(3, 3);
    const Permutation tcinv = compose(gen3.t, gen3.c.inverse());
    CHECK(rec31.sigma1.pow(3) ==
          wreath_of(3, 3, DihedralPart::identity(3), {tcinv, tcinv, tcinv}));

    // rho is an involution fixing (1,1) and inverting sigma1
    REQUIRE(rec31.rho.has_value());
    CHECK(wr_mul(*rec31.rho, *rec31.rho).is_identity());
    CHECK(rec31.rho->to_vertex_perm()(rec31.base_vertex) == rec31.base_vertex);
    CHECK(wr_mul(wr_mul(rec31.rho->inverse(), rec31.sigma1), *rec31.rho) ==
          rec31.sigma1.inverse());
}

TEST_CASE("orientable odd recipe equals the closed form", "[constructions]") {
    for (const auto [m, s] : {std::pair{3, 1}, std::pair{3, 3}, std::pair{5, 1}}) {
        const auto rec = rotmap::orientable_odd_recipe(m, s);
        const int n = s * m;
        const auto gen = rotmap::standard_generators(m, n);
        // eta1 = (t, tc^-4, tc^4, ..., tc^((-1)^(i+1)(2i-1)-1), ..., tc^2, c) r
        CHECK(rec.sigma1.dih() == gen.r);
        CHECK(rec.sigma1.alpha(1) == gen.t);
        CHECK(rec.sigma1.alpha(n) == gen.c);
        for (int i = 2; i <= n - 1; ++i) {
            const long long e = (i % 2 == 0 ? -1 : 1) * (2LL * i - 1) - 1;
            CHECK(rec.sigma1.alpha(i) == compose(gen.t, gen.c.pow(e)));
        }
        CHECK(rec.sigma1.order() == n);
        CHECK(rec.type_p == n);
    }

    const auto rec = rotmap::orientable_odd_recipe(3, 1);
    rotmap::GeneratedGroup h(9, {rec.sigma1.to_vertex_perm(), rec.sigma2.to_vertex_perm()});
    h.enumerate();
    CHECK(h.order() == 54);  // |H| = 2 m^2 n
}

TEST_CASE("nonorientable even recipe components", "[constructions]") {
    const auto rec = rotmap::nonorientable_even_recipe(3, 2);
    const auto gen = rotmap::standard_generators(3, 6);
    CHECK(rec.sigma2.alpha(1) == gen.t);
    CHECK(rec.sigma2.alpha(2) == gen.c.inverse());
    for (int i = 3; i <= 6; ++i) {
        const bool is_c = (i % 4 == 0 || i % 4 == 3);
        CHECK(rec.sigma2.alpha(i) == (is_c ? gen.c : gen.c.inverse()));
    }

    // sigma2^2 = (1, c^-2, 1, c^2, 1, c^-2)
    const Permutation one = Permutation::identity(3);
    CHECK(wr_mul(rec.sigma2, rec.sigma2) ==
          wreath_of(3, 6, DihedralPart::identity(6),
                    {one, gen.c.pow(-2), one, gen.c.pow(2), one, gen.c.pow(-2)}));

    // rho has the same closed form as in the s-odd case
    const Permutation tcinv = compose(gen.t, gen.c.inverse());
    REQUIRE(rec.rho.has_value());
    CHECK(*rec.rho == wreath_of(3, 6, gen.z, {one, tcinv, tcinv, tcinv, tcinv, tcinv}));
}

TEST_CASE("orientable even recipe components", "[constructions]") {
    const auto rec = rotmap::orientable_even_recipe(3, 2);
    const auto gen = rotmap::standard_generators(3, 6);
    const Permutation tcinv = compose(gen.t, gen.c.inverse());
    CHECK(rec.sigma1 == wreath_of(3, 6, gen.r, std::vector<Permutation>(6, gen.t)));
    CHECK(rec.sigma2.alpha(5) == tcinv);  // last two components are tc^-1
    CHECK(rec.sigma2.alpha(6) == tcinv);

    // eta2^2 = (1, c^-1, c^-2, ..., c)
    const auto zeta = wr_mul(rec.sigma2, rec.sigma2);
    for (int i = 1; i <= 6; ++i) CHECK(zeta.alpha(i) == gen.c.pow(1 - i));
    CHECK(zeta.dih().is_identity());

    // rho = z inverts both generators
    REQUIRE(rec.rho.has_value());
    CHECK(rec.rho->dih() == gen.z);
    CHECK(wr_mul(wr_mul(rec.rho->inverse(), rec.sigma1), *rec.rho) == rec.sigma1.inverse());
    CHECK(wr_mul(wr_mul(rec.rho->inverse(), rec.sigma2), *rec.rho) == rec.sigma2.inverse());
}

TEST_CASE("recipes reject out-of-domain parameters", "[constructions]") {
    CHECK_THROWS_AS(rotmap::chiral_recipe(4, 1), rotmap::ParameterError);
    CHECK_THROWS_AS(rotmap::chiral_recipe(3, 0), rotmap::ParameterError);
    CHECK_THROWS_AS(rotmap::nonorientable_odd_recipe(3, 2), rotmap::ParameterError);
    CHECK_THROWS_AS(rotmap::orientable_odd_recipe(3, 4), rotmap::ParameterError);
    CHECK_THROWS_AS(rotmap::nonorientable_even_recipe(3, 1), rotmap::ParameterError);
    CHECK_THROWS_AS(rotmap::nonorientable_even_recipe(3, 4), rotmap::ParameterError);
    CHECK_THROWS_AS(rotmap::orientable_even_recipe(3, 8), rotmap::ParameterError);
    CHECK_THROWS_AS(rotmap::orientable_even_recipe(2, 2), rotmap::ParameterError);

    CHECK(rotmap::family_in_domain(Family::Chiral, 3, 4));  // chiral takes every s >= 1
    CHECK_FALSE(rotmap::family_in_domain(Family::NonOrientableEven, 3, 4));
    CHECK_FALSE(rotmap::family_in_domain(Family::OrientableOdd, 3, 2));
}

TEST_CASE("rotary hypotheses hold for every grid recipe", "[constructions][property]") {
    for (const auto& [family, ms] : testutil::grid_instances()) {
        const auto rec = rotmap::make_recipe(family, ms.first, ms.second);
        const auto g = rotmap::LexGraph::build(ms.first, ms.second);
        const Permutation s1 = rec.sigma1.to_vertex_perm();
        const Permutation s2 = rec.sigma2.to_vertex_perm();

        CHECK(g.is_automorphism(s1));
        CHECK(g.is_automorphism(s2));
        CHECK(s2(rec.base_vertex) == rec.base_vertex);
        CHECK(g.adjacent(rec.base_vertex, rec.base_w));
        CHECK(wr_mul(rec.sigma1, rec.sigma2).order() == 2);  // (s1 s2)^2 = 1

        // <sigma2> is transitive on the 2m neighbours of v
        std::set<int> orbit;
        int x = rec.base_w;
        do {
            orbit.insert(x);
            x = s2(x);
        } while (x != rec.base_w);
        const auto nb = g.neighbors(rec.base_vertex);
        CHECK(orbit == std::set<int>(nb.begin(), nb.end()));
    }
}

TEST_CASE("chiral neighbour rotation follows the asserted pattern", "[constructions]") {
    // sigma2 sends (2,j) -> (n, m-j+3) and (n,k) -> (2, m-k+4); from (2,2)
    // the orbit starts (2,2), (n,1), (2,3), (n,m), (2,4), ...
    const auto rec = rotmap::chiral_recipe(3, 1);
    const Permutation s2 = rec.sigma2.to_vertex_perm();
    const int m = 3, n = 3;
    std::vector<int> expected{vertex_id(2, 2, m), vertex_id(n, 1, m), vertex_id(2, 3, m),
                              vertex_id(n, m, m), vertex_id(2, 4 - m, m), vertex_id(n, m - 1, m)};
    int x = vertex_id(2, 2, m);
    for (int k = 0; k < 6; ++k) {
        CHECK(x == expected[static_cast<std::size_t>(k)]);
        x = s2(x);
    }
    CHECK(x == expected.front());
}

TEST_CASE("no involution (alpha)z fixes v and inverts the chiral generators", "[constructions]") {
    CHECK_FALSE(rotmap::search_chiral_reflection(3, 1).has_value());
    CHECK_FALSE(rotmap::search_chiral_reflection(3, 2).has_value());
    CHECK_THROWS_AS(rotmap::search_chiral_reflection(5, 1), rotmap::ParameterError);
    CHECK_THROWS_AS(rotmap::search_chiral_reflection(3, 3), rotmap::ParameterError);
}

TEST_CASE("the searcher finds reflections when they exist", "[constructions]") {
    // sanity for the negative search: the same constrained search applied
    // to the non-orientable recipe must find its rho
    const auto rec = rotmap::nonorientable_odd_recipe(3, 1);
    const int n = 3;
    std::vector<Permutation> s3;
    std::vector<int> img{1, 2, 3};
    do {
        s3.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));

    std::vector<WreathElement> found;
    for (const auto& a1 : s3)
        for (const auto& a2 : s3)
            for (const auto& a3 : s3) {
                const WreathElement cand({a1, a2, a3}, DihedralPart::reflection(n));
                if (!wr_mul(cand, cand).is_identity() || cand.alpha(1)(1) != 1) continue;
                if (wr_mul(wr_mul(cand.inverse(), rec.sigma1), cand) == rec.sigma1.inverse() &&
                    wr_mul(wr_mul(cand.inverse(), rec.sigma2), cand) == rec.sigma2.inverse())
                    found.push_back(cand);
            }
    REQUIRE_FALSE(found.empty());
    CHECK(std::find(found.begin(), found.end(), *rec.rho) != found.end());
}
