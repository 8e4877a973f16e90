#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "h2k/quadform.hpp"
#include "testutil.hpp"

using namespace h2k;

namespace {

IntSymMatrix goeritz_13_4_11() { return IntSymMatrix::from_rows({{17, -4}, {-4, 15}}); }
IntSymMatrix trefoil_q() { return IntSymMatrix::from_rows({{2, -1}, {-1, 2}}); }

std::multiset<Rational> value_multiset(const MQTable& t) {
    return {t.values.begin(), t.values.end()};
}

// Brute-force minimum of (xi^2/p - 1)/4 over odd xi == i (mod p), |xi| <= 3p;
// the stated independent oracle for the rank-1 closed form.
Rational rank1_oracle(long p, long i) {
    bool found = false;
    Integer best;
    for (long xi = -3 * p; xi <= 3 * p; ++xi) {
        if ((xi % 2 + 2) % 2 != 1) continue;
        if (((xi - i) % p + p) % p != 0) continue;
        Integer s = Integer(xi) * xi;
        if (!found || s < best) { best = s; found = true; }
    }
    REQUIRE(found);
    return make_rational(best - p, 4 * p);
}

}  // namespace

TEST_CASE("group_of on the P(13,4,11) matrix is cyclic of order 239 generated by (0,1)") {
    FiniteAbelianGroup g = group_of(goeritz_13_4_11());
    CHECK(g.order == 239);
    CHECK(g.cyclic);
    CHECK(g.invariant_factors == std::vector<Integer>{239});
    CHECK(g.generator == IntVector{0, 1});
}

TEST_CASE("group_of edge cases") {
    SUBCASE("empty matrix gives the trivial group") {
        FiniteAbelianGroup g = group_of(IntSymMatrix());
        CHECK(g.order == 1);
        CHECK(g.cyclic);
        CHECK(g.generator.empty());
        CHECK(g.invariant_factors.empty());
    }
    SUBCASE("diag(3,15) is not cyclic") {
        FiniteAbelianGroup g = group_of(IntSymMatrix::from_rows({{3, 0}, {0, 15}}));
        CHECK_FALSE(g.cyclic);
        CHECK(g.invariant_factors == std::vector<Integer>{3, 15});
        CHECK(g.order == 45);
    }
    SUBCASE("even determinant is rejected") {
        CHECK_THROWS_AS(group_of(IntSymMatrix::from_rows({{2, 0}, {0, 2}})), EvenDeterminant);
        CHECK_THROWS_AS(group_of(IntSymMatrix::from_rows({{1, 1}, {1, 1}})), EvenDeterminant);
    }
    SUBCASE("diag(3,5): no standard basis vector generates, fallback still does") {
        FiniteAbelianGroup g = group_of(IntSymMatrix::from_rows({{3, 0}, {0, 5}}));
        CHECK(g.cyclic);
        CHECK(g.order == 15);
        // the generator's class must have full order
        for (long mult = 1; mult < 15; ++mult) {
            IntVector scaled(g.k);
            for (int i = 0; i < g.k; ++i) scaled[i] = g.generator[i] * mult;
            CHECK(class_index(scaled, g) == mult);
        }
    }
}

TEST_CASE("class_index examples") {
    FiniteAbelianGroup g = group_of(goeritz_13_4_11());
    CHECK(class_index({13, 11}, g) == 0);   // (13,11) = Q * (1,1)
    CHECK(class_index({0, 15}, g) == 15);   // 15 * g0
    CHECK(class_index({0, 1}, g) == 1);

    SUBCASE("zero vector is characteristic iff the diagonal is even, class 0") {
        IntSymMatrix q = IntSymMatrix::from_rows({{2, 1}, {1, 2}});
        FiniteAbelianGroup g2 = group_of(q);
        CHECK(is_characteristic(q, {0, 0}));
        CHECK(class_index({0, 0}, g2) == 0);
        CHECK_FALSE(is_characteristic(goeritz_13_4_11(), {0, 0}));
    }
    SUBCASE("non-cyclic groups are rejected") {
        FiniteAbelianGroup g3 = group_of(IntSymMatrix::from_rows({{3, 0}, {0, 15}}));
        CHECK_THROWS_AS(class_index({1, 1}, g3), NonCyclic);
    }
}

TEST_CASE("closed_form_rank1 known values") {
    CHECK(closed_form_rank1(239, 0) == make_rational(119, 2));
    CHECK(closed_form_rank1(239, 1) == make_rational(-119, 478));
    CHECK(closed_form_rank1(3, 0) == make_rational(1, 2));
    CHECK(closed_form_rank1(3, 1) == make_rational(-1, 6));
    CHECK(closed_form_rank1(3, 2) == make_rational(-1, 6));
    CHECK(closed_form_rank1(1, 0) == Rational(0));
    CHECK_THROWS_AS(closed_form_rank1(4, 1), EvenModulus);
    CHECK_THROWS_AS(closed_form_rank1(5, 5), OutOfRange);
    CHECK_THROWS_AS(closed_form_rank1(5, -1), OutOfRange);
}

TEST_CASE("closed_form_rank1 equals the odd-residue brute force for p <= 25") {
    for (long p = 1; p <= 25; p += 2)
        for (long i = 0; i < p; ++i)
            CHECK(closed_form_rank1(p, i) == rank1_oracle(p, i));
}

TEST_CASE("closed_form_rank1 agrees with mq_table of the 1x1 matrix (p)") {
    for (long p = 1; p <= 99; p += 2) {
        IntSymMatrix q(std::vector<std::vector<Integer>>{{Integer(p)}});
        FiniteAbelianGroup g = group_of(q);
        MQTable t = mq_table(q, g);
        REQUIRE(t.p == static_cast<unsigned long>(p));
        for (long i = 0; i < p; ++i) {
            // relabel: table index of residue class i depends on the generator
            unsigned long idx = to_ulong_checked(class_index({Integer(i)}, g), "idx");
            CHECK(t.values[idx] == closed_form_rank1(p, i));
        }
    }
}

TEST_CASE("mq_table for the P(13,4,11) matrix") {
    IntSymMatrix q = goeritz_13_4_11();
    FiniteAbelianGroup g = group_of(q);
    MQTable t = mq_table(q, g);
    CHECK(t.p == 239);
    CHECK(t.values[0] == make_rational(11, 2));
    CHECK(t.witnesses[0] == IntVector{13, 11});
    CHECK(t.values[15] == make_rational(1793, 478));  // gives I(1) = 4 at a = 15
    CHECK(t.values[224] == make_rational(1793, 478));
}

TEST_CASE("mq_table for the trefoil matrix") {
    IntSymMatrix q = trefoil_q();
    FiniteAbelianGroup g = group_of(q);
    MQTable t = mq_table(q, g);
    REQUIRE(t.p == 3);
    CHECK(t.values[0] == make_rational(-1, 2));
    CHECK(t.values[1] == make_rational(1, 6));
    CHECK(t.values[2] == make_rational(1, 6));
    CHECK(t.witnesses[0] == IntVector{0, 0});
    CHECK(t.witnesses[1] == IntVector{2, 0});
    CHECK(t.witnesses[2] == IntVector{0, 2});
}

TEST_CASE("mq_table trivial cases") {
    SUBCASE("1x1 identity") {
        IntSymMatrix q = IntSymMatrix::from_rows({{1}});
        MQTable t = mq_table(q, group_of(q));
        REQUIRE(t.p == 1);
        CHECK(t.values[0] == Rational(0));
        CHECK(t.witnesses[0] == IntVector{1});
    }
    SUBCASE("empty matrix (unknot)") {
        IntSymMatrix q;
        MQTable t = mq_table(q, group_of(q));
        REQUIRE(t.p == 1);
        CHECK(t.values[0] == Rational(0));
        CHECK(t.witnesses[0].empty());
    }
    SUBCASE("indefinite input rejected") {
        IntSymMatrix q = IntSymMatrix::from_rows({{-2, 1}, {1, -2}});
        FiniteAbelianGroup g = group_of(IntSymMatrix::from_rows({{2, -1}, {-1, 2}}));
        CHECK_THROWS_AS(mq_table(q, g), Indefinite);
    }
    SUBCASE("max bound cap") {
        IntSymMatrix q = goeritz_13_4_11();
        FiniteAbelianGroup g = group_of(q);
        CHECK_THROWS_AS(mq_table(q, g, Integer(1)), InvalidArgument);
    }
}

TEST_CASE("mq_bruteforce agrees with mq_table on the worked examples") {
    for (const IntSymMatrix& q : {goeritz_13_4_11(), trefoil_q()}) {
        FiniteAbelianGroup g = group_of(q);
        MQTable t = mq_table(q, g);
        auto brute = mq_bruteforce(q, g, covering_radius(q, t));
        for (unsigned long i = 0; i < t.p; ++i) {
            REQUIRE(brute[i].has_value());
            CHECK(brute[i]->first == t.values[i]);
            CHECK(brute[i]->second == t.witnesses[i]);
        }
    }
}

TEST_CASE("mq_bruteforce radius 0 finds nothing when the diagonal is odd") {
    IntSymMatrix q = goeritz_13_4_11();
    FiniteAbelianGroup g = group_of(q);
    auto brute = mq_bruteforce(q, g, 0);
    CHECK(std::none_of(brute.begin(), brute.end(), [](const auto& c) { return c.has_value(); }));

    // With an all-even diagonal the zero vector is characteristic.
    IntSymMatrix q2 = IntSymMatrix::from_rows({{2, 1}, {1, 2}});
    FiniteAbelianGroup g2 = group_of(q2);
    auto brute2 = mq_bruteforce(q2, g2, 0);
    REQUIRE(brute2[0].has_value());
    CHECK(brute2[0]->second == IntVector{0, 0});
    CHECK(std::count_if(brute2.begin(), brute2.end(),
                        [](const auto& c) { return c.has_value(); }) == 1);
}

TEST_CASE("table invariants on random positive-definite matrices") {
    std::mt19937_64 rng(20250810);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 1 + static_cast<int>(rng() % 3);
        IntSymMatrix q = testutil::random_odd_pd(rng, k, 200, 12);
        FiniteAbelianGroup g = group_of(q);
        if (!g.cyclic) continue;
        MQTable t = mq_table(q, g);
        unsigned long p = t.p;

        // negation symmetry, denominator bound, lower bound, witness validity.
        // The lower bound is attained exactly when the zero vector is
        // characteristic (all-even diagonal), so it is not strict.
        for (unsigned long i = 0; i < p; ++i) {
            CHECK(t.values[i] == t.values[(p - i) % p]);
            CHECK(is_integral(Rational(t.values[i] * 4 * Integer(p))));
            CHECK(t.values[i] >= make_rational(-k, 4));
            CHECK(is_characteristic(q, t.witnesses[i]));
            CHECK(class_index(t.witnesses[i], g) == i);
        }

        // oracle equivalence over a box covering the certified one
        auto brute = mq_bruteforce(q, g, covering_radius(q, t));
        for (unsigned long i = 0; i < p; ++i) {
            REQUIRE(brute[i].has_value());
            CHECK(brute[i]->first == t.values[i]);
            CHECK(brute[i]->second == t.witnesses[i]);
        }
    }
}

TEST_CASE("value multiset is invariant under unimodular congruence") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 12; ++trial) {
        int k = 2 + static_cast<int>(rng() % 2);
        IntSymMatrix q = testutil::random_odd_pd(rng, k, 120, 8);
        FiniteAbelianGroup g = group_of(q);
        if (!g.cyclic) continue;
        auto base = value_multiset(mq_table(q, g));
        for (int w = 0; w < 3; ++w) {
            IntSymMatrix conj = testutil::congruent(q, testutil::random_unimodular(rng, k, 4));
            FiniteAbelianGroup g2 = group_of(conj);
            REQUIRE(g2.order == g.order);
            REQUIRE(g2.cyclic);
            CHECK(value_multiset(mq_table(conj, g2)) == base);
        }
    }
}

TEST_CASE("trefoil matrix and its pretzel form share the table multiset") {
    // P(1,1,1) produces exactly the trefoil matrix, so this is an identity
    // check here; the PD-code route is covered in the diagram tests.
    IntSymMatrix q = trefoil_q();
    FiniteAbelianGroup g = group_of(q);
    auto a = value_multiset(mq_table(q, g));
    CHECK(a == std::multiset<Rational>{make_rational(-1, 2), make_rational(1, 6), make_rational(1, 6)});
}
