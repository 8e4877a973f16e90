#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "h2k/exactmat.hpp"
#include "testutil.hpp"

using namespace h2k;
using testutil::cofactor_det;
using testutil::random_symmetric;

namespace {

IntSymMatrix goeritz_13_4_11() { return IntSymMatrix::from_rows({{17, -4}, {-4, 15}}); }

}  // namespace

TEST_CASE("construction rejects asymmetric and non-square input") {
    CHECK_THROWS_AS(IntSymMatrix(std::vector<std::vector<Integer>>{{1, 2}, {3, 4}}),
                    InvalidArgument);
    CHECK_THROWS_AS(IntSymMatrix(std::vector<std::vector<Integer>>{{1, 2}}), InvalidArgument);
}

TEST_CASE("determinant examples") {
    CHECK(determinant(goeritz_13_4_11()) == 239);
    CHECK(determinant(IntSymMatrix::from_rows({{1, 0}, {0, 1}})) == 1);
    CHECK(determinant(IntSymMatrix::from_rows({{2, -1}, {-1, 2}})) == 3);
    CHECK(determinant(IntSymMatrix()) == 1);  // empty matrix, by convention
}

TEST_CASE("determinant matches cofactor expansion on random matrices up to k=4") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 400; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        IntSymMatrix m = random_symmetric(rng, k, -9, 9);
        CHECK(determinant(m) == cofactor_det(m.rows()));
    }
}

TEST_CASE("adjugate examples and defining identity") {
    CHECK(adjugate(goeritz_13_4_11()) == IntSymMatrix::from_rows({{15, 4}, {4, 17}}));
    CHECK(adjugate(IntSymMatrix::from_rows({{1, 0}, {0, 1}})) ==
          IntSymMatrix::from_rows({{1, 0}, {0, 1}}));
    CHECK(adjugate(IntSymMatrix::from_rows({{2, -1}, {-1, 3}})) ==
          IntSymMatrix::from_rows({{3, 1}, {1, 2}}));
}

TEST_CASE("M * adj(M) == det(M) * I, including singular matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        IntSymMatrix m = random_symmetric(rng, k, -6, 6);
        Integer det = determinant(m);
        IntMatrixRows prod = mat_mul(m.rows(), adjugate(m).rows());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) CHECK(prod[i][j] == (i == j ? det : Integer(0)));
    }
}

TEST_CASE("positive definiteness examples") {
    CHECK(is_positive_definite(goeritz_13_4_11()));
    CHECK_FALSE(is_positive_definite(IntSymMatrix::from_rows({{-2, 1}, {1, -2}})));
    CHECK_FALSE(is_positive_definite(IntSymMatrix::from_rows({{1, 2}, {2, 1}})));
    CHECK(is_positive_definite(IntSymMatrix()));  // k == 0
}

TEST_CASE("definiteness agrees with Sylvester minors and the quadratic form") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 2 + static_cast<int>(rng() % 2);
        IntSymMatrix m = random_symmetric(rng, k, -5, 5);

        bool minors_positive = true;
        for (int t = 1; t <= k; ++t) {
            IntMatrixRows lead;
            for (int i = 0; i < t; ++i) {
                std::vector<Integer> row;
                for (int j = 0; j < t; ++j) row.push_back(m.at(i, j));
                lead.push_back(std::move(row));
            }
            if (cofactor_det(lead) <= 0) minors_positive = false;
        }
        CHECK(is_positive_definite(m) == minors_positive);

        // Necessary direction: a vector with x^t M x <= 0 refutes definiteness.
        IntVector x(k, 0);
        std::function<void(int)> scan = [&](int i) {
            if (i == k) {
                bool zero = std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
                if (zero) return;
                Integer s = 0;
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) s += m.at(a, b) * x[a] * x[b];
                if (s <= 0) CHECK_FALSE(is_positive_definite(m));
                return;
            }
            for (long v = -3; v <= 3; ++v) {
                x[i] = v;
                scan(i + 1);
            }
        };
        scan(0);
    }
}

TEST_CASE("smith normal form examples") {
    SUBCASE("goeritz of P(13,4,11)") {
        SNFDecomposition s = smith_normal_form(goeritz_13_4_11());
        CHECK(s.diagonal == std::vector<Integer>{1, 239});
    }
    SUBCASE("identity") {
        SNFDecomposition s = smith_normal_form(IntSymMatrix::from_rows({{1, 0}, {0, 1}}));
        CHECK(s.diagonal == std::vector<Integer>{1, 1});
    }
    SUBCASE("trefoil") {
        SNFDecomposition s = smith_normal_form(IntSymMatrix::from_rows({{2, -1}, {-1, 2}}));
        CHECK(s.diagonal == std::vector<Integer>{1, 3});
    }
    SUBCASE("already diagonal divisibility chain") {
        SNFDecomposition s = smith_normal_form(IntSymMatrix::from_rows({{3, 0}, {0, 15}}));
        CHECK(s.diagonal == std::vector<Integer>{3, 15});
    }
    SUBCASE("diagonal needing a divisibility fix") {
        SNFDecomposition s = smith_normal_form(IntSymMatrix::from_rows({{3, 0}, {0, 5}}));
        CHECK(s.diagonal == std::vector<Integer>{1, 15});
    }
    SUBCASE("empty matrix") {
        SNFDecomposition s = smith_normal_form(IntSymMatrix());
        CHECK(s.diagonal.empty());
    }
}

TEST_CASE("smith normal form invariants on random matrices") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        IntSymMatrix m = random_symmetric(rng, k, -7, 7);
        SNFDecomposition s = smith_normal_form(m);

        CHECK(abs(determinant_rows(s.U)) == 1);
        CHECK(abs(determinant_rows(s.V)) == 1);

        IntMatrixRows umv = mat_mul(mat_mul(s.U, m.rows()), s.V);
        Integer diag_product = 1;
        for (int i = 0; i < k; ++i) {
            diag_product *= s.diagonal[i];
            CHECK(s.diagonal[i] >= 0);
            for (int j = 0; j < k; ++j)
                CHECK(umv[i][j] == (i == j ? s.diagonal[i] : Integer(0)));
        }
        for (int i = 0; i + 1 < k; ++i)
            if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);

        Integer det = determinant(m);
        if (det != 0) CHECK(diag_product == abs(det));
    }
}

TEST_CASE("smith normal form is deterministic") {
    IntSymMatrix m = goeritz_13_4_11();
    SNFDecomposition a = smith_normal_form(m);
    SNFDecomposition b = smith_normal_form(m);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
    CHECK(a.diagonal == b.diagonal);
}

TEST_CASE("eval_inverse_form examples") {
    CHECK(eval_inverse_form(goeritz_13_4_11(), {13, 11}) == Rational(24));
    CHECK(eval_inverse_form(IntSymMatrix::from_rows({{1, 0}, {0, 1}}), {3, 4}) == Rational(25));
    CHECK(eval_inverse_form(IntSymMatrix::from_rows({{2, -1}, {-1, 3}}), {0, 1}) ==
          make_rational(2, 5));
    CHECK_THROWS_AS(eval_inverse_form(IntSymMatrix::from_rows({{1, 1}, {1, 1}}), {1, 0}),
                    SingularMatrix);
    CHECK_THROWS_AS(eval_inverse_form(goeritz_13_4_11(), {1, 2, 3}), InvalidArgument);
}

TEST_CASE("eval_inverse_form times det equals the adjugate form exactly") {
    std::mt19937_64 rng(1234);
    int done = 0;
    while (done < 150) {
        int k = 1 + static_cast<int>(rng() % 3);
        IntSymMatrix m = random_symmetric(rng, k, -6, 6);
        Integer det = determinant(m);
        if (det == 0) continue;
        ++done;
        IntVector x(k);
        for (int i = 0; i < k; ++i) x[i] = static_cast<long>(rng() % 11) - 5;
        Rational v = eval_inverse_form(m, x);
        Integer s = 0;
        IntMatrixRows adj = adjugate(m).rows();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s += adj[i][j] * x[i] * x[j];
        CHECK(Rational(v * det) == Rational(s));
    }
}

TEST_CASE("rational serialization stays in lowest terms") {
    CHECK(to_string(make_rational(-238, 956)) == "-119/478");
    CHECK(to_string(make_rational(6, 2)) == "3");
    CHECK(to_string(make_rational(0, 5)) == "0");
    CHECK(to_string(make_rational(22, 4)) == "11/2");
}
