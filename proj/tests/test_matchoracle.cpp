#include <catch2/catch_amalgamated.hpp>

#include "qhermite/matchoracle.hpp"
#include "qhermite/momentengine.hpp"

using namespace qhermite;

namespace {
long involution_count(int n) {
    // I(n) = I(n-1) + (n-1) I(n-2)
    long a = 1, b = 1;  // I(0), I(1)
    if (n == 0) return 1;
    for (int k = 2; k <= n; ++k) {
        long c = b + (k - 1) * a;
        a = b;
        b = c;
    }
    return b;
}
}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(enumerate_matchings(0).size() == 1);
    CHECK(enumerate_matchings(2).size() == 2);
    CHECK(enumerate_matchings(4).size() == 10);
    for (int n = 0; n <= 9; ++n)
        CHECK(enumerate_matchings(n).size() == static_cast<size_t>(involution_count(n)));
}

TEST_CASE("canonical form of enumerated matchings") {
    for (const auto& m : enumerate_matchings(6)) {
        std::vector<bool> seen(7, false);
        int prev_first = 0;
        for (const auto& [i, j] : m.edges) {
            CHECK(i < j);
            CHECK(i > prev_first);
            prev_first = i;
            CHECK(!seen[static_cast<size_t>(i)]);
            CHECK(!seen[static_cast<size_t>(j)]);
            seen[static_cast<size_t>(i)] = seen[static_cast<size_t>(j)] = true;
        }
    }
}

TEST_CASE("statistics") {
    Matching empty{3, {}};
    StatTriple t0 = stats(empty);
    CHECK((t0.ed == 0 && t0.cr == 0 && t0.c == 0));

    Matching covered{3, {{1, 3}}};
    StatTriple t1 = stats(covered);
    CHECK(t1.ed == 1);
    CHECK(t1.cr == 0);
    CHECK(t1.c == 1);  // vertex 2 is covered

    Matching crossing{4, {{1, 3}, {2, 4}}};
    CHECK(stats(crossing).cr == 1);

    Matching nested{4, {{1, 4}, {2, 3}}};
    CHECK(stats(nested).cr == 0);
}

TEST_CASE("c tables against frozen values") {
    auto c4 = c_table(4);
    CHECK(c4.at(0) == QScalar(2) + QScalar::q());
    CHECK(c4.at(2) == QScalar(3) + QScalar(2) * QScalar::q() + QScalar::q_power(2));
    CHECK(c4.at(4).is_one());
    auto c6 = c_table(6);
    CHECK(c6.at(0) ==
          QScalar(5) + QScalar(6) * QScalar::q() + QScalar(3) * QScalar::q_power(2) + QScalar::q_power(3));
    auto c2 = c_table_recurrence(2);
    CHECK(c2.at(0).is_one());
}

TEST_CASE("brute-force table equals the recurrence table") {
    for (int n = 0; n <= 12; ++n) {
        auto brute = c_table(n);
        auto rec = c_table_recurrence(n);
        CHECK(brute == rec);
    }
}

TEST_CASE("boundary rule c(n,0) = c(n-1,1)") {
    for (int n = 2; n <= 12; n += 2) {
        auto cur = c_table_recurrence(n);
        auto prev = c_table_recurrence(n - 1);
        CHECK(cur.at(0) == prev.at(1));
    }
}

TEST_CASE("q = 0 column gives the Catalan triangle") {
    for (int n = 0; n <= 6; ++n) {
        auto row = c_table_recurrence(2 * n);
        for (int k = 0; k <= n; ++k) {
            Rational v = row.count(2 * k) ? row.at(2 * k).eval_at(0) : Rational(0);
            CHECK(v == Rational(binomial(2 * n, n - k) - binomial(2 * n, n - k - 1)));
        }
        auto odd = c_table_recurrence(2 * n + 1);
        for (int k = 0; k <= n; ++k) {
            Rational v = odd.count(2 * k + 1) ? odd.at(2 * k + 1).eval_at(0) : Rational(0);
            CHECK(v == Rational(binomial(2 * n + 1, n - k) - binomial(2 * n + 1, n - k - 1)));
        }
    }
    // c(8,0,0) is the Catalan number 14
    CHECK(c_table_recurrence(8).at(0).eval_at(0) == 14);
}

TEST_CASE("b table") {
    auto b2 = b_table(2);
    CHECK(b2.at(0).is_one());
    auto b4 = b_table(4);
    CHECK(b4.at(2) == QScalar(3) + QScalar(2) * QScalar::q() + QScalar::q_power(2));
    for (int n = 0; n <= 10; ++n) CHECK(b_table(n).at(n).is_one());
}

TEST_CASE("matching sums reproduce the moment sequence") {
    auto mu = moments(jspec_newH(), 12);
    for (int n = 0; n <= 12; ++n) {
        XSPoly acc;
        for (const auto& [k, c] : c_table(n)) {
            int j = (n - k) / 2;
            acc += XSPoly::monomial(k, j, j % 2 == 1 ? -c : c);
        }
        CHECK(acc == mu[static_cast<size_t>(n)]);
    }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_matchings(15), CapExceededError);
    CHECK_THROWS_AS(c_table(15), CapExceededError);
    CHECK_THROWS_AS(enumerate_matchings(-1), CapExceededError);
    CHECK_NOTHROW(c_table_recurrence(20));  // recurrence path has no cap
}
