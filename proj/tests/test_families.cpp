#include <catch2/catch_amalgamated.hpp>

#include "qhermite/families.hpp"
#include "qhermite/momentengine.hpp"

using namespace qhermite;

namespace {

XSPoly X(int d = 1) { return XSPoly::x(d); }
XSPoly S(int d = 1) { return XSPoly::s(d); }
QScalar Q(long e = 1) { return QScalar::q_power(e); }

XSPoly eval_q1(const XSPoly& p) {
    return p.map_coeffs([](const QScalar& c) { return QScalar(c.eval_at(1)); });
}

bool parity_ok(const XSPoly& p, int n) {
    for (const auto& [m, c] : p.terms())
        if ((m.xdeg - n) % 2 != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("classical Hermite") {
    FamilyTable h = hermite_classical(6);
    CHECK(h.at(0).is_one());
    CHECK(h.at(2) == X(2) - S());
    CHECK(h.at(5) == (S(2) * X()).scale(QScalar(15)) - (S() * X(3)).scale(QScalar(10)) + X(5));
    CHECK(hermite_classical_explicit(1) == X());
    CHECK(hermite_classical_explicit(4) == S(2).scale(QScalar(3)) - (S() * X(2)).scale(QScalar(6)) + X(4));
    for (int n = 0; n <= 12; ++n) CHECK(hermite_classical_explicit(n) == hermite_classical(12).at(n));
}

TEST_CASE("orthogonal polynomial sequence for the operator family's measure") {
    JSpec spec = jspec_newH();
    auto p = orth_poly_sequence(spec.b, spec.lam, 3);
    CHECK(p[0] == ZPoly(XSPoly(1)));
    CHECK(p[1].to_string() == "z - x");
    CHECK(p[2].to_string() == "z^2 - (1+q)*x*z + (s + q*x^2)");
    // z^3 - x[3] z^2 + (2s + qs + q[3]x^2) z - (s + qs + q^2 s + q^3 x^2) x
    ZPoly p3 = ZPoly::z(3) - ZPoly::z(2).scale(X().scale(qint(3))) +
               ZPoly::z(1).scale(S().scale(QScalar(2) + Q()) + XSPoly::monomial(2, 0, Q() * qint(3))) -
               ZPoly((S().scale(QScalar(1) + Q() + Q(2)) + XSPoly::monomial(2, 0, Q(3))) * X());
    CHECK(p[3] == p3);
}

TEST_CASE("explicit rescaled form agrees with the recurrence") {
    JSpec spec = jspec_newH();
    auto p = orth_poly_sequence(spec.b, spec.lam, 10);
    CHECK(asc_explicit_rescaled(0) == p[0]);
    CHECK(asc_explicit_rescaled(1) == p[1]);
    for (int n = 2; n <= 10; ++n) CHECK(asc_explicit_rescaled(n) == p[static_cast<size_t>(n)]);
}

TEST_CASE("continuous q-Hermite") {
    FamilyTable t = cont_qhermite(7);
    CHECK(t.at(2) == X(2) - S());
    CHECK(t.at(4) == S(2).scale(qint(3)) - (S() * X(2)).scale(QScalar(3) + QScalar(2) * Q() + Q(2)) + X(4));
    // value at x = 0: (-s)^n [2n-1]!!
    CHECK(t.at(6).coeff(0, 3) == -qdoublefact_odd(3));
    CHECK(t.at(5).coeff(0, 2).is_zero());
    for (int n = 0; n <= 7; ++n) CHECK(parity_ok(t.at(n), n));
}

TEST_CASE("discrete q-Hermite I") {
    FamilyTable t = disc_qhermite_I(4);
    CHECK(t.at(0).is_one());
    CHECK(t.at(1) == X());
    CHECK(t.at(2) == X(2) - S().scale(QScalar(1) - Q()));
}

TEST_CASE("rescaled discrete q-Hermite II") {
    FamilyTable t = disc_qhermite_II_rescaled(12);
    CHECK(t.at(0).is_one());
    CHECK(t.at(2) == XSPoly::monomial(2, 0, Q()) - S());
    // q^6 x^4 - s(q^5+q^4+2q^3+q^2+q) x^2 + s^2 [3]
    QScalar mid = Q(5) + Q(4) + QScalar(2) * Q(3) + Q(2) + Q();
    CHECK(t.at(4) == XSPoly::monomial(4, 0, Q(6)) - (S() * X(2)).scale(mid) + S(2).scale(qint(3)));
    CHECK(h_explicit(1) == X());
    CHECK(h_explicit(3) == XSPoly::monomial(3, 0, Q(3)) - (S() * X()).scale(qint(3)));
    for (int n = 0; n <= 12; ++n) {
        CHECK(h_explicit(n) == t.at(n));
        CHECK(parity_ok(t.at(n), n));
    }
}

TEST_CASE("q-derivative lowers the rescaled discrete II family") {
    FamilyTable t = disc_qhermite_II_rescaled(12);
    for (int n = 1; n <= 12; ++n)
        CHECK(t.at(n).qderiv_x() == t.at(n - 1).subst_x_scale(Q()).scale(qint(n)));
}

TEST_CASE("w(n) satisfies its three-term recurrence") {
    CHECK(h_wn(0).is_one());
    CHECK(h_wn(1) == X());
    for (int n = 1; n <= 11; ++n) {
        XSPoly lhs = h_wn(n + 1);
        QScalar bf = Q(n - 1) * (Q(n) + Q(n + 1) - QScalar(1));
        XSPoly lf = (XSPoly::s() + XSPoly::monomial(2, 0, Q(2 * n - 2) * (QScalar(1) - Q())))
                        .scale(Q(n - 1) * qint(n));
        CHECK(lhs == (X() * h_wn(n)).scale(bf) + lf * h_wn(n - 1));
    }
}

TEST_CASE("operator-built q-Hermite") {
    FamilyTable t = new_qhermite(11);
    CHECK(t.at(1) == X());
    CHECK(t.at(3) == -(S() * X()).scale(QScalar(2) + Q()) + X(3));
    CHECK(t.at(4) ==
          S(2).scale(QScalar(2) + Q()) - (S() * X(2)).scale(QScalar(3) + QScalar(2) * Q() + Q(2)) + X(4));
    for (int n = 0; n <= 11; ++n) {
        CHECK(t.at(n) == apply_operator_power(QScalar(1), QScalar(-1), n));
        CHECK(parity_ok(t.at(n), n));
    }
}

TEST_CASE("operator-built q-Hermite specializes to classical Hermite at q = 1") {
    FamilyTable nq = new_qhermite(10);
    FamilyTable cl = hermite_classical(10);
    for (int n = 0; n <= 10; ++n) CHECK(eval_q1(nq.at(n)) == cl.at(n));
}

TEST_CASE("T family") {
    FamilyTable t = t_family(8);
    CHECK(t.at(0).is_one());
    CHECK(t.at(2) == X(2) + S().scale(QScalar(1) - Q()));
    FamilyTable nq = new_qhermite(8);
    for (int n = 0; n <= 8; ++n) CHECK(t.at(n) == nq.at(n).subst_s_scale(Q() - QScalar(1)));
}

TEST_CASE("Lucas and Fibonacci tables") {
    FamilyTable l = lucas_classical(12), f = fib_classical(12);
    CHECK(l.at(0).is_one());
    CHECK(l.at(2) == X(2) + S().scale(QScalar(2)));
    CHECK(f.at(0).is_zero());
    CHECK(f.at(1).is_one());
    CHECK(lucas_explicit(4) == X(4) + (S() * X(2)).scale(QScalar(4)) + S(2).scale(QScalar(2)));
    for (int n = 0; n <= 12; ++n) {
        CHECK(lucas_explicit(n) == l.at(n));
        CHECK(fib_explicit(n) == f.at(n));
    }
}

TEST_CASE("q-Lucas and q-Fibonacci") {
    FamilyTable L = qlucas(12), F = qfib(12);
    CHECK(L.at(0).is_one());
    CHECK(L.at(2) == X(2) + S().scale(QScalar(1) + Q()));
    CHECK(F.at(0).is_zero());
    CHECK(F.at(1).is_one());
    CHECK(F.at(3) == X(2) + S().scale(Q()));
    // independent route: evaluate the classical polynomials at the shifted
    // operator x + (q-1) s D_q
    FamilyTable l = lucas_classical(12), f = fib_classical(12);
    for (int n = 0; n <= 12; ++n) {
        CHECK(substitute_qshift_operator(l.at(n)) == L.at(n));
        CHECK(substitute_qshift_operator(f.at(n)) == F.at(n));
    }
}

TEST_CASE("Chebyshev T") {
    FamilyTable t = chebyshev_T(4);
    CHECK(t.at(0).is_one());
    CHECK(t.at(1) == X());
    CHECK(t.at(2) == X(2).scale(QScalar(2)) - XSPoly(1));
}

TEST_CASE("r family") {
    FamilyTable r = r_family(6);
    CHECK(r.at(1) == X());
    CHECK(r.at(2) == XSPoly::monomial(2, 0, Q()) + S());
    // r(3) = -p_3(0) for the continuous family's orthogonal sequence
    CHECK(r.at(3) == -pn_at_zero(jspec_contH(), 3));
}

TEST_CASE("L lemma and its companion") {
    // L_n(x) = h_n(x, (1-q)s; q)
    FamilyTable h = disc_qhermite_II_rescaled(13);
    auto L = [&](int n) { return h.at(n).subst_s_scale(QScalar(1) - Q()); };
    XSPoly x2s = X(2) + S();
    for (int n = 0; n <= 12; ++n) {
        CHECK(S() * L(n) + X() * L(n + 1) == x2s * L(n).subst_x_scale(Q()));
        if (n >= 1)
            CHECK(L(n + 1) - X() * L(n) ==
                  (X() * L(n) + S() * L(n - 1)).scale(Q(n) - QScalar(1)));
    }
}
