#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qhermite/mpoly.hpp"

using namespace qhermite;

namespace {

XSPoly random_poly(std::mt19937_64& rng) {
    auto pick = [&](int m) { return static_cast<int>(rng() % static_cast<unsigned>(m)); };
    XSPoly p;
    int nterms = 1 + pick(4);
    for (int t = 0; t < nterms; ++t) {
        QScalar c = QScalar(pick(7) - 3) + QScalar::q_power(pick(3)) * QScalar(pick(3));
        p += XSPoly::monomial(pick(5), pick(4), c);
    }
    return p;
}

XSPoly eval_q1(const XSPoly& p) {
    return p.map_coeffs([](const QScalar& c) { return QScalar(c.eval_at(1)); });
}

}  // namespace

TEST_CASE("ring arithmetic") {
    XSPoly x = XSPoly::x(), s = XSPoly::s();
    CHECK((x + s) * (x - s) == XSPoly::x(2) - XSPoly::s(2));
    CHECK(XSPoly::x(2).scale(qint(2)) == XSPoly::monomial(2, 0, QScalar(1) + QScalar::q()));
    std::mt19937_64 rng(1);
    CHECK((random_poly(rng) * XSPoly()).is_zero());
    CHECK((x * s - s * x).is_zero());
    CHECK((-x) + x == XSPoly());
}

TEST_CASE("q-derivative on x") {
    CHECK(XSPoly::x(3).qderiv_x() == XSPoly::x(2).scale(qint(3)));
    CHECK(XSPoly(1).qderiv_x().is_zero());
    CHECK(XSPoly::s().qderiv_x().is_zero());
    CHECK((XSPoly::s() * XSPoly::x(2)).qderiv_x() ==
          XSPoly::monomial(1, 1, qint(2)));
}

TEST_CASE("classical derivative") {
    CHECK(XSPoly::x(3).deriv_x() == XSPoly::x(2).scale(QScalar(3)));
    CHECK(XSPoly::s().deriv_x().is_zero());
    CHECK((XSPoly::x() * XSPoly::s(2)).deriv_x() == XSPoly::s(2));
}

TEST_CASE("substitutions") {
    CHECK(XSPoly::x(2).subst_x_scale(QScalar::q()) == XSPoly::monomial(2, 0, QScalar::q_power(2)));
    CHECK(XSPoly::s().subst_x_scale(QScalar::q()) == XSPoly::s());
    CHECK((XSPoly::x() + XSPoly::s()).subst_x_scale(QScalar::q()) ==
          XSPoly::monomial(1, 0, QScalar::q()) + XSPoly::s());
    CHECK(XSPoly::s(3).subst_s_scale(QScalar(-1)) == -XSPoly::s(3));

    XSPoly h2 = XSPoly::x(2) - XSPoly::s();  // -s + x^2
    CHECK(h2.subst_values(QScalar(1), QScalar::q() - QScalar(1)) == QScalar(2) - QScalar::q());
    CHECK(h2.subst_values(QScalar(1), (QScalar::q() - QScalar(1)) / QScalar::q()) ==
          QScalar(1) / QScalar::q());
    CHECK(XSPoly::x().subst_values(QScalar(0), qint(5)).is_zero());
}

TEST_CASE("operator powers") {
    CHECK(apply_operator_power(QScalar(1), QScalar(-1), 0).is_one());
    CHECK(apply_operator_power(QScalar(1), QScalar(-1), 2) == XSPoly::x(2) - XSPoly::s());
    CHECK(apply_operator_power(QScalar(1), QScalar(1) - QScalar::q(), 2) ==
          XSPoly::x(2) + XSPoly::s().scale(QScalar(1) - QScalar::q()));
}

TEST_CASE("q-Leibniz rule") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 60; ++t) {
        XSPoly p = random_poly(rng), r = random_poly(rng);
        XSPoly lhs = (p * r).qderiv_x();
        XSPoly rhs = p.qderiv_x() * r + p.subst_x_scale(QScalar::q()) * r.qderiv_x();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("q-derivative specializes to d/dx at q = 1") {
    for (int n = 0; n <= 12; ++n)
        for (int j = 0; j <= 3; ++j) {
            XSPoly m = XSPoly::monomial(n, j, QScalar(1));
            CHECK(eval_q1(m.qderiv_x()) == m.deriv_x());
        }
    std::mt19937_64 rng(78);
    for (int t = 0; t < 30; ++t) {
        XSPoly p = random_poly(rng);
        CHECK(eval_q1(p.qderiv_x()) == eval_q1(eval_q1(p).deriv_x()));
    }
}

TEST_CASE("odd operator powers vanish at x = 0") {
    for (int n = 1; n <= 11; n += 2)
        CHECK(apply_operator_power(QScalar(1), QScalar(-1), n)
                  .subst_values(QScalar(0), QScalar(1))
                  .is_zero());
}

TEST_CASE("exact division") {
    XSPoly a = (XSPoly::x() + XSPoly::s()) * (XSPoly::x(2) - XSPoly::s().scale(QScalar::q()));
    CHECK(a.divide_exact(XSPoly::x() + XSPoly::s()) ==
          XSPoly::x(2) - XSPoly::s().scale(QScalar::q()));
    XSPoly q;
    CHECK(!a.try_divide(XSPoly::x() + XSPoly(1), q));
    CHECK(a.try_divide(a, q));
    CHECK(q.is_one());
    CHECK_THROWS_AS(a.divide_exact(XSPoly()), DivisionByZeroError);
}

TEST_CASE("monomial content and shift") {
    XSPoly p = XSPoly::monomial(3, 1, QScalar(2)) + XSPoly::monomial(2, 2, QScalar::q());
    XSMonomial m = p.monomial_content();
    CHECK(m.xdeg == 2);
    CHECK(m.sdeg == 1);
    XSPoly shifted = p.shift_down(2, 1);
    CHECK(shifted == XSPoly::monomial(1, 0, QScalar(2)) + XSPoly::monomial(0, 1, QScalar::q()));
}

TEST_CASE("canonical printing") {
    XSPoly h2 = XSPoly::x(2) - XSPoly::s();
    CHECK(h2.to_string() == "-s + x^2");
    XSPoly h4 = XSPoly::s(2).scale(QScalar(2) + QScalar::q()) -
                (XSPoly::s() * XSPoly::x(2)).scale(QScalar(3) + QScalar(2) * QScalar::q() + QScalar::q_power(2)) +
                XSPoly::x(4);
    CHECK(h4.to_string() == "(2+q)*s^2 - (3+2q+q^2)*s*x^2 + x^4");
    CHECK(XSPoly().to_string() == "0");
    CHECK(XSPoly::monomial(2, 0, QScalar::q_power(3)).to_string() == "q^3*x^2");
    CHECK(XSPoly::monomial(1, 1, -qint(2)).to_string() == "-(1+q)*s*x");
}

TEST_CASE("ZPoly arithmetic and printing") {
    ZPoly z = ZPoly::z();
    ZPoly p2 = z * z - z.scale(XSPoly::x().scale(qint(2))) +
               ZPoly(XSPoly::s() + XSPoly::monomial(2, 0, QScalar::q()));
    CHECK(p2.degree() == 2);
    CHECK(p2.coeff(1) == -XSPoly::x().scale(qint(2)));
    CHECK(p2.to_string() == "z^2 - (1+q)*x*z + (s + q*x^2)");
    CHECK((z - ZPoly(XSPoly::x())).to_string() == "z - x");
    CHECK(ZPoly(XSPoly(1)).to_string() == "1");
    CHECK((p2 - p2).is_zero());
    CHECK((p2 - p2).to_string() == "0");
}
