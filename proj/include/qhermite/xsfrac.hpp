#pragma once

// Fraction field of XSPoly for the few places where intermediate values
// genuinely leave the polynomial ring (the rescaled explicit formula and
// Stieltjes-fraction coefficient extraction).
//
// A fraction is stored as num / (d(q) * x^a s^b * f_1 * ... * f_k) where num
// and the factors f_i carry pure q-polynomial coefficients and d(q) is a
// single scalar denominator. Reduction never computes multivariate gcds: it
// cancels monomial content, strips the common q-content against d(q), and
// probes exact divisibility of the numerator by each stored factor with a
// fraction-free pseudo-division. In the series algorithms the denominators
// only ever arise as products of earlier factors, so this keeps fractions at
// their reduced size while every coefficient operation stays on the cheap
// denominator-free path. Equality is decided by subtraction.

#include <algorithm>
#include <string>
#include <vector>

#include "qhermite/mpoly.hpp"

namespace qhermite {

namespace detail {

inline int cmp_bigint(const BigInt& a, const BigInt& b) { return mpz_cmp(a.get_mpz_t(), b.get_mpz_t()); }

inline int cmp_qpoly(const QPolyZ& a, const QPolyZ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i)
        if (int c = cmp_bigint(a.coeff(i), b.coeff(i)); c != 0) return c;
    return 0;
}

inline int cmp_qscalar(const QScalar& a, const QScalar& b) {
    if (int c = cmp_qpoly(a.num(), b.num()); c != 0) return c;
    return cmp_qpoly(a.den(), b.den());
}

inline int cmp_xspoly(const XSPoly& a, const XSPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    XSMonomialLess less;
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        if (int c = cmp_qscalar(ia->second, ib->second); c != 0) return c;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

struct XSPolyLess {
    bool operator()(const XSPoly& a, const XSPoly& b) const { return cmp_xspoly(a, b) < 0; }
};

/// Rewrites p = pure / den with every coefficient of `pure` a q-polynomial.
inline void split_qden(const XSPoly& p, XSPoly& pure, QPolyZ& den) {
    den = QPolyZ(1);
    for (const auto& [m, c] : p.terms()) {
        if (c.den().is_one()) continue;
        QPolyZ g = QPolyZ::gcd(den, c.den());
        den = den * c.den().divide_exact(g);
    }
    if (den.is_one()) {
        pure = p;
        return;
    }
    QScalar scale = QScalar(den);
    pure = p.map_coeffs([&](const QScalar& c) { return c * scale; });
}

/// gcd of the q-contents of all coefficients of p (they are q-polynomials),
/// with early exit at 1.
inline QPolyZ q_content(const XSPoly& p) {
    QPolyZ g;
    for (const auto& [m, c] : p.terms()) {
        g = QPolyZ::gcd(g, c.num());
        if (g.is_one()) return g;
    }
    return g;
}

/// Fraction-free divisibility probe over the coefficient field:
/// decides f | p, returning p / f as quot / lc(f)^scale_power.
inline bool pseudo_divide(const XSPoly& p, const XSPoly& f, XSPoly& quot, QPolyZ& lead,
                          int& scale_power) {
    const auto& [fm, fcs] = f.leading_term();
    lead = fcs.num();
    scale_power = 0;
    XSPoly rem = p, q;
    QScalar lead_scalar(lead);
    bool lead_is_one = lead.is_one();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        if (rm.xdeg < fm.xdeg || rm.sdeg < fm.sdeg) return false;
        XSPoly t = XSPoly::monomial(rm.xdeg - fm.xdeg, rm.sdeg - fm.sdeg, rc);
        if (lead_is_one) {
            rem = rem - f * t;
            q += t;
        } else {
            rem = rem.scale(lead_scalar) - f * t;
            q = q.scale(lead_scalar) + t;
            ++scale_power;
        }
    }
    quot = std::move(q);
    return true;
}

}  // namespace detail

class XSFrac {
public:
    XSFrac() = default;
    XSFrac(const XSPoly& p) { detail::split_qden(p, num_, qden_); }
    XSFrac(long v) : num_(v) {}
    XSFrac(const QScalar& v) { detail::split_qden(XSPoly(v), num_, qden_); }
    XSFrac(const XSPoly& num, const XSPoly& den) {
        detail::split_qden(num, num_, qden_);
        XSPoly dpure;
        QPolyZ dden;
        detail::split_qden(den, dpure, dden);
        num_ = num_.scale(QScalar(dden));
        push_den_factor(dpure);
        reduce();
    }

    bool is_zero() const { return num_.is_zero(); }
    /// A scalar q-denominator does not count: it folds into the (field)
    /// coefficients. Only x, s or polynomial factors block conversion.
    bool is_poly() const { return den_x_ == 0 && den_s_ == 0 && den_.empty(); }
    const XSPoly& num() const { return num_; }

    XSPoly den_product() const {
        XSPoly d = XSPoly::monomial(den_x_, den_s_, QScalar(qden_));
        for (const auto& f : den_) d *= f;
        return d;
    }

    /// Conversion back to the ring; throws when the denominator does not cancel.
    XSPoly to_poly() const {
        if (!is_poly()) throw NotDivisibleError("fraction is not a polynomial: " + to_string());
        if (qden_.is_one()) return num_;
        QScalar inv = QScalar(QPolyZ(1), qden_);
        return num_.map_coeffs([&](const QScalar& c) { return c * inv; });
    }

    XSFrac operator-() const {
        XSFrac r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend XSFrac operator+(const XSFrac& a, const XSFrac& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        XSFrac r;
        r.den_x_ = std::max(a.den_x_, b.den_x_);
        r.den_s_ = std::max(a.den_s_, b.den_s_);
        r.den_ = multiset_max(a.den_, b.den_);
        QPolyZ g = QPolyZ::gcd(a.qden_, b.qden_);
        QPolyZ qa = a.qden_.divide_exact(g), qb = b.qden_.divide_exact(g);
        r.qden_ = a.qden_ * qb;
        XSPoly na = a.num_.scale(QScalar(qb)) *
                    XSPoly::monomial(r.den_x_ - a.den_x_, r.den_s_ - a.den_s_, QScalar(1));
        for (const auto& f : multiset_diff(r.den_, a.den_)) na *= f;
        XSPoly nb = b.num_.scale(QScalar(qa)) *
                    XSPoly::monomial(r.den_x_ - b.den_x_, r.den_s_ - b.den_s_, QScalar(1));
        for (const auto& f : multiset_diff(r.den_, b.den_)) nb *= f;
        r.num_ = na + nb;
        r.reduce();
        return r;
    }
    friend XSFrac operator-(const XSFrac& a, const XSFrac& b) { return a + (-b); }

    /// n-ary sum over one common denominator with a single reduction pass;
    /// much cheaper than a chain of pairwise additions when the terms share
    /// denominator factors (as the series algorithms do).
    static XSFrac sum(const std::vector<XSFrac>& terms) {
        std::vector<const XSFrac*> live;
        for (const auto& t : terms)
            if (!t.is_zero()) live.push_back(&t);
        if (live.empty()) return {};
        if (live.size() == 1) return *live[0];
        XSFrac r;
        r.den_ = live[0]->den_;
        r.den_x_ = live[0]->den_x_;
        r.den_s_ = live[0]->den_s_;
        r.qden_ = live[0]->qden_;
        for (size_t i = 1; i < live.size(); ++i) {
            r.den_ = multiset_max(r.den_, live[i]->den_);
            r.den_x_ = std::max(r.den_x_, live[i]->den_x_);
            r.den_s_ = std::max(r.den_s_, live[i]->den_s_);
            QPolyZ g = QPolyZ::gcd(r.qden_, live[i]->qden_);
            r.qden_ = r.qden_ * live[i]->qden_.divide_exact(g);
        }
        XSPoly acc;
        for (const XSFrac* t : live) {
            XSPoly n = t->num_.scale(QScalar(r.qden_.divide_exact(t->qden_))) *
                       XSPoly::monomial(r.den_x_ - t->den_x_, r.den_s_ - t->den_s_, QScalar(1));
            for (const auto& f : multiset_diff(r.den_, t->den_)) n *= f;
            acc += n;
        }
        r.num_ = std::move(acc);
        r.reduce();
        return r;
    }

    friend XSFrac operator*(const XSFrac& a, const XSFrac& b) {
        if (a.is_zero() || b.is_zero()) return {};
        XSFrac r;
        r.num_ = a.num_ * b.num_;
        r.qden_ = a.qden_ * b.qden_;
        r.den_x_ = a.den_x_ + b.den_x_;
        r.den_s_ = a.den_s_ + b.den_s_;
        r.den_ = a.den_;
        r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
        std::sort(r.den_.begin(), r.den_.end(), detail::XSPolyLess{});
        r.reduce();
        return r;
    }

    XSFrac reciprocal() const {
        if (is_zero()) throw DivisionByZeroError("XSFrac reciprocal");
        XSFrac r;
        r.num_ = den_product();  // pure: qden_ rides along as a polynomial scalar
        r.push_den_factor(num_);
        r.reduce();
        return r;
    }
    friend XSFrac operator/(const XSFrac& a, const XSFrac& b) { return a * b.reciprocal(); }

    XSFrac& operator+=(const XSFrac& o) { return *this = *this + o; }
    XSFrac& operator-=(const XSFrac& o) { return *this = *this - o; }
    XSFrac& operator*=(const XSFrac& o) { return *this = *this * o; }
    XSFrac& operator/=(const XSFrac& o) { return *this = *this / o; }

    friend bool operator==(const XSFrac& a, const XSFrac& b) { return (a - b).is_zero(); }
    friend bool operator!=(const XSFrac& a, const XSFrac& b) { return !(a == b); }

    /// Cross-multiplied equality against a plain polynomial.
    bool equals_poly(const XSPoly& p) const { return (*this - XSFrac(p)).is_zero(); }

    std::string to_string() const {
        if (is_poly()) return num_.to_string();
        std::string den;
        if (!qden_.is_one()) den = "(" + qden_.to_string() + ")";
        if (den_x_ + den_s_ > 0) {
            if (!den.empty()) den += "*";
            den += XSPoly::monomial(den_x_, den_s_, QScalar(1)).to_string();
        }
        for (const auto& f : den_) {
            if (!den.empty()) den += "*";
            den += "(" + f.to_string() + ")";
        }
        std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
        return n + "/[" + den + "]";
    }

private:
    // Splits a denominator polynomial (pure q-polynomial coefficients) into
    // monomial part, scalar constant and factor. Factors are kept exactly as
    // they arise: in the series algorithms identical factors come from
    // identical sources, so multiset matching cancels them without any
    // normalization that would push fractions into the coefficients.
    void push_den_factor(const XSPoly& f) {
        if (f.is_zero()) throw DivisionByZeroError("XSFrac denominator");
        XSMonomial m = f.monomial_content();
        XSPoly g = f.shift_down(m.xdeg, m.sdeg);
        den_x_ += m.xdeg;
        den_s_ += m.sdeg;
        if (g.is_constant()) {
            qden_ = qden_ * g.leading_term().second.num();
            return;
        }
        den_.push_back(std::move(g));
        std::sort(den_.begin(), den_.end(), detail::XSPolyLess{});
    }

    static std::vector<XSPoly> multiset_max(const std::vector<XSPoly>& a, const std::vector<XSPoly>& b) {
        std::vector<XSPoly> out;
        detail::XSPolyLess less;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && less(a[i], b[j])))
                out.push_back(a[i++]);
            else if (i == a.size() || less(b[j], a[i]))
                out.push_back(b[j++]);
            else {
                out.push_back(a[i]);
                ++i;
                ++j;
            }
        }
        return out;
    }
    // multiset difference a \ b (b contained in a)
    static std::vector<XSPoly> multiset_diff(const std::vector<XSPoly>& a, const std::vector<XSPoly>& b) {
        std::vector<XSPoly> out;
        detail::XSPolyLess less;
        size_t i = 0, j = 0;
        while (i < a.size()) {
            if (j < b.size() && !less(a[i], b[j]) && !less(b[j], a[i])) {
                ++i;
                ++j;
            } else {
                out.push_back(a[i++]);
            }
        }
        return out;
    }

    void reduce() {
        if (num_.is_zero()) {
            den_.clear();
            den_x_ = den_s_ = 0;
            qden_ = QPolyZ(1);
            return;
        }
        XSMonomial m = num_.monomial_content();
        int cx = std::min(m.xdeg, den_x_), cs = std::min(m.sdeg, den_s_);
        if (cx > 0 || cs > 0) {
            num_ = num_.shift_down(cx, cs);
            den_x_ -= cx;
            den_s_ -= cs;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            XSPoly quot;
            QPolyZ lead;
            int power = 0;
            if (detail::pseudo_divide(num_, *it, quot, lead, power)) {
                num_ = std::move(quot);
                for (int i = 0; i < power; ++i) qden_ = qden_ * lead;
                it = den_.erase(it);
            } else {
                ++it;
            }
        }
        if (!qden_.is_one()) {
            QPolyZ g = QPolyZ::gcd(detail::q_content(num_), qden_);
            if (!g.is_one()) {
                QScalar inv = QScalar(QPolyZ(1), g);
                num_ = num_.map_coeffs([&](const QScalar& c) { return c * inv; });
                qden_ = qden_.divide_exact(g);
            }
            if (!qden_.is_zero() && qden_.leading() < 0) {
                num_ = -num_;
                qden_ = -qden_;
            }
        }
    }

    XSPoly num_;          // coefficients are pure q-polynomials
    QPolyZ qden_{1};      // scalar q-denominator
    int den_x_ = 0, den_s_ = 0;
    std::vector<XSPoly> den_;  // non-constant factors, pure coefficients, sorted
};

}  // namespace qhermite
