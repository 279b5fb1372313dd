#pragma once

// Polynomials in the commuting variables x and s over QScalar, the
// q-derivative acting on x only, substitutions, and polynomials in z with
// XSPoly coefficients. Term order is graded lexicographic with x > s, so
// iteration, printing and serialization are deterministic.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhermite/qfield.hpp"

namespace qhermite {

struct XSMonomial {
    int xdeg = 0;
    int sdeg = 0;
    int total() const { return xdeg + sdeg; }
    friend bool operator==(const XSMonomial&, const XSMonomial&) = default;
};

struct XSMonomialLess {
    bool operator()(const XSMonomial& a, const XSMonomial& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.xdeg < b.xdeg;
    }
};

class XSPoly {
public:
    using TermMap = std::map<XSMonomial, QScalar, XSMonomialLess>;

    XSPoly() = default;
    XSPoly(long v) { set(0, 0, QScalar(v)); }
    XSPoly(const QScalar& v) { set(0, 0, v); }

    static XSPoly x(int deg = 1) { return monomial(deg, 0, QScalar(1)); }
    static XSPoly s(int deg = 1) { return monomial(0, deg, QScalar(1)); }
    static XSPoly monomial(int xdeg, int sdeg, const QScalar& coef) {
        XSPoly p;
        p.set(xdeg, sdeg, coef);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == XSMonomial{0, 0} &&
               terms_.begin()->second.is_one();
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == XSMonomial{0, 0});
    }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    QScalar coeff(int xdeg, int sdeg) const {
        auto it = terms_.find(XSMonomial{xdeg, sdeg});
        return it == terms_.end() ? QScalar(0) : it->second;
    }
    /// Largest term in the graded-lex order; pre: nonzero.
    const std::pair<const XSMonomial, QScalar>& leading_term() const { return *terms_.rbegin(); }

    int x_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.xdeg);
        return d;
    }
    int s_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.sdeg);
        return d;
    }

    friend XSPoly operator+(const XSPoly& a, const XSPoly& b) {
        XSPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend XSPoly operator-(const XSPoly& a, const XSPoly& b) {
        XSPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    XSPoly operator-() const {
        XSPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend XSPoly operator*(const XSPoly& a, const XSPoly& b) {
        XSPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(XSMonomial{ma.xdeg + mb.xdeg, ma.sdeg + mb.sdeg}, ca * cb);
        return r;
    }
    XSPoly& operator+=(const XSPoly& o) { return *this = *this + o; }
    XSPoly& operator-=(const XSPoly& o) { return *this = *this - o; }
    XSPoly& operator*=(const XSPoly& o) { return *this = *this * o; }

    XSPoly scale(const QScalar& c) const {
        if (c.is_zero()) return {};
        XSPoly r;
        for (const auto& [m, v] : terms_) {
            QScalar p = v * c;
            if (!p.is_zero()) r.terms_.emplace(m, std::move(p));
        }
        return r;
    }

    friend bool operator==(const XSPoly& a, const XSPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const XSPoly& a, const XSPoly& b) { return !(a == b); }

    /// D_q in x: x^n -> [n]_q x^{n-1}, s inert.
    XSPoly qderiv_x() const {
        XSPoly r;
        for (const auto& [m, c] : terms_)
            if (m.xdeg > 0) r.add_term(XSMonomial{m.xdeg - 1, m.sdeg}, c * qint(m.xdeg));
        return r;
    }

    /// d/dx, the q -> 1 specialization of D_q.
    XSPoly deriv_x() const {
        XSPoly r;
        for (const auto& [m, c] : terms_)
            if (m.xdeg > 0) r.add_term(XSMonomial{m.xdeg - 1, m.sdeg}, c * QScalar(m.xdeg));
        return r;
    }

    /// x -> c*x.
    XSPoly subst_x_scale(const QScalar& c) const {
        XSPoly r;
        QScalar pw(1);
        // cache powers of c indexed by xdeg
        std::vector<QScalar> pows{QScalar(1)};
        for (const auto& [m, v] : terms_) {
            while (static_cast<int>(pows.size()) <= m.xdeg) pows.push_back(pows.back() * c);
            r.add_term(m, v * pows[static_cast<size_t>(m.xdeg)]);
        }
        return r;
    }

    /// s -> c*s.
    XSPoly subst_s_scale(const QScalar& c) const {
        XSPoly r;
        std::vector<QScalar> pows{QScalar(1)};
        for (const auto& [m, v] : terms_) {
            while (static_cast<int>(pows.size()) <= m.sdeg) pows.push_back(pows.back() * c);
            r.add_term(m, v * pows[static_cast<size_t>(m.sdeg)]);
        }
        return r;
    }

    /// Full evaluation x -> xv, s -> sv in the field.
    QScalar subst_values(const QScalar& xv, const QScalar& sv) const {
        QScalar acc(0);
        std::vector<QScalar> xp{QScalar(1)}, sp{QScalar(1)};
        for (const auto& [m, v] : terms_) {
            while (static_cast<int>(xp.size()) <= m.xdeg) xp.push_back(xp.back() * xv);
            while (static_cast<int>(sp.size()) <= m.sdeg) sp.push_back(sp.back() * sv);
            acc += v * xp[static_cast<size_t>(m.xdeg)] * sp[static_cast<size_t>(m.sdeg)];
        }
        return acc;
    }

    /// Apply a map to every coefficient (e.g. q -> q^m); drops zero images.
    XSPoly map_coeffs(const std::function<QScalar(const QScalar&)>& f) const {
        XSPoly r;
        for (const auto& [m, c] : terms_) {
            QScalar v = f(c);
            if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
        }
        return r;
    }

    /// Exact division by a single divisor w.r.t. the term order.
    /// Returns false (and leaves quot unspecified) when not divisible.
    bool try_divide(const XSPoly& divisor, XSPoly& quot) const {
        if (divisor.is_zero()) throw DivisionByZeroError("XSPoly division");
        XSPoly rem = *this, q;
        const auto& [dm, dc] = divisor.leading_term();
        while (!rem.is_zero()) {
            const auto& [rm, rc] = rem.leading_term();
            if (rm.xdeg < dm.xdeg || rm.sdeg < dm.sdeg) return false;
            XSMonomial mq{rm.xdeg - dm.xdeg, rm.sdeg - dm.sdeg};
            QScalar cq = rc / dc;
            q.add_term(mq, cq);
            rem -= divisor * monomial(mq.xdeg, mq.sdeg, cq);
        }
        quot = std::move(q);
        return true;
    }
    XSPoly divide_exact(const XSPoly& divisor) const {
        XSPoly q;
        if (!try_divide(divisor, q)) throw NotDivisibleError("XSPoly");
        return q;
    }

    /// Componentwise minimum (xdeg, sdeg) over all terms; pre: nonzero.
    XSMonomial monomial_content() const {
        XSMonomial m = terms_.begin()->first;
        for (const auto& [k, c] : terms_) {
            m.xdeg = std::min(m.xdeg, k.xdeg);
            m.sdeg = std::min(m.sdeg, k.sdeg);
        }
        return m;
    }
    /// Divide by x^a s^b; pre: every term divisible.
    XSPoly shift_down(int a, int b) const {
        XSPoly r;
        for (const auto& [m, c] : terms_) {
            if (m.xdeg < a || m.sdeg < b) throw NotDivisibleError("monomial shift");
            r.terms_.emplace(XSMonomial{m.xdeg - a, m.sdeg - b}, c);
        }
        return r;
    }

    bool all_terms_negative() const {
        if (terms_.empty()) return false;
        for (const auto& [m, c] : terms_)
            if (!c.all_coeffs_negative() || !c.is_polynomial()) return false;
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string t = term_string(m, c);
            if (out.empty()) {
                out = t;
            } else if (!t.empty() && t[0] == '-') {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
        }
        return out;
    }

    static std::string term_string(const XSMonomial& m, const QScalar& c) {
        std::string mono;
        if (m.sdeg == 1)
            mono = "s";
        else if (m.sdeg > 1)
            mono = "s^" + std::to_string(m.sdeg);
        if (m.xdeg > 0) {
            if (!mono.empty()) mono += "*";
            mono += (m.xdeg == 1) ? "x" : "x^" + std::to_string(m.xdeg);
        }
        if (mono.empty()) return c.to_string();
        if (c.is_one()) return mono;
        if ((-c).is_one()) return "-" + mono;
        return coef_embed(c) + "*" + mono;
    }

    /// Coefficient rendered so it can prefix "*monomial" unambiguously.
    static std::string coef_embed(const QScalar& c) {
        if (c.all_coeffs_negative()) return "-" + coef_embed_abs(-c);
        return coef_embed_abs(c);
    }

private:
    static std::string coef_embed_abs(const QScalar& c) {
        if (c.is_simple_term()) return c.to_string();
        return "(" + c.to_string() + ")";
    }

    void set(int xdeg, int sdeg, const QScalar& c) {
        if (!c.is_zero()) terms_[XSMonomial{xdeg, sdeg}] = c;
    }
    void add_term(const XSMonomial& m, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

// ---------------------------------------------------------------------------
// ZPoly: polynomial in z with XSPoly coefficients, ascending storage.
// ---------------------------------------------------------------------------
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(const XSPoly& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    static ZPoly z(int deg = 1) {
        ZPoly p;
        p.c_.assign(static_cast<size_t>(deg) + 1, XSPoly());
        p.c_.back() = XSPoly(1);
        return p;
    }
    static ZPoly from_coeffs(std::vector<XSPoly> coeffs) {
        ZPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    XSPoly coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return {};
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<XSPoly>& coeffs() const { return c_; }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        ZPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, XSPoly());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    ZPoly scale(const XSPoly& f) const {
        ZPoly r;
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(c * f);
        r.trim();
        return r;
    }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    /// Value at z = 0.
    XSPoly constant_term() const { return coeff(0); }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const XSPoly& c = c_[static_cast<size_t>(i)];
            if (c.is_zero()) continue;
            std::string t = zterm_string(c, i);
            if (out.empty()) {
                out = t;
            } else if (!t.empty() && t[0] == '-') {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    static std::string zterm_string(const XSPoly& c, int zdeg) {
        std::string zmono = zdeg == 0 ? "" : (zdeg == 1 ? "z" : "z^" + std::to_string(zdeg));
        if (zmono.empty()) {
            if (c.term_count() == 1) return c.to_string();
            if (c.all_terms_negative()) return "-(" + (-c).to_string() + ")";
            return "(" + c.to_string() + ")";
        }
        if (c.is_one()) return zmono;
        if ((-c).is_one()) return "-" + zmono;
        if (c.term_count() == 1) return c.to_string() + "*" + zmono;
        if (c.all_terms_negative()) return "-(" + (-c).to_string() + ")*" + zmono;
        return "(" + c.to_string() + ")*" + zmono;
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<XSPoly> c_;
};

/// (alpha*x + beta*s*D_q)^n applied to the constant 1.
inline XSPoly apply_operator_power(const QScalar& alpha, const QScalar& beta, int n) {
    XSPoly p(1);
    XSPoly xterm = XSPoly::x().scale(alpha);
    for (int i = 0; i < n; ++i) p = xterm * p + XSPoly::s().scale(beta) * p.qderiv_x();
    return p;
}

}  // namespace qhermite
