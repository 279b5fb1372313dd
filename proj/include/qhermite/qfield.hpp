#pragma once

// Exact arithmetic in Q(q), the field of rational functions of the
// indeterminate q with integer coefficients, together with the standard
// q-combinatorial quantities ([n], [n]!, [2n-1]!!, Gaussian binomials,
// Pochhammer products). Everything is immutable and canonically reduced,
// so equality is a plain comparison of representations.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qhermite/errors.hpp"

namespace qhermite {

using BigInt = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// QPolyZ: dense univariate polynomial in q over Z, ascending coefficients.
// Canonical form: no trailing zero coefficients (zero polynomial is empty).
// ---------------------------------------------------------------------------
class QPolyZ {
public:
    QPolyZ() = default;
    QPolyZ(long v) { if (v != 0) c_.emplace_back(v); }
    QPolyZ(const BigInt& v) { if (v != 0) c_.push_back(v); }
    explicit QPolyZ(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPolyZ q_power(int n, BigInt coeff = 1) {
        QPolyZ p;
        if (coeff != 0 && n >= 0) {
            p.c_.assign(static_cast<size_t>(n) + 1, BigInt(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    /// Index of the lowest nonzero coefficient; -1 for zero.
    int order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return -1;
    }
    bool is_monomial() const { return !is_zero() && order() == degree(); }

    const BigInt& coeff(int i) const {
        static const BigInt zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const { return c_.back(); }  // pre: nonzero

    friend QPolyZ operator+(const QPolyZ& a, const QPolyZ& b) {
        QPolyZ r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend QPolyZ operator-(const QPolyZ& a, const QPolyZ& b) {
        QPolyZ r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    QPolyZ operator-() const {
        QPolyZ r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend QPolyZ operator*(const QPolyZ& a, const QPolyZ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.c_.size() * b.c_.size() > 1024) return kronecker_mul(a, b);
        QPolyZ r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend bool operator==(const QPolyZ& a, const QPolyZ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPolyZ& a, const QPolyZ& b) { return !(a == b); }

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const {
        BigInt g(0);
        for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        return g;
    }

    QPolyZ divide_by_int(const BigInt& d) const {  // pre: d divides every coefficient
        QPolyZ r = *this;
        for (auto& v : r.c_) {
            if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
                throw NotDivisibleError("integer content division");
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
        }
        return r;
    }

    /// Exact division; throws NotDivisibleError unless divisor | *this.
    QPolyZ divide_exact(const QPolyZ& divisor) const {
        if (divisor.is_zero()) throw DivisionByZeroError("polynomial division");
        if (is_zero()) return {};
        if (degree() < divisor.degree()) throw NotDivisibleError("degree too small");
        if (divisor.is_monomial()) {
            int k = divisor.degree();
            if (order() < k) throw NotDivisibleError("q-order too small");
            QPolyZ r;
            r.c_.assign(c_.begin() + k, c_.end());
            const BigInt& d = divisor.leading();
            if (d != 1)
                for (auto& v : r.c_) {
                    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
                        throw NotDivisibleError("monomial coefficient");
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
                }
            return r;
        }
        QPolyZ rem = *this;
        std::vector<BigInt> quot(static_cast<size_t>(degree() - divisor.degree()) + 1, BigInt(0));
        const BigInt& lead = divisor.leading();
        while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
            if (!mpz_divisible_p(rem.leading().get_mpz_t(), lead.get_mpz_t()))
                throw NotDivisibleError("leading coefficient");
            BigInt f;
            mpz_divexact(f.get_mpz_t(), rem.leading().get_mpz_t(), lead.get_mpz_t());
            int shift = rem.degree() - divisor.degree();
            quot[static_cast<size_t>(shift)] = f;
            rem = rem - QPolyZ::q_power(shift, f) * divisor;
        }
        if (!rem.is_zero()) throw NotDivisibleError("nonzero remainder");
        return QPolyZ(std::move(quot));
    }

    /// Full gcd over Z[q] (content included), positive leading coefficient.
    static QPolyZ gcd(const QPolyZ& a, const QPolyZ& b) {
        if (a.is_zero()) return b.positive_leading();
        if (b.is_zero()) return a.positive_leading();
        if (a.is_one() || b.is_one()) return QPolyZ(1);
        if (a.degree() == 0 || b.degree() == 0) {
            BigInt g;
            BigInt ca0 = a.content(), cb0 = b.content();
            mpz_gcd(g.get_mpz_t(), ca0.get_mpz_t(), cb0.get_mpz_t());
            return QPolyZ(g);
        }
        if (a.is_monomial() || b.is_monomial()) {
            BigInt g;
            BigInt ca0 = a.content(), cb0 = b.content();
            mpz_gcd(g.get_mpz_t(), ca0.get_mpz_t(), cb0.get_mpz_t());
            return QPolyZ::q_power(std::min(a.order(), b.order()), g);
        }
        BigInt ca = a.content(), cb = b.content(), c;
        mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        QPolyZ u = a.divide_by_int(ca), v = b.divide_by_int(cb);
        // primitive PRS
        while (!v.is_zero()) {
            QPolyZ r = pseudo_rem(u, v);
            BigInt cr = r.content();
            if (cr != 0) r = r.divide_by_int(cr);
            u = std::move(v);
            v = std::move(r);
        }
        u = u.positive_leading();
        return QPolyZ(c) * u;
    }

    Rational eval(const Rational& r) const {  // Horner
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= r;
            acc += Rational(*it);
        }
        acc.canonicalize();
        return acc;
    }

    /// q -> q^m, m >= 1.
    QPolyZ subst_q_pow(int m) const {
        if (is_zero() || m == 1) return *this;
        QPolyZ r;
        r.c_.assign(c_.size() == 0 ? 0 : (c_.size() - 1) * static_cast<size_t>(m) + 1, BigInt(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<size_t>(m)] = c_[i];
        r.trim();
        return r;
    }

    /// Coefficients in reverse order, i.e. q^deg * p(1/q).
    QPolyZ reversed() const {
        QPolyZ r = *this;
        std::reverse(r.c_.begin(), r.c_.end());
        r.trim();
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = 0; i <= degree(); ++i) {
            const BigInt& v = c_[static_cast<size_t>(i)];
            if (v == 0) continue;
            BigInt mag = abs(v);
            std::string term;
            if (i == 0) {
                term = mag.get_str();
            } else {
                if (mag != 1) term = mag.get_str();
                term += (i == 1) ? "q" : "q^" + std::to_string(i);
            }
            if (out.empty())
                out = (v < 0 ? "-" : "") + term;
            else
                out += (v < 0 ? "-" : "+") + term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    QPolyZ positive_leading() const {
        if (!is_zero() && leading() < 0) return -*this;
        return *this;
    }
    // Kronecker-substitution product: the sign-split coefficient vectors are
    // packed into single integers at a digit width that cannot carry, so one
    // GMP multiplication computes the whole convolution. Packing goes through
    // flat word buffers (mpz_import/export), keeping it linear in the data.
    static QPolyZ kronecker_mul(const QPolyZ& a, const QPolyZ& b) {
        auto max_bits = [](const QPolyZ& p) {
            size_t m = 1;
            for (const auto& v : p.c_)
                if (v != 0) m = std::max(m, mpz_sizeinbase(v.get_mpz_t(), 2));
            return m;
        };
        size_t conv = std::min(a.c_.size(), b.c_.size());
        size_t need = max_bits(a) + max_bits(b) + 64 - static_cast<size_t>(__builtin_clzll(conv)) + 2;
        size_t words = (need + 63) / 64;  // digit width in 64-bit words

        auto pack = [&](const QPolyZ& p, bool positive) {
            std::vector<uint64_t> buf(p.c_.size() * words, 0);
            for (size_t i = 0; i < p.c_.size(); ++i) {
                const BigInt& v = p.c_[i];
                if (positive ? v <= 0 : v >= 0) continue;
                size_t count = 0;
                mpz_export(buf.data() + i * words, &count, -1, 8, 0, 0, v.get_mpz_t());
            }
            BigInt acc;
            mpz_import(acc.get_mpz_t(), buf.size(), -1, 8, 0, 0, buf.data());
            return acc;
        };
        auto unpack = [&](const BigInt& v, size_t n) {
            std::vector<uint64_t> buf(n * words, 0);
            size_t count = 0;
            mpz_export(buf.data(), &count, -1, 8, 0, 0, v.get_mpz_t());
            std::vector<BigInt> out(n);
            for (size_t i = 0; i < n; ++i)
                mpz_import(out[i].get_mpz_t(), words, -1, 8, 0, 0, buf.data() + i * words);
            return out;
        };
        BigInt ap = pack(a, true), an = pack(a, false);
        BigInt bp = pack(b, true), bn = pack(b, false);
        BigInt pos = ap * bp + an * bn;
        BigInt neg = ap * bn + an * bp;
        size_t n = a.c_.size() + b.c_.size() - 1;
        auto pd = unpack(pos, n), nd = unpack(neg, n);
        QPolyZ r;
        r.c_.resize(n);
        for (size_t i = 0; i < n; ++i) r.c_[i] = pd[i] - nd[i];
        r.trim();
        return r;
    }

    // Pseudo-remainder up to an irrelevant power of lc(v); only used inside gcd
    // where contents are stripped anyway.
    static QPolyZ pseudo_rem(QPolyZ u, const QPolyZ& v) {
        const BigInt& d = v.leading();
        while (!u.is_zero() && u.degree() >= v.degree()) {
            int shift = u.degree() - v.degree();
            QPolyZ t = QPolyZ::q_power(shift, u.leading());
            QPolyZ scaled;
            scaled.c_ = u.c_;
            for (auto& x : scaled.c_) x *= d;
            u = scaled - t * v;
        }
        return u;
    }

    std::vector<BigInt> c_;
};

// ---------------------------------------------------------------------------
// QScalar: reduced fraction num/den of QPolyZ.
// Canonical form: den != 0, gcd(num, den) = 1 (content included),
// den has positive leading coefficient.
// ---------------------------------------------------------------------------
class QScalar {
public:
    QScalar() : num_(), den_(1) {}
    QScalar(long v) : num_(v), den_(1) {}
    QScalar(const BigInt& v) : num_(v), den_(1) {}
    QScalar(QPolyZ p) : num_(std::move(p)), den_(1) {}
    QScalar(QPolyZ num, QPolyZ den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroError("QScalar denominator");
        reduce();
    }
    QScalar(const Rational& r) : num_(BigInt(r.get_num())), den_(BigInt(r.get_den())) { reduce(); }

    static QScalar q() { return QScalar(QPolyZ::q_power(1)); }
    /// q^e for any integer e (negative exponents become 1/q^{-e}).
    static QScalar q_power(long e) {
        if (e >= 0) return QScalar(QPolyZ::q_power(static_cast<int>(e)));
        return QScalar(QPolyZ(1), QPolyZ::q_power(static_cast<int>(-e)));
    }

    const QPolyZ& num() const { return num_; }
    const QPolyZ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend QScalar operator+(const QScalar& a, const QScalar& b) {
        if (a.den_ == b.den_) return QScalar(a.num_ + b.num_, a.den_);
        return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QScalar operator-(const QScalar& a, const QScalar& b) {
        if (a.den_ == b.den_) return QScalar(a.num_ - b.num_, a.den_);
        return QScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    QScalar operator-() const {
        QScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend QScalar operator*(const QScalar& a, const QScalar& b) {
        if (a.is_zero() || b.is_zero()) return QScalar();
        if (a.den_.is_one() && b.den_.is_one()) {
            QScalar r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        // cross-cancel first to keep gcd inputs small
        QPolyZ g1 = QPolyZ::gcd(a.num_, b.den_), g2 = QPolyZ::gcd(b.num_, a.den_);
        QScalar r;
        r.num_ = a.num_.divide_exact(g1) * b.num_.divide_exact(g2);
        r.den_ = a.den_.divide_exact(g2) * b.den_.divide_exact(g1);
        r.reduce();
        return r;
    }
    friend QScalar operator/(const QScalar& a, const QScalar& b) {
        if (b.is_zero()) throw DivisionByZeroError("QScalar division");
        QScalar inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        if (inv.den_.leading() < 0) {
            inv.num_ = -inv.num_;
            inv.den_ = -inv.den_;
        }
        return a * inv;
    }
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    /// Exact evaluation at a rational point; throws if the denominator vanishes.
    Rational eval_at(const Rational& r) const {
        Rational d = den_.eval(r);
        if (d == 0) throw VanishingDenominatorError(r.get_str());
        Rational n = num_.eval(r);
        Rational out = n / d;
        out.canonicalize();
        return out;
    }

    /// q -> q^m, m >= 1.
    QScalar subst_q_pow(int m) const {
        QScalar r;
        r.num_ = num_.subst_q_pow(m);
        r.den_ = den_.subst_q_pow(m);
        return r;  // canonical form is preserved by q -> q^m
    }

    /// q -> 1/q.
    QScalar subst_q_inv() const {
        int dn = std::max(num_.degree(), 0), dd = std::max(den_.degree(), 0);
        QPolyZ n = num_.reversed(), d = den_.reversed();
        if (dd > dn)
            n = n * QPolyZ::q_power(dd - dn);
        else if (dn > dd)
            d = d * QPolyZ::q_power(dn - dd);
        return QScalar(std::move(n), std::move(d));
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return wrap(num_) + "/" + wrap(den_);
    }

    /// True when every nonzero numerator coefficient is negative (used to pull
    /// a leading minus sign out when pretty-printing).
    bool all_coeffs_negative() const {
        if (num_.is_zero()) return false;
        for (const auto& v : num_.coeffs())
            if (v > 0) return false;
        return true;
    }
    /// Single monomial numerator with denominator 1 (prints without parens).
    bool is_simple_term() const {
        if (!den_.is_one() || num_.is_zero()) return false;
        int nz = 0;
        for (const auto& v : num_.coeffs())
            if (v != 0) ++nz;
        return nz == 1;
    }

private:
    static std::string wrap(const QPolyZ& p) {
        std::string s = p.to_string();
        bool multi = s.find_first_of("+-", 1) != std::string::npos;
        return multi ? "(" + s + ")" : s;
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = QPolyZ(1);
            return;
        }
        if (!den_.is_one()) {
            QPolyZ g = QPolyZ::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = num_.divide_exact(g);
                den_ = den_.divide_exact(g);
            }
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    QPolyZ num_, den_;
};

// ---------------------------------------------------------------------------
// q-combinatorial quantities.
// ---------------------------------------------------------------------------

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
inline QScalar qint(int n) {
    std::vector<BigInt> c(static_cast<size_t>(std::max(n, 0)), BigInt(1));
    return QScalar(QPolyZ(std::move(c)));
}

/// [n]_q! = [1][2]...[n].
inline QScalar qfact(int n) {
    QScalar r(1);
    for (int k = 1; k <= n; ++k) r *= qint(k);
    return r;
}

/// [2n-1]_q!! = [1][3]...[2n-1].
inline QScalar qdoublefact_odd(int n) {
    QScalar r(1);
    for (int k = 1; k <= n; ++k) r *= qint(2 * k - 1);
    return r;
}

namespace detail {
inline const QScalar& qbinom_memo(int n, int k);
}

/// Gaussian binomial; zero outside 0 <= k <= n. Always a polynomial in q.
inline QScalar qbinom(int n, int k) {
    if (k < 0 || k > n) return QScalar(0);
    if (k == 0 || k == n) return QScalar(1);
    return detail::qbinom_memo(n, k);
}

namespace detail {
inline const QScalar& qbinom_memo(int n, int k) {
    thread_local std::map<std::pair<int, int>, QScalar> memo;
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // Pascal rule keeps everything in denominator-1 form.
    QScalar v = qbinom(n - 1, k - 1) + QScalar::q_power(k) * qbinom(n - 1, k);
    return memo.emplace(key, std::move(v)).first->second;
}
}  // namespace detail

/// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}); n = 0 gives 1.
inline QScalar qpochhammer(const QScalar& a, int n) {
    QScalar r(1);
    QScalar aq = a;
    for (int i = 0; i < n; ++i) {
        r *= QScalar(1) - aq;
        aq *= QScalar::q();
    }
    return r;
}

/// Ordinary binomial coefficient, zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// (2n-1)!! over the integers; n = 0 gives 1.
inline BigInt doublefact_odd(long n) {
    BigInt r(1);
    for (long k = 1; k <= n; ++k) r *= 2 * k - 1;
    return r;
}

}  // namespace qhermite
