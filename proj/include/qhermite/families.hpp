#pragma once

// Constructors for every polynomial family used here, each by its defining
// recurrence, plus independent explicit-sum forms where one exists. Tables
// are built eagerly up to the requested size and are immutable afterwards.
//
// Note on naming: the literature labels both "discrete q-Hermite I" and the
// variant rescaled here with the same tag; this header keeps them apart as
// disc_qhermite_I and disc_qhermite_II_rescaled.

#include <string>
#include <utility>
#include <vector>

#include "qhermite/momentengine.hpp"
#include "qhermite/mpoly.hpp"
#include "qhermite/xsfrac.hpp"

namespace qhermite {

struct FamilyTable {
    std::string name;
    std::vector<XSPoly> entries;  // entries[n] has degree n (except fib: degree n-1)

    const XSPoly& at(int n) const { return entries[static_cast<size_t>(n)]; }
    int size() const { return static_cast<int>(entries.size()); }
};

namespace detail {

template <typename Step>
FamilyTable three_term_table(std::string name, int N, XSPoly p0, XSPoly p1, Step step) {
    FamilyTable t{std::move(name), {}};
    t.entries.reserve(static_cast<size_t>(N) + 1);
    t.entries.push_back(std::move(p0));
    if (N >= 1) t.entries.push_back(std::move(p1));
    for (int n = 1; n < N; ++n)
        t.entries.push_back(step(n, t.entries[static_cast<size_t>(n)], t.entries[static_cast<size_t>(n - 1)]));
    return t;
}

}  // namespace detail

/// H_{n+1} = x H_n - n s H_{n-1}.
inline FamilyTable hermite_classical(int N) {
    return detail::three_term_table("hermite_classical", N, XSPoly(1), XSPoly::x(),
                                    [](int n, const XSPoly& cur, const XSPoly& prev) {
                                        return XSPoly::x() * cur - prev.scale(QScalar(n)) * XSPoly::s();
                                    });
}

/// sum_k C(n,2k) (-s)^k (2k-1)!! x^{n-2k}.
inline XSPoly hermite_classical_explicit(int n) {
    XSPoly p;
    for (int k = 0; 2 * k <= n; ++k) {
        BigInt c = binomial(n, 2 * k) * doublefact_odd(k);
        if (k % 2 == 1) c = -c;
        p += XSPoly::monomial(n - 2 * k, k, QScalar(c));
    }
    return p;
}

/// p_{n+1} = (z - b_n) p_n - lam_n p_{n-1}; p_0 = 1.
inline std::vector<ZPoly> orth_poly_sequence(const CoeffSeq& b, const CoeffSeq& lam, int N) {
    std::vector<ZPoly> p;
    p.reserve(static_cast<size_t>(N) + 1);
    p.push_back(ZPoly(XSPoly(1)));
    for (int n = 0; n < N; ++n) {
        ZPoly next = ZPoly::z() * p.back() - p.back().scale(b.at(n));
        if (n >= 1) next = next - p[static_cast<size_t>(n - 1)].scale(lam.at(n));
        p.push_back(std::move(next));
    }
    return p;
}

/// The explicit double-sum/product form of the degree-n orthogonal polynomial
/// attached to jspec_newH. The prefactor has x and s in denominators; the sum
/// is accumulated over the fraction field and the final denominator is
/// asserted to cancel.
inline ZPoly asc_explicit_rescaled(int n) {
    // sum_k (q^{-n};q)_k/(q;q)_k (-q)^k s^{n-k}
    //       prod_{i=0}^{k-1} ((q-1) q^i x z - s - (q-1) q^{2i} x^2),
    // all divided by (x (q-1))^n.
    std::vector<XSPoly> acc(static_cast<size_t>(n) + 1);  // coefficients of z^j
    QScalar qm1 = QScalar::q() - QScalar(1);
    for (int k = 0; k <= n; ++k) {
        QScalar scalar = qpochhammer(QScalar::q_power(-n), k) / qpochhammer(QScalar::q(), k);
        if (k % 2 == 1) scalar = -scalar;
        scalar *= QScalar::q_power(k);
        if (scalar.is_zero()) continue;
        std::vector<XSPoly> prod{XSPoly(1)};  // z-polynomial
        for (int i = 0; i < k; ++i) {
            XSPoly lin1 = XSPoly::x().scale(qm1 * QScalar::q_power(i));               // z-coefficient
            XSPoly lin0 = -XSPoly::s() - XSPoly::monomial(2, 0, qm1 * QScalar::q_power(2 * i));
            std::vector<XSPoly> next(prod.size() + 1);
            for (size_t j = 0; j < prod.size(); ++j) {
                next[j] += prod[j] * lin0;
                next[j + 1] += prod[j] * lin1;
            }
            prod = std::move(next);
        }
        XSPoly weight = XSPoly::monomial(0, n - k, scalar);
        for (size_t j = 0; j < prod.size(); ++j) acc[j] += prod[j] * weight;
    }
    QScalar denom_scalar = QScalar(1);
    for (int i = 0; i < n; ++i) denom_scalar *= qm1;
    std::vector<XSPoly> coeffs;
    coeffs.reserve(acc.size());
    for (auto& c : acc) {
        XSFrac f(c.scale(QScalar(1) / denom_scalar), XSPoly::x(n));
        coeffs.push_back(f.to_poly());
    }
    return ZPoly::from_coeffs(std::move(coeffs));
}

/// Continuous family: H~_{n+1} = x H~_n - s [n]_q H~_{n-1}.
inline FamilyTable cont_qhermite(int N) {
    return detail::three_term_table("cont_qhermite", N, XSPoly(1), XSPoly::x(),
                                    [](int n, const XSPoly& cur, const XSPoly& prev) {
                                        return XSPoly::x() * cur - (XSPoly::s() * prev).scale(qint(n));
                                    });
}

/// Discrete I family: p_{n+1} = x p_n - (1-q) s q^{n-1} [n]_q p_{n-1}.
inline FamilyTable disc_qhermite_I(int N) {
    return detail::three_term_table(
        "disc_qhermite_I", N, XSPoly(1), XSPoly::x(), [](int n, const XSPoly& cur, const XSPoly& prev) {
            QScalar f = (QScalar(1) - QScalar::q()) * QScalar::q_power(n - 1) * qint(n);
            return XSPoly::x() * cur - (XSPoly::s() * prev).scale(f);
        });
}

/// Rescaled discrete II family: h_{n+1} = q^n x h_n - [n]_q s h_{n-1}.
inline FamilyTable disc_qhermite_II_rescaled(int N) {
    return detail::three_term_table(
        "disc_qhermite_II_rescaled", N, XSPoly(1), XSPoly::x(),
        [](int n, const XSPoly& cur, const XSPoly& prev) {
            return (XSPoly::x() * cur).scale(QScalar::q_power(n)) - (XSPoly::s() * prev).scale(qint(n));
        });
}

/// sum_k q^{C(n-2k,2)} [n choose 2k]_q [2k-1]_q!! (-s)^k x^{n-2k}.
inline XSPoly h_explicit(int n) {
    XSPoly p;
    for (int k = 0; 2 * k <= n; ++k) {
        int e = n - 2 * k;
        QScalar c = QScalar::q_power(static_cast<long>(e) * (e - 1) / 2) * qbinom(n, 2 * k) *
                    qdoublefact_odd(k);
        if (k % 2 == 1) c = -c;
        p += XSPoly::monomial(e, k, c);
    }
    return p;
}

/// w(n) = sum_k q^{2 C(n-k,2)} [n choose 2k]_q [2k-1]_q!! s^k x^{n-2k}:
/// the shifted-to-unshifted Hankel ratio of the rescaled discrete II family.
inline XSPoly h_wn(int n) {
    XSPoly p;
    for (int k = 0; 2 * k <= n; ++k) {
        long e = n - k;
        QScalar c = QScalar::q_power(e * (e - 1)) * qbinom(n, 2 * k) * qdoublefact_odd(k);
        p += XSPoly::monomial(n - 2 * k, k, c);
    }
    return p;
}

/// Operator family (x - s D_q)^n 1, built by n-fold application.
inline FamilyTable new_qhermite(int N) {
    FamilyTable t{"new_qhermite", {}};
    t.entries.reserve(static_cast<size_t>(N) + 1);
    XSPoly p(1);
    t.entries.push_back(p);
    for (int n = 1; n <= N; ++n) {
        p = XSPoly::x() * p - XSPoly::s() * p.qderiv_x();
        t.entries.push_back(p);
    }
    return t;
}

/// Operator family T_n = (x + (1-q) s D_q)^n 1.
inline FamilyTable t_family(int N) {
    FamilyTable t{"t_family", {}};
    t.entries.reserve(static_cast<size_t>(N) + 1);
    XSPoly p(1);
    t.entries.push_back(p);
    QScalar omq = QScalar(1) - QScalar::q();
    for (int n = 1; n <= N; ++n) {
        p = XSPoly::x() * p + (XSPoly::s() * p.qderiv_x()).scale(omq);
        t.entries.push_back(p);
    }
    return t;
}

/// Lucas table with l_0 = 1 (not the usual 2), l_1 = x, l_2 = x^2 + 2s,
/// l_n = x l_{n-1} + s l_{n-2} for n > 2.
inline FamilyTable lucas_classical(int N) {
    FamilyTable t{"lucas_classical", {}};
    t.entries.push_back(XSPoly(1));
    if (N >= 1) t.entries.push_back(XSPoly::x());
    if (N >= 2) t.entries.push_back(XSPoly::x(2) + XSPoly::s().scale(QScalar(2)));
    for (int n = 3; n <= N; ++n)
        t.entries.push_back(XSPoly::x() * t.entries[static_cast<size_t>(n - 1)] +
                            XSPoly::s() * t.entries[static_cast<size_t>(n - 2)]);
    return t;
}

/// l_n = sum_{2k<=n} n/(n-k) C(n-k,k) s^k x^{n-2k} for n > 0.
inline XSPoly lucas_explicit(int n) {
    if (n == 0) return XSPoly(1);
    XSPoly p;
    for (int k = 0; 2 * k <= n; ++k) {
        BigInt c = binomial(n - k, k) * n;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - k));
        p += XSPoly::monomial(n - 2 * k, k, QScalar(c));
    }
    return p;
}

/// f_0 = 0, f_1 = 1, f_n = x f_{n-1} + s f_{n-2}.
inline FamilyTable fib_classical(int N) {
    FamilyTable t{"fib_classical", {}};
    t.entries.push_back(XSPoly());
    if (N >= 1) t.entries.push_back(XSPoly(1));
    for (int n = 2; n <= N; ++n)
        t.entries.push_back(XSPoly::x() * t.entries[static_cast<size_t>(n - 1)] +
                            XSPoly::s() * t.entries[static_cast<size_t>(n - 2)]);
    return t;
}

/// f_n = sum_k C(n-1-k,k) s^k x^{n-1-2k} for n > 0.
inline XSPoly fib_explicit(int n) {
    XSPoly p;
    for (int k = 0; 2 * k <= n - 1; ++k)
        p += XSPoly::monomial(n - 1 - 2 * k, k, QScalar(binomial(n - 1 - k, k)));
    return p;
}

/// L_n = sum_k q^{C(k,2)} [n]/[n-k] [n-k choose k]_q s^k x^{n-2k}, L_0 = 1.
inline FamilyTable qlucas(int N) {
    FamilyTable t{"qlucas", {}};
    for (int n = 0; n <= N; ++n) {
        if (n == 0) {
            t.entries.push_back(XSPoly(1));
            continue;
        }
        XSPoly p;
        for (int k = 0; 2 * k <= n; ++k) {
            QScalar c = QScalar::q_power(static_cast<long>(k) * (k - 1) / 2) * qint(n) / qint(n - k) *
                        qbinom(n - k, k);
            p += XSPoly::monomial(n - 2 * k, k, c);
        }
        t.entries.push_back(std::move(p));
    }
    return t;
}

/// F_n = sum_k q^{C(k+1,2)} [n-1-k choose k]_q s^k x^{n-1-2k}, F_0 = 0.
inline FamilyTable qfib(int N) {
    FamilyTable t{"qfib", {}};
    for (int n = 0; n <= N; ++n) {
        XSPoly p;
        for (int k = 0; 2 * k <= n - 1; ++k) {
            QScalar c = QScalar::q_power(static_cast<long>(k) * (k + 1) / 2) * qbinom(n - 1 - k, k);
            p += XSPoly::monomial(n - 1 - 2 * k, k, c);
        }
        t.entries.push_back(std::move(p));
    }
    return t;
}

/// Evaluates a classical (x,s)-polynomial at x -> x + (q-1) s D_q, applied
/// to the constant 1; the independent route to the q-Lucas/q-Fibonacci
/// tables.
inline XSPoly substitute_qshift_operator(const XSPoly& classical) {
    XSPoly out;
    for (const auto& [m, c] : classical.terms()) {
        XSPoly op = apply_operator_power(QScalar(1), QScalar::q() - QScalar(1), m.xdeg);
        out += (XSPoly::s(m.sdeg) * op).scale(c);
    }
    return out;
}

/// Chebyshev T in x only: T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
inline FamilyTable chebyshev_T(int N) {
    return detail::three_term_table("chebyshev_T", N, XSPoly(1), XSPoly::x(),
                                    [](int, const XSPoly& cur, const XSPoly& prev) {
                                        return (XSPoly::x() * cur).scale(QScalar(2)) - prev;
                                    });
}

/// r_0 = 1, r_1 = x, r(n) = q^{n-1} x r(n-1) + q^{n-2} s [n-1]_q r(n-2).
inline FamilyTable r_family(int N) {
    return detail::three_term_table(
        "r_family", N, XSPoly(1), XSPoly::x(), [](int n, const XSPoly& cur, const XSPoly& prev) {
            // building entry n+1
            return (XSPoly::x() * cur).scale(QScalar::q_power(n)) +
                   (XSPoly::s() * prev).scale(QScalar::q_power(n - 1) * qint(n));
        });
}

}  // namespace qhermite
