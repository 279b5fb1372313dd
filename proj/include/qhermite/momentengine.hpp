#pragma once

// Machinery relating continued-fraction data and moment sequences:
// Stieltjes tableaux, J- and S-fractions, contraction, coefficient
// extraction from a series, and exact Hankel determinants.
//
// Index conventions (the single biggest trap in this corner of the theory):
//   J-fraction  1/(1 - b_0 t - lam_1 t^2/(1 - b_1 t - lam_2 t^2/(...)))
//     b is indexed from 0, lam from 1.
//   S-fraction  1/(1 - c_1 t/(1 - c_2 t/(...)))
//     c is indexed from 1.
//   Tableau     a(n,0) = b_0 a(n-1,0) + lam_1 a(n-1,1)
//               a(n,k) = a(n-1,k-1) + b_k a(n-1,k) + lam_{k+1} a(n-1,k+1)
//   Moments     mu_n = a(n,0).

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qhermite/mpoly.hpp"
#include "qhermite/xsfrac.hpp"

namespace qhermite {

/// Deterministic index-addressable coefficient sequence.
struct CoeffSeq {
    std::function<XSPoly(int)> at;

    static CoeffSeq zero() {
        return {[](int) { return XSPoly(); }};
    }
    static CoeffSeq from_list(std::vector<XSPoly> values, int first_index = 0) {
        return {[values = std::move(values), first_index](int n) {
            int i = n - first_index;
            if (i < 0 || i >= static_cast<int>(values.size()))
                throw Error("CoeffSeq index " + std::to_string(n) + " out of range");
            return values[static_cast<size_t>(i)];
        }};
    }
};

struct JSpec {
    CoeffSeq b;    // indexed from 0
    CoeffSeq lam;  // indexed from 1
};

struct SSpec {
    CoeffSeq c;  // indexed from 1
};

struct Triangle {
    std::vector<std::vector<XSPoly>> rows;  // rows[n][k], 0 <= k <= n
    const XSPoly& at(int n, int k) const { return rows[static_cast<size_t>(n)][static_cast<size_t>(k)]; }
    int size() const { return static_cast<int>(rows.size()); }
};

inline Triangle stieltjes_table(const JSpec& spec, int N) {
    Triangle t;
    t.rows.reserve(static_cast<size_t>(N) + 1);
    t.rows.push_back({XSPoly(1)});
    for (int n = 1; n <= N; ++n) {
        const auto& prev = t.rows.back();
        auto cell = [&](int k) { return k <= n - 1 ? prev[static_cast<size_t>(k)] : XSPoly(); };
        std::vector<XSPoly> row(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            XSPoly v;
            if (k > 0) v += cell(k - 1);
            XSPoly mid = cell(k);
            if (!mid.is_zero()) v += spec.b.at(k) * mid;
            XSPoly up = cell(k + 1);
            if (!up.is_zero()) v += spec.lam.at(k + 1) * up;
            row[static_cast<size_t>(k)] = std::move(v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// mu_0 .. mu_N of the J-fraction.
inline std::vector<XSPoly> moments(const JSpec& spec, int N) {
    Triangle t = stieltjes_table(spec, N);
    std::vector<XSPoly> mu;
    mu.reserve(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) mu.push_back(t.at(n, 0));
    return mu;
}

/// Power-series coefficients of the S-fraction, via the doubled-index table.
/// The table's parity zeros are asserted, not assumed.
inline std::vector<XSPoly> sfraction_series(const SSpec& spec, int N) {
    std::vector<XSPoly> prev{XSPoly(1)}, series{XSPoly(1)};
    for (int n = 1; n <= 2 * N; ++n) {
        auto cell = [&](int k) {
            return (k >= 0 && k < static_cast<int>(prev.size())) ? prev[static_cast<size_t>(k)] : XSPoly();
        };
        std::vector<XSPoly> row(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            XSPoly v = cell(k - 1);
            XSPoly up = cell(k + 1);
            if (!up.is_zero()) v += spec.c.at(k + 1) * up;
            if ((n + k) % 2 == 1 && !v.is_zero())
                throw Error("S-fraction table parity violated at A(" + std::to_string(n) + "," +
                            std::to_string(k) + ")");
            row[static_cast<size_t>(k)] = std::move(v);
        }
        prev = std::move(row);
        if (n % 2 == 0) series.push_back(prev[0]);
    }
    return series;
}

/// Contraction of an S-fraction into the J-fraction with the same series.
inline JSpec contract(const SSpec& spec) {
    CoeffSeq b{[c = spec.c](int n) {
        if (n == 0) return c.at(1);
        return c.at(2 * n) + c.at(2 * n + 1);
    }};
    CoeffSeq lam{[c = spec.c](int n) { return c.at(2 * n) * c.at(2 * n - 1); }};
    return {std::move(b), std::move(lam)};
}

/// Contraction on explicit (possibly non-polynomial) S-coefficients
/// c_1..c_M; returns b_0..b_{(M-1)/2} and lam_1..lam_{M/2}.
inline std::pair<std::vector<XSFrac>, std::vector<XSFrac>> contract_explicit(
    const std::vector<XSFrac>& c) {
    auto at = [&](int n) -> const XSFrac& { return c[static_cast<size_t>(n - 1)]; };
    int M = static_cast<int>(c.size());
    std::vector<XSFrac> b, lam;
    for (int n = 0; 2 * n + 1 <= M; ++n)
        b.push_back(n == 0 ? at(1) : at(2 * n) + at(2 * n + 1));
    for (int n = 1; 2 * n <= M; ++n) lam.push_back(at(2 * n) * at(2 * n - 1));
    return {std::move(b), std::move(lam)};
}

/// Extracts c_1..c_M of the unique S-fraction expanding to the series mu
/// (mu_0 must be 1), by iterated tail division in the fraction field: with
/// P the current tail, the next tail Q solves P - 1 = c t Q P with c = P_1,
/// i.e. Q_n = P_{n+1}/c - sum_{j<n} Q_j P_{n-j}. A tail that is identically
/// 1 yields trailing zero coefficients; a vanishing c_k with a nonzero tail
/// raises DegenerateSeriesError.
inline std::vector<XSFrac> sfraction_from_series(const std::vector<XSPoly>& mu, int M) {
    if (mu.empty() || !mu[0].is_one()) throw Error("series must start with 1");
    if (static_cast<int>(mu.size()) < M + 1)
        throw Error("need " + std::to_string(M + 1) + " series coefficients to extract c_1..c_" +
                    std::to_string(M));
    std::vector<XSFrac> tail(mu.begin(), mu.begin() + M + 1);
    int known = M;
    std::vector<XSFrac> cs;
    for (int k = 1; k <= M; ++k) {
        bool trivial = true;
        for (int i = 1; i <= known; ++i)
            if (!tail[static_cast<size_t>(i)].is_zero()) {
                trivial = false;
                break;
            }
        if (trivial) {
            for (int j = k; j <= M; ++j) cs.emplace_back();
            return cs;
        }
        XSFrac c = tail[1];
        if (c.is_zero()) throw DegenerateSeriesError(k);
        cs.push_back(c);
        if (k == M) break;
        std::vector<XSFrac> next(static_cast<size_t>(known));
        for (int n = 0; n + 1 <= known; ++n) {
            std::vector<XSFrac> terms;
            terms.reserve(static_cast<size_t>(n) + 1);
            terms.push_back(tail[static_cast<size_t>(n + 1)] / c);
            for (int j = 0; j < n; ++j)
                terms.push_back(-(next[static_cast<size_t>(j)] * tail[static_cast<size_t>(n - j)]));
            next[static_cast<size_t>(n)] = XSFrac::sum(terms);
        }
        tail = std::move(next);
        known -= 1;
        if (known < 1) {
            for (int j = k + 1; j <= M; ++j) cs.emplace_back();
            return cs;
        }
    }
    return cs;
}

/// det(mu_{i+j+shift})_{i,j=0..n-1} by fraction-free (Bareiss) elimination.
inline XSPoly hankel_det(const std::vector<XSPoly>& mu, int n, int shift) {
    if (n == 0) return XSPoly(1);
    if (static_cast<int>(mu.size()) < 2 * n - 1 + shift)
        throw Error("hankel_det: need " + std::to_string(2 * n - 1 + shift) + " moments");
    std::vector<std::vector<XSPoly>> m(static_cast<size_t>(n), std::vector<XSPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = mu[static_cast<size_t>(i + j + shift)];
    int sign = 1;
    XSPoly prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int r = k + 1;
            while (r < n && m[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) ++r;
            if (r == n) return XSPoly();  // singular
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(r)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                XSPoly t = m[static_cast<size_t>(i)][static_cast<size_t>(j)] * m[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                           m[static_cast<size_t>(i)][static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = t.is_zero() ? XSPoly() : t.divide_exact(prev);
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = XSPoly();
        }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    XSPoly det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign == 1 ? det : -det;
}

/// p_n(0) for the orthogonal sequence of the J-fraction:
/// v_{j+1} = -b_j v_j - lam_j v_{j-1}, v_0 = 1.
inline XSPoly pn_at_zero(const JSpec& spec, int n) {
    XSPoly prev;  // v_{-1}
    XSPoly cur(1);
    for (int j = 0; j < n; ++j) {
        XSPoly next = -(spec.b.at(j) * cur);
        if (j >= 1 && !prev.is_zero()) next -= spec.lam.at(j) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Named coefficient sequences for the families studied here.
// ---------------------------------------------------------------------------

/// b_n = x q^n, lam_n = -s [n]_q  (moments are the operator-built q-Hermite).
inline JSpec jspec_newH() {
    return {CoeffSeq{[](int n) { return XSPoly::x().scale(QScalar::q_power(n)); }},
            CoeffSeq{[](int n) { return XSPoly::s().scale(-qint(n)); }}};
}

/// b_n = x q^n, lam_n = -s q^{n-1} [n]_q  (moments are the continuous q-Hermite).
inline JSpec jspec_contH() {
    return {CoeffSeq{[](int n) { return XSPoly::x().scale(QScalar::q_power(n)); }},
            CoeffSeq{[](int n) { return XSPoly::s().scale(-(QScalar::q_power(n - 1) * qint(n))); }}};
}

/// Coefficients whose moments are the rescaled discrete q-Hermite II.
inline JSpec jspec_h() {
    return {CoeffSeq{[](int n) {
                QScalar f = QScalar::q_power(n - 1) *
                            (QScalar::q_power(n) + QScalar::q_power(n + 1) - QScalar(1));
                return XSPoly::x().scale(f);
            }},
            CoeffSeq{[](int n) {
                QScalar outer = QScalar::q_power(n - 1) * qint(n);
                XSPoly inner = XSPoly::s() + XSPoly::monomial(2, 0, QScalar::q_power(2 * n - 2) *
                                                                        (QScalar(1) - QScalar::q()));
                return inner.scale(-outer);
            }}};
}

/// b_n = q^n x, lam_n = (1-q^n) s  (moments are (x + (1-q) s D_q)^n 1).
inline JSpec jspec_T() {
    return {CoeffSeq{[](int n) { return XSPoly::x().scale(QScalar::q_power(n)); }},
            CoeffSeq{[](int n) { return XSPoly::s().scale(QScalar(1) - QScalar::q_power(n)); }}};
}

/// Coefficients whose moments are the q-monomials q^{n((2m+1)n+1)/2}.
inline JSpec jspec_w(int m) {
    int M = 2 * m + 1;
    return {CoeffSeq{[M, m](int n) {
                QScalar v = QScalar::q_power(static_cast<long>(M) * n - m) *
                                (QScalar::q_power(static_cast<long>(M) * n) - QScalar(1)) +
                            QScalar::q_power(static_cast<long>(M) * (2 * n + 1) - m);
                return XSPoly(v);
            }},
            CoeffSeq{[M, m](int n) {
                QScalar v = QScalar::q_power(static_cast<long>(M) * (3 * n - 1) - 2 * m) *
                            (QScalar::q_power(static_cast<long>(M) * n) - QScalar(1));
                return XSPoly(v);
            }}};
}

/// b_n = x, lam_n = -n s  (moments are the classical Hermite polynomials).
inline JSpec jspec_classical() {
    return {CoeffSeq{[](int) { return XSPoly::x(); }},
            CoeffSeq{[](int n) { return XSPoly::s().scale(QScalar(-n)); }}};
}

/// b_n = 0, lam_n = [n]_q  (moments are the crossing polynomials c(n,0,q)).
inline JSpec jspec_crossing() {
    return {CoeffSeq::zero(), CoeffSeq{[](int n) { return XSPoly(qint(n)); }}};
}

}  // namespace qhermite
