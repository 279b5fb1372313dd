#pragma once

// Brute-force combinatorial ground truth: enumeration of all matchings of
// [n] (partial matchings included), the statistics ed / cr / c, and the
// assembled coefficient tables c(n,k,q) and b(n,k,q).
//
// "c(m)" sums, over the unmatched (isolated) vertices a, the number of edges
// (i,j) with i < a < j. Enumeration recurses on the smallest unused vertex,
// which emits each matching exactly once with edges already sorted by first
// endpoint.

#include <map>
#include <utility>
#include <vector>

#include "qhermite/families.hpp"
#include "qhermite/qfield.hpp"

namespace qhermite {

/// Enumeration above this ground-set size is refused (about 2.4e6 matchings).
inline constexpr int kMatchingCap = 14;

struct Matching {
    int n = 0;                              // ground set {1..n}
    std::vector<std::pair<int, int>> edges;  // (i,j), i < j, sorted by i
};

struct StatTriple {
    int ed = 0;  // number of edges
    int cr = 0;  // crossing pairs
    int c = 0;   // edges covering isolated vertices
};

namespace detail {

template <typename Visit>
void matchings_rec(int n, int v, std::vector<bool>& used,
                   std::vector<std::pair<int, int>>& edges, Visit&& visit) {
    while (v <= n && used[static_cast<size_t>(v)]) ++v;
    if (v > n) {
        visit(const_cast<const std::vector<std::pair<int, int>>&>(edges));
        return;
    }
    used[static_cast<size_t>(v)] = true;
    matchings_rec(n, v + 1, used, edges, visit);  // v stays unmatched
    for (int w = v + 1; w <= n; ++w) {
        if (used[static_cast<size_t>(w)]) continue;
        used[static_cast<size_t>(w)] = true;
        edges.emplace_back(v, w);
        matchings_rec(n, v + 1, used, edges, visit);
        edges.pop_back();
        used[static_cast<size_t>(w)] = false;
    }
    used[static_cast<size_t>(v)] = false;
}

}  // namespace detail

/// Visits every matching of [n] exactly once, in canonical form.
template <typename Visit>
void for_each_matching(int n, Visit&& visit) {
    if (n < 0 || n > kMatchingCap) throw CapExceededError(n, kMatchingCap);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    std::vector<std::pair<int, int>> edges;
    detail::matchings_rec(n, 1, used, edges, visit);
}

inline std::vector<Matching> enumerate_matchings(int n) {
    std::vector<Matching> out;
    for_each_matching(n, [&](const std::vector<std::pair<int, int>>& edges) {
        out.push_back(Matching{n, edges});
    });
    return out;
}

inline StatTriple stats(const Matching& m) {
    StatTriple t;
    t.ed = static_cast<int>(m.edges.size());
    for (size_t a = 0; a < m.edges.size(); ++a)
        for (size_t b = a + 1; b < m.edges.size(); ++b) {
            // edges sorted by first endpoint: crossing iff i < k < j < l
            if (m.edges[b].first < m.edges[a].second && m.edges[a].second < m.edges[b].second) ++t.cr;
        }
    std::vector<bool> matched(static_cast<size_t>(m.n) + 1, false);
    for (const auto& [i, j] : m.edges) matched[static_cast<size_t>(i)] = matched[static_cast<size_t>(j)] = true;
    for (int a = 1; a <= m.n; ++a) {
        if (matched[static_cast<size_t>(a)]) continue;
        for (const auto& [i, j] : m.edges)
            if (i < a && a < j) ++t.c;
    }
    return t;
}

/// c(n,k,q) = sum over matchings with k unmatched vertices of q^{c(m)+cr(m)},
/// by exhaustive enumeration. Keys with no matchings are absent.
inline std::map<int, QScalar> c_table(int n) {
    std::map<int, std::vector<BigInt>> counts;  // k -> coefficients of q^e
    for_each_matching(n, [&](const std::vector<std::pair<int, int>>& edges) {
        Matching m{n, edges};
        StatTriple t = stats(m);
        int k = n - 2 * t.ed;
        auto& vec = counts[k];
        size_t e = static_cast<size_t>(t.c + t.cr);
        if (vec.size() <= e) vec.resize(e + 1, BigInt(0));
        vec[e] += 1;
    });
    std::map<int, QScalar> out;
    for (auto& [k, vec] : counts) out.emplace(k, QScalar(QPolyZ(std::move(vec))));
    return out;
}

/// Same table through the recurrence
/// c(n,k) = c(n-1,k-1) + [k+1]_q c(n-1,k+1), c(0,k) = delta_{k,0};
/// no enumeration cap applies.
inline std::map<int, QScalar> c_table_recurrence(int n) {
    std::map<int, QScalar> row{{0, QScalar(1)}};
    auto get = [](const std::map<int, QScalar>& r, int k) {
        auto it = r.find(k);
        return it == r.end() ? QScalar(0) : it->second;
    };
    for (int i = 1; i <= n; ++i) {
        std::map<int, QScalar> next;
        for (int k = i % 2; k <= i; k += 2) {
            QScalar v = get(row, k - 1) + qint(k + 1) * get(row, k + 1);
            if (!v.is_zero()) next.emplace(k, std::move(v));
        }
        row = std::move(next);
    }
    return row;
}

/// b(n,k,q) read off the continuous family:
/// H~_n = sum_k b(n,k,q) x^k (-s)^{(n-k)/2}.
inline std::map<int, QScalar> b_table(int n) {
    FamilyTable fam = cont_qhermite(n);
    const XSPoly& h = fam.at(n);
    std::map<int, QScalar> out;
    for (int k = n % 2; k <= n; k += 2) {
        int j = (n - k) / 2;
        QScalar c = h.coeff(k, j);
        if (c.is_zero()) continue;
        out.emplace(k, j % 2 == 1 ? -c : c);
    }
    return out;
}

}  // namespace qhermite
