/* oracle.hpp -- brute-force reference implementations used only by tests.
 *
 * Everything here is written as plain loops over small int tables,
 * independently of the library (no mftop headers), so that it can serve
 * as an oracle for the optimized implementation paths.  Expected values
 * frozen into the test files were computed with these functions.
 *
 * A set over a universe of `npoints` points with `dim` coordinates on the
 * chain {0, 1/den, ..., den/den} is a flat vector<int> of numerators,
 * point-major: tab[p * dim + i].
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Tab = std::vector<int>;
using Fam = std::vector<Tab>; // kept sorted + unique (std::vector order)

struct Shape {
    int npoints;
    int dim;
    int den;
};

inline Tab null_tab(const Shape& s) { return Tab(static_cast<size_t>(s.npoints * s.dim), 0); }
inline Tab full_tab(const Shape& s) { return Tab(static_cast<size_t>(s.npoints * s.dim), s.den); }

inline Tab o_meet(const Tab& a, const Tab& b) {
    Tab r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline Tab o_join(const Tab& a, const Tab& b) {
    Tab r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Tab o_compl(const Tab& a, int den) {
    Tab r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = den - a[i];
    return r;
}

inline bool o_leq(const Tab& a, const Tab& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool o_positive_at(const Tab& t, int p, int dim) {
    for (int i = 0; i < dim; ++i)
        if (t[static_cast<size_t>(p * dim + i)] == 0) return false;
    return true;
}

inline bool o_zero_at(const Tab& t, int p, int dim) {
    for (int i = 0; i < dim; ++i)
        if (t[static_cast<size_t>(p * dim + i)] != 0) return false;
    return true;
}

// Membership in the restricted class: each point all-positive or all-zero.
inline bool o_in_M(const Tab& t, const Shape& s) {
    for (int p = 0; p < s.npoints; ++p)
        if (!o_positive_at(t, p, s.dim) && !o_zero_at(t, p, s.dim)) return false;
    return true;
}

inline void o_insert(Fam& fam, const Tab& t) {
    auto it = std::lower_bound(fam.begin(), fam.end(), t);
    if (it == fam.end() || *it != t) fam.insert(it, t);
}

inline bool o_contains(const Fam& fam, const Tab& t) {
    return std::binary_search(fam.begin(), fam.end(), t);
}

// All (den+1)^(npoints*dim) grid sets, in odometer order.
inline Fam o_all_grid_sets(const Shape& s) {
    Fam out;
    Tab cur = null_tab(s);
    const size_t cells = cur.size();
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        while (i < cells && cur[i] == s.den) cur[i++] = 0;
        if (i == cells) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Fam o_all_M_sets(const Shape& s) {
    Fam out;
    for (const Tab& t : o_all_grid_sets(s))
        if (o_in_M(t, s)) out.push_back(t);
    return out;
}

// All non-null constants: every coordinate numerator in 1..den, same tuple
// at every point.
inline Fam o_constants(const Shape& s) {
    Fam out;
    std::vector<int> tup(static_cast<size_t>(s.dim), 1);
    while (true) {
        Tab t;
        t.reserve(static_cast<size_t>(s.npoints * s.dim));
        for (int p = 0; p < s.npoints; ++p)
            for (int i = 0; i < s.dim; ++i) t.push_back(tup[static_cast<size_t>(i)]);
        out.push_back(t);
        size_t i = 0;
        while (i < tup.size() && tup[i] == s.den) tup[i++] = 1;
        if (i == tup.size()) break;
        ++tup[i];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Fixpoint closure: seeds (+ null set, + all constants when with_constants),
// iterated pairwise meets and joins until stable.
inline Fam o_close(const Fam& seeds, const Shape& s, bool with_constants = true) {
    Fam fam;
    o_insert(fam, null_tab(s));
    if (with_constants)
        for (const Tab& c : o_constants(s)) o_insert(fam, c);
    for (const Tab& t : seeds) o_insert(fam, t);
    bool changed = true;
    while (changed) {
        changed = false;
        Fam snapshot = fam;
        for (size_t i = 0; i < snapshot.size(); ++i) {
            for (size_t j = i + 1; j < snapshot.size(); ++j) {
                Tab m = o_meet(snapshot[i], snapshot[j]);
                Tab u = o_join(snapshot[i], snapshot[j]);
                if (!o_contains(fam, m)) { o_insert(fam, m); changed = true; }
                if (!o_contains(fam, u)) { o_insert(fam, u); changed = true; }
            }
        }
    }
    return fam;
}

// Lowen axioms, checked directly.
inline bool o_is_lowen(const Fam& fam, const Shape& s) {
    for (const Tab& t : fam)
        if (!o_in_M(t, s)) return false;
    if (!o_contains(fam, null_tab(s))) return false;
    for (const Tab& c : o_constants(s))
        if (!o_contains(fam, c)) return false;
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i + 1; j < fam.size(); ++j) {
            if (!o_contains(fam, o_meet(fam[i], fam[j]))) return false;
            if (!o_contains(fam, o_join(fam[i], fam[j]))) return false;
        }
    return true;
}

// Def 2.8 verbatim: F is a neighbourhood of point p iff some open G lies
// below F and carries F's (strictly positive) tuple at p.
inline bool o_is_nbd(const Tab& f, int p, const Fam& opens, const Shape& s) {
    if (!o_positive_at(f, p, s.dim)) return false;
    for (const Tab& g : opens) {
        if (!o_leq(g, f)) continue;
        bool same = true;
        for (int i = 0; i < s.dim; ++i)
            if (g[static_cast<size_t>(p * s.dim + i)] != f[static_cast<size_t>(p * s.dim + i)]) { same = false; break; }
        if (same) return true;
    }
    return false;
}

// Neighbourhood family of a point: every grid set passing o_is_nbd.
inline Fam o_nbd_family(const Fam& opens, int p, const Shape& s) {
    Fam out;
    for (const Tab& f : o_all_grid_sets(s))
        if (o_is_nbd(f, p, opens, s)) out.push_back(f);
    return out;
}

// Topology reconstructed from per-point families: null set plus every grid
// set in the restricted class that is a member at each positive point.
inline Fam o_topology_from_nbd(const std::vector<Fam>& families, const Shape& s) {
    Fam out;
    o_insert(out, null_tab(s));
    for (const Tab& g : o_all_M_sets(s)) {
        bool ok = true;
        for (int p = 0; p < s.npoints && ok; ++p)
            if (o_positive_at(g, p, s.dim) && !o_contains(families[static_cast<size_t>(p)], g)) ok = false;
        if (ok) o_insert(out, g);
    }
    return out;
}

// Base check by exhaustive subfamily enumeration (|base| <= ~20).
inline bool o_is_base(const Fam& base, const Fam& opens, const Shape& s) {
    std::set<Tab> joins;
    const size_t n = base.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Tab j = null_tab(s);
        for (size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) j = o_join(j, base[i]);
        joins.insert(j);
    }
    for (const Tab& g : opens) {
        if (g == null_tab(s)) continue; // empty union by convention
        if (joins.find(g) == joins.end()) return false;
    }
    return true;
}

// Minimum-cardinality base by subset search over the opens.
inline Fam o_minimum_base(const Fam& opens, const Shape& s) {
    const size_t n = opens.size();
    for (size_t k = 0; k <= n; ++k) {
        std::vector<size_t> idx(k);
        // enumerate k-subsets in lexicographic order
        std::vector<bool> select(n, false);
        std::fill(select.begin(), select.begin() + static_cast<long>(k), true);
        std::sort(select.begin(), select.end(), std::greater<bool>());
        do {
            Fam cand;
            for (size_t i = 0; i < n; ++i)
                if (select[i]) cand.push_back(opens[i]);
            if (o_is_base(cand, opens, s)) return cand;
        } while (std::prev_permutation(select.begin(), select.end()));
    }
    return opens;
}

// Binary product of two sets (coordinatewise min across the point pair).
// Pair points are ordered row-major: (p, q) -> p * nq + q.
inline Tab o_product(const Tab& f, const Tab& g, int dim, int np, int nq) {
    Tab r(static_cast<size_t>(np * nq * dim));
    for (int p = 0; p < np; ++p)
        for (int q = 0; q < nq; ++q)
            for (int i = 0; i < dim; ++i)
                r[static_cast<size_t>((p * nq + q) * dim + i)] =
                    std::min(f[static_cast<size_t>(p * dim + i)], g[static_cast<size_t>(q * dim + i)]);
    return r;
}

// Def 3.16 cover of the whole universe: every coordinate reaches den at
// every point through some family member.
inline bool o_covers_universe(const Fam& fam, const Shape& s) {
    for (int p = 0; p < s.npoints; ++p)
        for (int i = 0; i < s.dim; ++i) {
            int best = 0;
            for (const Tab& a : fam) best = std::max(best, a[static_cast<size_t>(p * s.dim + i)]);
            if (best != s.den) return false;
        }
    return true;
}

// Exhaustive minimum subcover (family sizes stay tiny in tests).
inline Fam o_min_subcover(const Fam& fam, const Shape& s) {
    const size_t n = fam.size();
    for (size_t k = 1; k <= n; ++k) {
        std::vector<bool> select(n, false);
        std::fill(select.begin(), select.begin() + static_cast<long>(k), true);
        std::sort(select.begin(), select.end(), std::greater<bool>());
        do {
            Fam cand;
            for (size_t i = 0; i < n; ++i)
                if (select[i]) cand.push_back(fam[i]);
            if (o_covers_universe(cand, s)) return cand;
        } while (std::prev_permutation(select.begin(), select.end()));
    }
    return {};
}

} // namespace oracle
