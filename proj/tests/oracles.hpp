// Copyright (c) 2026 The lmp-minuscule Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

// Brute-force reference implementations used only by the tests. None of these
// share code paths with the library routines they check.

#include "lmp/lmp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

// Positive roots of a classical system from the textbook epsilon formulas, in simple-root coordinates.
inline std::set<std::vector<int>> classical_positive_roots(lmp::Family f, std::size_t n) {
    std::set<std::vector<int>> out;
    // alpha_a + ... + alpha_{b-1} (1-based), plus `twice` times alpha_b + ... + alpha_{c-1}
    auto interval = [&](std::size_t a, std::size_t b) {
        std::vector<int> v(n, 0);
        for (auto k = a; k < b; ++k) v[k - 1] += 1;
        return v;
    };
    auto add = [](std::vector<int> a, std::vector<int> const & b, int s = 1) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
        return a;
    };
    switch (f) {
    case lmp::Family::A:
        for (std::size_t i = 1; i <= n + 1; ++i)
            for (std::size_t j = i + 1; j <= n + 1; ++j) out.insert(interval(i, j));
        break;
    case lmp::Family::B:
        for (std::size_t i = 1; i <= n; ++i) {
            out.insert(interval(i, n + 1));  // e_i
            for (std::size_t j = i + 1; j <= n; ++j) {
                out.insert(interval(i, j));                               // e_i - e_j
                out.insert(add(interval(i, j), interval(j, n + 1), 2));  // e_i + e_j
            }
        }
        break;
    case lmp::Family::C:
        for (std::size_t i = 1; i <= n; ++i) {
            out.insert(add(add(interval(i, n), interval(i, n)), interval(n, n + 1)));  // 2 e_i
            for (std::size_t j = i + 1; j <= n; ++j) {
                out.insert(interval(i, j));                                                // e_i - e_j
                out.insert(add(add(interval(i, j), interval(j, n), 2), interval(n, n + 1)));  // e_i + e_j
            }
        }
        break;
    case lmp::Family::D:
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                out.insert(interval(i, j));  // e_i - e_j
                if (j == n) {
                    out.insert(add(interval(i, n - 1), interval(n, n + 1)));
                } else {
                    out.insert(add(add(interval(i, j), interval(j, n - 1), 2), interval(n - 1, n + 1)));
                }
            }
        break;
    default: break;
    }
    return out;
}

inline std::size_t positive_root_count(lmp::RootSystemType t) {
    auto const n = t.rank;
    switch (t.family) {
    case lmp::Family::A: return n * (n + 1) / 2;
    case lmp::Family::B:
    case lmp::Family::C: return n * n;
    case lmp::Family::D: return n * (n - 1);
    case lmp::Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case lmp::Family::F: return 24;
    case lmp::Family::G: return 6;
    }
    return 0;
}

// Fewest allowed positive roots summing to target: memoized recursion over the
// lattice points below the target. Returns nullopt if no decomposition exists.
inline std::optional<std::int64_t> box_dp(lmp::RootSystem const & rs, std::vector<std::int64_t> const & target,
                                          std::vector<bool> const & allowed) {
    constexpr auto inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::map<std::vector<std::int64_t>, std::int64_t> memo;
    std::function<std::int64_t(std::vector<std::int64_t> const &)> best = [&](std::vector<std::int64_t> const & v) {
        if (std::ranges::all_of(v, [](std::int64_t c) { return c == 0; })) return std::int64_t{0};
        if (auto it = memo.find(v); it != memo.end()) return it->second;
        // Every decomposition uses some root touching the first nonzero coordinate.
        std::size_t lead = 0;
        while (v[lead] == 0) ++lead;
        std::int64_t b = inf;
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            if (!allowed[k]) continue;
            auto const & c = rs.root(k).coords;
            if (c[lead] == 0) continue;
            auto w = v;
            bool ok = true;
            for (std::size_t j = 0; j < w.size() && ok; ++j) ok = (w[j] -= c[j]) >= 0;
            if (!ok) continue;
            b = std::min(b, 1 + best(w));
        }
        memo.emplace(v, b);
        return b;
    };
    auto r = best(target);
    if (r >= inf) return std::nullopt;
    return r;
}

// Plain Dijkstra on the fully materialized orbit graph.
inline std::optional<std::int64_t> orbit_dijkstra(lmp::RootSystem const & rs, lmp::IntegralWeight const & source,
                                                  lmp::IntegralWeight const & sink, std::vector<bool> const & allowed) {
    auto seed = lmp::dominant_representative(rs, sink);
    auto g = lmp::build_orbit_graph(rs, seed, allowed);
    auto s = g.find(source);
    auto t = g.find(sink);
    if (!s || !t) return std::nullopt;
    std::vector<std::int64_t> dist(g.nodes.size(), std::numeric_limits<std::int64_t>::max());
    using Entry = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> q;
    dist[*s] = 0;
    q.emplace(0, *s);
    while (!q.empty()) {
        auto [du, u] = q.top();
        q.pop();
        if (du != dist[u]) continue;
        if (u == *t) return du;
        for (auto const & e : g.adjacency[u])
            if (du + e.cost < dist[e.to]) {
                dist[e.to] = du + e.cost;
                q.emplace(dist[e.to], e.to);
            }
    }
    return std::nullopt;
}

} // namespace oracle
