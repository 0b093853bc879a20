// Copyright (c) 2026 The lmp-minuscule Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include "lmp/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ranges>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lmp {

/// Weyl group element as a word in simple reflections.
///
/// letters = (i1, ..., ik) denotes s_{i1} ... s_{ik}; acting on a vector the
/// rightmost letter is applied first.
struct WeylWord {
    std::vector<std::size_t> letters;

    std::size_t length() const { return letters.size(); }

    WeylWord inverse() const {
        return WeylWord{{letters.rbegin(), letters.rend()}};
    }

    friend bool operator==(WeylWord const &, WeylWord const &) = default;
};

template <class Scalar>
BasicWeight<Scalar> apply(RootSystem const & rs, WeylWord const & w, BasicWeight<Scalar> lambda) {
    for (auto i : std::views::reverse(w.letters)) lambda = simple_reflection(rs, i, std::move(lambda));
    return lambda;
}

inline Root apply(RootSystem const & rs, WeylWord const & w, Root beta) {
    for (auto i : std::views::reverse(w.letters)) beta = simple_reflection(rs, i, std::move(beta));
    return beta;
}

/// Two words name the same group element iff they agree on rho, whose stabilizer is trivial.
inline bool same_element(RootSystem const & rs, WeylWord const & a, WeylWord const & b) {
    auto r = rho<std::int64_t>(rs.rank());
    return apply(rs, a, r) == apply(rs, b, r);
}

/// Longest element of the parabolic subgroup generated by {s_j : j in subset}.
///
/// Greedy descent on v = sum_{j in subset} omega_j, always reflecting at the
/// smallest index j in the subset with v_j > 0.
inline WeylWord longest_element(RootSystem const & rs, std::vector<std::size_t> const & subset) {
    for (auto j : subset) check_index(rs, j);
    IntegralWeight v{std::vector<std::int64_t>(rs.rank(), 0)};
    for (auto j : subset) v.coords[j] = 1;
    std::vector<std::size_t> applied;
    for (;;) {
        auto it = std::ranges::find_if(subset, [&](std::size_t j) { return v.coords[j] > 0; });
        if (it == subset.end()) break;
        v = simple_reflection(rs, *it, std::move(v));
        applied.push_back(*it);
    }
    // v_final = s_{jk} ... s_{j1} v, so the word reads the applied sequence backwards.
    return WeylWord{{applied.rbegin(), applied.rend()}};
}

inline WeylWord longest_element(RootSystem const & rs) {
    std::vector<std::size_t> all(rs.rank());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return longest_element(rs, all);
}

/// tau_P, the longest element of W_P.
inline WeylWord parabolic_longest_element(RootSystem const & rs, Parabolic const & p) {
    return longest_element(rs, p.retained());
}

/// tau(alpha_d) for a maximal parabolic P_d; always a positive root.
inline Root tau_on_omitted_root(RootSystem const & rs, Parabolic const & p) {
    auto omitted = p.omitted();
    if (omitted.size() != 1) throw std::invalid_argument("tau_on_omitted_root needs a maximal parabolic");
    auto image = apply(rs, parabolic_longest_element(rs, p), rs.simple_root(omitted.front()));
    if (!image.is_positive()) throw InconsistencyError("tau(alpha_d) is not a positive root");
    return image;
}

/// i(lambda) = -w0(lambda).
template <class Scalar>
BasicWeight<Scalar> weyl_involution(RootSystem const & rs, BasicWeight<Scalar> const & lambda) {
    return -apply(rs, longest_element(rs), lambda);
}

/// Permutation of {0..rank-1} induced by i on fundamental weights.
inline std::vector<std::size_t> involution_permutation(RootSystem const & rs) {
    auto w0 = longest_element(rs);
    std::vector<std::size_t> perm(rs.rank());
    for (std::size_t d = 0; d < rs.rank(); ++d) {
        auto img = -apply(rs, w0, fundamental_weight<std::int64_t>(rs.rank(), d));
        auto it = std::ranges::find(img.coords, 1);
        if (it == img.coords.end() || std::ranges::count(img.coords, 0) + 1 != static_cast<std::ptrdiff_t>(rs.rank()))
            throw InconsistencyError("Weyl involution does not permute fundamental weights");
        perm[d] = static_cast<std::size_t>(it - img.coords.begin());
    }
    return perm;
}

/// The unique dominant weight in the W-orbit of lambda.
template <class Scalar>
BasicWeight<Scalar> dominant_representative(RootSystem const & rs, BasicWeight<Scalar> lambda) {
    for (;;) {
        auto it = std::ranges::find_if(lambda.coords, [](Scalar const & c) { return c < 0; });
        if (it == lambda.coords.end()) return lambda;
        auto const i = static_cast<std::size_t>(it - lambda.coords.begin());
        lambda = simple_reflection(rs, i, std::move(lambda));
    }
}

/// W-orbit of a dominant integral weight, in breadth-first order from the seed.
inline std::vector<IntegralWeight> orbit(RootSystem const & rs, IntegralWeight const & seed) {
    if (seed.size() != rs.rank()) throw std::invalid_argument("orbit: weight has wrong rank");
    if (!seed.is_dominant()) throw std::invalid_argument("orbit: seed weight is not dominant");
    std::vector<IntegralWeight> nodes{seed};
    std::unordered_map<IntegralWeight, std::size_t, IntegralWeightHash> seen{{seed, 0}};
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (nodes[head].coords[i] == 0) continue;
            auto next = simple_reflection(rs, i, nodes[head]);
            if (seen.emplace(next, nodes.size()).second) nodes.push_back(std::move(next));
        }
    }
    return nodes;
}

inline std::vector<IntegralWeight> orbit(RootSystem const & rs, Weight const & seed) {
    return orbit(rs, to_integral(seed));
}

/// Order of the Weyl group, by closed formula.
inline std::uint64_t weyl_group_order(RootSystemType t) {
    auto factorial = [](std::uint64_t n) {
        std::uint64_t f = 1;
        for (std::uint64_t k = 2; k <= n; ++k) f *= k;
        return f;
    };
    auto const n = static_cast<std::uint64_t>(t.rank);
    switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
    }
    return 0;
}

struct OrbitEdge {
    std::size_t to;
    std::size_t root;   // index into positive_roots()
    std::int64_t cost;  // <chi, beta^vee>
};

/// Extremal-weight graph: nodes are the orbit, edges chi -> chi - r beta with r = <chi, beta^vee> >= 1.
struct OrbitGraph {
    std::vector<IntegralWeight> nodes;
    std::vector<std::vector<OrbitEdge>> adjacency;
    std::unordered_map<IntegralWeight, std::size_t, IntegralWeightHash> index;

    std::optional<std::size_t> find(IntegralWeight const & w) const {
        auto it = index.find(w);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

/// Materialize the orbit graph of a dominant seed, keeping edges whose root is allowed.
inline OrbitGraph build_orbit_graph(RootSystem const & rs, IntegralWeight const & seed, std::vector<bool> const & allowed) {
    OrbitGraph g;
    g.nodes = orbit(rs, seed);
    for (std::size_t k = 0; k < g.nodes.size(); ++k) g.index.emplace(g.nodes[k], k);
    g.adjacency.resize(g.nodes.size());
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            if (!allowed[k]) continue;
            auto r = pairing(rs, g.nodes[u], k);
            if (r < 1) continue;
            auto v = g.find(reflect(rs, k, g.nodes[u]));
            if (!v) throw InconsistencyError("reflection left the orbit");
            g.adjacency[u].push_back({*v, k, r});
        }
    }
    return g;
}

} // namespace lmp
