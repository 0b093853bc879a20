// Copyright (c) 2026 The lmp-minuscule Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

// Orders of vanishing m_d of the extremal sections p_{w0^(d)} at tau_P.
//
// m_d is computed three ways:
//   * shortest_extremal_path: Dijkstra on extremal weights, from
//     tau(i(omega_d)) down to -omega_d, each step chi -> chi - r beta costing
//     r = <chi, beta^vee> >= 1;
//   * lattice_lower_bound: fewest allowed positive roots summing to the
//     target omega_d + tau(i(omega_d)), ignoring the extremal constraint;
//   * coefficient_lower_bound: the coefficient of one distinguished simple
//     root in the target, divided by its largest coefficient in any root.
// Certificates (pairwise orthogonal ladders) give matching upper bounds.

#include "lmp/rootsys.hpp"
#include "lmp/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lmp {

/// Which positive roots may label a step when computing m_d.
enum class EdgeSet {
    outside_levi,  ///< R+ minus R+_{P_d}: roots whose alpha_d coefficient is >= 1
    all_positive,  ///< all of R+
};

inline std::vector<bool> allowed_roots(RootSystem const & rs, std::size_t d, EdgeSet edges = EdgeSet::outside_levi) {
    std::vector<bool> mask(rs.num_positive_roots());
    for (std::size_t k = 0; k < mask.size(); ++k)
        mask[k] = edges == EdgeSet::all_positive || rs.root(k).coords[d] >= 1;
    return mask;
}

struct TargetWeight {
    std::size_t d = 0;
    IntegralWeight value;                   // omega_d + tau(i(omega_d))
    std::vector<std::int64_t> root_coords;  // same vector in the simple-root basis
};

/// tau(i(omega_d)), the weight of p_{tau w0^(d)}.
inline IntegralWeight source_weight(RootSystem const & rs, Parabolic const & p, std::size_t d) {
    auto tau = parabolic_longest_element(rs, p);
    return apply(rs, tau, weyl_involution(rs, fundamental_weight<std::int64_t>(rs.rank(), d)));
}

inline TargetWeight target_weight(RootSystem const & rs, Parabolic const & p, std::size_t d) {
    check_index(rs, d);
    TargetWeight t;
    t.d = d;
    t.value = fundamental_weight<std::int64_t>(rs.rank(), d) + source_weight(rs, p, d);
    t.root_coords = to_integral_root_basis(rs, to_exact(t.value));
    if (std::ranges::any_of(t.root_coords, [](std::int64_t c) { return c < 0; }))
        throw InconsistencyError("target weight has a negative simple-root coordinate");
    return t;
}

struct PathStep {
    std::size_t root = 0;           // index into positive_roots()
    std::int64_t multiplicity = 0;  // r = <chi, beta^vee>
    friend bool operator==(PathStep const &, PathStep const &) = default;
};

struct ExtremalPath {
    std::int64_t cost = 0;
    std::vector<PathStep> steps;
    std::vector<IntegralWeight> nodes;  // steps.size() + 1 weights, source first
};

/// Cheapest extremal-weight path from tau(i(omega_d)) to -omega_d.
///
/// Distances to the sink come from a backward A* (reverse edges
/// chi' -> chi' + r beta where <chi', beta^vee> = -r). Each node carries its
/// deficit source - chi in root coordinates; a step of cost r removes r beta,
/// so max_j ceil(deficit_j / M_j), M_j the largest alpha_j coefficient of an
/// allowed root, is a consistent estimate of the remaining cost. Every node
/// with estimate <= m is settled, so each node on a shortest path has its exact
/// distance. The witness then walks forward choosing, at each node, the
/// lowest-index root that stays on a shortest path.
inline ExtremalPath shortest_extremal_path(RootSystem const & rs, Parabolic const & p, std::size_t d,
                                           EdgeSet edges = EdgeSet::outside_levi) {
    check_index(rs, d);
    auto const source = source_weight(rs, p, d);
    auto const sink = -fundamental_weight<std::int64_t>(rs.rank(), d);
    if (dominant_representative(rs, source) != dominant_representative(rs, sink))
        throw InconsistencyError("source and sink lie in different Weyl orbits");

    auto const n = rs.rank();
    std::vector<std::size_t> allowed;
    std::vector<std::int64_t> max_coeff(n, 0);
    {
        auto mask = allowed_roots(rs, d, edges);
        for (std::size_t k = 0; k < mask.size(); ++k) {
            if (!mask[k]) continue;
            allowed.push_back(k);
            for (std::size_t j = 0; j < n; ++j) max_coeff[j] = std::max<std::int64_t>(max_coeff[j], rs.root(k).coords[j]);
        }
    }
    // nullopt: the deficit cannot be paid with allowed roots, so the node is off every source path.
    auto estimate = [&](std::vector<std::int64_t> const & deficit) -> std::optional<std::int64_t> {
        std::int64_t h = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (deficit[j] < 0 || (deficit[j] > 0 && max_coeff[j] == 0)) return std::nullopt;
            if (deficit[j] > 0) h = std::max(h, (deficit[j] + max_coeff[j] - 1) / max_coeff[j]);
        }
        return h;
    };

    struct Node {
        IntegralWeight weight;
        std::vector<std::int64_t> deficit;
        std::int64_t g = 0;
        bool settled = false;
    };
    std::vector<Node> nodes;
    std::unordered_map<IntegralWeight, std::size_t, IntegralWeightHash> index;
    using Entry = std::tuple<std::int64_t, std::int64_t, std::size_t>;  // (f, g, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

    auto start = target_weight(rs, p, d).root_coords;
    auto h0 = estimate(start);
    if (!h0) throw InconsistencyError("sink unreachable from source in the extremal-weight graph");
    nodes.push_back({sink, std::move(start), 0, false});
    index.emplace(sink, 0);
    queue.emplace(*h0, 0, 0);
    std::optional<std::int64_t> best;
    while (!queue.empty()) {
        auto [f, g, id] = queue.top();
        queue.pop();
        if (best && f > *best) break;
        if (nodes[id].settled || g != nodes[id].g) continue;
        nodes[id].settled = true;
        if (nodes[id].weight == source) best = g;
        for (auto k : allowed) {
            auto pr = pairing(rs, nodes[id].weight, k);
            if (pr > -1) continue;
            auto deficit = nodes[id].deficit;
            auto const & beta = rs.root(k).coords;
            for (std::size_t j = 0; j < n; ++j) deficit[j] += pr * beta[j];
            auto h = estimate(deficit);
            if (!h) continue;
            auto u = reflect(rs, k, nodes[id].weight);
            auto nd = g - pr;
            auto [it, fresh] = index.emplace(u, nodes.size());
            if (fresh) {
                nodes.push_back({std::move(u), std::move(deficit), nd, false});
            } else {
                auto & node = nodes[it->second];
                if (node.settled || node.g <= nd) continue;
                node.g = nd;
            }
            queue.emplace(nd + *h, nd, it->second);
        }
    }
    std::unordered_map<IntegralWeight, std::int64_t, IntegralWeightHash> settled;
    for (auto const & node : nodes)
        if (node.settled) settled.emplace(node.weight, node.g);
    auto src = settled.find(source);
    if (src == settled.end()) throw InconsistencyError("sink unreachable from source in the extremal-weight graph");

    ExtremalPath path;
    path.cost = src->second;
    path.nodes.push_back(source);
    auto u = source;
    auto remaining = path.cost;
    while (remaining > 0) {
        bool moved = false;
        for (auto k : allowed) {
            auto r = pairing(rs, u, k);
            if (r < 1) continue;
            auto v = reflect(rs, k, u);
            auto it = settled.find(v);
            if (it == settled.end() || it->second + r != remaining) continue;
            path.steps.push_back({k, r});
            path.nodes.push_back(v);
            u = std::move(v);
            remaining -= r;
            moved = true;
            break;
        }
        if (!moved) throw InconsistencyError("failed to reconstruct a shortest extremal path");
    }
    return path;
}

inline std::int64_t dijkstra_order(RootSystem const & rs, Parabolic const & p, std::size_t d,
                                   EdgeSet edges = EdgeSet::outside_levi) {
    return shortest_extremal_path(rs, p, d, edges).cost;
}

struct VectorHash {
    std::size_t operator()(std::vector<std::int64_t> const & v) const noexcept {
        return IntegralWeightHash{}(IntegralWeight{v});
    }
};

/// A multiset of positive-root indices summing to a target.
struct RootDecomposition {
    std::vector<std::size_t> roots;
    std::int64_t size() const { return static_cast<std::int64_t>(roots.size()); }
};

/// Fewest allowed roots (with repetition) summing exactly to target; nullopt when no decomposition exists.
///
/// Iterative deepening over the lattice points below target. A state v is
/// pruned when max_j ceil(v_j / M_j) exceeds the remaining budget, where M_j
/// is the largest alpha_j coefficient among allowed roots; budgets proven
/// insufficient for a state are memoized across iterations.
inline std::optional<RootDecomposition> min_root_decomposition(RootSystem const & rs,
                                                               std::vector<std::int64_t> const & target,
                                                               std::vector<bool> const & allowed) {
    auto const n = rs.rank();
    if (std::ranges::any_of(target, [](std::int64_t c) { return c < 0; })) return std::nullopt;

    std::vector<std::size_t> roots;
    for (std::size_t k = 0; k < allowed.size(); ++k)
        if (allowed[k]) roots.push_back(k);
    // tallest first, so tight budgets are met quickly
    std::ranges::stable_sort(roots, std::greater<>{}, [&](std::size_t k) { return rs.root(k).height(); });

    std::vector<std::int64_t> max_coeff(n, 0);
    for (auto k : roots)
        for (std::size_t j = 0; j < n; ++j) max_coeff[j] = std::max<std::int64_t>(max_coeff[j], rs.root(k).coords[j]);

    constexpr std::int64_t unreachable = std::numeric_limits<std::int64_t>::max() / 4;
    auto estimate = [&](std::vector<std::int64_t> const & v) {
        std::int64_t h = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            if (max_coeff[j] == 0) return unreachable;
            h = std::max(h, (v[j] + max_coeff[j] - 1) / max_coeff[j]);
        }
        return h;
    };

    std::unordered_map<std::vector<std::int64_t>, std::int64_t, VectorHash> insufficient;
    RootDecomposition best;
    std::vector<std::int64_t> v = target;

    std::function<bool(std::int64_t)> search = [&](std::int64_t budget) -> bool {
        if (std::ranges::all_of(v, [](std::int64_t c) { return c == 0; })) return true;
        if (estimate(v) > budget) return false;
        if (auto it = insufficient.find(v); it != insufficient.end() && it->second >= budget) return false;
        for (auto k : roots) {
            auto const & c = rs.root(k).coords;
            bool fits = true;
            for (std::size_t j = 0; j < n && fits; ++j) fits = c[j] <= v[j];
            if (!fits) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] -= c[j];
            best.roots.push_back(k);
            bool found = search(budget - 1);
            for (std::size_t j = 0; j < n; ++j) v[j] += c[j];
            if (found) return true;
            best.roots.pop_back();
        }
        auto & slot = insufficient[v];
        slot = std::max(slot, budget);
        return false;
    };

    auto start = estimate(target);
    if (start >= unreachable) return std::nullopt;
    auto const ceiling = std::accumulate(target.begin(), target.end(), std::int64_t{0});
    for (auto budget = start; budget <= ceiling; ++budget)
        if (search(budget)) return best;
    return std::nullopt;
}

/// Minimum of sum n_beta over decompositions of the target into allowed roots; nullopt when infeasible.
inline std::optional<std::int64_t> lattice_lower_bound(RootSystem const & rs, Parabolic const & p, std::size_t d,
                                                       EdgeSet edges = EdgeSet::outside_levi) {
    auto t = target_weight(rs, p, d);
    auto dec = min_root_decomposition(rs, t.root_coords, allowed_roots(rs, d, edges));
    if (!dec) return std::nullopt;
    return dec->size();
}

/// Simple root whose coefficient bounds m_d from below, with its largest coefficient over R+.
struct DistinguishedRoot {
    std::size_t index = 0;
    int max_coefficient = 1;
};

/// The distinguished simple root declared for (type, maximal parabolic, d), if any.
inline std::optional<DistinguishedRoot> distinguished_root(RootSystemType t, Parabolic const & p, std::size_t d) {
    if (!p.is_maximal()) return std::nullopt;
    auto const c = p.omitted().front();
    auto const n = t.rank;
    switch (t.family) {
    case Family::A: return DistinguishedRoot{d, 1};
    case Family::B:
        if (c == n - 1) return DistinguishedRoot{n - 1, 2};
        break;
    case Family::C:
        if (c == n - 1) return DistinguishedRoot{n - 1, 1};
        break;
    case Family::D:
        if (c == 0) return DistinguishedRoot{0, 1};
        if (c == n - 2 || c == n - 1) return DistinguishedRoot{c, 1};
        break;
    case Family::E:
        if (n == 6 && (c == 0 || c == 5)) return DistinguishedRoot{c, 1};
        if (n == 7 && c == 6) return DistinguishedRoot{6, 1};
        break;
    default: break;
    }
    return std::nullopt;
}

/// ceil(c_alpha / M_alpha) for the distinguished root; nullopt when none is declared.
/// Throws InconsistencyError if some positive root exceeds the declared coefficient bound.
inline std::optional<std::int64_t> coefficient_lower_bound(RootSystem const & rs, Parabolic const & p, std::size_t d) {
    auto alpha = distinguished_root(rs.type(), p, d);
    if (!alpha) return std::nullopt;
    for (auto const & r : rs.positive_roots())
        if (r.coords[alpha->index] > alpha->max_coefficient)
            throw InconsistencyError("distinguished simple root exceeds its coefficient bound in some positive root");
    auto c = target_weight(rs, p, d).root_coords[alpha->index];
    return (c + alpha->max_coefficient - 1) / alpha->max_coefficient;
}

struct CertificateEntry {
    Root root;
    std::int64_t multiplicity = 1;
    friend bool operator==(CertificateEntry const &, CertificateEntry const &) = default;
};

/// A claimed realization of m_d: pairwise orthogonal roots beta_j with multiplicities n_j.
struct Certificate {
    RootSystemType system;
    std::size_t parabolic = 0;  // omitted simple root of the fixed maximal parabolic
    std::size_t d = 0;
    std::vector<CertificateEntry> entries;

    std::int64_t cost() const {
        std::int64_t s = 0;
        for (auto const & e : entries) s += e.multiplicity;
        return s;
    }
    friend bool operator==(Certificate const &, Certificate const &) = default;
};

struct CertificateCheck {
    bool admissible = false;   // every beta_j in R+ \ R+_{P_d}, every n_j >= 1
    bool sum_matches = false;  // (a) sum n_j beta_j = omega_d + tau(i(omega_d))
    bool orthogonal = false;   // (b) distinct beta_j pairwise orthogonal
    bool ladder = false;       // (c) <chi_0, beta_j^vee> = n_j and chi_0 - sum n_j beta_j = -omega_d
    bool minimal = false;      // (d) cost equals the coefficient bound (when declared) and the Dijkstra order
    std::int64_t cost = 0;
    std::vector<std::string> failures;

    bool ok() const { return admissible && sum_matches && orthogonal && ladder && minimal; }
};

namespace detail {
inline std::string format_coords(std::vector<int> const & c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
    return os.str();
}
} // namespace detail

/// Values clause (d) compares against; computed on demand when absent.
struct CertificateBounds {
    std::optional<std::int64_t> coefficient;
    std::optional<std::int64_t> dijkstra;
};

inline CertificateCheck check_certificate(RootSystem const & rs, Certificate const & cert, CertificateBounds bounds = {}) {
    if (cert.system != rs.type()) throw std::invalid_argument("certificate is for " + to_string(cert.system) + ", not " + to_string(rs.type()));
    if (cert.parabolic >= rs.rank() || cert.d >= rs.rank()) throw std::invalid_argument("certificate index out of range");
    for (auto const & e : cert.entries)
        if (e.root.coords.size() != rs.rank()) throw std::invalid_argument("certificate root has wrong length");

    auto const p = Parabolic::maximal(rs.rank(), cert.parabolic);
    auto const d = cert.d;
    auto const levi_d = Parabolic::maximal(rs.rank(), d);
    CertificateCheck out;
    out.cost = cert.cost();

    std::vector<std::size_t> idx;
    out.admissible = !cert.entries.empty();
    if (cert.entries.empty()) out.failures.push_back("precondition: certificate has no entries");
    for (auto const & e : cert.entries) {
        auto k = rs.find(e.root);
        if (!k) {
            out.admissible = false;
            out.failures.push_back("precondition: " + detail::format_coords(e.root.coords) + " is not a positive root");
            continue;
        }
        idx.push_back(*k);
        if (levi_d.contains(e.root)) {
            out.admissible = false;
            out.failures.push_back("precondition: " + detail::format_coords(e.root.coords) + " lies in R+_{P_d}");
        }
        if (e.multiplicity < 1) {
            out.admissible = false;
            out.failures.push_back("precondition: multiplicity of " + detail::format_coords(e.root.coords) + " is below 1");
        }
    }
    if (idx.size() != cert.entries.size()) return out;

    auto const target = target_weight(rs, p, d);
    std::vector<std::int64_t> sum(rs.rank(), 0);
    for (auto const & e : cert.entries)
        for (std::size_t j = 0; j < rs.rank(); ++j) sum[j] += e.multiplicity * e.root.coords[j];
    out.sum_matches = sum == target.root_coords;
    if (!out.sum_matches) out.failures.push_back("(a): roots do not sum to the target weight");

    out.orthogonal = true;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) {
                out.orthogonal = false;
                out.failures.push_back("(b): root " + detail::format_coords(cert.entries[i].root.coords) + " repeated; fold into its multiplicity");
            } else if (pairing(rs, root_to_weight(rs, cert.entries[i].root), idx[j]) != 0) {
                out.orthogonal = false;
                out.failures.push_back("(b): " + detail::format_coords(cert.entries[i].root.coords) + " and " +
                                       detail::format_coords(cert.entries[j].root.coords) + " are not orthogonal");
            }
        }

    auto chi = source_weight(rs, p, d);
    out.ladder = true;
    for (std::size_t j = 0; j < idx.size(); ++j) {
        auto r = pairing(rs, chi, idx[j]);
        if (r != cert.entries[j].multiplicity) {
            out.ladder = false;
            out.failures.push_back("(c): <chi_0, beta^vee> = " + std::to_string(r) + " for " +
                                   detail::format_coords(cert.entries[j].root.coords) + ", expected " +
                                   std::to_string(cert.entries[j].multiplicity));
        }
    }
    auto end = chi;
    for (std::size_t j = 0; j < idx.size(); ++j) {
        auto w = rs.root_weight(idx[j]);
        for (std::size_t i = 0; i < rs.rank(); ++i) end.coords[i] -= cert.entries[j].multiplicity * w[i];
    }
    if (end != -fundamental_weight<std::int64_t>(rs.rank(), d)) {
        out.ladder = false;
        out.failures.push_back("(c): ladder does not end at -omega_d");
    }

    if (!bounds.coefficient) bounds.coefficient = coefficient_lower_bound(rs, p, d);
    if (!bounds.dijkstra) bounds.dijkstra = dijkstra_order(rs, p, d);
    out.minimal = out.cost == *bounds.dijkstra && (!bounds.coefficient || out.cost == *bounds.coefficient);
    if (!out.minimal) {
        std::ostringstream os;
        os << "(d): cost " << out.cost << " vs dijkstra " << *bounds.dijkstra;
        if (bounds.coefficient) os << " and coefficient bound " << *bounds.coefficient;
        out.failures.push_back(os.str());
    }
    return out;
}

/// Search for a pairwise orthogonal ladder certificate of cost at most max_cost.
///
/// Candidates are the allowed roots beta with <chi_0, beta^vee> >= 1; since
/// orthogonal reflections commute, subsets are enumerated in index order.
inline std::optional<Certificate> search_certificate(RootSystem const & rs, std::size_t parabolic, std::size_t d,
                                                     std::int64_t max_cost) {
    auto const p = Parabolic::maximal(rs.rank(), parabolic);
    auto const target = target_weight(rs, p, d);
    auto const chi = source_weight(rs, p, d);
    auto const mask = allowed_roots(rs, d);

    struct Candidate {
        std::size_t root;
        std::int64_t n;
    };
    std::vector<Candidate> cands;
    for (std::size_t k = 0; k < mask.size(); ++k) {
        if (!mask[k]) continue;
        auto r = pairing(rs, chi, k);
        if (r >= 1) cands.push_back({k, r});
    }
    auto const m = cands.size();
    std::vector<std::vector<bool>> orth(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            orth[i][j] = rs.inner_product(rs.root(cands[i].root), rs.root(cands[j].root)) == 0;

    std::vector<std::int64_t> rest = target.root_coords;
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t, std::int64_t)> dfs = [&](std::size_t from, std::int64_t budget) -> bool {
        if (std::ranges::all_of(rest, [](std::int64_t c) { return c == 0; })) return true;
        for (std::size_t i = from; i < m; ++i) {
            if (cands[i].n > budget) continue;
            if (!std::ranges::all_of(chosen, [&](std::size_t c) { return orth[c][i]; })) continue;
            auto const & c = rs.root(cands[i].root).coords;
            bool fits = true;
            for (std::size_t j = 0; j < rest.size() && fits; ++j) fits = cands[i].n * c[j] <= rest[j];
            if (!fits) continue;
            for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= cands[i].n * c[j];
            chosen.push_back(i);
            if (dfs(i + 1, budget - cands[i].n)) return true;
            chosen.pop_back();
            for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += cands[i].n * c[j];
        }
        return false;
    };
    if (!dfs(0, max_cost)) return std::nullopt;

    Certificate cert{rs.type(), parabolic, d, {}};
    for (auto i : chosen) cert.entries.push_back({rs.root(cands[i].root), cands[i].n});
    return cert;
}

struct VanishingResult {
    std::size_t d = 0;
    std::int64_t m_dijkstra = 0;
    std::optional<std::int64_t> m_lattice_lb;  // nullopt: no decomposition exists
    std::optional<std::int64_t> c_alpha;       // nullopt: no distinguished root declared
    std::optional<std::int64_t> certificate_cost;
    std::optional<std::int64_t> m_relaxed;     // Dijkstra over all of R+, when requested
    bool agreed = false;

    friend bool operator==(VanishingResult const &, VanishingResult const &) = default;
};

/// True iff c_alpha <= lattice <= dijkstra <= certificate, each where present.
inline bool chain_holds(VanishingResult const & r) {
    if (!r.m_lattice_lb) return false;
    if (r.c_alpha && *r.c_alpha > *r.m_lattice_lb) return false;
    if (*r.m_lattice_lb > r.m_dijkstra) return false;
    if (r.certificate_cost && *r.certificate_cost < r.m_dijkstra) return false;
    return true;
}

/// True iff every computed route reports the same value.
inline bool routes_agree(VanishingResult const & r) {
    auto same = [&](std::optional<std::int64_t> const & v) { return !v || *v == r.m_dijkstra; };
    return r.m_lattice_lb && *r.m_lattice_lb == r.m_dijkstra && same(r.c_alpha) && same(r.certificate_cost);
}

} // namespace lmp
