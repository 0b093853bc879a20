// Copyright (c) 2026 The lmp-minuscule Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

// Explicit certificates for the minuscule cases: literal E6/E7 tuples and
// epsilon-coordinate generators for the classical families.
//
// Public functions in this header take 0-based indices like the rest of the
// library. Internally the classical formulas are written with 1-based
// epsilon and node labels, matching the usual textbook realizations.

#include "lmp/rootsys.hpp"
#include "lmp/vanishing.hpp"

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lmp {

/// Number of epsilon coordinates in the standard realization of a classical family.
inline std::size_t epsilon_dimension(RootSystemType t) {
    switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C:
    case Family::D: return t.rank;
    default: throw std::invalid_argument("no epsilon realization for type " + to_string(t));
    }
}

/// Convert sum_i eps[i] epsilon_{i+1} to simple-root coordinates.
///
///   A_n: alpha_k = e_k - e_{k+1};            requires sum eps = 0
///   B_n: alpha_k = e_k - e_{k+1}, alpha_n = e_n
///   C_n: alpha_k = e_k - e_{k+1}, alpha_n = 2 e_n
///   D_n: alpha_k = e_k - e_{k+1}, alpha_n = e_{n-1} + e_n
///
/// Throws std::invalid_argument unless the result is a root of rs.
inline Root epsilon_to_root(RootSystem const & rs, std::vector<int> const & eps) {
    auto const t = rs.type();
    auto const n = t.rank;
    if (eps.size() != epsilon_dimension(t)) throw std::invalid_argument("epsilon vector has wrong length");
    std::vector<int> partial(eps.size());
    std::partial_sum(eps.begin(), eps.end(), partial.begin());

    Root r{std::vector<int>(n, 0)};
    auto halve = [](int x) {
        if (x % 2 != 0) throw std::invalid_argument("epsilon combination is not in the root lattice");
        return x / 2;
    };
    switch (t.family) {
    case Family::A:
        if (partial.back() != 0) throw std::invalid_argument("type A epsilon coefficients must sum to zero");
        for (std::size_t k = 0; k < n; ++k) r.coords[k] = partial[k];
        break;
    case Family::B:
        for (std::size_t k = 0; k < n; ++k) r.coords[k] = partial[k];
        break;
    case Family::C:
        for (std::size_t k = 0; k + 1 < n; ++k) r.coords[k] = partial[k];
        r.coords[n - 1] = halve(partial[n - 1]);
        break;
    case Family::D:
        for (std::size_t k = 0; k + 2 < n; ++k) r.coords[k] = partial[k];
        r.coords[n - 1] = halve(partial[n - 1]);
        r.coords[n - 2] = halve(partial[n - 2] - eps[n - 1]);
        break;
    default: break;
    }
    if (!rs.is_root(r)) throw std::invalid_argument("epsilon combination is not a root of " + to_string(t));
    return r;
}

/// Dense epsilon vector from 1-based (index, coefficient) terms.
inline std::vector<int> epsilon(std::size_t dim, std::initializer_list<std::pair<std::size_t, int>> terms) {
    std::vector<int> e(dim, 0);
    for (auto [i, c] : terms) e.at(i - 1) += c;
    return e;
}

/// E6 root from the two-row display: top = (a1, a3, a4, a5, a6), bottom = a2.
inline Root e6_display(std::array<int, 5> top, int bottom) {
    return Root{{top[0], bottom, top[1], top[2], top[3], top[4]}};
}

/// E7 root from the two-row display: top = (a1, a3, a4, a5, a6, a7), bottom = a2.
inline Root e7_display(std::array<int, 6> top, int bottom) {
    return Root{{top[0], bottom, top[1], top[2], top[3], top[4], top[5]}};
}

namespace detail {

inline Certificate unit_certificate(RootSystemType t, std::size_t parabolic, std::size_t d, std::vector<Root> roots) {
    Certificate c{t, parabolic, d, {}};
    for (auto & r : roots) c.entries.push_back({std::move(r), 1});
    return c;
}

// Transport a certificate along a Dynkin diagram automorphism (perm is 0-based).
inline Certificate relabel(Certificate c, std::vector<std::size_t> const & perm) {
    c.parabolic = perm[c.parabolic];
    c.d = perm[c.d];
    for (auto & e : c.entries) {
        std::vector<int> moved(e.root.coords.size());
        for (std::size_t i = 0; i < moved.size(); ++i) moved[perm[i]] = e.root.coords[i];
        e.root.coords = std::move(moved);
    }
    return c;
}

inline std::vector<Root> e6_p1_roots(std::size_t d1) {
    switch (d1) {
    case 1: return {e6_display({1, 1, 1, 0, 0}, 0), e6_display({1, 1, 1, 1, 0}, 1)};
    case 2: return {e6_display({1, 1, 2, 2, 1}, 1), e6_display({1, 1, 1, 0, 0}, 1)};
    case 3: return {e6_display({1, 1, 1, 1, 1}, 0), e6_display({1, 2, 2, 1, 0}, 1), e6_display({1, 1, 1, 0, 0}, 1)};
    case 4:
        return {e6_display({1, 2, 2, 2, 1}, 1), e6_display({1, 1, 2, 1, 0}, 1), e6_display({1, 1, 1, 1, 1}, 1),
                e6_display({1, 1, 1, 0, 0}, 0)};
    case 5: return {e6_display({1, 2, 3, 2, 1}, 1), e6_display({1, 1, 1, 1, 0}, 0), e6_display({1, 1, 1, 1, 1}, 1)};
    case 6: return {e6_display({1, 1, 1, 1, 1}, 0), e6_display({1, 2, 3, 2, 1}, 2)};
    default: return {};
    }
}

inline std::vector<Root> e7_p7_roots(std::size_t d1) {
    switch (d1) {
    case 1: return {e7_display({1, 2, 3, 2, 1, 1}, 2), e7_display({1, 1, 1, 1, 1, 1}, 0)};
    case 2:
        // The middle root is printed with seven top-row entries; the six-entry
        // reading (1 1 1 1 1 1 / 1) is the one that sums to the target.
        return {e7_display({0, 1, 2, 2, 1, 1}, 1), e7_display({1, 1, 1, 1, 1, 1}, 1), e7_display({1, 2, 3, 2, 2, 1}, 1)};
    case 3:
        return {e7_display({1, 2, 3, 2, 2, 1}, 1), e7_display({1, 2, 2, 2, 1, 1}, 1), e7_display({1, 1, 1, 1, 1, 1}, 1),
                e7_display({0, 1, 2, 1, 1, 1}, 1)};
    case 4:
        return {e7_display({1, 2, 3, 3, 2, 1}, 1), e7_display({1, 2, 2, 2, 2, 1}, 1), e7_display({0, 1, 2, 2, 1, 1}, 1),
                e7_display({1, 2, 2, 1, 1, 1}, 1), e7_display({1, 1, 2, 1, 1, 1}, 1), e7_display({0, 0, 1, 1, 1, 1}, 1)};
    case 5:
        return {e7_display({1, 2, 3, 3, 2, 1}, 1), e7_display({0, 1, 2, 2, 1, 1}, 1), e7_display({0, 1, 1, 1, 1, 1}, 1),
                e7_display({1, 1, 2, 2, 2, 1}, 1), e7_display({1, 1, 2, 1, 1, 1}, 1)};
    case 6:
        return {e7_display({1, 2, 3, 2, 2, 1}, 1), e7_display({1, 1, 2, 2, 1, 1}, 1), e7_display({0, 1, 2, 2, 2, 1}, 1),
                e7_display({0, 1, 1, 1, 1, 1}, 1)};
    case 7: return {e7_display({0, 1, 2, 2, 2, 1}, 1), e7_display({1, 2, 2, 2, 1, 1}, 1), e7_display({1, 1, 2, 1, 1, 1}, 1)};
    default: return {};
    }
}

// Grassmannian A_{N-1}/P_c with c <= N - c; c and d are 1-based.
inline std::vector<Root> grassmannian_roots(RootSystem const & rs, std::size_t c, std::size_t d) {
    auto const big_n = rs.rank() + 1;
    auto pos_neg = [&](std::size_t i, std::size_t j) { return epsilon_to_root(rs, epsilon(big_n, {{i, 1}, {j, -1}})); };
    std::vector<Root> out;
    if (d < c)
        for (std::size_t i = 1; i <= d; ++i) out.push_back(pos_neg(i, c + d + 1 - i));
    else if (d <= big_n - c)
        for (std::size_t i = 1; i <= c; ++i) out.push_back(pos_neg(i, d + c + 1 - i));
    else
        for (std::size_t i = 1; i <= big_n - d; ++i) out.push_back(pos_neg(c + 1 - i, d + i));
    return out;
}

// Lagrangian Grassmannian C_n/P_n; d is 1-based.
inline std::vector<Root> lagrangian_roots(RootSystem const & rs, std::size_t d) {
    auto const n = rs.rank();
    auto sum = [&](std::size_t i, std::size_t j) { return epsilon_to_root(rs, epsilon(n, {{i, 1}, {j, 1}})); };
    std::vector<Root> out;
    if (d < n + 1 - d) {
        for (std::size_t i = 1; i <= d; ++i) out.push_back(sum(i, n + 1 - i));
    } else {
        for (std::size_t i = 1; i <= n - d; ++i) out.push_back(sum(i, n + 1 - i));
        for (std::size_t k = n - d + 1; k <= d; ++k) out.push_back(epsilon_to_root(rs, epsilon(n, {{k, 2}})));
    }
    return out;
}

// Orthogonal Grassmannian D_n/P_n; d is 1-based.
inline std::vector<Root> spinor_roots(RootSystem const & rs, std::size_t d) {
    auto const n = rs.rank();
    auto sum = [&](std::size_t i, std::size_t j) { return epsilon_to_root(rs, epsilon(n, {{i, 1}, {j, 1}})); };
    std::vector<Root> out;
    bool const even = n % 2 == 0;
    if (d + 2 <= n) {
        if (d < n + 1 - d)
            for (std::size_t i = 1; i <= d; ++i) out.push_back(sum(i, n + 1 - i));
        else
            for (std::size_t i = 1; i <= d; ++i) out.push_back(sum(i, n - d + i));
    } else if (d == n - 1) {
        if (even)
            for (std::size_t i = 2; i <= n / 2; ++i) out.push_back(sum(i, n + 1 - i));
        else
            for (std::size_t i = 1; i <= (n - 1) / 2; ++i) out.push_back(sum(i, n - i));
    } else {
        if (even)
            for (std::size_t i = 1; i <= n / 2; ++i) out.push_back(sum(i, n + 1 - i));
        else
            for (std::size_t i = 2; i <= (n + 1) / 2; ++i) out.push_back(sum(i, n + 2 - i));
    }
    return out;
}

inline std::vector<std::size_t> swap_last_two(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::swap(perm[n - 2], perm[n - 1]);
    return perm;
}

} // namespace detail

/// Quadric D_n/P_1 certificate for 0-based d; for d <= n-3 the pair {e_1 - e_j, e_1 + e_j} uses the given 1-based j in [d+2, n].
inline Certificate quadric_certificate(RootSystem const & rs, std::size_t d, std::size_t j) {
    auto const n = rs.rank();
    if (rs.type().family != Family::D) throw std::invalid_argument("quadric certificates need type D");
    auto const d1 = d + 1;
    auto root = [&](std::initializer_list<std::pair<std::size_t, int>> t) { return epsilon_to_root(rs, epsilon(n, t)); };
    if (d1 == n - 1) return detail::unit_certificate(rs.type(), 0, d, {root({{1, 1}, {n, -1}})});
    if (d1 == n) return detail::unit_certificate(rs.type(), 0, d, {root({{1, 1}, {n, 1}})});
    if (j < d1 + 1 || j > n) throw std::out_of_range("quadric certificate needs d + 1 < j <= n for 0-based d");
    return detail::unit_certificate(rs.type(), 0, d, {root({{1, 1}, {j, -1}}), root({{1, 1}, {j, 1}})});
}

/// The explicit certificate for (rs, maximal parabolic, d), or nullopt if the configuration has none.
///
/// Covered: A_n/P_c (all c), C_n/P_n, D_n/P_1, D_n/P_{n-1}, D_n/P_n, E6/P_1, E6/P_6, E7/P_7.
/// A_n/P_c with 2c > n+1, D_n/P_{n-1} and E6/P_6 are transported from their mirror images
/// along the Dynkin diagram automorphism.
inline std::optional<Certificate> embedded_certificate(RootSystem const & rs, std::size_t parabolic, std::size_t d) {
    auto const t = rs.type();
    auto const n = t.rank;
    if (parabolic >= n || d >= n) throw std::out_of_range("certificate index out of range");
    switch (t.family) {
    case Family::A: {
        auto const big_n = n + 1;
        auto const c1 = parabolic + 1;
        if (2 * c1 <= big_n) return detail::unit_certificate(t, parabolic, d, detail::grassmannian_roots(rs, c1, d + 1));
        std::vector<std::size_t> flip(n);
        for (std::size_t i = 0; i < n; ++i) flip[i] = n - 1 - i;
        auto mirror = detail::unit_certificate(t, flip[parabolic], flip[d], detail::grassmannian_roots(rs, big_n - c1, big_n - (d + 1)));
        return detail::relabel(std::move(mirror), flip);
    }
    case Family::C:
        if (parabolic == n - 1) return detail::unit_certificate(t, parabolic, d, detail::lagrangian_roots(rs, d + 1));
        break;
    case Family::D:
        if (parabolic == 0) return quadric_certificate(rs, d, n);
        if (parabolic == n - 1) return detail::unit_certificate(t, parabolic, d, detail::spinor_roots(rs, d + 1));
        if (parabolic == n - 2) {
            auto perm = detail::swap_last_two(n);
            auto mirror = detail::unit_certificate(t, n - 1, perm[d], detail::spinor_roots(rs, perm[d] + 1));
            return detail::relabel(std::move(mirror), perm);
        }
        break;
    case Family::E:
        if (n == 6 && parabolic == 0) return detail::unit_certificate(t, 0, d, detail::e6_p1_roots(d + 1));
        if (n == 6 && parabolic == 5) {
            std::vector<std::size_t> perm{5, 1, 4, 3, 2, 0};
            return detail::relabel(detail::unit_certificate(t, 0, perm[d], detail::e6_p1_roots(perm[d] + 1)), perm);
        }
        if (n == 7 && parabolic == 6) return detail::unit_certificate(t, 6, d, detail::e7_p7_roots(d + 1));
        break;
    default: break;
    }
    return std::nullopt;
}

/// A named family of certificates, valid for ranks in [min_rank, max_rank].
struct CertificateFamily {
    Family family;
    std::string parabolic;  // e.g. "P_1", "P_n"
    std::string label;
    std::size_t min_rank;
    std::size_t max_rank;
    std::function<std::size_t(std::size_t)> omitted;  // rank -> 0-based omitted index
};

inline std::vector<CertificateFamily> certificate_families() {
    return {
        {Family::A, "P_c", "Grassmannian, all c", 1, 64, nullptr},
        {Family::C, "P_n", "Lagrangian Grassmannian", 2, 64, [](std::size_t n) { return n - 1; }},
        {Family::D, "P_1", "quadric", 4, 64, [](std::size_t) { return std::size_t{0}; }},
        {Family::D, "P_{n-1}", "orthogonal Grassmannian, mirrored", 4, 64, [](std::size_t n) { return n - 2; }},
        {Family::D, "P_n", "orthogonal Grassmannian", 4, 64, [](std::size_t n) { return n - 1; }},
        {Family::E, "P_1", "E6 cases 1-6", 6, 6, [](std::size_t) { return std::size_t{0}; }},
        {Family::E, "P_6", "E6 cases 1-6, mirrored", 6, 6, [](std::size_t) { return std::size_t{5}; }},
        {Family::E, "P_7", "E7 cases 1-7", 7, 7, [](std::size_t) { return std::size_t{6}; }},
    };
}

} // namespace lmp
