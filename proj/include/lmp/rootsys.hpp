// Copyright (c) 2026 The lmp-minuscule Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

// Finite crystallographic root systems in Bourbaki numbering.
//
// Indices are 0-based throughout the library: simple root alpha_i in
// Bourbaki's tables is index i-1 here. The CLI and the certificate file
// format use 1-based Bourbaki labels and convert at the boundary.

#include "lmp/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lmp {

/// Thrown when a computation contradicts a structural guarantee (a convention bug, never user error).
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char to_char(Family f) { return static_cast<char>(f); }

inline Family parse_family(std::string_view s) {
    if (s.size() == 1) {
        switch (s[0]) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
        case 'E': case 'e': return Family::E;
        case 'F': case 'f': return Family::F;
        case 'G': case 'g': return Family::G;
        default: break;
        }
    }
    throw std::invalid_argument("unknown root system family '" + std::string(s) + "' (expected one of A-G)");
}

struct RootSystemType {
    Family family = Family::A;
    std::size_t rank = 1;

    friend bool operator==(RootSystemType const &, RootSystemType const &) = default;
    friend auto operator<=>(RootSystemType const &, RootSystemType const &) = default;
};

inline std::string to_string(RootSystemType t) { return std::string(1, to_char(t.family)) + std::to_string(t.rank); }

/// Empty string when (family, rank) names a finite crystallographic system, otherwise a diagnostic.
inline std::string type_diagnostic(RootSystemType t) {
    auto const n = t.rank;
    switch (t.family) {
    case Family::A: if (n >= 1) return {}; return "type A needs rank >= 1";
    case Family::B: if (n >= 2) return {}; return "type B needs rank >= 2";
    case Family::C: if (n >= 2) return {}; return "type C needs rank >= 2";
    case Family::D: if (n >= 3) return {}; return "type D needs rank >= 3";
    case Family::E: if (n >= 6 && n <= 8) return {}; return "type E needs rank 6, 7 or 8";
    case Family::F: if (n == 4) return {}; return "type F needs rank 4";
    case Family::G: if (n == 2) return {}; return "type G needs rank 2";
    }
    return "unknown family";
}

inline bool is_valid(RootSystemType t) { return type_diagnostic(t).empty(); }

/// Integer vector in the simple-root basis.
struct Root {
    std::vector<int> coords;

    int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }
    bool is_positive() const {
        return std::ranges::all_of(coords, [](int c) { return c >= 0; }) &&
               std::ranges::any_of(coords, [](int c) { return c != 0; });
    }
    bool is_negative() const { return (-*this).is_positive(); }
    int operator[](std::size_t i) const { return coords[i]; }

    Root operator-() const {
        Root r = *this;
        for (auto & c : r.coords) c = -c;
        return r;
    }

    friend bool operator==(Root const &, Root const &) = default;
    friend auto operator<=>(Root const &, Root const &) = default;
};

/// Vector in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
template <class Scalar>
struct BasicWeight {
    std::vector<Scalar> coords;

    std::size_t size() const { return coords.size(); }
    Scalar const & operator[](std::size_t i) const { return coords[i]; }
    Scalar & operator[](std::size_t i) { return coords[i]; }

    bool is_dominant() const {
        return std::ranges::all_of(coords, [](Scalar const & c) { return c >= 0; });
    }

    BasicWeight & operator+=(BasicWeight const & o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    BasicWeight & operator-=(BasicWeight const & o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    friend BasicWeight operator+(BasicWeight a, BasicWeight const & b) { return a += b; }
    friend BasicWeight operator-(BasicWeight a, BasicWeight const & b) { return a -= b; }
    BasicWeight operator-() const {
        BasicWeight r = *this;
        for (auto & c : r.coords) c = -c;
        return r;
    }

    friend bool operator==(BasicWeight const &, BasicWeight const &) = default;
    friend auto operator<=>(BasicWeight const & a, BasicWeight const & b) { return a.coords <=> b.coords; }
};

using Weight = BasicWeight<Rational>;
using IntegralWeight = BasicWeight<std::int64_t>;

struct IntegralWeightHash {
    std::size_t operator()(IntegralWeight const & w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto c : w.coords) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
        return h;
    }
};

inline Weight to_exact(IntegralWeight const & w) { return Weight{to_rational(w.coords)}; }

inline IntegralWeight to_integral(Weight const & w) {
    IntegralWeight r;
    r.coords.reserve(w.size());
    for (auto const & c : w.coords) r.coords.push_back(to_int64(c));
    return r;
}

template <class Scalar = Rational>
BasicWeight<Scalar> fundamental_weight(std::size_t rank, std::size_t d) {
    if (d >= rank) throw std::out_of_range("fundamental weight index out of range");
    BasicWeight<Scalar> w{std::vector<Scalar>(rank, Scalar(0))};
    w.coords[d] = Scalar(1);
    return w;
}

template <class Scalar = Rational>
BasicWeight<Scalar> rho(std::size_t rank) {
    return BasicWeight<Scalar>{std::vector<Scalar>(rank, Scalar(1))};
}

/// Standard parabolic, given by the simple roots kept in its Levi factor.
class Parabolic {
public:
    Parabolic() = default;

    /// Maximal parabolic P_d: every simple root except d is retained.
    static Parabolic maximal(std::size_t rank, std::size_t d) {
        if (d >= rank) throw std::out_of_range("parabolic index out of range");
        Parabolic p;
        p.retained_.assign(rank, true);
        p.retained_[d] = false;
        return p;
    }

    static Parabolic from_omitted(std::size_t rank, std::vector<std::size_t> const & omitted) {
        Parabolic p;
        p.retained_.assign(rank, true);
        for (auto i : omitted) {
            if (i >= rank) throw std::out_of_range("parabolic index out of range");
            p.retained_[i] = false;
        }
        return p;
    }

    std::size_t rank() const { return retained_.size(); }
    bool is_retained(std::size_t i) const { return retained_.at(i); }

    std::vector<std::size_t> retained() const { return select(true); }
    std::vector<std::size_t> omitted() const { return select(false); }

    bool is_maximal() const { return omitted().size() == 1; }

    /// True iff the root lies in the Levi, i.e. its support avoids every omitted index.
    bool contains(Root const & r) const {
        for (std::size_t i = 0; i < retained_.size(); ++i)
            if (!retained_[i] && r.coords[i] != 0) return false;
        return true;
    }

    friend bool operator==(Parabolic const &, Parabolic const &) = default;

private:
    std::vector<std::size_t> select(bool flag) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < retained_.size(); ++i)
            if (retained_[i] == flag) out.push_back(i);
        return out;
    }

    std::vector<bool> retained_;
};

namespace detail {

inline std::vector<std::vector<int>> bourbaki_cartan(RootSystemType t) {
    auto const n = t.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    auto bond = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };

    switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
        for (std::size_t i = 0; i + 1 < n; ++i) bond(i, i + 1);
        // a[i][j] = <alpha_j, alpha_i^vee>; the long root sits at the short root's row with -2.
        if (t.family == Family::B) a[n - 1][n - 2] = -2;
        if (t.family == Family::C) a[n - 2][n - 1] = -2;
        break;
    case Family::D:
        for (std::size_t i = 0; i + 2 < n; ++i) bond(i, i + 1);
        bond(n - 3, n - 1);
        break;
    case Family::E:
        bond(0, 2);
        bond(1, 3);
        bond(2, 3);
        for (std::size_t i = 3; i + 1 < n; ++i) bond(i, i + 1);
        break;
    case Family::F:
        bond(0, 1);
        bond(1, 2);
        bond(2, 3);
        a[2][1] = -2;
        break;
    case Family::G:
        a[0][1] = -3;
        a[1][0] = -1;
        break;
    }
    return a;
}

// Smallest positive integers d with diag(d)*A symmetric, found by walking the Dynkin graph.
inline std::vector<int> symmetrizers(std::vector<std::vector<int>> const & a) {
    auto const n = a.size();
    std::vector<Rational> d(n, Rational(0));
    d[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        auto i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] == 0 || d[j] != 0) continue;
            d[j] = d[i] * a[i][j] / a[j][i];
            queue.push_back(j);
        }
    }
    Rational lo = *std::ranges::min_element(d);
    std::vector<int> out;
    for (auto const & x : d) out.push_back(static_cast<int>(to_int64(x / lo)));
    return out;
}

inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<int>> const & a) {
    auto const n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw InconsistencyError("singular Cartan matrix");
        std::swap(m[piv], m[col]);
        Rational inv = 1 / m[col][col];
        for (auto & x : m[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<std::vector<Rational>> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + static_cast<std::ptrdiff_t>(n), m[i].end());
    return out;
}

} // namespace detail

/// Immutable root datum for one (family, rank).
///
/// Positive roots are sorted by height, then by coordinates in descending
/// lexicographic order, so positive_roots()[i] is the simple root alpha_i
/// for i < rank.
class RootSystem {
public:
    static RootSystem build(RootSystemType t) {
        if (auto diag = type_diagnostic(t); !diag.empty())
            throw std::invalid_argument("invalid root system " + to_string(t) + ": " + diag);
        RootSystem rs;
        rs.type_ = t;
        rs.cartan_ = detail::bourbaki_cartan(t);
        rs.sym_ = detail::symmetrizers(rs.cartan_);
        rs.inverse_cartan_ = detail::invert(rs.cartan_);
        rs.enumerate_roots();
        return rs;
    }

    RootSystemType type() const { return type_; }
    std::size_t rank() const { return type_.rank; }

    /// <alpha_j, alpha_i^vee>.
    int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
    int symmetrizer(std::size_t i) const { return sym_[i]; }
    Rational const & inverse_cartan(std::size_t i, std::size_t j) const { return inverse_cartan_[i][j]; }

    std::span<Root const> positive_roots() const { return roots_; }
    std::size_t num_positive_roots() const { return roots_.size(); }
    Root const & root(std::size_t k) const { return roots_.at(k); }
    Root simple_root(std::size_t i) const { return roots_.at(i); }

    /// Index of a positive root, or nullopt.
    std::optional<std::size_t> find(Root const & r) const {
        auto it = index_.find(r.coords);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool is_root(Root const & r) const { return find(r) || find(-r); }

    /// Coroot of positive root k in simple-coroot coordinates.
    std::span<int const> coroot(std::size_t k) const { return coroots_[k]; }
    /// Positive root k in fundamental-weight coordinates.
    std::span<int const> root_weight(std::size_t k) const { return root_weights_[k]; }
    /// (beta, beta) / 2 in the normalization where short roots have value 1.
    int half_norm(std::size_t k) const { return half_norms_[k]; }

    /// (beta, gamma) for root-basis vectors.
    std::int64_t inner_product(Root const & b, Root const & g) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j)
                s += static_cast<std::int64_t>(b.coords[i]) * g.coords[j] * sym_[i] * cartan_[i][j];
        return s;
    }

private:
    void enumerate_roots() {
        auto const n = rank();
        std::set<std::vector<int>> seen;
        std::deque<std::vector<int>> queue;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> e(n, 0);
            e[i] = 1;
            seen.insert(e);
            queue.push_back(e);
        }
        while (!queue.empty()) {
            auto b = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < n; ++i) {
                int p = 0;
                for (std::size_t j = 0; j < n; ++j) p += b[j] * cartan_[i][j];
                auto img = b;
                img[i] -= p;
                if (std::ranges::any_of(img, [](int c) { return c < 0; })) continue;
                if (seen.insert(img).second) queue.push_back(img);
            }
        }
        for (auto const & c : seen) roots_.push_back(Root{c});
        std::ranges::sort(roots_, [](Root const & x, Root const & y) {
            if (x.height() != y.height()) return x.height() < y.height();
            return x.coords > y.coords;
        });
        for (std::size_t k = 0; k < roots_.size(); ++k) {
            auto const & c = roots_[k].coords;
            index_.emplace(c, k);
            auto twice = inner_product(roots_[k], roots_[k]);
            if (twice % 2 != 0) throw InconsistencyError("odd root norm");
            auto half = static_cast<int>(twice / 2);
            std::vector<int> co(n), wt(n, 0);
            for (std::size_t j = 0; j < n; ++j) {
                if ((c[j] * sym_[j]) % half != 0) throw InconsistencyError("non-integral coroot");
                co[j] = c[j] * sym_[j] / half;
                for (std::size_t i = 0; i < n; ++i) wt[j] += cartan_[j][i] * c[i];
            }
            half_norms_.push_back(half);
            coroots_.push_back(std::move(co));
            root_weights_.push_back(std::move(wt));
        }
    }

    RootSystemType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> sym_;
    std::vector<std::vector<Rational>> inverse_cartan_;
    std::vector<Root> roots_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<std::vector<int>> coroots_;
    std::vector<std::vector<int>> root_weights_;
    std::vector<int> half_norms_;
};

inline RootSystem build(RootSystemType t) { return RootSystem::build(t); }

/// <lambda, beta_k^vee> for the k-th positive root.
template <class Scalar>
Scalar pairing(RootSystem const & rs, BasicWeight<Scalar> const & lambda, std::size_t k) {
    auto co = rs.coroot(k);
    Scalar s(0);
    for (std::size_t j = 0; j < rs.rank(); ++j)
        if (co[j] != 0) s += lambda.coords[j] * Scalar(co[j]);
    return s;
}

/// <lambda, beta^vee> = (sum_j c_j d_j lambda_j) / ((beta, beta)/2) for any root beta (positive or negative).
inline Rational pairing(RootSystem const & rs, Weight const & lambda, Root const & beta) {
    if (!rs.is_root(beta)) throw std::invalid_argument("pairing: vector is not a root");
    Rational num(0);
    for (std::size_t j = 0; j < rs.rank(); ++j) num += Rational(beta.coords[j] * rs.symmetrizer(j)) * lambda.coords[j];
    return num / Rational(rs.inner_product(beta, beta) / 2);
}

/// Express lambda as a rational combination of simple roots.
inline std::vector<Rational> to_root_basis(RootSystem const & rs, Weight const & lambda) {
    auto const n = rs.rank();
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[i] += rs.inverse_cartan(i, j) * lambda.coords[j];
    return x;
}

/// Integer root-basis coordinates of lambda; throws InconsistencyError if any coordinate is fractional.
inline std::vector<std::int64_t> to_integral_root_basis(RootSystem const & rs, Weight const & lambda) {
    std::vector<std::int64_t> out;
    for (auto const & x : to_root_basis(rs, lambda)) {
        if (!is_integral(x)) throw InconsistencyError("weight is not in the root lattice");
        out.push_back(to_int64(x));
    }
    return out;
}

inline IntegralWeight root_to_weight(RootSystem const & rs, Root const & beta) {
    IntegralWeight w{std::vector<std::int64_t>(rs.rank(), 0)};
    for (std::size_t j = 0; j < rs.rank(); ++j)
        for (std::size_t i = 0; i < rs.rank(); ++i) w.coords[j] += static_cast<std::int64_t>(rs.cartan(j, i)) * beta.coords[i];
    return w;
}

inline void check_index(RootSystem const & rs, std::size_t i) {
    if (i >= rs.rank()) throw std::out_of_range("simple reflection index " + std::to_string(i) + " out of range");
}

/// s_i(lambda)_j = lambda_j - lambda_i * A[j][i].
template <class Scalar>
BasicWeight<Scalar> simple_reflection(RootSystem const & rs, std::size_t i, BasicWeight<Scalar> lambda) {
    check_index(rs, i);
    Scalar li = lambda.coords[i];
    if (li == 0) return lambda;
    for (std::size_t j = 0; j < rs.rank(); ++j)
        if (rs.cartan(j, i) != 0) lambda.coords[j] -= li * Scalar(rs.cartan(j, i));
    return lambda;
}

inline Root simple_reflection(RootSystem const & rs, std::size_t i, Root beta) {
    check_index(rs, i);
    int p = 0;
    for (std::size_t j = 0; j < rs.rank(); ++j) p += rs.cartan(i, j) * beta.coords[j];
    beta.coords[i] -= p;
    return beta;
}

/// s_beta(lambda) = lambda - <lambda, beta^vee> beta, for the k-th positive root.
template <class Scalar>
BasicWeight<Scalar> reflect(RootSystem const & rs, std::size_t k, BasicWeight<Scalar> lambda) {
    Scalar r = pairing(rs, lambda, k);
    auto w = rs.root_weight(k);
    for (std::size_t j = 0; j < rs.rank(); ++j) lambda.coords[j] -= r * Scalar(w[j]);
    return lambda;
}

/// Number of positive roots of the Levi of P.
inline std::size_t levi_root_count(RootSystem const & rs, Parabolic const & p) {
    return static_cast<std::size_t>(std::ranges::count_if(rs.positive_roots(), [&](Root const & r) { return p.contains(r); }));
}

/// dim G/P = |R+| - |R+_P|.
inline std::size_t flag_dimension(RootSystem const & rs, Parabolic const & p) {
    return rs.num_positive_roots() - levi_root_count(rs, p);
}

} // namespace lmp
