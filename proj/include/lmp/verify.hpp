// Copyright (c) 2026 The lmp-minuscule Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

// Batch verification of sum_d m_d = dim G/P and the report formats.
//
// JSON field names are the stable machine interface. All indices in JSON,
// markdown and certificate files are 1-based Bourbaki labels.

#include "lmp/certificates.hpp"
#include "lmp/rootsys.hpp"
#include "lmp/vanishing.hpp"
#include "lmp/weyl.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace lmp {

/// Indices d whose fundamental weight is minuscule: <omega_d, beta^vee> <= 1 for every positive beta.
inline std::vector<std::size_t> list_minuscule(RootSystem const & rs) {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < rs.rank(); ++d) {
        bool ok = true;
        for (std::size_t k = 0; k < rs.num_positive_roots() && ok; ++k) ok = rs.coroot(k)[d] <= 1;
        if (ok) out.push_back(d);
    }
    return out;
}

inline std::vector<std::size_t> list_minuscule(RootSystemType t) { return list_minuscule(build(t)); }

struct VerifyOptions {
    bool relaxed_edges = false;  // also report Dijkstra over all of R+
    bool witnesses = false;      // echo the extremal path and certificate in each row
};

struct WitnessStep {
    std::vector<int> root_coords;
    std::int64_t multiplicity = 0;
    friend bool operator==(WitnessStep const &, WitnessStep const &) = default;
};

struct ReportRow {
    VanishingResult result;
    std::vector<std::int64_t> target_root_coords;
    std::string certificate_source = "none";  // "embedded", "search" or "none"
    std::optional<bool> certificate_valid;
    std::vector<std::string> certificate_failures;
    std::vector<std::string> embedded_failures;  // clause failures of the embedded data, if any
    std::vector<WitnessStep> path;         // filled when witnesses are requested
    std::vector<WitnessStep> certificate;  // filled when witnesses are requested

    friend bool operator==(ReportRow const &, ReportRow const &) = default;
};

struct VerificationReport {
    RootSystemType type;
    std::size_t parabolic = 0;  // 0-based omitted index
    bool minuscule = false;
    std::vector<ReportRow> rows;
    std::int64_t sum_m = 0;
    std::int64_t dim_gp = 0;
    bool lmp_identity = false;

    bool all_agreed() const {
        return std::ranges::all_of(rows, [](ReportRow const & r) { return r.result.agreed; });
    }
    std::vector<std::int64_t> m_values() const {
        std::vector<std::int64_t> m;
        for (auto const & r : rows) m.push_back(r.result.m_dijkstra);
        return m;
    }
    friend bool operator==(VerificationReport const &, VerificationReport const &) = default;
};

inline std::string config_name(RootSystemType t, std::size_t parabolic) {
    return to_string(t) + "/P" + std::to_string(parabolic + 1);
}

inline std::vector<WitnessStep> to_witness(RootSystem const & rs, std::vector<PathStep> const & steps) {
    std::vector<WitnessStep> out;
    for (auto const & s : steps) out.push_back({rs.root(s.root).coords, s.multiplicity});
    return out;
}

inline std::vector<WitnessStep> to_witness(Certificate const & c) {
    std::vector<WitnessStep> out;
    for (auto const & e : c.entries) out.push_back({e.root.coords, e.multiplicity});
    return out;
}

/// All routes for one d of one (G, P_parabolic).
inline ReportRow verify_row(RootSystem const & rs, std::size_t parabolic, std::size_t d, VerifyOptions const & opts = {}) {
    auto const p = Parabolic::maximal(rs.rank(), parabolic);
    ReportRow row;
    auto & res = row.result;
    res.d = d;
    row.target_root_coords = target_weight(rs, p, d).root_coords;

    auto path = shortest_extremal_path(rs, p, d);
    res.m_dijkstra = path.cost;
    res.m_lattice_lb = lattice_lower_bound(rs, p, d);
    res.c_alpha = coefficient_lower_bound(rs, p, d);
    if (opts.relaxed_edges) res.m_relaxed = dijkstra_order(rs, p, d, EdgeSet::all_positive);

    // Embedded data first; if it is absent or fails a clause, the cheapest valid orthogonal certificate.
    CertificateBounds const bounds{res.c_alpha, res.m_dijkstra};
    auto cert = embedded_certificate(rs, parabolic, d);
    if (cert) {
        row.certificate_source = "embedded";
        row.embedded_failures = check_certificate(rs, *cert, bounds).failures;
    }
    if (!cert || !row.embedded_failures.empty()) {
        auto const cap = std::accumulate(row.target_root_coords.begin(), row.target_root_coords.end(), std::int64_t{0});
        for (auto budget = res.m_dijkstra; budget <= cap; ++budget) {
            if (auto found = search_certificate(rs, parabolic, d, budget)) {
                cert = std::move(found);
                row.certificate_source = "search";
                break;
            }
        }
    }
    if (cert) {
        auto check = check_certificate(rs, *cert, bounds);
        res.certificate_cost = check.cost;
        row.certificate_valid = check.ok();
        row.certificate_failures = check.failures;
        if (opts.witnesses) row.certificate = to_witness(*cert);
    }
    if (opts.witnesses) row.path = to_witness(rs, path.steps);
    res.agreed = routes_agree(res) && row.certificate_valid.value_or(true);
    return row;
}

inline VerificationReport verify(RootSystemType t, std::size_t parabolic, VerifyOptions const & opts = {}) {
    auto const rs = build(t);
    check_index(rs, parabolic);
    auto const p = Parabolic::maximal(rs.rank(), parabolic);
    VerificationReport rep;
    rep.type = t;
    rep.parabolic = parabolic;
    rep.minuscule = std::ranges::count(list_minuscule(rs), parabolic) > 0;
    rep.dim_gp = static_cast<std::int64_t>(flag_dimension(rs, p));
    for (std::size_t d = 0; d < rs.rank(); ++d) {
        rep.rows.push_back(verify_row(rs, parabolic, d, opts));
        rep.sum_m += rep.rows.back().result.m_dijkstra;
    }
    rep.lmp_identity = rep.sum_m == rep.dim_gp;
    return rep;
}

// ---------------------------------------------------------------------------
// Suite

struct SuiteCheck {
    std::string name;
    bool passed = false;
    std::string detail;
    friend bool operator==(SuiteCheck const &, SuiteCheck const &) = default;
};

struct SuiteReport {
    std::size_t max_rank = 0;
    std::vector<VerificationReport> reports;
    std::vector<SuiteCheck> checks;

    bool ok() const {
        return std::ranges::all_of(checks, [](SuiteCheck const & c) { return c.passed; });
    }
    std::vector<SuiteCheck> failures() const {
        std::vector<SuiteCheck> out;
        for (auto const & c : checks)
            if (!c.passed) out.push_back(c);
        return out;
    }
    friend bool operator==(SuiteReport const &, SuiteReport const &) = default;
};

/// Configurations covered by the case analysis, up to max_rank.
inline std::vector<std::pair<RootSystemType, std::size_t>> suite_configurations(std::size_t max_rank) {
    std::vector<std::pair<RootSystemType, std::size_t>> out;
    for (std::size_t n = 1; n <= max_rank; ++n)
        for (std::size_t c = 0; c < n; ++c) out.push_back({{Family::A, n}, c});
    for (std::size_t n = 2; n <= max_rank; ++n) out.push_back({{Family::B, n}, n - 1});
    for (std::size_t n = 2; n <= max_rank; ++n) out.push_back({{Family::C, n}, n - 1});
    for (std::size_t n = 4; n <= max_rank; ++n) {
        out.push_back({{Family::D, n}, 0});
        out.push_back({{Family::D, n}, n - 2});
        out.push_back({{Family::D, n}, n - 1});
    }
    if (max_rank >= 6) {
        out.push_back({{Family::E, 6}, 0});
        out.push_back({{Family::E, 6}, 5});
    }
    if (max_rank >= 7) out.push_back({{Family::E, 7}, 6});
    return out;
}

/// Closed-form dim G/P for the covered configurations; nullopt elsewhere.
inline std::optional<std::int64_t> expected_sum(RootSystemType t, std::size_t parabolic) {
    auto const n = static_cast<std::int64_t>(t.rank);
    auto const c = static_cast<std::int64_t>(parabolic) + 1;
    switch (t.family) {
    case Family::A: return c * (n + 1 - c);
    case Family::B: if (c == n) return n * (n + 1) / 2; break;
    case Family::C: if (c == n) return n * (n + 1) / 2; break;
    case Family::D:
        if (c == 1) return 2 * n - 2;
        if (c >= n - 1) return n * (n - 1) / 2;
        break;
    case Family::E:
        if (n == 6 && (c == 1 || c == 6)) return 16;
        if (n == 7 && c == 7) return 27;
        break;
    default: break;
    }
    return std::nullopt;
}

namespace detail {
inline std::string join(std::vector<std::int64_t> const & v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}
} // namespace detail

/// B_n/P_n against D_{n+1}/P_{n+1}: m_d agree for d < n, and the B spin node carries m_n + m_{n+1} of D.
inline SuiteCheck spin_cross_check(VerificationReport const & b, VerificationReport const & d) {
    auto const n = b.type.rank;
    auto mb = b.m_values();
    auto md = d.m_values();
    std::vector<std::int64_t> folded(md.begin(), md.begin() + static_cast<std::ptrdiff_t>(n - 1));
    folded.push_back(md[n - 1] + md[n]);
    SuiteCheck c{"spin cross-check " + config_name(b.type, b.parabolic) + " ~ " + config_name(d.type, d.parabolic), false, {}};
    c.passed = mb == folded && b.sum_m == d.sum_m;
    c.detail = "B m = (" + detail::join(mb) + "), D folded m = (" + detail::join(folded) + "), sums " +
               std::to_string(b.sum_m) + " vs " + std::to_string(d.sum_m);
    return c;
}

inline SuiteReport verify_suite(std::size_t max_rank, VerifyOptions const & opts = {}) {
    if (max_rank < 1) throw std::invalid_argument("max rank must be at least 1");
    SuiteReport suite;
    suite.max_rank = max_rank;
    for (auto [t, c] : suite_configurations(max_rank)) {
        auto rep = verify(t, c, opts);
        auto name = config_name(t, c);
        suite.checks.push_back({"identity " + name, rep.lmp_identity,
                                "sum m_d = " + std::to_string(rep.sum_m) + ", dim G/P = " + std::to_string(rep.dim_gp)});
        if (auto e = expected_sum(t, c))
            suite.checks.push_back({"closed form " + name, rep.dim_gp == *e, "dim G/P = " + std::to_string(rep.dim_gp) + ", formula " + std::to_string(*e)});
        suite.checks.push_back({"routes agree " + name, rep.all_agreed(), "m = (" + detail::join(rep.m_values()) + ")"});
        if (t.family == Family::D && c + 2 >= t.rank) {
            auto m = rep.m_values();
            auto const n = static_cast<std::int64_t>(t.rank);
            suite.checks.push_back({"half-spin split " + name, m[t.rank - 2] + m[t.rank - 1] == n - 1,
                                    "m_{n-1} + m_n = " + std::to_string(m[t.rank - 2] + m[t.rank - 1])});
        }
        suite.reports.push_back(std::move(rep));
    }
    for (std::size_t n = 2; n <= max_rank; ++n) {
        auto const & b = *std::ranges::find_if(suite.reports, [&](VerificationReport const & r) {
            return r.type == RootSystemType{Family::B, n};
        });
        suite.checks.push_back(spin_cross_check(b, verify({Family::D, n + 1}, n, opts)));
    }
    return suite;
}

// ---------------------------------------------------------------------------
// JSON

using nlohmann::json;

inline json opt_to_json(std::optional<std::int64_t> const & v) { return v ? json(*v) : json(nullptr); }
inline std::optional<std::int64_t> opt_from_json(json const & j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::int64_t>();
}

inline void to_json(json & j, WitnessStep const & s) { j = json{{"root_coords", s.root_coords}, {"multiplicity", s.multiplicity}}; }
inline void from_json(json const & j, WitnessStep & s) {
    j.at("root_coords").get_to(s.root_coords);
    j.at("multiplicity").get_to(s.multiplicity);
}

inline void to_json(json & j, ReportRow const & r) {
    auto const & v = r.result;
    j = json{
        {"d", v.d + 1},
        {"target_root_coords", r.target_root_coords},
        {"m_dijkstra", v.m_dijkstra},
        {"m_lattice_lb", opt_to_json(v.m_lattice_lb)},
        {"c_alpha", opt_to_json(v.c_alpha)},
        {"certificate_cost", opt_to_json(v.certificate_cost)},
        {"certificate_source", r.certificate_source},
        {"certificate_valid", r.certificate_valid ? json(*r.certificate_valid) : json(nullptr)},
        {"certificate_failures", r.certificate_failures},
        {"embedded_certificate_failures", r.embedded_failures},
        {"agreed", v.agreed},
    };
    if (v.m_relaxed) j["m_relaxed"] = *v.m_relaxed;
    if (!r.path.empty() || !r.certificate.empty()) j["witnesses"] = json{{"path", r.path}, {"certificate", r.certificate}};
}

inline void from_json(json const & j, ReportRow & r) {
    auto & v = r.result;
    v.d = j.at("d").get<std::size_t>() - 1;
    j.at("target_root_coords").get_to(r.target_root_coords);
    v.m_dijkstra = j.at("m_dijkstra").get<std::int64_t>();
    v.m_lattice_lb = opt_from_json(j.at("m_lattice_lb"));
    v.c_alpha = opt_from_json(j.at("c_alpha"));
    v.certificate_cost = opt_from_json(j.at("certificate_cost"));
    v.m_relaxed = j.contains("m_relaxed") ? opt_from_json(j.at("m_relaxed")) : std::nullopt;
    j.at("certificate_source").get_to(r.certificate_source);
    r.certificate_valid = j.at("certificate_valid").is_null() ? std::nullopt : std::optional<bool>(j.at("certificate_valid").get<bool>());
    j.at("certificate_failures").get_to(r.certificate_failures);
    j.at("embedded_certificate_failures").get_to(r.embedded_failures);
    v.agreed = j.at("agreed").get<bool>();
    if (j.contains("witnesses")) {
        j.at("witnesses").at("path").get_to(r.path);
        j.at("witnesses").at("certificate").get_to(r.certificate);
    }
}

inline void to_json(json & j, VerificationReport const & r) {
    j = json{
        {"config", {{"family", std::string(1, to_char(r.type.family))}, {"rank", r.type.rank}, {"parabolic", r.parabolic + 1}}},
        {"minuscule", r.minuscule},
        {"rows", r.rows},
        {"sum_m", r.sum_m},
        {"dim_gp", r.dim_gp},
        {"lmp_identity", r.lmp_identity},
    };
}

inline void from_json(json const & j, VerificationReport & r) {
    auto const & cfg = j.at("config");
    r.type = {parse_family(cfg.at("family").get<std::string>()), cfg.at("rank").get<std::size_t>()};
    r.parabolic = cfg.at("parabolic").get<std::size_t>() - 1;
    j.at("minuscule").get_to(r.minuscule);
    j.at("rows").get_to(r.rows);
    j.at("sum_m").get_to(r.sum_m);
    j.at("dim_gp").get_to(r.dim_gp);
    j.at("lmp_identity").get_to(r.lmp_identity);
}

inline void to_json(json & j, SuiteCheck const & c) { j = json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }
inline void from_json(json const & j, SuiteCheck & c) {
    j.at("name").get_to(c.name);
    j.at("passed").get_to(c.passed);
    j.at("detail").get_to(c.detail);
}

inline void to_json(json & j, SuiteReport const & s) {
    j = json{{"max_rank", s.max_rank}, {"ok", s.ok()}, {"reports", s.reports}, {"checks", s.checks}};
}
inline void from_json(json const & j, SuiteReport & s) {
    j.at("max_rank").get_to(s.max_rank);
    j.at("reports").get_to(s.reports);
    j.at("checks").get_to(s.checks);
}

/// Certificate file: {family, rank, parabolic_omitted_index, d, entries: [{root_coords, multiplicity}]}.
inline void to_json(json & j, Certificate const & c) {
    json entries = json::array();
    for (auto const & e : c.entries) entries.push_back({{"root_coords", e.root.coords}, {"multiplicity", e.multiplicity}});
    j = json{{"family", std::string(1, to_char(c.system.family))},
             {"rank", c.system.rank},
             {"parabolic_omitted_index", c.parabolic + 1},
             {"d", c.d + 1},
             {"entries", entries}};
}

inline void from_json(json const & j, Certificate & c) {
    c.system = {parse_family(j.at("family").get<std::string>()), j.at("rank").get<std::size_t>()};
    auto p = j.at("parabolic_omitted_index").get<std::int64_t>();
    auto d = j.at("d").get<std::int64_t>();
    if (p < 1 || d < 1) throw std::invalid_argument("certificate indices are 1-based");
    c.parabolic = static_cast<std::size_t>(p - 1);
    c.d = static_cast<std::size_t>(d - 1);
    c.entries.clear();
    for (auto const & e : j.at("entries")) {
        CertificateEntry entry;
        e.at("root_coords").get_to(entry.root.coords);
        entry.multiplicity = e.value("multiplicity", std::int64_t{1});
        c.entries.push_back(std::move(entry));
    }
}

// ---------------------------------------------------------------------------
// Markdown

namespace detail {
inline std::string cell(std::optional<std::int64_t> const & v) { return v ? std::to_string(*v) : "-"; }

inline std::string coords_text(std::vector<int> const & c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    return os.str();
}
} // namespace detail

inline void write_markdown(std::ostream & os, VerificationReport const & r) {
    os << "## " << to_string(r.type) << " / P_" << r.parabolic + 1 << "\n\n";
    os << "- minuscule: " << (r.minuscule ? "yes" : "no") << "\n";
    os << "- dim G/P: " << r.dim_gp << "\n";
    os << "- sum m_d: " << r.sum_m << "\n";
    os << "- identity: " << (r.lmp_identity ? "holds" : "fails") << "\n\n";
    bool relaxed = std::ranges::any_of(r.rows, [](ReportRow const & w) { return w.result.m_relaxed.has_value(); });
    os << "| d | target | m_d | lattice | c_alpha | certificate | source | valid | agreed |" << (relaxed ? " relaxed |" : "") << "\n";
    os << "|---|---|---|---|---|---|---|---|---|" << (relaxed ? "---|" : "") << "\n";
    for (auto const & w : r.rows) {
        auto const & v = w.result;
        os << "| " << v.d + 1 << " | " << detail::join(w.target_root_coords) << " | " << v.m_dijkstra << " | "
           << detail::cell(v.m_lattice_lb) << " | " << detail::cell(v.c_alpha) << " | " << detail::cell(v.certificate_cost)
           << " | " << w.certificate_source << " | "
           << (w.certificate_valid ? (*w.certificate_valid ? "yes" : "no") : "-") << " | " << (v.agreed ? "yes" : "no") << " |";
        if (relaxed) os << " " << detail::cell(v.m_relaxed) << " |";
        os << "\n";
    }
    bool any_witness = std::ranges::any_of(r.rows, [](ReportRow const & w) { return !w.path.empty(); });
    if (any_witness) {
        os << "\nWitnesses:\n\n";
        for (auto const & w : r.rows) {
            os << "- d = " << w.result.d + 1 << ": path";
            for (auto const & s : w.path) os << " [" << detail::coords_text(s.root_coords) << "]^" << s.multiplicity;
            if (!w.certificate.empty()) {
                os << "; certificate";
                for (auto const & s : w.certificate) os << " [" << detail::coords_text(s.root_coords) << "]^" << s.multiplicity;
            }
            os << "\n";
        }
    }
    for (auto const & w : r.rows) {
        for (auto const & f : w.embedded_failures) os << "\n> d = " << w.result.d + 1 << ", embedded data: " << f;
        for (auto const & f : w.certificate_failures) os << "\n> d = " << w.result.d + 1 << ": " << f;
    }
    os << "\n";
}

inline void write_markdown(std::ostream & os, SuiteReport const & s) {
    os << "# Verification suite (max rank " << s.max_rank << ")\n\n";
    for (auto const & r : s.reports) write_markdown(os, r);
    os << "## Checks\n\n| check | passed | detail |\n|---|---|---|\n";
    for (auto const & c : s.checks) os << "| " << c.name << " | " << (c.passed ? "yes" : "no") << " | " << c.detail << " |\n";
    os << "\n" << (s.ok() ? "All checks passed." : "Some checks FAILED.") << "\n";
}

} // namespace lmp
