// Copyright (c) 2026 The lmp-minuscule Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.

// lmpcheck: command-line front end for the verification pipeline.
//
// Exit status: 0 success, 1 a verification failed, 2 usage error,
// 3 internal inconsistency.

#include "lmp/lmp.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;
constexpr std::size_t rank_ceiling = 12;

struct Config {
    std::string family;
    std::size_t rank = 0;
    std::size_t parabolic = 0;  // 1-based on the command line
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

lmp::RootSystemType system_type(Config const & c) {
    lmp::RootSystemType t;
    try {
        t = {lmp::parse_family(c.family), c.rank};
    } catch (std::invalid_argument const & e) {
        throw UsageError(e.what());
    }
    if (auto diag = lmp::type_diagnostic(t); !diag.empty()) throw UsageError(diag);
    return t;
}

std::size_t omitted_index(Config const & c) {
    if (c.parabolic < 1 || c.parabolic > c.rank)
        throw UsageError("--parabolic must lie in 1.." + std::to_string(c.rank));
    return c.parabolic - 1;
}

void add_system_options(CLI::App & cmd, Config & cfg, bool with_parabolic) {
    cmd.add_option("--family", cfg.family, "Root system family, A-G")->required();
    cmd.add_option("--rank", cfg.rank, "Rank")->required();
    if (with_parabolic) cmd.add_option("--parabolic", cfg.parabolic, "Omitted simple root of the maximal parabolic (1-based)")->required();
}

std::string word_text(lmp::WeylWord const & w) {
    if (w.letters.empty()) return "e";
    std::string s;
    for (auto i : w.letters) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
    return s;
}

int run_list_minuscule(Config const & cfg, std::string const & format) {
    auto t = system_type(cfg);
    auto idx = lmp::list_minuscule(t);
    for (auto & i : idx) ++i;
    if (format == "json") {
        std::cout << lmp::json{{"family", std::string(1, lmp::to_char(t.family))}, {"rank", t.rank}, {"minuscule", idx}}.dump(2) << "\n";
    } else {
        std::cout << "## Minuscule fundamental weights of " << lmp::to_string(t) << "\n\n";
        if (idx.empty()) std::cout << "none\n";
        for (auto i : idx) std::cout << "- omega_" << i << "\n";
    }
    return 0;
}

int run_verify(Config const & cfg, std::string const & format, lmp::VerifyOptions const & opts, bool expect_minuscule) {
    auto t = system_type(cfg);
    auto rep = lmp::verify(t, omitted_index(cfg), opts);
    if (format == "json")
        std::cout << lmp::json(rep).dump(2) << "\n";
    else
        lmp::write_markdown(std::cout, rep);
    if (!expect_minuscule) return 0;
    if (!rep.minuscule) {
        std::cerr << lmp::config_name(t, rep.parabolic) << " is not minuscule\n";
        return exit_failed;
    }
    if (!rep.lmp_identity) {
        std::cerr << lmp::config_name(t, rep.parabolic) << ": sum m_d = " << rep.sum_m << " but dim G/P = " << rep.dim_gp << "\n";
        return exit_failed;
    }
    return 0;
}

int run_verify_all(std::size_t max_rank, std::string const & format, lmp::VerifyOptions const & opts) {
    if (max_rank < 1 || max_rank > rank_ceiling)
        throw UsageError("--max-rank must lie in 1.." + std::to_string(rank_ceiling));
    auto suite = lmp::verify_suite(max_rank, opts);
    if (format == "json")
        std::cout << lmp::json(suite).dump(2) << "\n";
    else
        lmp::write_markdown(std::cout, suite);
    auto failures = suite.failures();
    for (auto const & f : failures) std::cerr << "FAILED " << f.name << ": " << f.detail << "\n";
    return failures.empty() ? 0 : exit_failed;
}

int run_tau(Config const & cfg, std::string const & format) {
    auto t = system_type(cfg);
    auto rs = lmp::build(t);
    auto p = lmp::Parabolic::maximal(rs.rank(), omitted_index(cfg));
    auto tau = lmp::parabolic_longest_element(rs, p);
    std::vector<std::vector<int>> images;
    for (std::size_t i = 0; i < rs.rank(); ++i) images.push_back(lmp::apply(rs, tau, rs.simple_root(i)).coords);
    if (format == "json") {
        std::vector<std::size_t> letters;
        for (auto i : tau.letters) letters.push_back(i + 1);
        std::cout << lmp::json{{"family", std::string(1, lmp::to_char(t.family))},
                               {"rank", t.rank},
                               {"parabolic", cfg.parabolic},
                               {"word", letters},
                               {"length", tau.length()},
                               {"simple_root_images", images}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "## tau for " << lmp::config_name(t, p.omitted().front()) << "\n\n";
        std::cout << "- length: " << tau.length() << "\n- word: " << word_text(tau) << "\n\n";
        std::cout << "| i | tau(alpha_i) |\n|---|---|\n";
        for (std::size_t i = 0; i < images.size(); ++i) {
            std::cout << "| " << i + 1 << " |";
            for (auto c : images[i]) std::cout << " " << c;
            std::cout << " |\n";
        }
    }
    return 0;
}

int run_check_cert(std::string const & path, std::string const & format) {
    std::ifstream in(path);
    if (!std::filesystem::is_regular_file(path) || !in) throw UsageError("cannot open certificate file " + path);
    lmp::Certificate cert;
    try {
        cert = lmp::json::parse(in).get<lmp::Certificate>();
    } catch (lmp::json::exception const & e) {
        throw UsageError(std::string("malformed certificate file: ") + e.what());
    } catch (std::invalid_argument const & e) {
        throw UsageError(std::string("malformed certificate file: ") + e.what());
    }
    if (auto diag = lmp::type_diagnostic(cert.system); !diag.empty()) throw UsageError(diag);
    auto rs = lmp::build(cert.system);
    if (cert.parabolic >= rs.rank() || cert.d >= rs.rank()) throw UsageError("certificate index out of range");
    for (auto const & e : cert.entries)
        if (e.root.coords.size() != rs.rank()) throw UsageError("certificate root has wrong length");
    auto check = lmp::check_certificate(rs, cert);
    if (format == "json") {
        std::cout << lmp::json{{"certificate", cert},
                               {"cost", check.cost},
                               {"precondition", check.admissible},
                               {"a_sum", check.sum_matches},
                               {"b_orthogonal", check.orthogonal},
                               {"c_ladder", check.ladder},
                               {"d_minimal", check.minimal},
                               {"ok", check.ok()},
                               {"failures", check.failures}}
                         .dump(2)
                  << "\n";
    } else {
        auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
        std::cout << "## Certificate for " << lmp::config_name(cert.system, cert.parabolic) << ", d = " << cert.d + 1 << "\n\n";
        std::cout << "- cost: " << check.cost << "\n- precondition: " << mark(check.admissible) << "\n- (a) sum: " << mark(check.sum_matches)
                  << "\n- (b) orthogonal: " << mark(check.orthogonal) << "\n- (c) ladder: " << mark(check.ladder)
                  << "\n- (d) minimal: " << mark(check.minimal) << "\n";
    }
    for (auto const & f : check.failures) std::cerr << f << "\n";
    return check.ok() ? 0 : exit_failed;
}

} // namespace

int main(int argc, char ** argv) {
    CLI::App app{"Orders of vanishing of extremal sections on minuscule G/P"};
    app.require_subcommand(1);

    std::string format = "markdown";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "markdown"}));

    Config cfg;
    lmp::VerifyOptions opts;
    bool expect_minuscule = false;
    std::size_t max_rank = rank_ceiling;
    std::string cert_path;

    auto * list = app.add_subcommand("list-minuscule", "Indices d whose omega_d is minuscule");
    add_system_options(*list, cfg, false);

    auto * verify = app.add_subcommand("verify", "All routes to m_d for one G/P");
    add_system_options(*verify, cfg, true);
    verify->add_flag("--relaxed-edges", opts.relaxed_edges, "Also report Dijkstra over all positive roots");
    verify->add_flag("--witnesses", opts.witnesses, "Echo the extremal path and certificate for each d");
    verify->add_flag("--expect-minuscule", expect_minuscule, "Exit nonzero unless P is minuscule and sum m_d = dim G/P");

    auto * all = app.add_subcommand("verify-all", "Every covered minuscule G/P up to a rank");
    all->add_option("--max-rank", max_rank, "Largest rank for the parametric families");
    all->add_flag("--relaxed-edges", opts.relaxed_edges, "Also report Dijkstra over all positive roots");

    auto * tau = app.add_subcommand("tau", "Longest element of W_P and its action on simple roots");
    add_system_options(*tau, cfg, true);

    auto * check = app.add_subcommand("check-cert", "Validate a certificate file");
    check->add_option("file", cert_path, "Certificate JSON file")->required();

    for (auto * sub : {list, verify, all, tau, check})
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "markdown"}));

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (list->parsed()) return run_list_minuscule(cfg, format);
        if (verify->parsed()) return run_verify(cfg, format, opts, expect_minuscule);
        if (all->parsed()) return run_verify_all(max_rank, format, opts);
        if (tau->parsed()) return run_tau(cfg, format);
        if (check->parsed()) return run_check_cert(cert_path, format);
    } catch (UsageError const & e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (lmp::InconsistencyError const & e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return exit_internal;
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}
