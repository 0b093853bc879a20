// Copyright (c) 2026 The lmp-minuscule Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.

#include "lmp/lmp.hpp"

#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <regex>
#include <sstream>
#include <sys/wait.h>

using namespace lmp;

namespace {

struct Run {
    int status;
    std::string out;
};

// Runs lmpcheck with stderr discarded.
Run lmpcheck(std::string const & args) {
    std::string cmd = std::string(LMPCHECK_PATH) + " " + args + " 2>/dev/null";
    FILE * pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int st = pclose(pipe);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data_file(std::string const & name) { return std::string(LMP_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("report JSON round trip", "[report]") {
    for (auto [t, c] : std::vector<std::pair<RootSystemType, std::size_t>>{
             {{Family::E, 6}, 0}, {{Family::D, 5}, 4}, {{Family::B, 3}, 2}, {{Family::C, 3}, 0}, {{Family::G, 2}, 0}}) {
        INFO(config_name(t, c));
        auto rep = verify(t, c, {.relaxed_edges = true, .witnesses = true});
        json j = rep;
        CHECK(j.at("config").at("parabolic") == c + 1);
        CHECK(j.get<VerificationReport>() == rep);
        CHECK(json::parse(j.dump()).get<VerificationReport>() == rep);
    }
}

TEST_CASE("optional fields are omitted or null", "[report]") {
    auto rep = verify({Family::A, 3}, 1);
    json j = rep;
    for (auto const & row : j.at("rows")) {
        CHECK_FALSE(row.contains("m_relaxed"));
        CHECK_FALSE(row.contains("witnesses"));
        CHECK(row.at("certificate_source") == "embedded");
        CHECK(row.at("d").get<int>() >= 1);
    }
    auto g2 = verify({Family::G, 2}, 0);
    json jg = g2;
    // no explicit data outside the covered families; the search fills in
    CHECK(jg.at("rows").at(0).at("certificate_source") == "search");
    CHECK(jg.at("rows").at(0).at("c_alpha").is_null());
    CHECK_FALSE(g2.minuscule);
}

TEST_CASE("suite JSON round trip", "[report]") {
    auto suite = verify_suite(4);
    json j = suite;
    CHECK(j.at("ok") == suite.ok());
    auto back = j.get<SuiteReport>();
    CHECK(back.max_rank == suite.max_rank);
    CHECK(back.reports == suite.reports);
    REQUIRE(back.checks.size() == suite.checks.size());
    for (std::size_t k = 0; k < back.checks.size(); ++k) {
        CHECK(back.checks[k].name == suite.checks[k].name);
        CHECK(back.checks[k].passed == suite.checks[k].passed);
    }
}

TEST_CASE("certificate JSON round trip and validation", "[report]") {
    auto e6 = build({Family::E, 6});
    auto cert = *embedded_certificate(e6, 0, 1);
    json j = cert;
    CHECK(j.at("parabolic_omitted_index") == 1);
    CHECK(j.at("d") == 2);
    auto back = j.get<Certificate>();
    CHECK(back.system == cert.system);
    CHECK(back.entries == cert.entries);

    json no_mult = json::parse(R"({"family":"A","rank":2,"parabolic_omitted_index":1,"d":1,"entries":[{"root_coords":[1,1]}]})");
    CHECK(no_mult.get<Certificate>().entries.at(0).multiplicity == 1);
    json zero = json::parse(R"({"family":"A","rank":2,"parabolic_omitted_index":0,"d":1,"entries":[]})");
    CHECK_THROWS_AS(zero.get<Certificate>(), std::invalid_argument);
}

TEST_CASE("markdown and JSON carry the same numbers", "[report]") {
    for (auto [t, c] : std::vector<std::pair<RootSystemType, std::size_t>>{{{Family::E, 7}, 6}, {{Family::D, 6}, 5}, {{Family::B, 4}, 3}}) {
        auto rep = verify(t, c, {.relaxed_edges = true});
        std::ostringstream md;
        write_markdown(md, rep);
        std::regex row_re(R"(^\| (\d+) \| ([0-9,]+) \| (\d+) \| (\d+|-) \| (\d+|-) \| (\d+|-) \| (\w+) \| (yes|no|-) \| (yes|no) \| (\d+|-) \|$)");
        std::istringstream in(md.str());
        std::string line;
        std::size_t seen = 0;
        json j = rep;
        auto num = [](json const & v) { return v.is_null() ? std::string("-") : std::to_string(v.get<std::int64_t>()); };
        while (std::getline(in, line)) {
            std::smatch m;
            if (!std::regex_match(line, m, row_re)) continue;
            auto const & row = j.at("rows").at(seen++);
            INFO(line);
            CHECK(std::stoi(m[1]) == row.at("d").get<int>());
            std::string target;
            for (auto const & x : row.at("target_root_coords")) target += (target.empty() ? "" : ",") + std::to_string(x.get<int>());
            CHECK(m[2] == target);
            CHECK(m[3] == num(row.at("m_dijkstra")));
            CHECK(m[4] == num(row.at("m_lattice_lb")));
            CHECK(m[5] == num(row.at("c_alpha")));
            CHECK(m[6] == num(row.at("certificate_cost")));
            CHECK(m[7] == row.at("certificate_source").get<std::string>());
            CHECK((m[9] == "yes") == row.at("agreed").get<bool>());
            CHECK(m[10] == num(row.at("m_relaxed")));
        }
        CHECK(seen == rep.rows.size());
        CHECK(md.str().find("- sum m_d: " + std::to_string(rep.sum_m)) != std::string::npos);
        CHECK(md.str().find("- dim G/P: " + std::to_string(rep.dim_gp)) != std::string::npos);
    }
}

TEST_CASE("lmpcheck verbs and exit codes", "[cli]") {
    auto list = lmpcheck("list-minuscule --family D --rank 5 --format json");
    CHECK(list.status == 0);
    CHECK(json::parse(list.out).at("minuscule") == json::array({1, 4, 5}));
    CHECK(json::parse(lmpcheck("list-minuscule --family E --rank 8 --format json").out).at("minuscule").empty());

    auto e6 = lmpcheck("verify --family E --rank 6 --parabolic 1 --format json --expect-minuscule");
    CHECK(e6.status == 0);
    auto rep = json::parse(e6.out).get<VerificationReport>();
    CHECK(rep.m_values() == std::vector<std::int64_t>{2, 2, 3, 4, 3, 2});
    CHECK(rep.dim_gp == 16);

    auto md = lmpcheck("--format markdown verify --family A --rank 3 --parabolic 2 --witnesses");
    CHECK(md.status == 0);
    CHECK(md.out.find("## A3 / P_2") != std::string::npos);
    CHECK(md.out.find("Witnesses:") != std::string::npos);

    CHECK(lmpcheck("verify --family C --rank 3 --parabolic 1 --expect-minuscule").status == 1);
    CHECK(lmpcheck("verify --family C --rank 3 --parabolic 1").status == 0);
    CHECK(lmpcheck("verify --family E --rank 5 --parabolic 1").status == 2);
    CHECK(lmpcheck("verify --family A --rank 3 --parabolic 4").status == 2);
    CHECK(lmpcheck("verify --family Q --rank 3 --parabolic 1").status == 2);
    CHECK(lmpcheck("verify --family A --rank 3").status == 2);
    CHECK(lmpcheck("verify --family A --rank 3 --parabolic 1 --format yaml").status == 2);
    CHECK(lmpcheck("frobnicate").status == 2);
    CHECK(lmpcheck("verify-all --max-rank 13").status == 2);

    auto tau = json::parse(lmpcheck("tau --family E --rank 7 --parabolic 7 --format json").out);
    CHECK(tau.at("simple_root_images").at(6) == json::array({2, 2, 3, 4, 3, 2, 1}));
    CHECK(tau.at("length") == 36);
}

TEST_CASE("lmpcheck check-cert on sample files", "[cli]") {
    for (auto name : {"e6_p1_d2.json", "e7_p7_d4.json", "d6_p1_d3.json", "c4_p4_d3.json"}) {
        INFO(name);
        auto r = lmpcheck("check-cert --format json " + data_file(name));
        CHECK(r.status == 0);
        CHECK(json::parse(r.out).at("ok") == true);
    }
    auto bad = json::parse(lmpcheck("check-cert --format json " + data_file("e6_p1_d2_perturbed.json")).out);
    CHECK(bad.at("a_sum") == false);
    CHECK(bad.at("ok") == false);
    auto overlap = lmpcheck("check-cert --format json " + data_file("e6_p1_d4.json"));
    CHECK(overlap.status == 1);
    auto o = json::parse(overlap.out);
    CHECK(o.at("a_sum") == true);
    CHECK(o.at("b_orthogonal") == false);
    CHECK(lmpcheck("check-cert /nonexistent.json").status == 2);
    CHECK(lmpcheck("check-cert " + std::string(LMP_DATA_DIR)).status == 2);
}
