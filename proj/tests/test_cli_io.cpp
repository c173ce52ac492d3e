#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cuelab/report.hpp"

using namespace cuelab;

static Report exact_sample() {
    Report r;
    r.functional = "exact.ks";
    r.parameters = {{"N", "2"}, {"k", "2"}};
    r.exact = true;
    r.exact_value = Rat(20);
    r.method = "exact";
    r.runtime_ms = 1.5;
    r.paper_anchor = "Eq:SchurJointMoments";
    return r;
}

static Report mc_sample() {
    Report r;
    r.functional = "limit.ratio";
    r.parameters = {{"k", "3"}, {"x", "0,0.3,0.9"}};
    r.value = Cplx(0.25, -0.125);
    r.abs_error = 3e-4;
    r.method = "mc";
    r.has_seed = true;
    r.seed = 20240817;
    r.has_stderr = true;
    r.stderr_abs = 1e-4;
    r.runtime_ms = 250.0;
    r.paper_anchor = "EqPhi:Ratios";
    return r;
}

TEST_CASE("json report carries the full contract") {
    nlohmann::json j = report_to_json(exact_sample());
    CHECK(j["functional"] == "exact.ks");
    CHECK(j["parameters"]["N"] == "2");
    CHECK(j["value"]["re"] == "20");
    CHECK(j["value"]["im"] == "0");
    CHECK(j["value"]["rational"]["num"] == "20");
    CHECK(j["value"]["rational"]["den"] == "1");
    CHECK(j["abs_error"] == "0");
    CHECK(j["paper_anchor"] == "Eq:SchurJointMoments");
    CHECK(!j.contains("seed"));

    nlohmann::json m = report_to_json(mc_sample());
    CHECK(m["seed"] == 20240817);
    CHECK(m["stderr"] == "0.0001");
    CHECK(m["value"]["re"] == "0.25");
    CHECK(!m["value"].contains("rational"));
}

TEST_CASE("rational value strings survive large numerators") {
    Report r = exact_sample();
    BigInt big = BigInt("123456789012345678901234567890") * 7 + 1; // coprime to 7
    r.exact_value = Rat(big, BigInt(7));
    nlohmann::json j = report_to_json(r);
    CHECK(j["value"]["rational"]["num"] == big.str());
    CHECK(j["value"]["rational"]["den"] == "7");
}

static std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

TEST_CASE("csv flattens and round-trips") {
    std::string csv = report_to_csv(mc_sample());
    std::istringstream is(csv);
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    auto h = split_csv(header);
    auto v = split_csv(row);
    CHECK(h.size() == v.size());
    // documented fixed prefix, then parameters in insertion order
    std::vector<std::string> prefix{"functional", "paper_anchor", "method",  "value_re", "value_im", "abs_error",
                                    "num",        "den",          "seed",    "stderr",   "runtime_ms"};
    for (size_t i = 0; i < prefix.size(); ++i) CHECK(h[i] == prefix[i]);
    CHECK(h[11] == "k");
    CHECK(v[12] == "0;0.3;0.9"); // comma point lists are re-delimited inside a cell
    CHECK(v[0] == "limit.ratio");
    CHECK(v[8] == "20240817");
    CHECK(std::stod(v[3]) == doctest::Approx(0.25));
    CHECK(std::stod(v[4]) == doctest::Approx(-0.125));

    // exact reports fill num/den and leave seed/stderr empty
    auto ve = split_csv(report_to_csv(exact_sample()).substr(report_to_csv(exact_sample()).find('\n') + 1));
    CHECK(ve[6] == "20");
    CHECK(ve[7] == "1");
    CHECK(ve[8] == "");
}

TEST_CASE("emit_report writes files and rejects bad targets") {
    std::string path = "cuelab_report_test.json";
    emit_report(exact_sample(), "json", path);
    std::ifstream f(path);
    nlohmann::json j;
    f >> j;
    CHECK(j["functional"] == "exact.ks");
    std::remove(path.c_str());
    CHECK_THROWS_AS(emit_report(exact_sample(), "xml", ""), std::invalid_argument);
    CHECK_THROWS_AS(emit_report(exact_sample(), "json", "/nonexistent-dir/x.json"), std::runtime_error);
}
