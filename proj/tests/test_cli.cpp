#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "qsa/cli.hpp"
#include "qsa/enumerate.hpp"
#include "qsa/expr.hpp"

using namespace qsa;

namespace {

std::string write_config(const std::string& body) {
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() /
                ("qsa-test-config-" + std::to_string(counter++) + ".json");
    std::ofstream out(path);
    out << body;
    return path.string();
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kTinySymbolic = R"({
  "N": 2,
  "q": "symbolic",
  "cyclotomic_order": 1,
  "bounds": {"degree_cap": 2, "max_p": 2, "max_entry_degree": 1}
})";

const char* kClassical = R"({
  "N": 2,
  "q": {"q12": "1"},
  "cyclotomic_order": 1,
  "bounds": {"degree_cap": 2, "max_p": 2, "max_entry_degree": 1}
})";

} // namespace

TEST_CASE("expression parsing round-trips the spec examples") {
    Ctx ctx = QContext::symbolic(3, 4);
    KoszulCochain a = parse_koszul_cochain(ctx, "x1 ^ dx(1)");
    CHECK(a == KoszulCochain::basis(ctx, Monomial::gen(3, 1), ExtIndex::of({1})));

    KoszulCochain b = parse_koszul_cochain(ctx, "q12 * x1*x2 ^ dx(1,2)");
    CHECK(b == KoszulCochain::basis(ctx, monomial_of_word(3, {1, 2}), ExtIndex::of({1, 2}),
                                    ctx->q_power(1, 2, 1)));

    KoszulCochain c =
        parse_koszul_cochain(ctx, "3/2 * q12^-1 * x1^2*x2 ^ dx(1,3)");
    CHECK(c == KoszulCochain::basis(ctx, monomial_of_word(3, {1, 1, 2}), ExtIndex::of({1, 3}),
                                    ctx->q_power(1, 2, -1) *
                                        Scalar::from_rational(Rational(3, 2))));

    DiagonalAction d;
    d.chi_exp = {{1}, {0}, {0}};
    GCtx grp = GroupData::make(ctx, {4}, d);
    SkewKoszulCochain s = parse_skew_cochain(grp, "1 # g(1) ^ dx(2)");
    CHECK(s == SkewKoszulCochain::basis(grp, Monomial::unit(3), GroupElement{{1}},
                                        ExtIndex::of({2})));
}

TEST_CASE("parse errors carry positions") {
    Ctx ctx = QContext::symbolic(2);
    CHECK_THROWS_AS(parse_koszul_cochain(ctx, "x1 +"), ParseError);
    CHECK_THROWS_AS(parse_koszul_cochain(ctx, "x9 ^ dx(1)"), ParseError);
    CHECK_THROWS_AS(parse_koszul_cochain(ctx, "q13 * x1"), ParseError);
    CHECK_THROWS_AS(parse_koszul_cochain(ctx, "x1 ^ dx(2,1)"), ParseError);
    try {
        parse_koszul_cochain(ctx, "x1 * ?");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("printer and parser are mutually inverse on random cochains") {
    Ctx ctx = QContext::symbolic(2, 3);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> ed(0, 3), qd(-2, 2), cd(-3, 3), zd(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        int deg = trial % 3;
        auto wedges = wedges_of_size(2, deg);
        std::uniform_int_distribution<size_t> pw(0, wedges.size() - 1);
        KoszulCochain x(ctx, deg);
        for (int t = 0; t < 3; ++t) {
            Monomial m = Monomial::unit(2);
            m.e[0] = ed(rng);
            m.e[1] = ed(rng);
            int c = cd(rng);
            Scalar coeff = Scalar::from_rational(c == 0 ? 1 : c) *
                           ctx->q_power(1, 2, qd(rng)) *
                           Scalar::from_cyc(ctx->zeta(zd(rng)));
            x.add_term(m, wedges[pw(rng)], coeff);
        }
        CHECK(parse_koszul_cochain(ctx, to_expression(x)) == x);
    }

    DiagonalAction d;
    d.chi_exp = {{1}, {0}};
    GCtx grp = GroupData::make(ctx, {3}, d);
    for (int trial = 0; trial < 30; ++trial) {
        int deg = trial % 3;
        auto wedges = wedges_of_size(2, deg);
        std::uniform_int_distribution<size_t> pw(0, wedges.size() - 1);
        std::uniform_int_distribution<int> gd(0, 2);
        SkewKoszulCochain x(grp, deg);
        for (int t = 0; t < 3; ++t) {
            Monomial m = Monomial::unit(2);
            m.e[0] = ed(rng);
            m.e[1] = ed(rng);
            int c = cd(rng);
            x.add_term(m, grp->reduce(GroupElement{{gd(rng)}}), wedges[pw(rng)],
                       Scalar::from_rational(c == 0 ? 1 : c));
        }
        CHECK(parse_skew_cochain(grp, to_expression(x)) == x);
    }
}

TEST_CASE("cli verify succeeds on a small symbolic configuration") {
    std::string cfg = write_config(kTinySymbolic);
    CliRun r = cli({"--config", cfg, "verify", "--suite", "koszul"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[pass]") != std::string::npos);
}

TEST_CASE("cli verify reports an injected fault with a counterexample") {
    std::string cfg = write_config(kTinySymbolic);
    CliRun r = cli({"--config", cfg, "--json", "verify", "--suite", "chainmaps",
                    "--inject-fault", "mu"});
    CHECK(r.code == 1);
    Json report = Json::parse(r.out);
    CHECK(report["status"] == "fail");
    bool found_counterexample = false;
    for (const auto& [name, entry] : report["checks"].items()) {
        if (entry["status"] == "fail") found_counterexample = entry.contains("counterexample");
    }
    CHECK(found_counterexample);
}

TEST_CASE("cli rejects invalid configurations with exit code 2") {
    std::string bad_q = write_config(R"({"N":2, "q": {"q11": "-1"}})");
    CHECK(cli({"--config", bad_q, "verify"}).code == 2);

    std::string inconsistent =
        write_config(R"({"N":2, "q": {"q12": "zeta", "q21": "zeta"}, "cyclotomic_order": 4})");
    CHECK(cli({"--config", inconsistent, "verify"}).code == 2);

    std::string bad_group = write_config(R"({
      "N": 2, "q": "symbolic", "cyclotomic_order": 2,
      "group": {"orders": [2], "action": {"type": "monomial", "images": [["x2", "x1"]]}}
    })");
    CHECK(cli({"--config", bad_group, "verify"}).code == 2); // swap needs q12 = q21

    std::string cfg = write_config(kTinySymbolic);
    CHECK(cli({"--config", cfg, "bracket", "--alpha", "x1 ^^ dx(1)", "--beta",
               "x1 ^ dx(1)"})
              .code == 2);
    CHECK(cli({"--config", "/nonexistent/path.json", "verify"}).code == 2);
    CHECK(cli({"--config", cfg, "verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("cli basis output is deterministic") {
    std::string cfg = write_config(kTinySymbolic);
    CliRun a = cli({"--config", cfg, "--json", "basis", "-m", "1", "--cap", "6"});
    CliRun b = cli({"--config", cfg, "--json", "basis", "-m", "1", "--cap", "6"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Json names = Json::parse(a.out);
    CHECK(names["result"].size() == 2);
}

TEST_CASE("cli bracket agrees across methods on the classical example") {
    std::string cfg = write_config(kClassical);
    CliRun r = cli({"--config", cfg, "--json", "bracket", "--alpha", "x1 ^ dx(2)", "--beta",
                    "x2 ^ dx(1)", "--method", "both"});
    CHECK(r.code == 0);
    Json report = Json::parse(r.out);
    CHECK(report["status"] == "ok");
    CHECK(report["checks"]["methods-agree"] == "pass");
    REQUIRE(report["result"].size() == 2);
    // canonical order: x2 (x) dx2 before x1 (x) dx1
    CHECK(report["result"][0]["monomial"] == Json::array({0, 1}));
    CHECK(report["result"][0]["dx"] == Json::array({2}));
    CHECK(report["result"][0]["coeff"] == "-1");
    CHECK(report["result"][1]["monomial"] == Json::array({1, 0}));
    CHECK(report["result"][1]["dx"] == Json::array({1}));
    CHECK(report["result"][1]["coeff"] == "1");
}

TEST_CASE("cli dq reproduces the quantum worked example") {
    std::string cfg = write_config(kTinySymbolic);
    CliRun r = cli({"--config", cfg, "--json", "dq", "--i", "2", "--mono", "x1*x2^2"});
    CHECK(r.code == 0);
    Json report = Json::parse(r.out);
    REQUIRE(report["result"].size() == 2);
    // q12 (x) x1 x2 term and q12^2 x2 (x) x1 term, in canonical order
    CHECK(report["result"][0]["coeff"] == "q12");
    CHECK(report["result"][0]["left"] == Json::array({0, 0}));
    CHECK(report["result"][0]["right"] == Json::array({1, 1}));
    CHECK(report["result"][1]["coeff"] == "q12^2");
    CHECK(report["result"][1]["left"] == Json::array({0, 1}));
    CHECK(report["result"][1]["right"] == Json::array({1, 0}));
}

TEST_CASE("cli lift surfaces the recursive construction") {
    std::string cfg = write_config(kTinySymbolic);
    CliRun phi_run =
        cli({"--config", cfg, "--json", "lift", "--map", "phi", "--degree", "2", "--input",
             "dx(1,2)"});
    CHECK(phi_run.code == 0);
    Json report = Json::parse(phi_run.out);
    CHECK(report["result"].size() == 2);

    CliRun psi_run = cli({"--config", cfg, "--json", "lift", "--map", "psi", "--degree", "1",
                          "--input", "x1*x2"});
    CHECK(psi_run.code == 0);
    Json psi_report = Json::parse(psi_run.out);
    CHECK(psi_report["result"].size() == 2);
    CliRun mismatch = cli({"--config", cfg, "lift", "--map", "psi", "--degree", "3",
                           "--input", "x1*x2"});
    CHECK(mismatch.code == 2);
}
