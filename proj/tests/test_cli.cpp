// End-to-end checks of the CLI surface: subcommands, exit codes, seeding.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run(const std::string& args, const std::string& env = "") {
    CliResult result;
    std::string cmd = env + " '" + TPNLIE_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(TPNLIE_FIXTURE_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("free3 text report ends with the verdict") {
    auto r = run("free3 --format text");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "rank(C)  = 46"));
    CHECK(contains(r.output, "rank(C') = 47"));
    CHECK(contains(r.output, "strong condition: FAILS\n"));
}

TEST_CASE("free3 dedup reports fewer rows with the same ranks") {
    auto r = run("free3 --dedup --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"used_dedup\": true"));
    CHECK(contains(r.output, "\"rank_C\": 46"));
    CHECK(contains(r.output, "\"rank_C_prime\": 47"));
}

TEST_CASE("verify passes the w model and fails the jacobian on transposed leibniz") {
    auto ok = run("verify --algebra w --n 2 --identities all --trials 5");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "verdict: ok"));

    auto bad = run("verify --algebra jac --n 2 --identities transposed-leibniz --trials 5");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "verdict: mismatch"));

    auto expected = run("verify --algebra jac --n 2 --identities transposed-leibniz "
                        "--expect-fail transposed-leibniz --trials 5");
    CHECK(expected.exit_code == 0);
}

TEST_CASE("verify runs the mu tags against the derivation-induced bracket") {
    auto r = run("verify --algebra w --n 2 --identities mu-jacobi,mu-transposed-leibniz "
                 "--trials 5 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"identity\": \"mu-jacobi\""));
    CHECK(contains(r.output, "\"ok\": true"));
}

TEST_CASE("verify rejects bad configurations with exit 2") {
    CHECK(run("verify --algebra w --n 1").exit_code == 2);
    CHECK(run("verify --algebra w --n 3 --vars 1").exit_code == 2);
    CHECK(run("verify --algebra w --identities nonsense").exit_code == 2);
    CHECK(run("verify --algebra spline").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("environment seed is used unless a flag overrides it") {
    auto env = run("verify --algebra w --n 2 --identities jacobi --trials 2 --format json",
                   "TPNLIE_SEED=7");
    CHECK(env.exit_code == 0);
    CHECK(contains(env.output, "\"seed\": 7"));
    auto flag = run("verify --algebra w --n 2 --identities jacobi --trials 2 --seed 9 "
                    "--format json",
                    "TPNLIE_SEED=7");
    CHECK(contains(flag.output, "\"seed\": 9"));
}

TEST_CASE("fd validate distinguishes healthy and corrupted tables") {
    auto good = run("fd --input '" + fixture("a4.json") + "' --check validate");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.output, "valid: yes"));

    auto bad = run("fd --input '" + fixture("a4_corrupt_sign.json") + "' --check validate");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "skew-symmetric: NO"));

    CHECK(run("fd --input '" + fixture("missing.json") + "' --check validate").exit_code == 2);
    CHECK(run("fd --input '" + fixture("malformed.json") + "' --check validate").exit_code == 2);
    CHECK(run("fd --input '" + fixture("a4_dup_conflict.json") + "' --check validate").exit_code ==
          2);
}

TEST_CASE("fd simplicity probe") {
    auto simple = run("fd --input '" + fixture("a4.json") + "' --check simple --format json");
    CHECK(simple.exit_code == 0);
    CHECK(contains(simple.output, "\"result\": \"ProbablySimple\""));

    auto split = run("fd --input '" + fixture("a4_plus_line.json") + "' --check simple");
    CHECK(split.exit_code == 1);
    CHECK(contains(split.output, "NotSimple"));
    CHECK(contains(split.output, "witness (dim 1)"));
}

TEST_CASE("fd ideal and quasi-ideal checks on subspace files") {
    auto line = run("fd --input '" + fixture("a4.json") + "' --check ideal --subspace '" +
                    fixture("a4_line_e1.json") + "'");
    CHECK(line.exit_code == 1);

    auto full = run("fd --input '" + fixture("a4.json") + "' --check ideal --subspace '" +
                    fixture("a4_full.json") + "'");
    CHECK(full.exit_code == 0);

    auto dead_line = run("fd --input '" + fixture("a4_plus_line.json") +
                         "' --check ideal --subspace '" + fixture("a4plus_line_e5.json") + "'");
    CHECK(dead_line.exit_code == 0);

    auto block = run("fd --input '" + fixture("a4_sum_zero_product.json") +
                     "' --check quasi-ideal --subspace '" + fixture("a4_sum_block.json") + "'");
    CHECK(block.exit_code == 0);

    auto not_quasi = run("fd --input '" + fixture("a4_zero_product.json") +
                         "' --check quasi-ideal --subspace '" + fixture("a4_line_e1.json") + "'");
    CHECK(not_quasi.exit_code == 1);

    // no product table: an operational error, not a mathematical verdict
    auto no_product = run("fd --input '" + fixture("a4.json") + "' --check quasi-ideal --subspace '" +
                          fixture("a4_line_e1.json") + "'");
    CHECK(no_product.exit_code == 2);

    CHECK(run("fd --input '" + fixture("a4.json") + "' --check ideal").exit_code == 2);
}

TEST_CASE("parse-check echoes the canonical form") {
    auto r = run("parse-check --vars 2 '3*x1^2*x2 - 1/2'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3*x1^2*x2 - 1/2\n");
    auto reordered = run("parse-check --vars 2 'x2*x1*3*x1 - 1/2'");
    CHECK(reordered.output == "3*x1^2*x2 - 1/2\n");
    CHECK(run("parse-check --vars 2 'x3'").exit_code == 2);
    CHECK(run("parse-check --vars 2 '1//2'").exit_code == 2);
}
