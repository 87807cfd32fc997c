#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

// Runs the CLI with stderr folded into stdout.
CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(GJSUM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    return std::string(GJSUM_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("group report: H_8") {
    CliResult r = run_cli("report --input " + fixture("group_h8.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("order 8") != std::string::npos);
    CHECK(r.out.find("(deg 2)") != std::string::npos);
    // exactly one symplectic character
    CHECK(r.out.find("symplectic characters: chi_") != std::string::npos);
    CHECK(r.out.find("dixon_prime") != std::string::npos);
    CHECK(r.out.find("adams") != std::string::npos);
}

TEST_CASE("group report: C_3 has no symplectic characters") {
    CliResult r = run_cli("report --input " + fixture("group_c3.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("symplectic characters: (none)") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const char* f : {"group_h8.json", "local_tame_c3.json", "global_h12.json"}) {
        CliResult a = run_cli("report --input " + fixture(f));
        CliResult b = run_cli("report --input " + fixture(f));
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CliResult sa = run_cli("report --format structured --input " + fixture(f));
        CliResult sb = run_cli("report --format structured --input " + fixture(f));
        CHECK(sa.out == sb.out);
    }
}

TEST_CASE("bad table is a structured input error naming the failing triple") {
    CliResult r = run_cli("report --input " + fixture("group_bad_table.json"));
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("input error") != std::string::npos);
    CHECK(r.out.find("(") != std::string::npos);  // the failing triple/entry coordinates
}

TEST_CASE("missing file and malformed JSON give input errors") {
    CHECK(run_cli("report --input /nonexistent.json").exit_code == 2);
}

TEST_CASE("local reports") {
    CliResult tame = run_cli("report --input " + fixture("local_tame_c3.json"));
    CHECK(tame.exit_code == 0);
    CHECK(tame.out.find("ord(D) = 2") != std::string::npos);
    CHECK(tame.out.find("n = -1") != std::string::npos);
    CHECK(tame.out.find("freeness congruence") != std::string::npos);
    CHECK(tame.out.find("pass") != std::string::npos);

    CliResult wild = run_cli("report --input " + fixture("local_wild_c3.json"));
    CHECK(wild.exit_code == 0);
    CHECK(wild.out.find("ord(D) = 4") != std::string::npos);
    CHECK(wild.out.find("n = -2") != std::string::npos);

    CliResult nonweak = run_cli("report --input " + fixture("local_nonweak.json"));
    CHECK(nonweak.exit_code == 0);
    CHECK(nonweak.out.find("weakly ramified: no") != std::string::npos);
    CHECK(nonweak.out.find("twisted characteristic") != std::string::npos);
}

TEST_CASE("tame abelian report carries the J_2 family") {
    CliResult r = run_cli("report --input " + fixture("tame_abelian_c2.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("-1/3") != std::string::npos);
    CHECK(r.out.find("J_2 rational-equivariant: pass") != std::string::npos);
}

TEST_CASE("global reports") {
    CliResult r = run_cli("report --input " + fixture("global_h12.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("symplectic signs") != std::string::npos);
    CHECK(r.out.find("-1") != std::string::npos);
    CHECK(r.out.find("squares to the identity: pass") != std::string::npos);

    CliResult p = run_cli("report --input " + fixture("global_c6_product.json"));
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("assembled global J_2") != std::string::npos);
    CHECK(p.out.find("global J_2 rational-equivariant: pass") != std::string::npos);
}

TEST_CASE("structured output is JSON mirroring the text fields") {
    CliResult r = run_cli("report --format structured --input " + fixture("tame_abelian_c2.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"kind\": \"tame_abelian\"") != std::string::npos);
    CHECK(r.out.find("\"J2_rational_equivariant\": true") != std::string::npos);
    CHECK(r.out.find("\"sqrt_inv_different\":") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    CliResult ok = run_cli("verify --suite anchor");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);

    CliResult unknown = run_cli("verify --suite no-such-suite");
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.out.find("available") != std::string::npos);
    CHECK(unknown.out.find("hilbert") != std::string::npos);

    CliResult small = run_cli("verify --suite adams --max-order 8");
    CHECK(small.exit_code == 0);
}
