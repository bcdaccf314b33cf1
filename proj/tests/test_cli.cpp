// End-to-end checks of the seczeta binary: documented invocations, exit
// codes, format selection, and byte-level determinism. The binary path is
// injected by the build as SECZETA_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int code;
    std::string out;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + SECZETA_CLI_PATH " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::vector<nlohmann::json> parse_lines(const std::string& out) {
    std::vector<nlohmann::json> recs;
    std::istringstream ss(out);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) recs.push_back(nlohmann::json::parse(line));
    return recs;
}

}  // namespace

TEST_CASE("exact family invocations print the documented closed forms") {
    RunResult a = run_cli("exact --k 2 --family gen1 --j 1");
    CHECK(a.code == 0);
    CHECK(a.out == "2/3 × π^2 (argument √6)\n");

    RunResult b = run_cli("exact --k 2 --family pell --j -1 --n 1");
    CHECK(b.code == 0);
    CHECK(b.out == "-1/3 × π^2 (argument √2)\n");

    RunResult c = run_cli("exact --k 2 --z sqrt:2");
    CHECK(c.code == 0);
    CHECK(c.out == "-1/3 × π^2 (argument √2)\n");

    RunResult d = run_cli("exact --k 3 --family gen1 --j 1");
    CHECK(d.code == 2);
}

TEST_CASE("exact json and csv records carry the plain-text fields") {
    RunResult a = run_cli("exact --k 2 --family gen1 --j 1 --format json-lines");
    REQUIRE(a.code == 0);
    auto recs = parse_lines(a.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["function"] == "psi");
    CHECK(recs[0]["k"] == 2);
    CHECK(recs[0]["family"] == "gen1");
    CHECK(recs[0]["j"] == 1);
    CHECK(recs[0]["argument"] == "sqrt(6)");
    CHECK(recs[0]["coefficient"] == "2/3");
    CHECK(recs[0]["pi_power"] == 2);

    RunResult b = run_cli("exact --k 2 --family gen1 --j 1 --format csv");
    REQUIRE(b.code == 0);
    CHECK(contains(b.out, "function,k,family,j,n,argument,coefficient,pi_power"));
    CHECK(contains(b.out, "psi,2,gen1,1,,sqrt(6),2/3,2"));
}

TEST_CASE("numeric evaluations resolve to the documented digits") {
    RunResult a = run_cli("numeric --s 2 --z sqrt:2");
    CHECK(a.code == 0);
    CHECK(contains(a.out, "-3.2898681336964528729448303332920503784378998024"));

    RunResult b = run_cli("numeric --s 3 --cotangent --z quad:1,1,5 --scale 1/2");
    CHECK(b.code == 0);
    CHECK(contains(b.out, "-3.0814285505029738783140887618150801881352962769"));

    RunResult c = run_cli("numeric --s 2 --z rat:1/4");
    CHECK(c.code == 2);
    CHECK(contains(c.out, "exclude rational points with even denominators"));

    RunResult d = run_cli("numeric --s 2.5 --z sqrt:2");
    CHECK(d.code == 3);
    CHECK(contains(d.out, "unresolved"));
}

TEST_CASE("numeric json record validates against the documented schema") {
    RunResult a = run_cli("numeric --s 2 --z sqrt:2 --digits 30 --format json-lines");
    REQUIRE(a.code == 0);
    auto recs = parse_lines(a.out);
    REQUIRE(recs.size() == 1);
    const auto& r = recs[0];
    CHECK(r["function"] == "psi");
    CHECK(r["s"] == 2);
    CHECK(r["argument"] == "sqrt(2)");
    CHECK(r["digits"] == 30);
    CHECK(r["resolved"] == true);
    CHECK(r["value"].is_string());
    CHECK(r["error_bound"].is_string());
    CHECK(contains(r["value"].get<std::string>(), "-3.28986813369645287294483033"));
}

TEST_CASE("factor prints Sanov words and rejects outsiders") {
    RunResult a = run_cli("factor --matrix 5,12,2,5");
    CHECK(a.code == 0);
    CHECK(a.out == "A^1 B^1 A^1\n");

    RunResult b = run_cli("factor --matrix 3,4,2,3");
    CHECK(b.code == 0);
    CHECK(b.out == "A^1 B^-1 A^1\n");

    RunResult c = run_cli("factor --matrix 1,1,0,1");
    CHECK(c.code == 2);
    CHECK(contains(c.out, "not in the subgroup"));

    RunResult d = run_cli("factor --matrix 2,0,0,1");
    CHECK(d.code == 2);
    CHECK(contains(d.out, "determinant"));

    RunResult e = run_cli("factor --matrix 1,0,0,1 --format json-lines");
    CHECK(e.code == 0);
    auto recs = parse_lines(e.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["word"] == "1");
    CHECK(recs[0]["length"] == 0);
}

TEST_CASE("beta values and denominator profile") {
    RunResult a = run_cli("beta --k 2..6");
    CHECK(a.code == 0);
    CHECK(contains(a.out, "-8/3"));
    CHECK(contains(a.out, "508/5"));
    CHECK(contains(a.out, "-64896/7"));

    RunResult b = run_cli("beta --k 20 --profile --format json-lines");
    CHECK(b.code == 0);
    auto recs = parse_lines(b.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["denominator"] == "385");
    std::vector<std::string> anom = recs[0]["anomalous_primes"].get<std::vector<std::string>>();
    REQUIRE(anom.size() == 1);
    CHECK(anom[0] == "7");

    RunResult c = run_cli("beta --k 3");
    CHECK(c.code == 2);
}

TEST_CASE("scan records and cross-job determinism") {
    RunResult a = run_cli("scan --k 2 --j 1..3 --digits 40 --format json-lines");
    CHECK(a.code == 0);
    auto recs = parse_lines(a.out);
    REQUIRE(recs.size() == 3);
    const char* want[] = {"-1/12", "-1/3", "-1/12"};
    for (size_t i = 0; i < 3; ++i) {
        CHECK(recs[i]["k"] == 2);
        CHECK(recs[i]["j"] == static_cast<long>(i) + 1);
        CHECK(recs[i]["digits"] == 40);
        CHECK(recs[i]["recognized"] == want[i]);
        CHECK(recs[i]["verified"] == true);
        CHECK(recs[i]["residual"].is_string());
    }

    RunResult s1 = run_cli("scan --k 2 --j 1..6 --digits 40 --jobs 1 --format json-lines");
    RunResult s4 = run_cli("scan --k 2 --j 1..6 --digits 40 --jobs 4 --format json-lines");
    CHECK(s1.code == 0);
    CHECK(s4.code == 0);
    CHECK(s1.out == s4.out);
}

TEST_CASE("pell solutions in csv form") {
    RunResult a = run_cli("pell --j 2 --count 3 --format csv");
    CHECK(a.code == 0);
    CHECK(contains(a.out, "2,0,3,2"));
    CHECK(contains(a.out, "2,1,17,12"));
    CHECK(contains(a.out, "2,2,99,70"));

    RunResult b = run_cli("pell --j 4,9");
    CHECK(b.code == 2);  // nothing admissible in the list
}

TEST_CASE("unimodular certification run") {
    RunResult a = run_cli("unimodular --k 2..4");
    CHECK(a.code == 0);
    CHECK(contains(a.out, "3x^3 - x^2 + x - 3"));
    CHECK(contains(a.out, "certified=yes"));
    CHECK(!contains(a.out, "certified=no"));
}

TEST_CASE("audit reports the continued fraction and hard indices") {
    RunResult a = run_cli("audit --z sqrt:2 --N 100");
    CHECK(a.code == 0);
    CHECK(contains(a.out, "[1; (2)]"));
    CHECK(contains(a.out, "a_max(2z) = 4"));
    CHECK(contains(a.out, "tail past N="));
}

TEST_CASE("environment digits and invalid values") {
    RunResult def = run_cli("numeric --s 2 --z sqrt:2");
    RunResult env30 = run_cli("numeric --s 2 --z sqrt:2", "SECZETA_DIGITS=30 ");
    CHECK(env30.code == 0);
    CHECK(env30.out != def.out);
    RunResult flag30 = run_cli("numeric --s 2 --z sqrt:2 --digits 30");
    CHECK(env30.out == flag30.out);

    // out-of-range environment value is ignored in favor of the default;
    // the same value on the command line is a hard error
    RunResult env15 = run_cli("numeric --s 2 --z sqrt:2", "SECZETA_DIGITS=15 ");
    CHECK(env15.code == 0);
    CHECK(env15.out == def.out);
    RunResult flag15 = run_cli("numeric --s 2 --z sqrt:2 --digits 15");
    CHECK(flag15.code == 2);
}

TEST_CASE("output file matches stdout byte for byte") {
    std::string path = "/tmp/seczeta_cli_out_test.txt";
    std::remove(path.c_str());
    RunResult direct = run_cli("beta --k 2..10 --format csv");
    RunResult redirected = run_cli("beta --k 2..10 --format csv --out " + path);
    CHECK(redirected.code == 0);
    CHECK(redirected.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("repeated invocations are byte-identical") {
    for (const char* cmd : {"numeric --s 4 --z sqrt:2 --digits 40",
                            "exact --k 6 --family gen2 --j 2",
                            "audit --z sqrt:3 --N 50"}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("malformed invocations exit with code 2") {
    CHECK(run_cli("").code == 2);                               // missing subcommand
    CHECK(run_cli("exact --k 2 --family gen1 --j 1 --bogus").code == 2);
    CHECK(run_cli("numeric --s 2 --z sqrt:2 --digits 5").code == 2);
    CHECK(run_cli("numeric --s 2 --z sqrt:-1").code == 2);      // negative radicand
    CHECK(run_cli("numeric --s 2 --z rat:1/0").code == 2);
    CHECK(run_cli("exact --k 2 --family gen1 --j 0").code == 2);
    CHECK(run_cli("exact --k 2 --family nosuch --j 1").code == 2);
    CHECK(run_cli("scan --k 2 --j 1..3 --format yaml").code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("exact --help").code == 0);
    CHECK(run_cli("numeric --help").code == 0);
}
