#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kScratch = "cli_scratch";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(NULLCERT_CLI) + " " + args + " > " + kScratch +
                      "/out.txt 2> " + kScratch + "/err.txt";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(kScratch + "/out.txt"), slurp(kScratch + "/err.txt")};
}

struct Fixture {
    Fixture() {
        int rc = std::system(("mkdir -p " + kScratch).c_str());
        (void)rc;
        spit(kScratch + "/k3.el", "3 3\n1 2\n1 3\n2 3\n");
        spit(kScratch + "/k2.el", "2 1\n1 2\n");
        spit(kScratch + "/p3.el", "3 2\n1 2\n2 3\n");
        spit(kScratch + "/k2.dimacs", "c tiny\np edge 2 1\ne 1 2\n");
    }
};

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("encode writes a system and reports counts") {
    Fixture fx;
    RunResult r = run("encode --graph " + kScratch + "/k3.el --problem indset --m 2 -o " +
                      kScratch + "/sys.json");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("variables: 3") != std::string::npos);
    CHECK(r.err.find("equations: 7") != std::string::npos);

    // Byte-identical on a second run.
    std::string first = slurp(kScratch + "/sys.json");
    run("encode --graph " + kScratch + "/k3.el --problem indset --m 2 -o " + kScratch +
        "/sys2.json");
    CHECK(slurp(kScratch + "/sys2.json") == first);
}

TEST_CASE("encode refuses odd-order matching-v2 with an input error") {
    Fixture fx;
    RunResult r = run("encode --graph " + kScratch + "/k3.el --problem matching-v2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("dimacs input") {
    Fixture fx;
    RunResult r = run("encode --graph " + kScratch +
                      "/k2.dimacs --format dimacs --problem indset --m 1");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("variables: 2") != std::string::npos);
}

TEST_CASE("homomorphism encoding variable count") {
    Fixture fx;
    RunResult r = run("encode --problem hom --target-graph " + kScratch +
                      "/k2.el --graph " + kScratch + "/k3.el --m 3");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("variables: 8") != std::string::npos);
}

TEST_CASE("solve and verify round trip") {
    Fixture fx;
    REQUIRE(run("encode --graph " + kScratch + "/k3.el --problem indset --m 2 -o " +
                kScratch + "/sys.json")
                .exit_code == 0);
    RunResult s = run("solve --system " + kScratch + "/sys.json -o " + kScratch +
                      "/cert.json --benchmark " + kScratch + "/bench.csv");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("certificate of degree 1") != std::string::npos);
    CHECK(slurp(kScratch + "/bench.csv").rfind("degree,rows,cols,status,ms", 0) == 0);

    RunResult v = run("verify --system " + kScratch + "/sys.json --certificate " +
                      kScratch + "/cert.json");
    CHECK(v.exit_code == 0);

    // Tamper with one coefficient: verification fails with exit 1.
    std::string cert = slurp(kScratch + "/cert.json");
    auto pos = cert.find("\"-1\"");
    if (pos == std::string::npos) pos = cert.find("\"1\"");
    REQUIRE(pos != std::string::npos);
    cert.replace(pos, cert[pos + 1] == '-' ? 4 : 3, "\"7\"");
    spit(kScratch + "/tampered.json", cert);
    RunResult bad = run("verify --system " + kScratch + "/sys.json --certificate " +
                        kScratch + "/tampered.json");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("residual") != std::string::npos);
}

TEST_CASE("verify warns on hash mismatch but still verifies") {
    Fixture fx;
    run("encode --graph " + kScratch + "/k3.el --problem indset --m 2 -o " + kScratch +
        "/sys.json");
    run("solve --system " + kScratch + "/sys.json -o " + kScratch + "/cert.json");
    std::string cert = slurp(kScratch + "/cert.json");
    auto pos = cert.find("\"system_hash\": \"");
    REQUIRE(pos != std::string::npos);
    cert[pos + 17] = cert[pos + 17] == '0' ? '1' : '0';
    spit(kScratch + "/othercert.json", cert);
    RunResult v = run("verify --system " + kScratch + "/sys.json --certificate " +
                      kScratch + "/othercert.json");
    CHECK(v.exit_code == 0);
    CHECK(v.err.find("hash mismatch") != std::string::npos);
}

TEST_CASE("solve on a feasible instance exits 1") {
    Fixture fx;
    RunResult r = run("solve --graph " + kScratch + "/k2.el --problem indset --m 1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("no certificate") != std::string::npos);
}

TEST_CASE("solve respects the column cap with exit 3") {
    Fixture fx;
    RunResult r = run("--column-cap 5 solve --graph " + kScratch +
                      "/k3.el --problem indset --m 2");
    CHECK(r.exit_code == 3);
}

TEST_CASE("enumerate matchings of K3") {
    Fixture fx;
    RunResult r = run("enumerate --problem matching --graph " + kScratch + "/k3.el");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("count: 4") != std::string::npos);
    CHECK(r.out.find("{}") != std::string::npos);
    CHECK(r.out.find("x1_2") != std::string::npos);
    CHECK(count_lines(r.out) == 4 + 3);   // members + count + max + closed
}

TEST_CASE("enumerate regular subgraphs reports the closure witness") {
    Fixture fx;
    RunResult r = run("enumerate --problem regular --graph " + kScratch + "/k3.el");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("subset closed: no") != std::string::npos);
    CHECK(r.out.find("witness") != std::string::npos);
}

TEST_CASE("enumerate cage-free subgraphs of P3") {
    Fixture fx;
    RunResult r = run("enumerate --problem cagefree --graph " + kScratch + "/p3.el");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("count: 1") != std::string::npos);
}

TEST_CASE("oracle guard refusal exits 3") {
    Fixture fx;
    RunResult r = run("--guard-edges 2 enumerate --problem matching --graph " +
                      kScratch + "/k3.el");
    CHECK(r.exit_code == 3);
}

TEST_CASE("analyze emits the comparison verdicts") {
    Fixture fx;
    RunResult r = run("analyze --graph " + kScratch + "/k3.el --problem indset --m 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("support match: PASS") != std::string::npos);
    CHECK(r.out.find("degree match: PASS") != std::string::npos);

    RunResult fast = run("analyze --graph " + kScratch + "/p3.el --problem matching-v1");
    CHECK(fast.exit_code == 0);
    CHECK(fast.out.find("bipartite fast path") != std::string::npos);
}

TEST_CASE("bad input exits 2") {
    Fixture fx;
    spit(kScratch + "/bad.el", "2 1\n1 1\n");
    RunResult r = run("encode --graph " + kScratch + "/bad.el --problem indset --m 1");
    CHECK(r.exit_code == 2);
    RunResult missing = run("encode --graph nosuchfile.el --problem indset --m 1");
    CHECK(missing.exit_code == 2);
}
