#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "parabraid/commands.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    fs::path d = fs::temp_directory_path() / ("parabraid_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

Run cli(const std::string& args) {
    const fs::path err = scratch() / "stderr.txt";
    const std::string cmd = std::string(PARABRAID_CLI) + " " + args + " 2>" + err.string();
    Run r;
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = ::pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err);
    return r;
}

std::string sample(const std::string& name) { return std::string(PARABRAID_SAMPLES_DIR) + "/" + name + ".json"; }

fs::path write_spec(const std::string& name, const std::string& text) {
    fs::path p = scratch() / (name + ".json");
    std::ofstream(p) << text;
    return p;
}

std::vector<json> lines(const std::string& out) {
    std::vector<json> v;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) v.push_back(json::parse(line));
    return v;
}

const char* kHeader = R"({"schema":"1","name":"t","group":{"modulus":2,"rank":2},"M":[[1,0],[0,1]],"epsilon":1,
  "braiding":{"kind":"diagonal"},)";

}  // namespace

TEST_CASE("check emits a header, one verdict per line and a summary") {
    Run r = cli("check " + sample("parafermion") + " --threads 2");
    CHECK(r.code == 0);
    auto v = lines(r.out);
    REQUIRE(v.size() > 2);
    CHECK(v.front()["command"] == "check");
    CHECK(v.front()["spec"] == "parafermion");
    std::size_t verdicts = 0;
    for (const auto& j : v)
        if (j.contains("status")) {
            ++verdicts;
            CHECK(j["status"] != "fail");
        }
    CHECK(verdicts > 1000);
}

TEST_CASE("output is byte-identical across thread counts") {
    for (const std::string name : {"parafermion", "anyonic_z3", "hecke_matrix"}) {
        Run a = cli("check " + sample(name) + " --threads 1");
        Run b = cli("check " + sample(name) + " --threads 4");
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
    Run t1 = cli("table " + sample("paraboson") + " --threads 1");
    Run t4 = cli("table " + sample("paraboson") + " --threads 3");
    CHECK(t1.out == t4.out);
}

TEST_CASE("bracket evaluates Q-realized and free brackets") {
    Run r = cli("bracket " + sample("parafermion") + " a1 a1+ a1");
    CHECK(r.code == 0);
    CHECK(r.out == "2*a1\n");
    Run tensor = cli("bracket " + sample("parafermion") + " --tensor a1 a2 a1");
    CHECK(tensor.code == 0);
    CHECK(tensor.out.find("a1.a2.a1") != std::string::npos);
    Run j = cli("bracket " + sample("parafermion") + " --format jsonl --side right a1 a1+ a1");
    CHECK(j.code == 0);
    CHECK(json::parse(j.out)["value"] == "2*a1");
}

TEST_CASE("table rows carry values and forms") {
    Run r = cli("table " + sample("parafermion") + " --side left --format jsonl");
    CHECK(r.code == 0);
    auto v = lines(r.out);
    bool saw_claim = false;
    for (const auto& j : v)
        if (j.contains("check") && j["check"] == "claim") {
            saw_claim = true;
            CHECK(j["status"] == "pass");
        }
    CHECK(saw_claim);
}

TEST_CASE("schur reports coefficients and the dimension identity") {
    Run r = cli("schur " + sample("parafermion") + " --grades \"(1,0)\" \"(1,0)\" \"(1,0)\" --dims 2 3");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["entries"].size() == 1);
    CHECK(j["entries"][0]["coefficients"] == json::array({"1", "-1", "-1", "1"}));
    REQUIRE(j["dims_identity_check"].size() == 2);
    CHECK(j["dims_identity_check"][1]["mixed"] == 8);
    CHECK(j["dims_identity_check"][1]["identity"] == true);
}

TEST_CASE("green runs on the sample specs") {
    Run r = cli("green " + sample("parafermion") + " --order 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("green-cross-rule") != std::string::npos);
    Run bad = cli("green " + sample("paraboson") + " --order 9");
    CHECK(bad.code == 2);
}

TEST_CASE("spec errors carry a code and a JSON pointer") {
    auto p1 = write_spec("bad_q", std::string(kHeader) + R"(
      "species":[{"name":"a","grade":[1,0],"modes":1}],
      "Q":[{"pair":["a","a+"],"value":"delta"},{"pair":["a+","a"],"value":"-delta"}]})");
    Run r1 = cli("check " + p1.string());
    CHECK(r1.code == 2);
    CHECK(r1.err.find("parastat.invalid-form") != std::string::npos);
    CHECK(r1.err.find("/Q") != std::string::npos);

    auto p2 = write_spec("bad_grade", std::string(kHeader) + R"(
      "species":[{"name":"a","grade":[2,0],"modes":1}],"Q":[]})");
    Run r2 = cli("check " + p2.string());
    CHECK(r2.code == 2);
    CHECK(r2.err.find("/species/0/grade") != std::string::npos);

    auto p3 = write_spec("bad_json", "{ not json");
    CHECK(cli("check " + p3.string()).err.find("spec.malformed-json") != std::string::npos);

    auto p4 = write_spec("unknown", std::string(kHeader) + R"("colour":1})");
    Run r4 = cli("check " + p4.string());
    CHECK(r4.code == 2);
    CHECK(r4.err.find("/colour") != std::string::npos);

    Run r5 = cli("check /nonexistent/spec.json");
    CHECK(r5.code == 2);
    CHECK(r5.err.find("spec.io") != std::string::npos);
}

TEST_CASE("usage errors and unexpected failures") {
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("bracket " + sample("parafermion") + " a1 a1+").code == 2);
    CHECK(cli("bracket " + sample("parafermion") + " a1 a1+ zz").code == 2);
    auto p = write_spec("wrong_claim", std::string(kHeader) + R"(
      "species":[{"name":"a","grade":[1,0],"modes":1}],"Q":[{"pair":["a","a+"],"value":"delta"}],
      "claims":[{"label":"wrong","side":"left","triple":["a_i","a+_j","a_k"],"value":"3*delta(j,k)*a_i"}],
      "options":{"derivation":false,"jacobi":false}})");
    Run r = cli("check " + p.string());
    CHECK(r.code == 1);
    CHECK(r.out.find("\"wrong\"") != std::string::npos);
}

TEST_CASE("in-process commands match the binary") {
    parabraid::CommandArgs a;
    a.command = "bracket";
    a.spec_path = sample("paraboson");
    a.operands = {"c1", "c1+", "c1"};
    parabraid::CommandResult r = parabraid::run_command(a);
    CHECK(r.exit_code == 0);
    CHECK(r.out == cli("bracket " + sample("paraboson") + " c1 c1+ c1").out);
}
