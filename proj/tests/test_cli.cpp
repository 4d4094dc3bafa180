#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

std::string cliPath() { return INDEX2_CLI_PATH; }

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args, bool mergeStderr = false) {
    std::string cmd = cliPath() + " " + args + (mergeStderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::string out;
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int rc = pclose(p);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

int countLines(const std::string& s, const std::string& prefix) {
    int c = 0;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++c;
    return c;
}

std::filesystem::path tempFile(const std::string& name) {
    return std::filesystem::temp_directory_path() /
           ("index2_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("enumerate formats and determinism") {
    auto md = run("enumerate");
    CHECK(md.status == 0);
    CHECK(countLines(md.out, "|") == 22 + 2);  // header + separator + families

    auto csv = run("enumerate --format csv");
    CHECK(csv.status == 0);
    CHECK(countLines(csv.out, "") == 23);
    CHECK(csv.out.find("oct-rr,\"{6,4}_6\",Octahedron,\"(12,24,8)\",1,\"[r,r]\",6,3,R3.4*,") !=
          std::string::npos);

    auto j1 = run("enumerate --format json");
    auto j2 = run("enumerate --format json");
    CHECK(j1.status == 0);
    CHECK(j1.out == j2.out);

    json table = json::parse(j1.out);
    REQUIRE(table.size() == 22);
    int planarCount = 0, generatorCount = 0;
    for (const auto& row : table) {
        if (!row["planarLambda"].is_null()) ++planarCount;
        if (!row["generator"].is_null()) ++generatorCount;
        CHECK(row["orientable"].get<bool>());
    }
    CHECK(planarCount == 2);
    CHECK(generatorCount == 18);

    auto badFormat = run("enumerate --format yaml");
    CHECK(badFormat.status == 2);
}

TEST_CASE("build exports meshes with the family's counts") {
    auto fanPath = tempFile("hrsr_fan.obj");
    auto fan = run("build ico1-hrsr --lambda tau -o " + fanPath.string());
    CHECK(fan.status == 0);
    std::string fanText = slurp(fanPath);
    CHECK(countLines(fanText, "v ") == 24 + 30);  // vertices plus face centroids
    CHECK(countLines(fanText, "f ") == 30 * 4);
    CHECK(countLines(fanText, "# face ") == 30);
    CHECK(fanText.find("# planar faces at this ratio: 30 of 30") != std::string::npos);
    CHECK(fanText.find("# lambda = 1/2+1/2√5") != std::string::npos);

    auto polyPath = tempFile("dod4_poly.obj");
    auto poly = run("build dod4-rr -l 1/2 --faces polyline -o " + polyPath.string());
    CHECK(poly.status == 0);
    std::string polyText = slurp(polyPath);
    CHECK(countLines(polyText, "v ") == 40);
    CHECK(countLines(polyText, "l ") == 12);

    // identical invocations write identical bytes
    auto againPath = tempFile("dod4_again.obj");
    run("build dod4-rr -l 1/2 --faces polyline -o " + againPath.string());
    CHECK(slurp(againPath) == polyText);

    auto swapped = run("build ico1-hrsr --lambda tau --swap -o " +
                       tempFile("hrsr_swap.obj").string());
    CHECK(swapped.status == 0);

    std::filesystem::remove(fanPath);
    std::filesystem::remove(polyPath);
    std::filesystem::remove(againPath);
    std::filesystem::remove(tempFile("hrsr_swap.obj"));
}

TEST_CASE("build rejects unusable ratios and ids") {
    CHECK(run("build ico1-hrsr -l 0 -o /dev/null").status == 2);
    CHECK(run("build ico1-hrsr -l -2 -o /dev/null").status == 2);
    CHECK(run("build ico1-hrsr -l 1 -o /dev/null").status == 2);  // aligned degenerate
    CHECK(run("build ico1-hrsr -l nonsense -o /dev/null").status == 2);
    CHECK(run("build nosuch-rr -l 2 -o /dev/null").status == 2);
    CHECK(run("build oct-ff -l 2 -o /dev/null").status == 2);  // scanned but rejected
    CHECK(run("build oct-rr -o /dev/null").status == 2);       // missing required ratio

    // the opposed tetrahedron accepts ratio 1 with a warning
    auto warned = run("build tetO-rr -l 1 -o /dev/null", true);
    CHECK(warned.status == 0);
    CHECK(warned.out.find("warning") != std::string::npos);
}

TEST_CASE("verify reports and exit codes") {
    auto single = run("verify oct-rr");
    CHECK(single.status == 0);
    json j = json::parse(single.out);
    CHECK(j["pass"].get<bool>());
    CHECK(j["type"] == "{6,4}_6");
    CHECK(j["generator"] == "Octahedron");
    CHECK(j["symmetry"]["order"] == 48);
    CHECK(j["symmetry"]["index"] == 2);
    CHECK(j["symmetry"]["faceStabilizer"] == "dihedral of order 6");

    auto sporadic = run("verify ico2-hrsr");
    CHECK(sporadic.status == 0);
    json js = json::parse(sporadic.out);
    CHECK(js["type"] == "{6,5}_4");
    CHECK(js["generator"].is_null());

    CHECK(run("verify nosuch-rr").status == 2);
    CHECK(run("verify ico1-hlhl").status == 2);  // not a canonical class
    CHECK(run("verify dod2-rr").status == 2);    // fails the precheck
}

TEST_CASE("verify all passes for the complete classification") {
    auto all = run("verify all");
    CHECK(all.status == 0);
    json j = json::parse(all.out);
    CHECK(j["familyCount"] == 22);
    CHECK(j["failures"] == 0);
    CHECK(j["pass"].get<bool>());
}

TEST_CASE("reject-scan lists every rejected configuration") {
    auto text = run("reject-scan");
    CHECK(text.status == 0);
    CHECK(text.out.find("oct rf vertex-figure") != std::string::npos);
    CHECK(text.out.find("oct ff disconnected") != std::string::npos);
    CHECK(text.out.find("dod2 - precheck-count") != std::string::npos);

    auto jsonOut = run("reject-scan --format json");
    CHECK(jsonOut.status == 0);
    json j = json::parse(jsonOut.out);
    CHECK(j.size() == 12);
}

TEST_CASE("catalogue lists the eighteen seeds") {
    auto text = run("catalogue");
    CHECK(text.status == 0);
    CHECK(countLines(text.out, "") == 18);

    auto jsonOut = run("catalogue --format json");
    json j = json::parse(jsonOut.out);
    REQUIRE(j.size() == 18);
    CHECK(j[0]["name"] == "Tetrahedron");
    CHECK(j[0]["type"] == "{3,3}_4");
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("--help").status == 0);
}
