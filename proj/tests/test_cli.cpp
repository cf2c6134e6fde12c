#include "homolab/io.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using homolab::Json;

namespace {

namespace fs = std::filesystem;

struct Run {
    int code = -1;
    std::string out;
};

fs::path workdir()
{
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / ("homolab_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

Run run(const std::string& args)
{
    std::string cmd = std::string(HOMOLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write(const std::string& name, const std::string& text)
{
    fs::path p = workdir() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kSphere = R"({"maximal_simplices": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]]})";
const char* kTriangle = R"({"dim": 1, "coefficients": {"0,1": 1, "1,2": 1, "0,2": -1}})";

}  // namespace

TEST_CASE("generate output feeds resistance")
{
    std::string b = (workdir() / "b22.json").string();
    Run g = run("generate --family Bdn --d 2 --n 2 --out " + b);
    REQUIRE(g.code == 0);
    Json doc = homolab::read_json_file(b);
    CHECK(doc.contains("maximal_simplices"));
    CHECK(doc["gamma_norm2"] == "3");
    std::string gamma = write("g22.json", doc["gamma"].dump());
    Run r = run("resistance --input " + b + " --gamma " + gamma);
    REQUIRE(r.code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep["result"]["finite"] == true);
    CHECK(rep["result"]["resistance"] == "61");
    CHECK(rep["plan"]["command"] == "resistance");
}

TEST_CASE("Betti methods agree through the CLI")
{
    std::string k = write("sphere.json", kSphere);
    Run r = run("betti --input " + k + " --dim 2 --method all");
    REQUIRE(r.code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep["agree"] == true);
    CHECK(rep["hodge"] == 1);
}

TEST_CASE("span-sim decisions match the classical tester on every input")
{
    std::string k = write("sphere.json", kSphere);
    std::string g = write("tri.json", kTriangle);
    Run r = run("span-sim --input " + k + " --gamma " + g + " --all-instances --seed 5");
    REQUIRE(r.code == 0);
    Json rep = Json::parse(r.out);
    REQUIRE(rep["instances"].size() == 16);
    for (const auto& row : rep["instances"]) CHECK(row["agree"] == true);
}

TEST_CASE("verify suites report success")
{
    Run r = run("verify --suite appendixB");
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["report"]["all_pass"] == true);
}

TEST_CASE("usage and input errors exit with 1")
{
    std::string k = write("sphere.json", kSphere);
    CHECK(run("betti --input " + k + " --dim -1").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("betti --input " + k + " --dim 1 --bogus").code == 1);
    std::string bad = write("bad.json", "{\"maximal_simplices\": [[0, 1]");
    CHECK(run("betti --input " + bad + " --dim 0").code == 1);
    CHECK(run("verify --suite nonexistent").code == 1);
}

TEST_CASE("identical plans produce identical bytes")
{
    std::string a = (workdir() / "pq.json").string();
    REQUIRE(run("generate --family PQ --d 2 --n 2 --out " + a).code == 0);
    std::string first = slurp(a);
    REQUIRE(run("generate --family PQ --d 2 --n 2 --out " + a).code == 0);
    CHECK(first == slurp(a));
    std::string k = write("sphere.json", kSphere);
    std::string g = write("tri.json", kTriangle);
    Run x = run("span-sim --input " + k + " --gamma " + g + " --x 1110 --seed 9");
    Run y = run("span-sim --input " + k + " --gamma " + g + " --x 1110 --seed 9");
    CHECK(x.code == 0);
    CHECK(x.out == y.out);
}

TEST_CASE("sweep writes a CSV growth table")
{
    std::string csv = (workdir() / "sweep.csv").string();
    REQUIRE(run("sweep --family Bdn --d 2 --n-max 3 --csv " + csv).code == 0);
    std::string text = slurp(csv);
    CHECK(text.rfind("n,lambda_min,resistance,capacitance\n", 0) == 0);
    CHECK(text.find("\n2,0.0287330774994,20.3333333333,\n") != std::string::npos);
}

TEST_CASE("duality command checks every valid subcomplex")
{
    std::string k = write("dual.json", R"({"maximal_simplices": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]],
        "voids": [{"dim": 2, "coefficients": {"1,2,3": 1, "0,2,3": -1, "0,1,3": 1, "0,1,2": -1}}],
        "gamma1": {"dim": 2, "coefficients": {"0,1,2": -1}},
        "gamma2": {"dim": 2, "coefficients": {"1,2,3": 1, "0,2,3": -1, "0,1,3": 1}}})");
    Run r = run("duality --input " + k);
    REQUIRE(r.code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep["checks"].size() == 7);
    for (const auto& row : rep["checks"]) CHECK(row["capacitance"] == row["dual_resistance"]);
    std::string bad = write("dual_bad.json", R"({"maximal_simplices": [[0,1,2]], "voids": []})");
    CHECK(run("duality --input " + bad).code == 1);
}
