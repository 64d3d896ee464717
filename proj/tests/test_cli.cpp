#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(NSMAC_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("rank one polynomials") {
    Run r = run("E --system A1 --weight -1 --spec exact");
    CHECK(r.code == 0);
    CHECK(r.out == "e[-1] + ((1 - t^-1)/(1 - q^-1 t^-1)) e[1]\n");
    r = run("E --system A1 --weight 1 --spec exact");
    CHECK(r.code == 0);
    CHECK(r.out == "e[1]\n");
    r = run("E --system A1 --weight -1 --spec inf_inf");
    CHECK(r.out == "e[-1] + e[1]\n");
    r = run("P --system A1 --weight -1");
    CHECK(r.out == "e[-1] + e[1]\n");
}

TEST_CASE("output is deterministic") {
    Run a = run("E --system A2 --weight 1,-2 --format json");
    Run b = run("E --system A2 --weight 1,-2 --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == "v1");
    CHECK(j["weight"] == nlohmann::json::array({1, -2}));
    CHECK(run("spec --system A2 --weight 1,-2").out == run("spec --system A2 --weight 1,-2").out);
}

TEST_CASE("cache directory") {
    auto dir = std::filesystem::temp_directory_path() / "nsmac_cli_cache";
    std::filesystem::remove_all(dir);
    Run first = run("E --system A2 --weight 1,-2 --cache-dir " + dir.string());
    auto file = dir / "A2" / "w=1,-2" / "exact.json";
    REQUIRE(std::filesystem::exists(file));
    std::string stored = slurp(file);
    Run second = run("E --system A2 --weight 1,-2 --cache-dir " + dir.string());
    CHECK(first.out == second.out);
    CHECK(slurp(file) == stored);
    std::filesystem::remove_all(dir);
}

TEST_CASE("Kazhdan-Lusztig tables") {
    Run r = run("kl --system A1 --weight -1");
    CHECK(r.code == 0);
    CHECK(r.out.find("t^(-1/2)") != std::string::npos);
    r = run("kl --system A1 --weight -1 --format json");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 2);
    r = run("kl --system A2 --weight -1,-1 --conjecture");
    CHECK(r.out.find("conjectural, not asserted") != std::string::npos);
    // independent parameters: no degree-bounded solution
    CHECK(run("kl --system B2 --weight -2,1").code == 4);
    CHECK(run("kl --system B2 --weight -2,1 --mode equal").code == 0);
}

TEST_CASE("pairings") {
    CHECK(run("pair --system A1 --weight -1 --with 1").out == "0\n");
    CHECK(run("pair --system A1 --weight 1 --with 1").out == "1\n");
    Run q = run("pair --system A1 --weight -1 --with 1 --kernel q -D 6");
    CHECK(q.code == 0);
    CHECK(q.out.rfind("0  (mod", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run("E --system Z3 --weight 1").code == 2);
    CHECK(run("E --system A2 --weight 1").code == 2);
    CHECK(run("E --system A2 --weight 1,x").code == 2);
    CHECK(run("E --system A1 --weight 1 --spec bogus").code == 2);
    CHECK(run("P --system A1 --weight 1").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("pair --system A1 --weight 1 --kernel q -D 0").code == 3);
    CHECK(run("verify --suite nonexistent").code == 2);
}

TEST_CASE("verify") {
    Run r = run("verify --system A2 --suite polynomiality --radius 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("polynomiality: PASS") != std::string::npos);
    r = run("verify --system A1 --suite relations --suite combinatorics --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["suites"].size() == 2);
    // the obstruction in type B2 is reported as a failure
    CHECK(run("verify --system B2 --suite kl --radius 1").code == 4);
}
