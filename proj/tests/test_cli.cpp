#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mpk/kostka.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace mpk;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(MPKOSTKA_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    static fs::path d = [] {
        fs::path p = fs::temp_directory_path() / "mpk_cli_test";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return d;
}

}  // namespace

TEST_CASE("table") {
    Run r = run("table --n 2 --r 2 --sign minus --method solve");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["order"].size() == 5);

    r = run("table --n 1 --r 2 --sign minus --method pf");
    REQUIRE(r.code == 0);
    auto t = table_from_json(nlohmann::json::parse(r.out));
    CHECK(t.k(0, 0).is_one());
    CHECK(t.k(1, 1).is_one());
    CHECK(t.k(0, 1).to_string() == "t1");
    CHECK(t.k(1, 0).is_zero());

    r = run("table --n 2 --r 2 --params t1=t,t2=t");
    REQUIRE(r.code == 0);
    CHECK(table_from_json(nlohmann::json::parse(r.out)).ring->name(0) == "t");
}

TEST_CASE("bounds and usage errors") {
    CHECK(run("table --n 0 --r 2").code == 2);
    CHECK(run("table --n 9 --r 2").code == 2);
    CHECK(run("table --n 2 --r 5").code == 2);
    CHECK(run("table --n 2 --r 2 --sign sideways").code == 2);
    CHECK(run("table --n 2 --r 2 --method solve --m 3").code == 2);
    CHECK(run("verify --suite nope").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("verify") {
    CHECK(run("verify --suite kostka-threeway --n-max 3 --r 2").code == 0);
    CHECK(run("verify --suite cauchy --n-max 2").code == 0);
    Run r = run("verify --suite positivity --n-max 4 --r 3");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["ok"] == true);
    r = run("verify --suite plus-twoway --n-max 1 --r 3");
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["ok"] == false);
}

TEST_CASE("specialize") {
    fs::path d = scratch();
    REQUIRE(run("table --n 2 --r 2 --out " + (d / "k.json").string()).code == 0);
    REQUIRE(run("table --n 2 --r 2 --format csv --out " + (d / "k.csv").string()).code == 0);
    auto from_json = table_from_json(nlohmann::json::parse(slurp(d / "k.json")));
    auto from_csv = table_from_csv(slurp(d / "k.csv"));
    CHECK(table_to_json(from_json) == table_to_json(from_csv));

    Run r = run("specialize --in " + (d / "k.json").string() + " --params t1=t,t2=t");
    REQUIRE(r.code == 0);
    auto spec = nlohmann::json::parse(r.out);
    CHECK(spec["source"] == (d / "k.json").string());
    Run uni = run("table --n 2 --r 2 --params t1=t,t2=t");
    CHECK(spec["entries"] == nlohmann::json::parse(uni.out)["entries"]);

    r = run("specialize --in " + (d / "k.csv").string() + " --params t1=t1,t2=t2");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["entries"] == nlohmann::json::parse(slurp(d / "k.json"))["entries"]);

    CHECK(run("specialize --in " + (d / "k.json").string() + " --params 't1=('").code == 2);
    CHECK(run("specialize --in " + (d / "missing.json").string() + " --params t1=t").code == 2);
}

TEST_CASE("output does not depend on the number of jobs") {
    for (const char* m : {"solve", "pf"}) {
        std::string base = std::string("table --n 3 --r 3 --method ") + m;
        Run a = run(base + " --jobs 1"), b = run(base + " --jobs 8");
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("config file") {
    fs::path d = scratch();
    std::ofstream(d / "run.toml") << "n = 1\nr = 2\nmethod = \"pf\"\n";
    Run a = run("table --config " + (d / "run.toml").string());
    REQUIRE(a.code == 0);
    CHECK(nlohmann::json::parse(a.out)["n"] == 1);
    Run b = run("table --config " + (d / "run.toml").string() + " --n 2");
    REQUIRE(b.code == 0);
    CHECK(nlohmann::json::parse(b.out)["n"] == 2);
}
