#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "spherequant/geometry.hpp"

using namespace spherequant;
using doctest::Approx;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("SPHEREQUANT_CLI");
    REQUIRE_MESSAGE(env != nullptr, "SPHEREQUANT_CLI must point at the binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    std::unique_ptr<FILE, decltype(&pclose)> pipe(popen(cmd.c_str(), "r"), pclose);
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 256> buf;
    while (fgets(buf.data(), int(buf.size()), pipe.get()) != nullptr) out += buf.data();
    const int status = pclose(pipe.release());
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double grab(const std::string& out, const std::string& key) {
    const auto pos = out.find(key + " = ");
    REQUIRE(pos != std::string::npos);
    return std::stod(out.substr(pos + key.size() + 3));
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("spherequant_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("closed-form emits the expected CSV rows") {
    const auto res = run("closed-form --great-circle --n 3");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("n,L,V_n") != std::string::npos);
    CHECK(res.out.find("3,") != std::string::npos);
    CHECK(std::stod(res.out.substr(res.out.rfind(',') + 1)) == Approx(kPi * kPi / 27).epsilon(1e-9));

    const auto small = run("closed-form --small-circle --lat 1.0471975512 --n 4");
    CHECK(std::stod(small.out.substr(small.out.rfind(',') + 1)) ==
          Approx(kPi * kPi / 192).epsilon(1e-9));

    const auto arc = run("closed-form --arc --length 3.1415926536 --n 2");
    CHECK(std::stod(arc.out.substr(arc.out.rfind(',') + 1)) ==
          Approx(kPi * kPi / 48).epsilon(1e-9));

    const auto deg = run("closed-form --small-circle --lat 60 --degrees --n 4");
    CHECK(std::stod(deg.out.substr(deg.out.rfind(',') + 1)) ==
          Approx(kPi * kPi / 192).epsilon(1e-9));
}

TEST_CASE("flag validation exits nonzero") {
    CHECK(run("closed-form --n 3").exit_code != 0);                    // no support kind
    CHECK(run("closed-form --great-circle --arc --length 1 --n 3").exit_code != 0);
    CHECK(run("closed-form --great-circle --n 0").exit_code != 0);     // n < 1
    CHECK(run("nonsense").exit_code != 0);
    CHECK(run("").exit_code != 0);
    CHECK(run("lloyd --input /nonexistent.json --n 2").exit_code == 1);
}

TEST_CASE("sample then lloyd round-trips through files") {
    TempDir tmp;
    const auto sampled = run("sample --great-circle --m 3 --output " + tmp.file("eq3.json"));
    CHECK(sampled.exit_code == 0);

    const auto res = run("lloyd --input " + tmp.file("eq3.json") + " --n 3 --output " +
                         tmp.file("res.json"));
    CHECK(res.exit_code == 0);
    CHECK(grab(res.out, "distortion") == 0.0);
    CHECK(slurp(tmp.file("res.json")).find("\"assignment\"") != std::string::npos);

    // n >= m keeps the distortion at zero
    const auto over = run("lloyd --input " + tmp.file("eq3.json") + " --n 7");
    CHECK(grab(over.out, "distortion") == 0.0);
}

TEST_CASE("lloyd with restarts reaches the contiguous optimum on the equator") {
    TempDir tmp;
    run("sample --great-circle --m 60 --output " + tmp.file("eq.json"));
    const auto ll = run("lloyd --input " + tmp.file("eq.json") + " --n 3 --restarts 10");
    CHECK(ll.exit_code == 0);
    const auto dp = run("contiguous --input " + tmp.file("eq.json") +
                        " --great-circle --n 3 --output " + tmp.file("dp.json"));
    CHECK(dp.exit_code == 0);
    CHECK(grab(ll.out, "distortion") ==
          Approx(grab(dp.out, "distortion")).epsilon(1e-9));
}

TEST_CASE("contiguous on a sampled arc matches the closed form") {
    TempDir tmp;
    run("sample --arc --length 3.14159265358979 --m 9 --output " + tmp.file("arc.json"));
    const auto res = run("contiguous --input " + tmp.file("arc.json") +
                         " --arc --length 3.14159265358979 --n 3");
    CHECK(res.exit_code == 0);
    const double expected = (kPi * kPi / 108) * (1 - 1.0 / 9.0);
    CHECK(grab(res.out, "distortion") == Approx(expected).epsilon(1e-6));

    // points must actually lie on the declared support
    const auto off = run("contiguous --input " + tmp.file("arc.json") +
                         " --small-circle --lat 0.5 --n 3");
    CHECK(off.exit_code == 1);
}

TEST_CASE("examples subcommand passes and exits zero") {
    const auto res = run("examples");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("FAIL") == std::string::npos);
    CHECK(res.out.find("OK") != std::string::npos);
}

TEST_CASE("dimension consumes closed-form output") {
    TempDir tmp;
    const auto table =
        run("closed-form --great-circle --n 2 --n-max 64 --output " + tmp.file("seq.csv"));
    CHECK(table.exit_code == 0);
    const auto dim = run("dimension --input " + tmp.file("seq.csv") + " --s 1");
    CHECK(dim.exit_code == 0);
    CHECK(grab(dim.out, "dimension") == Approx(1.0).epsilon(1e-6));
    CHECK(dim.out.find("coefficient window") != std::string::npos);

    std::ofstream(tmp.file("tiny.csv")) << "n,V,r\n2,0.5,2\n4,0.125,2\n";
    CHECK(run("dimension --input " + tmp.file("tiny.csv")).exit_code == 1);

    std::ofstream(tmp.file("quartic.csv")) << "n,V,r\n2,0.0625,2\n4,0.00390625,2\n8,"
                                               "0.000244140625,2\n16,1.52587890625e-05,2\n";
    const auto quartic = run("dimension --input " + tmp.file("quartic.csv"));
    CHECK(grab(quartic.out, "dimension") == Approx(0.5).epsilon(1e-6));
}

TEST_CASE("runs are deterministic: identical bytes for identical flags") {
    TempDir tmp;
    run("sample --small-circle --lat 0.5 --m 17 --output " + tmp.file("a.json"));
    run("sample --small-circle --lat 0.5 --m 17 --output " + tmp.file("b.json"));
    CHECK(slurp(tmp.file("a.json")) == slurp(tmp.file("b.json")));

    run("lloyd --input " + tmp.file("a.json") + " --n 4 --seed 3 --output " + tmp.file("r1.json"));
    run("lloyd --input " + tmp.file("a.json") + " --n 4 --seed 3 --output " + tmp.file("r2.json"));
    CHECK(slurp(tmp.file("r1.json")) == slurp(tmp.file("r2.json")));
}

TEST_CASE("strict mode reports non-convergence with exit code 2") {
    TempDir tmp;
    run("sample --great-circle --m 40 --output " + tmp.file("eq.json"));
    const auto res = run("lloyd --input " + tmp.file("eq.json") +
                         " --n 4 --max-iter 1 --tol 0 --strict");
    CHECK(res.exit_code == 2);
    CHECK(res.out.find("converged = false") != std::string::npos);
}
