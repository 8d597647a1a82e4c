#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(OPA_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("approx: worked example and JSON schema") {
    auto r = run_cli("approx --alpha 0 --zeros 1,0 --n 0");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["distance_sq"].get<double>() == doctest::Approx(0.5));
    CHECK(j["n"] == 0);
    CHECK(j["d"] == 1);
    CHECK(j["residual_coeffs"].size() == 2);
    CHECK(j["pn_coeffs"][0][0].get<double>() == doctest::Approx(-0.5));
}

TEST_CASE("approx: multiplicity pipeline") {
    auto r = run_cli("approx --alpha 0 --mult 2 --n 0");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["distance_sq"].get<double>() == doctest::Approx(5.0 / 6.0));
    CHECK(j["pn_coeffs"][0][0].get<double>() == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("approx: zero at the origin is rejected with exit 2") {
    CHECK(run_cli("approx --alpha 0 --zeros 0,0 --n 0").exit_code == 2);
    CHECK(run_cli("approx --alpha 0 --n 0").exit_code == 2);          // neither zeros nor mult
    CHECK(run_cli("approx --alpha 0 --zeros 1,0 --mult 2 --n 0").exit_code == 2);
}

TEST_CASE("sweep: empty range exits 2, valid sweep emits CSV") {
    CHECK(run_cli("sweep --alpha 0 --zeros 1,0 --n 5..3").exit_code == 2);

    auto r = run_cli("sweep --alpha 0 --zeros 1,0 --n 0..4 --compact point:0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("n,sup_K,wiener,dist_sq,bound\n", 0) == 0);
    // five data rows
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 6);
}

TEST_CASE("verify: exit codes") {
    CHECK(run_cli("verify --cases 0").exit_code == 2);
    CHECK(run_cli("verify --seed 7 --cases 6 --alpha 0 --n-max 8 --d-max 3").exit_code == 0);
}

TEST_CASE("asymptotics: alpha out of domain exits 2") {
    CHECK(run_cli("asymptotics --alpha 1.5 --mult 2").exit_code == 2);
    auto r = run_cli("asymptotics --alpha 0 --mult 1 --n-max 40");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("n,ratio,limit,abs_err\n", 0) == 0);
}

TEST_CASE("kernel: debug evaluation") {
    auto r = run_cli("kernel --alpha 0 --m 2 --z 1,0 --w 1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3") != std::string::npos);
}

TEST_CASE("deterministic output files") {
    const std::string f1 = "cli_det_1.json", f2 = "cli_det_2.json";
    CHECK(run_cli("approx --alpha -1 --zeros 1,0;-1,0 --n 7 --out " + f1).exit_code == 0);
    CHECK(run_cli("approx --alpha -1 --zeros 1,0;-1,0 --n 7 --out " + f2).exit_code == 0);
    std::ifstream a(f1), b(f2);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    CHECK(!sa.empty());
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("OPA_BACKEND environment override") {
    const std::string cmd = "OPA_BACKEND=ext:40 " + std::string(OPA_CLI_PATH) +
                            " approx --alpha 0 --zeros 1,0 --n 0 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    pclose(pipe);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["backend"] == "ext:40");
}
