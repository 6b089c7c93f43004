#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HBM_BINARY_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// minimal JSON-schema checker covering the subset the shipped schema uses
bool conforms(const nlohmann::json& inst, const nlohmann::json& schema, std::string& why) {
    if (schema.contains("type")) {
        std::string t = schema["type"];
        bool ok = (t == "object" && inst.is_object()) || (t == "array" && inst.is_array()) ||
                  (t == "string" && inst.is_string()) ||
                  (t == "integer" && inst.is_number_integer());
        if (!ok) {
            why = "type mismatch, expected " + t + " got " + inst.dump().substr(0, 40);
            return false;
        }
    }
    if (schema.contains("minimum") && inst.is_number() &&
        inst.get<double>() < schema["minimum"].get<double>()) {
        why = "minimum violated";
        return false;
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            if (!inst.contains(key.get<std::string>())) {
                why = "missing required key " + key.get<std::string>();
                return false;
            }
        }
    }
    if (schema.contains("properties") && inst.is_object()) {
        for (auto& [key, sub] : schema["properties"].items()) {
            if (inst.contains(key) && !conforms(inst[key], sub, why)) {
                why = key + ": " + why;
                return false;
            }
        }
    }
    if (inst.is_array()) {
        if (schema.contains("minItems") && inst.size() < schema["minItems"].get<std::size_t>()) {
            why = "minItems violated";
            return false;
        }
        if (schema.contains("maxItems") && inst.size() > schema["maxItems"].get<std::size_t>()) {
            why = "maxItems violated";
            return false;
        }
        if (schema.contains("items")) {
            for (const auto& el : inst)
                if (!conforms(el, schema["items"], why)) {
                    why = "items: " + why;
                    return false;
                }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("solve text report") {
    RunResult r = run("solve --m 0 --order 2 --digits 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("C_N = 5.15389") != std::string::npos);
    CHECK(r.out.find("omega = 1.21911") != std::string::npos);
    CHECK(r.out.find("univariate degree: 4") != std::string::npos);
}

TEST_CASE("solve json output validates against the shipped schema") {
    RunResult r = run("solve --m 0 --order 3 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["univariate_degree"] == 8);
    nlohmann::json schema = nlohmann::json::parse(
        slurp(std::filesystem::path(HBM_SCHEMA_DIR) / "solve_result.schema.json"));
    std::string why;
    bool ok = conforms(j, schema, why);
    INFO(why);
    CHECK(ok);
}

TEST_CASE("validation failures exit with code 2") {
    CHECK(run("solve --m 0 --order 1 --amplitude 0").exit_code == 2);
    CHECK(run("solve --m 0 --order 0").exit_code == 2);
    CHECK(run("period --amplitude -1 --method exact").exit_code == 2);
    CHECK(run("period --amplitude 1 --method quadrature").exit_code == 2);  // k missing
    CHECK(run("period --amplitude 1 --k -1 --method quadrature").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("budget exhaustion exits with code 3") {
    RunResult r = run("solve --m 0 --order 3 --budget-spairs 1");
    CHECK(r.exit_code == 3);
}

TEST_CASE("io failures exit with code 4") {
    RunResult r = run("solve --m 0 --order 1 --out /nonexistent-dir/x/y.txt");
    CHECK(r.exit_code == 4);
}

TEST_CASE("period methods agree") {
    RunResult exact = run("period --amplitude 1 --method exact");
    CHECK(exact.exit_code == 0);
    CHECK(exact.out.find("exact 5.013256549262") != std::string::npos);
    RunResult both = run("period --amplitude 1 --k 0.01 --method quadrature --method ode");
    CHECK(both.exit_code == 0);
    double q = 0, o = 0;
    REQUIRE(std::sscanf(both.out.c_str(), "quadrature %lf err<=%*s ode %lf", &q, &o) >= 1);
    auto odepos = both.out.find("ode ");
    REQUIRE(odepos != std::string::npos);
    std::sscanf(both.out.c_str() + odepos, "ode %lf", &o);
    CHECK(std::abs(q - o) / q <= 1e-6);
}

TEST_CASE("table outputs") {
    RunResult text = run("table --max-m 0 --max-order 1");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("11.38") != std::string::npos);
    RunResult csv = run("table --max-m 1 --max-order 2 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("m,N,C_N,error_percent\n", 0) == 0);
    auto row = csv.out.find("\n0,2,");
    REQUIRE(row != std::string::npos);
    double c_n = 0, err = 0;
    REQUIRE(std::sscanf(csv.out.c_str() + row, "\n0,2,%lf,%lf", &c_n, &err) == 2);
    CHECK(std::abs(c_n - 5.1538955) < 1e-6);
    CHECK(std::abs(err - 2.80) <= 0.011);
    RunResult empty = run("table --max-m 2 --max-order 0");
    CHECK(empty.exit_code == 0);
}

TEST_CASE("emit weaksol produces the documented format with branch zeros") {
    auto dir = std::filesystem::temp_directory_path() / "hbm_cli_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "phi.csv";
    RunResult r = run("emit weaksol --amplitude 1 --from -8 --to 8 --step 0.01 --out " +
                      path.string());
    CHECK(r.exit_code == 0);
    std::string csv = slurp(path);
    CHECK(csv.rfind("t,x\n", 0) == 0);
    // x changes sign at t = +-sqrt(2 pi)/2 = +-1.2533, and is tiny nearby
    double worst = 1.0;
    double prev_t = 0, prev_x = 0;
    bool have_prev = false, sign_change = false;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        double t, x;
        if (std::sscanf(line.c_str(), "%lf,%lf", &t, &x) != 2) continue;
        if (std::abs(t - 1.2533) < 0.02 || std::abs(t + 1.2533) < 0.02) {
            worst = std::min(worst, std::abs(x));
            if (have_prev && std::abs(prev_t - t) < 0.02 && prev_x * x < 0) sign_change = true;
        }
        prev_t = t;
        prev_x = x;
        have_prev = true;
    }
    CHECK(worst < 2e-2);
    CHECK(sign_change);
}

TEST_CASE("emit trajectory single and swept") {
    auto dir = std::filesystem::temp_directory_path() / "hbm_cli_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "traj.csv";
    RunResult r = run("emit trajectory --amplitude 1 --k 0.02 --t-max 20 --out " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(path).rfind("t,x,y\n", 0) == 0);

    RunResult sweep = run("emit trajectory --amplitude 1 --k 1 --k 0.02 --k 0.001 --t-max 5 --out " +
                          (dir / "sweep.csv").string());
    CHECK(sweep.exit_code == 0);
    for (const char* name : {"sweep_k1.csv", "sweep_k0.02.csv", "sweep_k0.001.csv"})
        CHECK(slurp(dir / name).rfind("t,x,y\n", 0) == 0);
}

TEST_CASE("fixed configuration gives identical bytes") {
    RunResult a = run("solve --m 1 --order 2 --digits 18 --format json");
    RunResult b = run("solve --m 1 --order 2 --digits 18 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto dir = std::filesystem::temp_directory_path() / "hbm_cli_test";
    std::filesystem::create_directories(dir);
    run("emit weaksol --amplitude 1 --from 0 --to 2 --step 0.1 --out " + (dir / "d1.csv").string());
    run("emit weaksol --amplitude 1 --from 0 --to 2 --step 0.1 --out " + (dir / "d2.csv").string());
    CHECK(slurp(dir / "d1.csv") == slurp(dir / "d2.csv"));
}
