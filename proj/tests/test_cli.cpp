#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// MLRELAX_CLI is injected by CMake as the absolute path of the built binary.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(MLRELAX_CLI) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("eval: value, err_est, method on one line") {
    const auto r = run("eval --alpha 0.5 --t 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 16) == "0.42758357615580");
    CHECK(r.out.find(",series") != std::string::npos);
    CHECK(count_lines(r.out) == 1);
}

TEST_CASE("eval: trivial endpoint") {
    const auto r = run("eval --alpha 1 --t 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 2) == "1,");
}

TEST_CASE("eval: asymptotic method outside its regime exits 2") {
    const auto r = run("eval --alpha 0.5 --t 1 --method asymptotic");
    CHECK(r.exit_code == 2);
}

TEST_CASE("usage and domain errors exit 2") {
    CHECK(run("eval --alpha 1.5 --t 1").exit_code == 2);
    CHECK(run("eval --t 1").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("spectrum --alpha 1 --grid-lo 0.1 --grid-hi 2 --grid-n 5").exit_code == 2);
    CHECK(run("figures --which 13").exit_code == 2);
}

TEST_CASE("spectrum: header, non-negativity, pinned row") {
    const auto r = run("spectrum --alpha 0.5 --grid-lo 0.5 --grid-hi 1.5 --grid-n 3 --grid-linear");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "abscissa,density");
    bool saw_r1 = false;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        const double density = std::stod(line.substr(comma + 1));
        CHECK(density >= 0.0);
        if (line.substr(0, comma) == "1") {
            saw_r1 = true;
            CHECK(line.substr(comma + 1, 16) == "0.15915494309189");
        }
    }
    CHECK(saw_r1);
}

TEST_CASE("spectrum: sharply peaked near r = 1 for alpha -> 1") {
    const auto r = run("spectrum --alpha 0.9 --grid-lo 0.05 --grid-hi 2 --grid-n 40 --grid-linear");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    double peak_x = 0, peak_d = -1, total = 0;
    int rows = 0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        const double x = std::stod(line.substr(0, comma));
        const double d = std::stod(line.substr(comma + 1));
        total += d;
        ++rows;
        if (d > peak_d) {
            peak_d = d;
            peak_x = x;
        }
    }
    CHECK(std::abs(peak_x - 0.95) < 0.1);  // peak near (-cos 0.9 pi)^(1/0.9) ~ 0.945
    CHECK(peak_d > 5.0 * total / rows);    // pronounced peak over the mean
}

TEST_CASE("identical flags give byte-identical output") {
    const std::string flags = "bounds-scan --alpha 0.5,0.75 --grid-n 101";
    const auto a = run(flags);
    const auto b = run(flags);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("alpha,points,violations_lower,violations_upper,worst_signed_gap,skipped") ==
          0);
}

TEST_CASE("bounds-scan: exit 1 vs 2 vs 0 contract") {
    CHECK(run("bounds-scan --alpha 0.5 --grid-n 51").exit_code == 0);
    // a grid reaching t = 0 is a usage error, not a violation
    CHECK(run("bounds-scan --alpha 0.5 --grid-lo 0 --grid-hi 1 --grid-n 11 --grid-linear")
              .exit_code == 2);
    CHECK(run("bounds-scan --alpha 1.0 --grid-n 51").exit_code == 2);
}

TEST_CASE("solve: trajectory CSV plus summary") {
    const auto r = run("solve --alpha 1 --h 0.01 --horizon 1 --scheme caputo_gl");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("t,u_numeric,u_analytic,abs_err") == 0);
    CHECK(r.out.find("# max_abs_err=") != std::string::npos);
    CHECK(count_lines(r.out) == 1 + 101 + 1);  // header + nodes incl. t=0 + summary

    const auto rich = run("solve --alpha 0.5 --h 0.02 --horizon 1 --richardson");
    CHECK(rich.exit_code == 0);
    CHECK(rich.out.find("# observed_order=") != std::string::npos);
}

TEST_CASE("solve: rl_gl and caputo_gl summaries agree within tolerance") {
    auto grab_err = [](const std::string& out) {
        const auto pos = out.find("# max_abs_err=");
        return std::stod(out.substr(pos + 14));
    };
    const double e1 = grab_err(run("solve --alpha 0.75 --h 0.005 --horizon 2").out);
    const double e2 =
        grab_err(run("solve --alpha 0.75 --h 0.005 --horizon 2 --scheme rl_gl").out);
    CHECK(std::abs(e1 - e2) <= e1 + e2);  // both small, same magnitude regime
    CHECK(e1 < 0.05);
    CHECK(e2 < 0.05);
}

TEST_CASE("figures: emission and determinism") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "mlrelax_cli_test_figs";
    fs::remove_all(dir);
    const auto r =
        run("figures --which 2,5,8 --grid-n 201 --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "fig02.csv"));
    CHECK(fs::exists(dir / "fig05.csv"));
    CHECK(fs::exists(dir / "fig08.csv"));

    const std::string first = slurp(dir / "fig05.csv");
    CHECK(first.find("t,e,e0,einf,relerr_e0,relerr_einf") == 0);
    run("figures --which 5 --grid-n 201 --out " + dir.string());
    CHECK(slurp(dir / "fig05.csv") == first);

    // fig 8 rows carry the signed errors, non-negative under the sandwich
    std::istringstream in(slurp(dir / "fig08.csv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,e,f,g,relerr_f,relerr_g");
    while (std::getline(in, line)) {
        const auto last_comma = line.rfind(',');
        const auto prev_comma = line.rfind(',', last_comma - 1);
        CHECK(std::stod(line.substr(last_comma + 1)) >= 0.0);
        CHECK(std::stod(line.substr(prev_comma + 1, last_comma - prev_comma - 1)) >= 0.0);
    }
    fs::remove_all(dir);
}

TEST_CASE("validity: CSV of intervals") {
    const auto r = run("validity --alpha 0.25 --approximant pade_small --grid-n 101");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("approximant,threshold,t_lo,t_hi") == 0);
    CHECK(r.out.find("pade_small,0.01,1.0000000000000001e-05") != std::string::npos);
}

TEST_CASE("laplace: lhs matches rhs") {
    const auto r = run("laplace --alpha 0.25 --s 2");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string header, row;
    std::getline(in, header);
    CHECK(header == "s,lhs,rhs,rel_diff");
    std::getline(in, row);
    const auto last = row.rfind(',');
    CHECK(std::stod(row.substr(last + 1)) < 1e-8);
    CHECK(row.find("0.27160680843147") != std::string::npos);
}

TEST_CASE("tolerance: flag wins over MLRELAX_TOL") {
    // a loose env tolerance inflates err_est; the flag must override it
    auto err_of = [](const RunResult& r) {
        const auto c1 = r.out.find(',');
        const auto c2 = r.out.find(',', c1 + 1);
        return std::stod(r.out.substr(c1 + 1, c2 - c1 - 1));
    };
    const auto env_only = run("eval --alpha 0.5 --t 0.5", "MLRELAX_TOL=1e-4");
    const auto flag_wins = run("eval --alpha 0.5 --t 0.5 --tol 1e-12", "MLRELAX_TOL=1e-4");
    CHECK(env_only.exit_code == 0);
    CHECK(flag_wins.exit_code == 0);
    CHECK(err_of(env_only) > 1e-6);
    CHECK(err_of(flag_wins) < 1e-11);
    CHECK(run("eval --alpha 0.5 --t 0.5", "MLRELAX_TOL=banana").exit_code == 2);
}
