// End-to-end checks of the installed command surface: subcommands, exit
// codes (0 ok, 2 usage, 3 data, 4 statistical precondition) and output
// shapes, driven through the real binary.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

#ifndef TRENDAUDIT_CLI_PATH
#define TRENDAUDIT_CLI_PATH "./trendaudit"
#endif
#ifndef TRENDAUDIT_SOURCE_DIR
#define TRENDAUDIT_SOURCE_DIR "."
#endif

struct CliResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TRENDAUDIT_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) output += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string demo(const char* name) {
    return (fs::path(TRENDAUDIT_SOURCE_DIR) / "data" / "demo" / name).string();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "trendaudit_cli_tests";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("version and usage errors") {
    CHECK(run_cli("--version").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("corr --a only_one.csv").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("corr on the demo walks") {
    const auto levels = run_cli("corr --a " + demo("drift_walk_a.csv") + " --b " +
                                demo("drift_walk_b.csv"));
    CHECK(levels.exit_code == 0);
    CHECK(levels.output.find("levels: r = ") != std::string::npos);

    const auto changes = run_cli("corr --a " + demo("drift_walk_a.csv") + " --b " +
                                 demo("drift_walk_b.csv") + " --changes");
    CHECK(changes.exit_code == 0);
    CHECK(changes.output.find("changes: r = ") != std::string::npos);
}

TEST_CASE("corr with a too-short overlap after differencing exits 4") {
    const fs::path dir = scratch_dir();
    std::ofstream(dir / "short_x.csv") << "time,value\n1900,1\n1901,2\n";
    std::ofstream(dir / "short_y.csv") << "time,value\n1900,3\n1901,5\n";
    const auto res = run_cli("corr --a " + (dir / "short_x.csv").string() + " --b " +
                             (dir / "short_y.csv").string() + " --changes");
    CHECK(res.exit_code == 4);
}

TEST_CASE("missing input file exits 3") {
    CHECK(run_cli("corr --a /nonexistent/x.csv --b /nonexistent/y.csv").exit_code == 3);
    CHECK(run_cli("adf --input /nonexistent/x.csv").exit_code == 3);
}

TEST_CASE("adf reports fail-to-reject on a unit-root series") {
    const auto res = run_cli("adf --input " + demo("drift_walk_a.csv") + " --lags 1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("fail to reject") != std::string::npos);
    CHECK(res.output.find("critical values") != std::string::npos);
}

TEST_CASE("adf rejects on differenced-like white noise") {
    const fs::path dir = scratch_dir();
    {
        std::ofstream out(dir / "noise.csv");
        out << "time,value\n";
        // deterministic pseudo-noise; stationary by construction
        double x = 0.5;
        for (int year = 1900; year <= 1980; ++year) {
            x = 4.0 * 0.9 * x * (1.0 - x);  // chaotic logistic map, bounded
            out << year << ',' << x << '\n';
        }
    }
    const auto res = run_cli("adf --input " + (dir / "noise.csv").string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("reject the unit-root null") != std::string::npos);
}

TEST_CASE("audit text output lands on stdout with a verdict") {
    const auto res = run_cli("audit --a " + demo("drift_walk_a.csv") + " --b " +
                             demo("drift_walk_b.csv"));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("verdict: ") != std::string::npos);
    CHECK(res.output.find("unit roots (ADF") != std::string::npos);
}

TEST_CASE("audit of the coupled pair is changes-consistent") {
    const auto res = run_cli("audit --a " + demo("coupled_with_b.csv") + " --b " +
                             demo("drift_walk_b.csv"));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("CHANGES_CONSISTENT") != std::string::npos);
}

TEST_CASE("audit json report is written and reruns identically") {
    const fs::path dir = scratch_dir();
    const std::string base = "audit --a " + demo("drift_walk_a.csv") + " --b " +
                             demo("drift_walk_b.csv") + " --walks 400 --seed 42 --out ";
    const fs::path r1 = dir / "r1.json";
    const fs::path r2 = dir / "r2.json";
    CHECK(run_cli(base + r1.string()).exit_code == 0);
    CHECK(run_cli(base + r2.string()).exit_code == 0);
    std::ifstream f1(r1, std::ios::binary), f2(r2, std::ios::binary);
    const std::string s1((std::istreambuf_iterator<char>(f1)), {});
    const std::string s2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(s1 == s2);
    CHECK(s1.find("\"verdict\":{") != std::string::npos);
}

TEST_CASE("audit json is byte-identical across kernel backends") {
    const fs::path dir = scratch_dir();
    const std::string base = "audit --a " + demo("drift_walk_a.csv") + " --b " +
                             demo("drift_walk_b.csv") + " --walks 300 --seed 7 --out ";
    const fs::path ra = dir / "r_auto.json";
    const fs::path rs = dir / "r_scalar.json";
    CHECK(run_cli(base + ra.string()).exit_code == 0);
    setenv("TRENDAUDIT_SIMD", "scalar", 1);
    CHECK(run_cli(base + rs.string()).exit_code == 0);
    unsetenv("TRENDAUDIT_SIMD");
    std::ifstream fa(ra, std::ios::binary), fsc(rs, std::ios::binary);
    const std::string sa((std::istreambuf_iterator<char>(fa)), {});
    const std::string ss((std::istreambuf_iterator<char>(fsc)), {});
    CHECK(sa == ss);
}

TEST_CASE("audit overlap floor exits 4") {
    const auto res = run_cli("audit --a " + demo("drift_walk_a.csv") + " --b " +
                             demo("drift_walk_b.csv") + " --min-overlap 500");
    CHECK(res.exit_code == 4);
}

TEST_CASE("simulate emits csv vectors") {
    const auto res = run_cli("simulate --target " + demo("drift_walk_b.csv") +
                             " --walks 50 --seed 9 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output.rfind("series,index,value", 0) == 0);
    CHECK(res.output.find("level_corr,49,") != std::string::npos);
}

TEST_CASE("ttr produces the documented csv schema and skips thin years") {
    const std::string args = "ttr --ngrams " + demo("ngrams_tiny.tsv") +
                             " --sample-size 1000 --min-corpus 1000 --seed 7";
    const auto res = run_cli(args);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("year,ttr,sampled_types,corpus_total,skipped") != std::string::npos);
    CHECK(res.output.find("1953,,,86,true") != std::string::npos);
    CHECK(res.output.find("insufficient corpus") != std::string::npos);
    const auto rerun = run_cli(args);
    CHECK(rerun.output == res.output);
}

TEST_CASE("simulate json carries the digest fields") {
    const auto res = run_cli("simulate --target " + demo("drift_walk_b.csv") +
                             " --walks 40 --seed 9 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"level_corr_share_gt_030\":") != std::string::npos);
    CHECK(res.output.find("\"rng_name\":") != std::string::npos);
    CHECK(res.output.find("\"level_hist\":{\"counts\":[") != std::string::npos);
}

TEST_CASE("ttr year range flags restrict ingestion") {
    const auto res = run_cli("ttr --ngrams " + demo("ngrams_tiny.tsv") +
                             " --sample-size 1000 --min-corpus 1000 --seed 7 "
                             "--year-min 1951 --year-max 1952");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("1950,") == std::string::npos);
    CHECK(res.output.find("1951,") != std::string::npos);
    CHECK(res.output.find("1952,") != std::string::npos);
    CHECK(res.output.find("1953,") == std::string::npos);
}

TEST_CASE("ttr with repeats appends the sd column") {
    const auto res = run_cli("ttr --ngrams " + demo("ngrams_tiny.tsv") +
                             " --sample-size 500 --min-corpus 1000 --seed 7 --repeats 5");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("year,ttr,sampled_types,corpus_total,skipped,ttr_sd") !=
          std::string::npos);
}

TEST_CASE("ttr sample larger than every corpus exits 4") {
    const auto res = run_cli("ttr --ngrams " + demo("ngrams_tiny.tsv") +
                             " --sample-size 5000 --min-corpus 5000 --seed 7");
    CHECK(res.exit_code == 4);
}

TEST_SUITE_END();
