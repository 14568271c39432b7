#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "isacl/dates.hpp"

using namespace isacl;
namespace fs = std::filesystem;

namespace {

const char* cli_path() { return ISACL_CLI_PATH; }

int run_cli(const std::string& args, const fs::path& stdout_file = {}) {
    std::string cmd = std::string("\"") + cli_path() + "\" " + args;
    if (stdout_file.empty()) {
        cmd += " >/dev/null 2>/dev/null";
    } else {
        cmd += " >\"" + stdout_file.string() + "\" 2>/dev/null";
    }
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path sandbox(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "isacl_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_series(const fs::path& dir, int days, double k = 1000.0,
                      const char* name = "series.csv") {
    const fs::path path = dir / name;
    std::ofstream out(path);
    out << "date,cumulative_cases\n";
    Date d = parse_date("2020-03-01");
    for (int t = 1; t <= days; ++t) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", k / (1.0 + std::exp(-0.2 * (t - 10))));
        out << format_date(d) << "," << buf << "\n";
        d = add_days(d, 1);
    }
    return path;
}

std::string slurp_without_created(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream kept;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# created", 0) == 0) continue;
        kept << line << "\n";
    }
    return kept.str();
}

const std::string kQuick = " --iters 3 --pop 4 --hidden1 3 --hidden2 3";

}  // namespace

TEST_CASE("cli: train writes a model and a trace") {
    const fs::path dir = sandbox("train");
    const fs::path data = write_series(dir, 20);
    const int rc = run_cli("train --data \"" + data.string() + "\" --algo ISA --seed 3" + kQuick +
                           " --out-dir \"" + (dir / "out").string() + "\"");
    CHECK(rc == 0);
    CHECK(fs::exists(dir / "out" / "model.txt"));
    CHECK(fs::exists(dir / "out" / "trace.csv"));

    std::ifstream trace(dir / "out" / "trace.csv");
    std::string line;
    std::getline(trace, line);
    CHECK(line.rfind("# created", 0) == 0);
    std::getline(trace, line);
    CHECK(line == "iteration,best_mse");
    int rows = 0;
    while (std::getline(trace, line)) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("cli: identical seeds give byte-identical outputs modulo timestamps") {
    const fs::path dir = sandbox("repro");
    const fs::path data = write_series(dir, 20);
    const std::string base = "train --data \"" + data.string() + "\" --algo ISACL --seed 5" +
                             kQuick + " --out-dir \"";
    CHECK(run_cli(base + (dir / "a").string() + "\"") == 0);
    CHECK(run_cli(base + (dir / "b").string() + "\"") == 0);

    CHECK(slurp_without_created(dir / "a" / "model.txt") ==
          slurp_without_created(dir / "b" / "model.txt"));
    CHECK(slurp_without_created(dir / "a" / "trace.csv") ==
          slurp_without_created(dir / "b" / "trace.csv"));
}

TEST_CASE("cli: evaluate and forecast consume a trained model") {
    const fs::path dir = sandbox("roundtrip");
    const fs::path data = write_series(dir, 20);
    const fs::path out = dir / "out";
    REQUIRE(run_cli("train --data \"" + data.string() + "\" --algo PSO --seed 2" + kQuick +
                    " --out-dir \"" + out.string() + "\"") == 0);
    const std::string model = (out / "model.txt").string();

    CHECK(run_cli("evaluate --model \"" + model + "\" --data \"" + data.string() +
                  "\" --out-dir \"" + out.string() + "\"") == 0);
    CHECK(fs::exists(out / "report.csv"));
    {
        std::ifstream report(out / "report.csv");
        std::string line;
        std::getline(report, line);  // # created
        std::getline(report, line);
        CHECK(line == "set,rmse,mae,mape,rmsre,r2");
        std::getline(report, line);
        CHECK(line.rfind("train,", 0) == 0);
        std::getline(report, line);
        CHECK(line.rfind("test,", 0) == 0);
    }

    const fs::path fc_stdout = dir / "forecast_stdout.txt";
    CHECK(run_cli("forecast --model \"" + model + "\" --horizon 4 --out-dir \"" + out.string() +
                      "\"",
                  fc_stdout) == 0);
    CHECK(fs::exists(out / "forecast.csv"));
    {
        std::ifstream csv(out / "forecast.csv");
        std::string line;
        std::getline(csv, line);  // # created
        std::getline(csv, line);
        CHECK(line == "date,forecast");
        int rows = 0;
        std::string first;
        while (std::getline(csv, line)) {
            if (rows == 0) first = line;
            ++rows;
        }
        CHECK(rows == 4);
        // 20-day series starting 2020-03-01: the forecast starts the 21st day
        CHECK(first.rfind("2020-03-21,", 0) == 0);
    }
}

TEST_CASE("cli: compare writes the three grid reports") {
    const fs::path dir = sandbox("compare");
    const fs::path data = write_series(dir, 20);
    const fs::path out = dir / "out";
    const int rc = run_cli("compare --data \"" + data.string() +
                           "\" --algos ISA,PSO --runs 2 --seed 1" + kQuick + " --out-dir \"" +
                           out.string() + "\"");
    CHECK(rc == 0);
    CHECK(fs::exists(out / "comparison.csv"));
    CHECK(fs::exists(out / "comparison_runs.csv"));
    CHECK(fs::exists(out / "comparison_plot.csv"));

    std::ifstream runs(out / "comparison_runs.csv");
    std::string line;
    std::getline(runs, line);  // # created
    std::getline(runs, line);
    CHECK(line.rfind("algorithm,seed,status", 0) == 0);
    int rows = 0;
    int ok = 0;
    while (std::getline(runs, line)) {
        ++rows;
        if (line.find(",ok,") != std::string::npos) ++ok;
    }
    CHECK(rows == 4);
    CHECK(ok == 4);
}

TEST_CASE("cli: usage errors exit with code 2") {
    const fs::path dir = sandbox("usage");
    const fs::path data = write_series(dir, 20);
    const std::string out_arg = " --out-dir \"" + (dir / "out").string() + "\"";

    CHECK(run_cli("") == 2);                 // missing subcommand
    CHECK(run_cli("explode") == 2);          // unknown subcommand
    CHECK(run_cli("train") == 2);            // missing --data
    CHECK(run_cli("train --data \"" + (dir / "absent.csv").string() + "\"") == 2);
    CHECK(run_cli("train --data \"" + data.string() + "\" --algo NOPE" + out_arg) == 2);
    CHECK(run_cli("train --data \"" + data.string() + "\" --bounds 5:1" + out_arg) == 2);
    CHECK(run_cli("train --data \"" + data.string() + "\" --bounds nonsense" + out_arg) == 2);
    CHECK(run_cli("train --data \"" + data.string() + "\" --split-date 2020-13-01" + out_arg) ==
          2);
    CHECK(run_cli("train --data \"" + data.string() + "\" --split-ratio 0.5 --split-date " +
                  "2020-03-10" + out_arg) == 2);  // mutually exclusive
    CHECK(run_cli("forecast --model \"" + (dir / "absent.txt").string() + "\"") == 2);
    CHECK(run_cli("compare --data \"" + data.string() + "\" --runs 0" + out_arg) == 2);
    CHECK(run_cli("--help") == 0);
}

TEST_CASE("cli: runtime failures exit with code 1") {
    const fs::path dir = sandbox("runtime");
    const fs::path out_arg = dir / "out";

    const fs::path bad = dir / "bad.csv";
    {
        std::ofstream o(bad);
        o << "wrong,header\n2020-03-01,1\n";
    }
    CHECK(run_cli("train --data \"" + bad.string() + "\" --out-dir \"" + out_arg.string() +
                  "\"") == 1);

    const fs::path gappy = dir / "gappy.csv";
    {
        std::ofstream o(gappy);
        o << "date,cumulative_cases\n2020-03-01,1\n2020-03-05,5\n";
    }
    CHECK(run_cli("train --data \"" + gappy.string() + "\" --out-dir \"" + out_arg.string() +
                  "\"") == 1);

    const fs::path data = write_series(dir, 20);
    CHECK(run_cli("train --data \"" + data.string() + "\" --split-ratio 0.01 --out-dir \"" +
                  out_arg.string() + "\"") == 1);  // empty training half

    // evaluate against a different series than the model was trained on
    REQUIRE(run_cli("train --data \"" + data.string() + "\" --algo ISA --seed 1" + kQuick +
                    " --out-dir \"" + out_arg.string() + "\"") == 0);
    const fs::path other = write_series(dir, 20, 2000.0, "other.csv");
    CHECK(run_cli("evaluate --model \"" + (out_arg / "model.txt").string() + "\" --data \"" +
                  other.string() + "\" --out-dir \"" + out_arg.string() + "\"") == 1);
}
