#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fractrace/extension.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace fractrace;
namespace fs = std::filesystem;

namespace {

const fs::path work = fs::temp_directory_path() / "fractrace_cli_test";

int run(const std::string& args) {
    std::string cmd = std::string(FRACTRACE_CLI) + " " + args + " >" + (work / "stdout.txt").string() + " 2>" +
                      (work / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Setup {
    Setup() { fs::create_directories(work); }
};
const Setup setup;

}  // namespace

TEST_CASE("integer gamma is a configuration error") {
    CHECK(run("verify --gamma 2") == 2);
    CHECK(run("verify --gamma -1/2") == 2);
    CHECK(run("verify --bogus") == 2);
}

TEST_CASE("verify passes on a small sweep and writes a report") {
    fs::path out = work / "report.json";
    CHECK(run("verify --gamma 1/2,3/2,7/3 --n 1 --out " + out.string()) == 0);
    auto j = nlohmann::json::parse(slurp(out));
    REQUIRE(j.is_array());
    bool saw_identity = false, saw_numeric = false;
    for (const auto& r : j) {
        CHECK(r["status"] == "pass");
        if (r["check"] == "closed_forms") saw_identity = true;
        if (r["check"] == "energy_trace") saw_numeric = true;
    }
    CHECK(saw_identity);
    CHECK(saw_numeric);
}

TEST_CASE("only filters the suites") {
    fs::path out = work / "ident.json";
    CHECK(run("verify --gamma 7/3 --only identities --out " + out.string()) == 0);
    for (const auto& r : nlohmann::json::parse(slurp(out))) CHECK(r["check"] != "energy_trace");
    CHECK(run("verify --gamma 7/3 --only nonsense") == 2);
}

TEST_CASE("csv output") {
    fs::path out = work / "ident.csv";
    CHECK(run("verify --gamma 1/3 --only identities --format csv --out " + out.string()) == 0);
    std::string text = slurp(out);
    CHECK(text.find("closed_forms") != std::string::npos);
}

TEST_CASE("dtn matches fraclap through files") {
    GridField f = gaussian_field(1, 256, 40.0, 1.0, 2.0);
    fs::path in = work / "f.bin", dtn = work / "dtn.bin", lap = work / "lap.bin";
    save_grid(f, in.string());
    REQUIRE(run("dtn --gamma 1/2 --in " + in.string() + " --out " + dtn.string()) == 0);
    REQUIRE(run("fraclap --power 1/2 --in " + in.string() + " --out " + lap.string()) == 0);
    GridField a = load_grid(dtn.string()), b = load_grid(lap.string());
    REQUIRE(a.same_grid(b));
    double err = 0, scale = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        err = std::max(err, std::fabs(a.values[i] - b.values[i]));
        scale = std::max(scale, std::fabs(b.values[i]));
    }
    CHECK(err <= 1e-6 * scale);
}

TEST_CASE("extend writes slices and a summary") {
    GridField f = gaussian_field(1, 128, 30.0, 1.0, 1.5);
    fs::path in = work / "g.bin", prefix = work / "ext";
    save_grid(f, in.string());
    CHECK(run("extend --gamma 1/3 --in " + in.string() + " --y 0.5,1 --out " + prefix.string()) == 0);
    CHECK(fs::exists(prefix.string() + "_y0.bin"));
    CHECK(fs::exists(prefix.string() + "_y1.bin"));
    CHECK(fs::exists(prefix.string() + "_summary.json"));
}

TEST_CASE("missing or empty input is an error") {
    CHECK(run("fraclap --power 1/2 --in " + (work / "nope.bin").string() + " --out " + (work / "x.bin").string()) == 2);
    fs::path empty = work / "empty.csv";
    std::ofstream(empty) << "value\n";
    CHECK(run("fraclap --power 1/2 --box-length 1 --in " + empty.string() + " --out " + (work / "x.bin").string()) == 2);
}

TEST_CASE("identical runs give byte-identical reports") {
    fs::path a = work / "det_a.json", b = work / "det_b.json";
    REQUIRE(run("verify --gamma 4/3 --out " + a.string()) == 0);
    REQUIRE(run("verify --gamma 4/3 --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
}
