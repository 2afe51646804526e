#include "bbsubord/cli.hpp"
#include "bbsubord/errors.hpp"
#include "bbsubord/parallel.hpp"
#include "bbsubord/reports_json.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace bbsubord;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cfg(RunConfig cfg)
{
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("check command emits verdicts and exit codes")
{
    RunConfig cfg;
    cfg.command = "check";
    cfg.theorem = "t1";
    cfg.params.beta = 1.0;
    cfg.params.gamma = -0.5;
    const Result ok = run_cfg(cfg);
    CHECK(ok.code == 0);
    const json j = json::parse(ok.out);
    validate_report(j, "hypothesis");
    CHECK(j.at("satisfied").get<bool>());
    // round-trip
    CHECK(to_json(hypothesis_from_json(j)) == j);

    cfg.params.gamma = 0.0;
    CHECK(run_cfg(cfg).code == 1);

    cfg.theorem = "t9";
    CHECK(run_cfg(cfg).code == 3);
}

TEST_CASE("check command handles corollaries")
{
    RunConfig cfg;
    cfg.command = "check";
    cfg.corollary = "bernardi_t1_i";
    cfg.extras["c"] = -0.5;
    const Result r = run_cfg(cfg);
    CHECK(r.code == 0);
    validate_report(json::parse(r.out), "specialization");
}

TEST_CASE("interval command reproduces the documented endpoints")
{
    RunConfig cfg;
    cfg.command = "interval";
    cfg.theorem = "t2";
    cfg.params = {0.5, -0.5, 1.0, 0.0};
    cfg.free_name = "gamma";
    cfg.scan_lo = -5.0;
    cfg.scan_hi = 5.0;
    cfg.scan_points = 4001;
    const Result r = run_cfg(cfg);
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    validate_report(j.at("intervals"), "intervals");
    const auto ivs = intervals_from_json(j.at("intervals"));
    REQUIRE(ivs.size() == 1);
    CHECK(ivs[0].lo == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
    CHECK(ivs[0].hi ==
          doctest::Approx((1.0 - std::exp(1.0)) / (1.0 + 3.0 * std::exp(1.0))).epsilon(1e-9));
}

TEST_CASE("subord command on the exemplar corpus")
{
    RunConfig cfg;
    cfg.command = "subord";
    cfg.corpus_name = "example_p1";
    cfg.extras["gamma"] = -0.5;
    cfg.target_region = "expdisc";
    cfg.r_max = 0.99;
    cfg.n_radii = 5;
    cfg.n_samples = 64;
    const Result r = run_cfg(cfg);
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    validate_report(j, "subord");
    CHECK(j.at("verdict").get<std::string>() == "contained");
    CHECK(to_json(subord_from_json(j)) ==
          [&] { json copy = j; copy.erase("corpus"); copy.erase("mode"); copy.erase("target"); return copy; }());
}

TEST_CASE("certify command writes a report and optional surface dump")
{
    RunConfig cfg;
    cfg.command = "certify";
    cfg.theorem = "t1";
    cfg.params.beta = 1.0;
    cfg.params.gamma = -0.5;
    cfg.grid.t_points = 65;
    cfg.grid.k_points = 9;
    cfg.grid.k_max = 8.0;
    const auto tmp = std::filesystem::temp_directory_path();
    cfg.surface_csv = (tmp / "bb_surface_test.csv").string();
    cfg.out_path = (tmp / "bb_certify_test.json").string();
    const Result r = run_cfg(cfg);
    CHECK(r.code == 0);
    std::ifstream in(cfg.out_path);
    json j;
    in >> j;
    validate_report(j, "gap_report");
    const GapReport rep = gap_report_from_json(j);
    CHECK(rep.min_gap >= -1e-9);
    std::ifstream surf(cfg.surface_csv);
    std::string header;
    std::getline(surf, header);
    CHECK(header == "t,k,m,gap");
    std::filesystem::remove(cfg.surface_csv);
    std::filesystem::remove(cfg.out_path);
}

TEST_CASE("scan command agrees with individual checks")
{
    RunConfig cfg;
    cfg.command = "scan";
    cfg.theorem = "t1";
    cfg.x_name = "beta";
    cfg.x_min = 0.0;
    cfg.x_max = 2.0;
    cfg.x_steps = 9;
    cfg.y_name = "gamma";
    cfg.y_min = -1.0;
    cfg.y_max = 0.0;
    cfg.y_steps = 9;
    const Result r = run_cfg(cfg);
    CHECK((r.code == 0 || r.code == 1));

    std::istringstream rows(r.out);
    std::string line;
    std::getline(rows, line);
    CHECK(line == "beta,gamma,satisfied,min_margin");
    std::mt19937_64 rng(71);
    std::vector<std::string> all;
    while (std::getline(rows, line))
        all.push_back(line);
    CHECK(all.size() == 81);
    for (int i = 0; i < 20; ++i) {
        const std::string& row = all[rng() % all.size()];
        double x, y;
        int sat;
        std::sscanf(row.c_str(), "%lf,%lf,%d", &x, &y, &sat);
        CHECK(static_cast<int>(t1_hypothesis(x, y).satisfied) == sat);
    }
}

TEST_CASE("plot command emits an SVG document and polyline CSV")
{
    RunConfig cfg;
    cfg.command = "plot";
    cfg.plot_region = "lemniscate";
    cfg.corpus_name = "f_L";
    cfg.plot_points = 64;
    cfg.plot_r = 0.9;
    const auto tmp = std::filesystem::temp_directory_path();
    cfg.csv_path = (tmp / "bb_plot_test.csv").string();
    const Result r = run_cfg(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(r.out.find("<path") != std::string::npos);
    std::ifstream csv(cfg.csv_path);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "theta,re,im");
    CHECK(std::filesystem::exists(cfg.csv_path + ".image.csv"));
    std::filesystem::remove(cfg.csv_path);
    std::filesystem::remove(cfg.csv_path + ".image.csv");
}

TEST_CASE("report JSON validates against the declared schemas")
{
    EndpointAudit audit;
    audit.holds = false;
    audit.worst_deficit = 0.25;
    audit.at_t = 1.5;
    audit.at_k = 2.0;
    validate_report(to_json(audit), "endpoint_audit");

    GapGrid grid;
    grid.t_points = 33;
    grid.k_points = 5;
    grid.k_max = 4.0;
    const GapReport rep = certify("t1", BBParams{1.0, -1.0, 1.0, -0.5}, grid);
    const json j = to_json(rep);
    validate_report(j, "gap_report");
    const GapReport back = gap_report_from_json(j);
    CHECK(back.min_gap == rep.min_gap);
    CHECK(back.grid.t_points == rep.grid.t_points);
    CHECK(to_json(back).at("argmin") == j.at("argmin"));

    CHECK_THROWS_AS(validate_report(json::object(), "subord"), parameter_error);
    CHECK_THROWS_AS(validate_report(json::object(), "no_such_schema"), parameter_error);
}

TEST_CASE("worker cap honors the environment variable")
{
    setenv("BB_SUBORD_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    setenv("BB_SUBORD_THREADS", "0", 1);
    CHECK(worker_count() >= 1);
    unsetenv("BB_SUBORD_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("out-of-range gamma warns but still evaluates")
{
    RunConfig cfg;
    cfg.command = "subord";
    cfg.corpus_name = "example_p1";
    cfg.extras["gamma"] = -0.3; // above the documented upper endpoint -1/e
    cfg.target_region = "expdisc";
    cfg.r_max = 0.9;
    cfg.n_radii = 4;
    cfg.n_samples = 64;
    const Result r = run_cfg(cfg);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK((r.code == 0 || r.code == 1 || r.code == 2)); // evaluated, not refused
}

TEST_CASE("corpus command prints the manifest")
{
    RunConfig cfg;
    cfg.command = "corpus";
    const Result r = run_cfg(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.find("name=example_p1") != std::string::npos);
}

TEST_CASE("usage errors exit with code 3")
{
    RunConfig cfg;
    cfg.command = "frobnicate";
    CHECK(run_cfg(cfg).code == 3);

    cfg.command = "subord";
    cfg.corpus_name = "example_p1";
    cfg.r_max = 1.5;
    CHECK(run_cfg(cfg).code == 3);
}

TEST_CASE("binary smoke test")
{
#ifdef BBTOOL_PATH
    const std::string tool = BBTOOL_PATH;
    CHECK(std::system((tool + " check --theorem t1 --beta 1 --gamma -0.5 >/dev/null 2>&1").c_str()) == 0);
    const int fail =
        std::system((tool + " check --theorem t1 --beta 1 --gamma 0 >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(fail) == 1);
    const int usage = std::system((tool + " bogus >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(usage) == 3);
#endif
}
