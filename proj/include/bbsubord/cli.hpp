#ifndef BBSUBORD_CLI_HPP
#define BBSUBORD_CLI_HPP

#include "bbsubord/certify.hpp"
#include "bbsubord/theorems.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace bbsubord {

/// Parsed command configuration; run() is the single dispatcher behind the
/// command-line tool so tests can drive it directly.
struct RunConfig {
    std::string command; // check | interval | certify | subord | bernardi | scan | plot | corpus

    std::string theorem;
    std::string corollary;
    BBParams params;
    std::map<std::string, double> extras; // alpha, c, eps, overrides for corpus entries

    // interval
    std::string free_name = "gamma";
    double scan_lo = -40.0;
    double scan_hi = 40.0;
    int scan_points = 20001;

    // certify
    GapGrid grid;
    std::string surface_csv; // optional (t, k, m, gap) dump

    // subord / bernardi
    std::string corpus_name;
    std::string target_region; // empty: use the entry's claimed region
    std::string mode;          // empty: use the entry's mode (bernardi: ratio)
    double r_max = 0.99;
    int n_radii = 12;
    int n_samples = 1024;
    double tol = 1e-9;

    // scan
    std::string x_name = "beta";
    std::string y_name = "gamma";
    double x_min = -1.0, x_max = 1.0;
    double y_min = -1.0, y_max = 1.0;
    int x_steps = 21, y_steps = 21;

    // plot
    std::string plot_region = "lemniscate";
    double view_xmin = -0.5, view_xmax = 3.5, view_ymin = -2.0, view_ymax = 2.0;
    double plot_r = 0.9;
    int plot_points = 512;
    std::string csv_path; // polylines as CSV next to the SVG

    std::string out_path; // empty: standard output
    unsigned long long seed = 42;
};

/// Exit code contract: 0 all verdicts pass, 1 at least one fail/violated,
/// 2 inconclusive present (or a numeric failure), 3 usage error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line front end (CLI11 parsing + run()).
int run_cli(int argc, const char* const* argv);

/// Write-then-rename so partially written artifacts never appear at path.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace bbsubord

#endif
