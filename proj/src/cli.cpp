#include "bbsubord/cli.hpp"
#include "bbsubord/bernardi.hpp"
#include "bbsubord/errors.hpp"
#include "bbsubord/reports_json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace bbsubord {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

void emit(const RunConfig& cfg, std::ostream& out, const std::string& content)
{
    if (cfg.out_path.empty())
        out << content;
    else
        write_file_atomic(cfg.out_path, content);
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

int verdict_exit(SubordReport::Verdict v)
{
    switch (v) {
    case SubordReport::Verdict::Contained: return kExitPass;
    case SubordReport::Verdict::Violated: return kExitFail;
    case SubordReport::Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

void set_param(BBParams& p, const std::string& name, double v)
{
    if (name == "A")
        p.A = v;
    else if (name == "B")
        p.B = v;
    else if (name == "beta")
        p.beta = v;
    else if (name == "gamma")
        p.gamma = v;
    else
        throw parameter_error("unknown parameter name: " + name);
}

int cmd_check(const RunConfig& cfg, std::ostream& out)
{
    if (!cfg.corollary.empty()) {
        Specialization s =
            specialize(cfg.corollary, cfg.extras, cfg.grid.k_max, 257, 512);
        emit(cfg, out, pretty(to_json(s)));
        return s.satisfied ? kExitPass : kExitFail;
    }
    HypothesisResult r = hypothesis(cfg.theorem, cfg.params, cfg.grid.k_max);
    emit(cfg, out, pretty(to_json(r)));
    return r.satisfied ? kExitPass : kExitFail;
}

int cmd_interval(const RunConfig& cfg, std::ostream& out)
{
    std::vector<Interval> ivs =
        feasible_interval(cfg.theorem, cfg.params, cfg.free_name, cfg.scan_lo, cfg.scan_hi,
                          cfg.scan_points, cfg.grid.k_max);
    json j{{"theorem", cfg.theorem},
           {"free", cfg.free_name},
           {"scan", json{{"lo", cfg.scan_lo}, {"hi", cfg.scan_hi}}},
           {"intervals", to_json(ivs)}};
    emit(cfg, out, pretty(j));
    return kExitPass;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out)
{
    GapReport rep = certify(cfg.theorem, cfg.params, cfg.grid);
    emit(cfg, out, pretty(to_json(rep)));
    if (!cfg.surface_csv.empty()) {
        std::ostringstream os;
        os.precision(17);
        os << "t,k,m,gap\n";
        const bool has_m = rep.has_m;
        const int mp = has_m ? std::max(2, cfg.grid.m_points) : 1;
        for (int i = 0; i < cfg.grid.t_points; ++i) {
            const double t = std::numbers::pi * i / (cfg.grid.t_points - 1);
            for (int jk = 0; jk < cfg.grid.k_points; ++jk) {
                const double k = cfg.grid.k_points == 1
                                     ? 1.0
                                     : 1.0 + (cfg.grid.k_max - 1.0) * jk /
                                                 (cfg.grid.k_points - 1);
                for (int l = 0; l < mp; ++l) {
                    const double m = has_m ? static_cast<double>(l) / (mp - 1) : 0.0;
                    double g;
                    try {
                        if (cfg.theorem == "t1")
                            g = gap_t1(t, k, cfg.params.beta, cfg.params.gamma);
                        else if (cfg.theorem == "t2")
                            g = gap_t2(t, k, cfg.params);
                        else if (cfg.theorem == "t3")
                            g = gap_t3(t, k, cfg.params);
                        else if (cfg.theorem == "t4")
                            g = gap_t4(t, k, cfg.params);
                        else {
                            const auto [up, low] = gap_t5(t, k, m, cfg.params);
                            g = std::min(up, low);
                        }
                    } catch (const pole_error&) {
                        continue;
                    }
                    os << t << "," << k << "," << m << "," << g << "\n";
                }
            }
        }
        write_file_atomic(cfg.surface_csv, os.str());
    }
    return rep.min_gap >= -cfg.tol ? kExitPass : kExitFail;
}

CorpusEntry entry_for(const RunConfig& cfg)
{
    CorpusEntry entry = corpus_entry(cfg.corpus_name, cfg.extras);
    if (!cfg.target_region.empty())
        entry.claimed = parse_region(cfg.target_region);
    if (!cfg.mode.empty())
        entry.mode = parse_mode(cfg.mode);
    return entry;
}

void warn_gamma_range(const RunConfig& cfg, std::ostream& err)
{
    // probing outside the documented ranges is allowed but flagged
    if (!cfg.extras.count("gamma"))
        return;
    const double g = cfg.extras.at("gamma");
    const double e = std::numbers::e;
    if (cfg.corpus_name == "example_p1") {
        const double lo = -1.0 / e + 1.0 / (1.0 - std::sqrt(2.0) * e);
        if (g < lo || g > -1.0 / e)
            err << "warning: gamma=" << g << " outside the documented range [" << lo
                << ", " << -1.0 / e << "] for example_p1; evaluating anyway\n";
    } else if (cfg.corpus_name == "example_p2") {
        const double hi = (1.0 - e) / (1.0 + 3.0 * e);
        if (g < -1.0 / 3.0 || g > hi)
            err << "warning: gamma=" << g << " outside the documented range [" << -1.0 / 3.0
                << ", " << hi << "] for example_p2; evaluating anyway\n";
    }
}

int cmd_subord(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    warn_gamma_range(cfg, err);
    CorpusEntry entry = entry_for(cfg);
    SubordReport rep =
        class_membership(entry, cfg.r_max, cfg.n_radii, cfg.n_samples, cfg.tol);
    json j = to_json(rep);
    j["corpus"] = entry.name;
    j["mode"] = mode_name(entry.mode);
    j["target"] = region_name(entry.claimed);
    emit(cfg, out, pretty(j));
    return verdict_exit(rep.verdict);
}

int cmd_bernardi(const RunConfig& cfg, std::ostream& out)
{
    const double c = cfg.extras.count("c") ? cfg.extras.at("c") : 0.0;
    std::map<std::string, double> base_overrides = cfg.extras;
    base_overrides.erase("c");
    CorpusEntry base = corpus_entry(cfg.corpus_name, base_overrides);

    CorpusEntry derived;
    derived.name = "bernardi[" + base.name + "]";
    derived.f = bernardi_fn(base.f, c);
    derived.mode = cfg.mode.empty() ? TransformMode::Ratio : parse_mode(cfg.mode);
    derived.claimed =
        cfg.target_region.empty() ? base.claimed : parse_region(cfg.target_region);

    SubordReport rep =
        class_membership(derived, cfg.r_max, cfg.n_radii, cfg.n_samples, cfg.tol);
    json j{{"operator", "bernardi"},
           {"base", base.name},
           {"c", c},
           {"mode", mode_name(derived.mode)},
           {"target", region_name(derived.claimed)},
           {"membership", to_json(rep)}};
    emit(cfg, out, pretty(j));
    return verdict_exit(rep.verdict);
}

int cmd_scan(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.x_steps < 1 || cfg.y_steps < 1)
        throw parameter_error("scan: steps must be >= 1");
    std::ostringstream os;
    os.precision(17);
    os << cfg.x_name << "," << cfg.y_name << ",satisfied,min_margin\n";
    bool all_ok = true;
    for (int i = 0; i < cfg.x_steps; ++i) {
        const double x = cfg.x_steps == 1
                             ? cfg.x_min
                             : cfg.x_min + (cfg.x_max - cfg.x_min) * i / (cfg.x_steps - 1);
        for (int j = 0; j < cfg.y_steps; ++j) {
            const double y = cfg.y_steps == 1
                                 ? cfg.y_min
                                 : cfg.y_min + (cfg.y_max - cfg.y_min) * j / (cfg.y_steps - 1);
            BBParams p = cfg.params;
            bool ok = false;
            double min_margin = std::numeric_limits<double>::quiet_NaN();
            try {
                set_param(p, cfg.x_name, x);
                set_param(p, cfg.y_name, y);
                HypothesisResult r = hypothesis(cfg.theorem, p, cfg.grid.k_max);
                ok = r.satisfied;
                min_margin = std::numeric_limits<double>::infinity();
                for (const Margin& m : r.margins)
                    min_margin = std::min(min_margin, m.value);
            } catch (const parameter_error&) {
                ok = false; // infeasible cell (ordering violation)
            }
            all_ok = all_ok && ok;
            os << x << "," << y << "," << (ok ? 1 : 0) << "," << min_margin << "\n";
        }
    }
    emit(cfg, out, os.str());
    return all_ok ? kExitPass : kExitFail;
}

std::string svg_document(const RunConfig& cfg, const std::vector<std::vector<cplx>>& curves)
{
    const double W = 720.0, H = 480.0;
    const double sx = W / (cfg.view_xmax - cfg.view_xmin);
    const double sy = H / (cfg.view_ymax - cfg.view_ymin);
    auto X = [&](double x) { return (x - cfg.view_xmin) * sx; };
    auto Y = [&](double y) { return H - (y - cfg.view_ymin) * sy; };
    const char* colors[] = {"#1f6fb2", "#c0392b", "#27ae60", "#8e44ad"};

    std::ostringstream os;
    os.precision(10);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    if (cfg.view_xmin < 0.0 && cfg.view_xmax > 0.0)
        os << "<line x1=\"" << X(0) << "\" y1=\"0\" x2=\"" << X(0) << "\" y2=\"" << H
           << "\" stroke=\"#cccccc\"/>\n";
    if (cfg.view_ymin < 0.0 && cfg.view_ymax > 0.0)
        os << "<line x1=\"0\" y1=\"" << Y(0) << "\" x2=\"" << W << "\" y2=\"" << Y(0)
           << "\" stroke=\"#cccccc\"/>\n";
    int ci = 0;
    for (const auto& curve : curves) {
        os << "<path fill=\"none\" stroke=\"" << colors[ci % 4] << "\" stroke-width=\"1.5\" d=\"";
        bool first = true;
        for (const cplx& w : curve) {
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                first = true;
                continue;
            }
            os << (first ? "M" : "L") << X(w.real()) << " " << Y(w.imag()) << " ";
            first = false;
        }
        os << "\"/>\n";
        ++ci;
    }
    os << "</svg>\n";
    return os.str();
}

std::string polyline_csv(const std::vector<cplx>& curve, int points)
{
    std::ostringstream csv;
    csv.precision(17);
    csv << "theta,re,im\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const double theta =
            -std::numbers::pi + 2.0 * std::numbers::pi * i / (points - 1);
        csv << theta << "," << curve[i].real() << "," << curve[i].imag() << "\n";
    }
    return csv.str();
}

int cmd_plot(const RunConfig& cfg, std::ostream& out)
{
    const Region region = parse_region(cfg.plot_region);
    std::vector<std::vector<cplx>> curves;
    std::vector<cplx> boundary;
    for (int i = 0; i < cfg.plot_points; ++i) {
        const double theta =
            -std::numbers::pi + 2.0 * std::numbers::pi * i / (cfg.plot_points - 1);
        try {
            boundary.push_back(boundary_point(region, theta));
        } catch (const std::exception&) {
            boundary.push_back(cplx(std::nan(""), std::nan("")));
        }
    }
    curves.push_back(std::move(boundary));

    if (!cfg.corpus_name.empty()) {
        CorpusEntry entry = corpus_entry(cfg.corpus_name, cfg.extras);
        AnalyticFn tested;
        const std::string mode = cfg.mode.empty() ? mode_name(entry.mode) : cfg.mode;
        switch (parse_mode(mode)) {
        case TransformMode::Raw: tested = entry.f; break;
        case TransformMode::Ratio: tested = ratio_fn(entry.f); break;
        case TransformMode::Derivative:
            tested = AnalyticFn::closed_form(entry.f.name() + "'", entry.f.deriv(0.0),
                                             [f = entry.f](cplx z) { return f.deriv(z); });
            break;
        }
        std::vector<cplx> image;
        for (int i = 0; i < cfg.plot_points; ++i) {
            const double theta =
                -std::numbers::pi + 2.0 * std::numbers::pi * i / (cfg.plot_points - 1);
            try {
                image.push_back(tested.eval(std::polar(cfg.plot_r, theta)));
            } catch (const std::exception&) {
                image.push_back(cplx(std::nan(""), std::nan("")));
            }
        }
        curves.push_back(std::move(image));
    }

    emit(cfg, out, svg_document(cfg, curves));
    if (!cfg.csv_path.empty()) {
        // boundary polyline in the theta,re,im export format; the image curve
        // (when present) goes to a sibling file
        write_file_atomic(cfg.csv_path, polyline_csv(curves[0], cfg.plot_points));
        if (curves.size() > 1)
            write_file_atomic(cfg.csv_path + ".image.csv",
                              polyline_csv(curves[1], cfg.plot_points));
    }
    return kExitPass;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!(cfg.tol > 0.0))
        throw parameter_error("tolerance must be positive");
    if (!(cfg.r_max > 0.0 && cfg.r_max < 1.0))
        throw parameter_error("r_max must lie in (0, 1)");

    if (cfg.command == "check")
        return cmd_check(cfg, out);
    if (cfg.command == "interval")
        return cmd_interval(cfg, out);
    if (cfg.command == "certify")
        return cmd_certify(cfg, out);
    if (cfg.command == "subord")
        return cmd_subord(cfg, out, err);
    if (cfg.command == "bernardi")
        return cmd_bernardi(cfg, out);
    if (cfg.command == "scan")
        return cmd_scan(cfg, out);
    if (cfg.command == "plot")
        return cmd_plot(cfg, out);
    if (cfg.command == "corpus") {
        emit(cfg, out, corpus_manifest());
        return kExitPass;
    }
    err << "unknown command: " << cfg.command << "\n";
    return kExitUsage;
}

} // namespace

void write_file_atomic(const std::string& path, const std::string& content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw parameter_error("cannot open output file " + tmp);
        os << content;
    }
    std::filesystem::rename(tmp, path);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        return dispatch(cfg, out, err);
    } catch (const parameter_error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "run failed: " << e.what() << "\n";
        return kExitInconclusive;
    }
}

int run_cli(int argc, const char* const* argv)
{
    CLI::App app{"Briot-Bouquet differential subordination verification toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    double alpha = std::nan(""), c_param = std::nan(""), eps = std::nan("");
    double gamma_override = std::nan("");

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--A", cfg.params.A, "Janowski A");
        cmd->add_option("--B", cfg.params.B, "Janowski B");
        cmd->add_option("--beta", cfg.params.beta, "beta");
        cmd->add_option("--gamma", cfg.params.gamma, "gamma");
    };
    auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--tpoints", cfg.grid.t_points, "t grid points on [0,pi]");
        cmd->add_option("--kmax", cfg.grid.k_max, "k truncation (k >= 1)");
        cmd->add_option("--kpoints", cfg.grid.k_points, "k grid points");
        cmd->add_option("--mpoints", cfg.grid.m_points, "m grid points (t5)");
        cmd->add_option("--refine", cfg.grid.refine_rounds, "local refinement rounds");
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--out", cfg.out_path, "output path (default: stdout)");
        cmd->add_option("--seed", cfg.seed, "seed for randomized scans");
        cmd->add_option("--tol", cfg.tol, "containment tolerance");
    };

    CLI::App* check = app.add_subcommand("check", "evaluate a hypothesis predicate");
    check->add_option("--theorem", cfg.theorem, "t1..t5");
    check->add_option("--corollary", cfg.corollary, "corollary id (see README)");
    check->add_option("--alpha", alpha, "corollary alpha");
    check->add_option("--c", c_param, "corollary c");
    add_params(check);
    add_grid(check);
    add_output(check);

    CLI::App* interval = app.add_subcommand("interval", "maximal feasible interval");
    interval->add_option("--theorem", cfg.theorem)->required();
    interval->add_option("--free", cfg.free_name, "free parameter name")->required();
    interval->add_option("--lo", cfg.scan_lo, "scan lower bound");
    interval->add_option("--hi", cfg.scan_hi, "scan upper bound");
    interval->add_option("--points", cfg.scan_points, "initial scan points");
    add_params(interval);
    add_grid(interval);
    add_output(interval);

    CLI::App* certify_cmd = app.add_subcommand("certify", "global boundary-gap minimum");
    certify_cmd->add_option("--theorem", cfg.theorem)->required();
    certify_cmd->add_option("--surface", cfg.surface_csv, "dump (t,k,m,gap) CSV here");
    add_params(certify_cmd);
    add_grid(certify_cmd);
    add_output(certify_cmd);

    CLI::App* subord = app.add_subcommand("subord", "containment test for a corpus entry");
    subord->add_option("--corpus", cfg.corpus_name)->required();
    subord->add_option("--target", cfg.target_region, "override the claimed region");
    subord->add_option("--mode", cfg.mode, "override the transform mode");
    subord->add_option("--rmax", cfg.r_max, "outermost sampling radius");
    subord->add_option("--nradii", cfg.n_radii, "number of radii");
    subord->add_option("--nsamples", cfg.n_samples, "samples per circle");
    subord->add_option("--gamma", gamma_override, "corpus gamma override");
    subord->add_option("--c", c_param, "corpus c override");
    subord->add_option("--eps", eps, "corpus eps override");
    subord->add_option("--A", cfg.params.A, "corpus A override");
    subord->add_option("--B", cfg.params.B, "corpus B override");
    add_output(subord);

    CLI::App* bern = app.add_subcommand("bernardi", "apply the integral operator, then test");
    bern->add_option("--f", cfg.corpus_name, "base corpus entry")->required();
    bern->add_option("--c", c_param, "operator parameter c > -1")->required();
    bern->add_option("--claim", cfg.target_region, "claimed region");
    bern->add_option("--mode", cfg.mode, "transform mode for the test (default ratio)");
    bern->add_option("--rmax", cfg.r_max);
    bern->add_option("--nradii", cfg.n_radii);
    bern->add_option("--nsamples", cfg.n_samples);
    add_output(bern);

    CLI::App* scan = app.add_subcommand("scan", "verdict grid over two parameters");
    scan->add_option("--theorem", cfg.theorem)->required();
    scan->add_option("--x", cfg.x_name)->required();
    scan->add_option("--xmin", cfg.x_min)->required();
    scan->add_option("--xmax", cfg.x_max)->required();
    scan->add_option("--xsteps", cfg.x_steps);
    scan->add_option("--y", cfg.y_name)->required();
    scan->add_option("--ymin", cfg.y_min)->required();
    scan->add_option("--ymax", cfg.y_max)->required();
    scan->add_option("--ysteps", cfg.y_steps);
    add_params(scan);
    add_grid(scan);
    add_output(scan);

    CLI::App* plot = app.add_subcommand("plot", "region boundary and image curves as SVG");
    plot->add_option("--region", cfg.plot_region)->required();
    plot->add_option("--corpus", cfg.corpus_name, "overlay this entry's image curve");
    plot->add_option("--mode", cfg.mode, "transform mode for the image curve");
    plot->add_option("--r", cfg.plot_r, "image circle radius");
    plot->add_option("--points", cfg.plot_points);
    plot->add_option("--gamma", gamma_override, "corpus gamma override");
    plot->add_option("--csv", cfg.csv_path, "polyline CSV path");
    plot->add_option("--view-xmin", cfg.view_xmin);
    plot->add_option("--view-xmax", cfg.view_xmax);
    plot->add_option("--view-ymin", cfg.view_ymin);
    plot->add_option("--view-ymax", cfg.view_ymax);
    add_output(plot);

    CLI::App* corpus = app.add_subcommand("corpus", "print the corpus manifest");
    corpus->add_option("--out", cfg.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 3;
    }

    for (CLI::App* sub : {check, interval, certify_cmd, subord, bern, scan, plot, corpus})
        if (sub->parsed())
            cfg.command = sub->get_name();

    if (!std::isnan(alpha))
        cfg.extras["alpha"] = alpha;
    if (!std::isnan(c_param))
        cfg.extras["c"] = c_param;
    if (!std::isnan(eps))
        cfg.extras["eps"] = eps;
    if (!std::isnan(gamma_override))
        cfg.extras["gamma"] = gamma_override;
    if (cfg.command == "check" && !cfg.corollary.empty()) {
        cfg.extras["beta"] = cfg.params.beta;
        if (check->count("--A"))
            cfg.extras["A"] = cfg.params.A;
        if (check->count("--B"))
            cfg.extras["B"] = cfg.params.B;
    }
    if (cfg.command == "subord") {
        if (subord->count("--A"))
            cfg.extras["A"] = cfg.params.A;
        if (subord->count("--B"))
            cfg.extras["B"] = cfg.params.B;
    }

    return run(cfg, std::cout, std::cerr);
}

} // namespace bbsubord
