#include "hspline/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hspline/interpolant.hpp"
#include "hspline/polyinterp.hpp"
#include "hspline/simplex.hpp"

namespace hspline {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ExperimentConfig load_config(std::istream& in) {
    nlohmann::json j;
    in >> j;
    ExperimentConfig cfg;
    cfg.n = j.at("n").get<int>();
    cfg.lambda = j.at("lambda").get<int>();
    cfg.c = j.value("c", 1.0);
    cfg.l_const = j.value("l_const", 1.0);
    cfg.b0 = j.value("b0", 1.0);
    if (j.contains("delta_grid")) {
        cfg.delta_grid = j["delta_grid"].get<std::vector<double>>();
    } else if (j.contains("delta_auto")) {
        cfg.delta_auto_count = j["delta_auto"].value("count", 8);
        cfg.delta_auto_ratio = j["delta_auto"].value("ratio", 5.0);
    }
    cfg.seed = j.value("seed", std::uint64_t{1});
    cfg.source_count = j.value("source_count", 10);
    cfg.eval_resolution = j.value("eval_resolution", 40);
    cfg.report_fill_distance = j.value("report_fill_distance", false);
    cfg.output = j.value("output", std::string{});
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return load_config(in);
}

std::vector<double> auto_delta_grid(const NewBoundConstants& consts, int count,
                                    double ratio) {
    if (count < 1 || !(ratio > 1.0))
        throw std::invalid_argument("auto_delta_grid: need count >= 1 and ratio > 1");
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i)
        grid[i] = consts.delta_max *
                  std::pow(1.0 / ratio, static_cast<double>(i) / std::max(count - 1, 1));
    return grid;
}

std::vector<ConvergenceRecord> run_convergence(const ExperimentConfig& config) {
    const KernelParams params(config.n, config.lambda, config.c, config.l_const);
    const NewBoundConstants consts = new_constants(params, config.b0);

    std::vector<double> grid = config.delta_grid;
    if (grid.empty())
        grid = auto_delta_grid(consts, config.delta_auto_count, config.delta_auto_ratio);
    std::sort(grid.begin(), grid.end(), std::greater<double>());
    for (double d : grid)
        if (!(d > 0.0) || d > consts.delta_max * (1.0 + 1e-12))
            throw std::invalid_argument("run_convergence: delta outside (0, delta_0]");
    if (grid.empty()) throw std::invalid_argument("run_convergence: empty delta grid");

    // per-row degree, and the largest simplex of the sweep as target domain
    std::vector<int> ks(grid.size());
    double max_diam = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ks[i] = admissible_k(consts.C, grid[i]);
        max_diam = std::max(max_diam, grid[i] * ks[i]);
    }
    const Simplex target_domain = regular_simplex(config.n, max_diam);
    const SynthFunction target =
        synth_native_function(params, config.seed, config.source_count, target_domain);
    const double seminorm = target.seminorm;

    std::vector<ConvergenceRecord> records;
    records.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double delta = grid[i];
        const int k = ks[i];
        ConvergenceRecord rec;
        rec.delta = delta;
        rec.k = k;
        rec.seminorm = seminorm;
        rec.bound_value = error_bound(consts, delta, seminorm);
        try {
            const Simplex q = regular_simplex(config.n, delta * k);
            const NodeSet center_nodes = equally_spaced_nodes(q, k - 1);
            rec.node_count = center_nodes.count();

            CenterSet centers{center_nodes.nodes};
            Eigen::VectorXd values(centers.count());
            for (int j = 0; j < centers.count(); ++j)
                values(j) = target(centers.points.col(j));

            const HSpline spline = fit(params, centers, values);
            rec.condition_estimate = spline.condition_estimate;

            const NodeSet eval_grid = equally_spaced_nodes(q, config.eval_resolution);
            double max_err = 0.0;
            double fill = 0.0;
            for (int j = 0; j < eval_grid.count(); ++j) {
                const Eigen::VectorXd x = eval_grid.nodes.col(j);
                max_err = std::max(max_err, std::abs(target(x) - evaluate(spline, x)));
                if (config.report_fill_distance) {
                    double nearest = std::numeric_limits<double>::infinity();
                    for (int c = 0; c < centers.count(); ++c)
                        nearest = std::min(nearest, (x - centers.points.col(c)).norm());
                    fill = std::max(fill, nearest);
                }
            }
            rec.max_error = max_err;
            rec.fill_distance = fill;
        } catch (const std::exception&) {
            rec.fit_ok = false;
            rec.max_error = std::numeric_limits<double>::quiet_NaN();
        }
        records.push_back(rec);
    }
    return records;
}

DecayFit fit_decay(const std::vector<ConvergenceRecord>& records) {
    std::vector<double> xs, ys;
    int zero_count = 0, usable = 0;
    for (const auto& r : records) {
        if (!r.fit_ok || !std::isfinite(r.max_error)) continue;
        ++usable;
        if (r.max_error > 0.0) {
            xs.push_back(1.0 / r.delta);
            ys.push_back(std::log(r.max_error));
        } else {
            ++zero_count;
        }
    }
    if (usable > 0 && zero_count == usable) {
        DecayFit f;
        f.below_noise_floor = true;
        return f;
    }
    if (xs.size() < 3)
        throw std::invalid_argument("fit_decay: need at least 3 records with max_error > 0");

    const auto npts = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    DecayFit f;
    f.used_points = static_cast<int>(xs.size());
    f.slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
    f.intercept = (sy - f.slope * sx) / npts;
    f.residuals.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        f.residuals[i] = ys[i] - (f.intercept + f.slope * xs[i]);
    return f;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records,
                           const ExperimentConfig& config) {
    out << "# seed=" << config.seed << " n=" << config.n << " lambda=" << config.lambda
        << " c=" << fmt17(config.c) << " l_const=" << fmt17(config.l_const)
        << " b0=" << fmt17(config.b0) << " source_count=" << config.source_count
        << " eval_resolution=" << config.eval_resolution << "\n";
    out << "delta,k,node_count,max_error,bound_value,seminorm,condition_estimate";
    if (config.report_fill_distance) out << ",fill_distance";
    out << "\n";
    for (const auto& r : records) {
        out << fmt17(r.delta) << ',' << r.k << ',' << r.node_count << ','
            << fmt17(r.max_error) << ',' << fmt17(r.bound_value) << ','
            << fmt17(r.seminorm) << ',' << fmt17(r.condition_estimate);
        if (config.report_fill_distance) out << ',' << fmt17(r.fill_distance);
        out << "\n";
    }
}

std::vector<ConvergenceRecord> read_convergence_csv(std::istream& in) {
    std::vector<ConvergenceRecord> records;
    std::string line;
    bool header_seen = false;
    bool has_fill = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            has_fill = line.find("fill_distance") != std::string::npos;
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        ConvergenceRecord r;
        std::getline(ss, field, ',');
        r.delta = std::stod(field);
        std::getline(ss, field, ',');
        r.k = std::stoi(field);
        std::getline(ss, field, ',');
        r.node_count = std::stoi(field);
        std::getline(ss, field, ',');
        r.max_error = std::stod(field);
        std::getline(ss, field, ',');
        r.bound_value = std::stod(field);
        std::getline(ss, field, ',');
        r.seminorm = std::stod(field);
        std::getline(ss, field, ',');
        r.condition_estimate = std::stod(field);
        if (has_fill && std::getline(ss, field, ',')) r.fill_distance = std::stod(field);
        r.fit_ok = std::isfinite(r.max_error);
        records.push_back(r);
    }
    return records;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
    out << "n,lambda,case,rho,delta0_const,C,delta_max,omega_prime,"
           "log10_one_minus_omega_prime,log10_one_minus_omega\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.lambda << ',' << r.case_label << ',' << fmt17(r.rho) << ','
            << fmt17(r.delta0_const) << ',' << fmt17(r.C) << ',' << fmt17(r.delta_max)
            << ',' << fmt17(r.omega_prime) << ',' << fmt17(r.log10_one_minus_omega_prime)
            << ',' << fmt17(r.log10_one_minus_omega) << "\n";
    }
}

}  // namespace hspline
