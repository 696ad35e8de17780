#ifndef HSPLINE_HARNESS_HPP
#define HSPLINE_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hspline/bounds.hpp"
#include "hspline/kernel.hpp"

namespace hspline {

struct ExperimentConfig {
    int n = 2;
    int lambda = 2;
    double c = 1.0;
    double l_const = 1.0;
    double b0 = 1.0;
    std::vector<double> delta_grid;  // empty => auto grid
    int delta_auto_count = 8;
    double delta_auto_ratio = 5.0;   // grid spans [delta_0 / ratio, delta_0]
    std::uint64_t seed = 1;
    int source_count = 10;
    int eval_resolution = 40;
    bool report_fill_distance = false;
    std::string output;
};

ExperimentConfig load_config(std::istream& in);
ExperimentConfig load_config_file(const std::string& path);

// Geometric delta grid from delta_0 down to delta_0 / ratio, descending.
std::vector<double> auto_delta_grid(const NewBoundConstants& consts, int count,
                                    double ratio);

struct ConvergenceRecord {
    double delta = 0.0;
    int k = 0;
    int node_count = 0;
    double max_error = 0.0;
    double bound_value = 0.0;
    double seminorm = 0.0;
    double condition_estimate = 0.0;
    double fill_distance = 0.0;  // populated only when requested
    bool fit_ok = true;
};

// One record per delta, sorted descending in delta; fit failures are
// flagged per row rather than fatal.
std::vector<ConvergenceRecord> run_convergence(const ExperimentConfig& config);

struct DecayFit {
    double slope = 0.0;      // of ln(max_error) against 1/delta
    double intercept = 0.0;
    std::vector<double> residuals;
    int used_points = 0;
    bool below_noise_floor = false;  // every usable error was exactly zero
};

DecayFit fit_decay(const std::vector<ConvergenceRecord>& records);

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records,
                           const ExperimentConfig& config);
std::vector<ConvergenceRecord> read_convergence_csv(std::istream& in);

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);

// CLI entry point; exit code 0 on success, 1 on validation error, 2 on
// numerical failure.
int cli_main(int argc, char** argv);

}  // namespace hspline

#endif
