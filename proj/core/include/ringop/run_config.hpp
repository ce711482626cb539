#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ringop/superposition.hpp"

namespace ringop {

/// Command line problem: unknown command, missing or non-numeric flag value,
/// value out of range.  Maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// --help or a bare invocation; carries the text to print.  Exit code 0.
struct HelpRequested : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { Spectrum, Sweep, Bands, Superpose, GaugeCheck, Converge };
enum class OutputFormat { Csv, Json, Svg };

/// Validated run description assembled from argv.
struct RunConfig {
    Command command = Command::Spectrum;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path; // empty: standard output

    int n_points = 20;
    double gauge_k = 0.0;
    double phi = 0.0;
    int steps = 181;

    // superpose
    double q = 0.0;
    double amplitude = 1.0;
    std::vector<SuperpositionTerm> terms;
    int samples = 256;

    // bands
    int n_min = -1;
    int n_max = 1;
    int q_samples = 101;

    // gauge-check / converge
    std::vector<double> gauge_k_list;
    std::vector<int> n_points_list;
};

/// Parse a complex coefficient: "1", "-0.5", "i", "-i", "2i", "1+2i", "1-2i".
std::complex<double> parse_complex(std::string_view text);

/// Parse "offset:coeff" pairs separated by commas, e.g. "0:1,1:0.5,2:1+2i".
std::vector<SuperpositionTerm> parse_terms(std::string_view text);

/// Parse argv (without the program name) into a validated RunConfig.
/// Throws UsageError on any problem and HelpRequested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

/// Execute a parsed configuration, writing to config.output_path or stdout.
/// Throws IoError when the destination cannot be written.
void run_command(const RunConfig& config);

} // namespace ringop
