#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ringop/sweep.hpp"

namespace ringop {

/// Failure writing or reading an output destination.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed table text (bad header, field count, or number).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

/// Strict double parse of the whole string; throws ParseError otherwise.
double parse_double(std::string_view text);

// ---- CSV ----------------------------------------------------------------
//
// All CSV emitters write a header row followed by data rows, LF terminated,
// numbers in shortest round-trip form.  Schemas:
//
//   sweep     phi,branch_sign,index,eigenvalue
//   spectrum  index,eigenvalue
//   bands     q,n,energy
//   converge  n_points,gauge_k,dx,error

void emit_sweep_csv(const SweepTable& table, std::ostream& out);
void emit_spectrum_csv(const std::vector<double>& eigenvalues, std::ostream& out);
void emit_band_csv(const std::vector<BandRow>& rows, std::ostream& out);
void emit_convergence_csv(const std::vector<ConvergenceRow>& rows, std::ostream& out);

struct SweepCsvRecord {
    double phi = 0.0;
    int branch_sign = 1;
    int index = 0;
    double eigenvalue = 0.0;
};

/// Parse text produced by emit_sweep_csv.  Values round-trip bit-exactly.
std::vector<SweepCsvRecord> parse_sweep_csv(std::istream& in);

// ---- JSON ---------------------------------------------------------------
//
// Same schemas as the CSV emitters, as an array of row objects.

void emit_sweep_json(const SweepTable& table, std::ostream& out);
void emit_spectrum_json(const std::vector<double>& eigenvalues, std::ostream& out);
void emit_band_json(const std::vector<BandRow>& rows, std::ostream& out);
void emit_convergence_json(const std::vector<ConvergenceRow>& rows, std::ostream& out);

// ---- SVG ----------------------------------------------------------------

/// Line plot of a sweep table: twist magnitude on the x axis ([0, pi]),
/// eigenvalue on the y axis, one polyline per tracked branch.  Branches are
/// tracked across steps by greedy nearest-neighbor matching, a rendering
/// device only; the numbers always come from the sorted rows.
/// 800x600 viewport with 10% margins, labeled axes.
void render_sweep_svg(const SweepTable& table, std::ostream& out);

} // namespace ringop
