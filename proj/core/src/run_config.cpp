#include "ringop/run_config.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringop/operator_matrix.hpp"
#include "ringop/spectrum.hpp"
#include "ringop/sweep.hpp"
#include "ringop/table_io.hpp"

namespace ringop {

namespace {

double parse_flag_double(const std::string& flag, const std::string& text) {
    try {
        return parse_double(text);
    } catch (const ParseError&) {
        throw UsageError(flag + ": invalid number '" + text + "'");
    }
}

std::vector<double> parse_double_list(const std::string& flag,
                                      const std::string& text) {
    std::vector<double> values;
    std::stringstream stream{text};
    std::string item;
    while (std::getline(stream, item, ',')) {
        values.push_back(parse_flag_double(flag, item));
    }
    if (values.empty()) throw UsageError(flag + ": empty list");
    return values;
}

std::vector<int> parse_int_list(const std::string& flag, const std::string& text) {
    std::vector<int> values;
    for (double v : parse_double_list(flag, text)) {
        const int n = static_cast<int>(v);
        if (static_cast<double>(n) != v) {
            throw UsageError(flag + ": expected integers");
        }
        values.push_back(n);
    }
    return values;
}

} // namespace

namespace {
// from_chars takes no leading '+', so strip one before delegating.
double parse_component(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    return parse_double(text);
}
} // namespace

std::complex<double> parse_complex(std::string_view text) {
    if (text.empty()) throw UsageError("empty complex value");

    if (text.back() == 'i' || text.back() == 'I') {
        std::string_view body = text.substr(0, text.size() - 1);
        // Split off the trailing imaginary term at the last sign that is not
        // a leading sign and not part of an exponent.
        std::size_t split = std::string_view::npos;
        for (std::size_t pos = body.size(); pos-- > 1;) {
            const char c = body[pos];
            if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
                split = pos;
                break;
            }
        }
        if (split == std::string_view::npos) {
            // Pure imaginary: "i", "-i", "2i", "1.5e-3i".
            if (body.empty() || body == "+" || body == "-") {
                return {0.0, body == "-" ? -1.0 : 1.0};
            }
            return {0.0, parse_component(body)};
        }
        std::string_view real_part = body.substr(0, split);
        std::string_view imag_part = body.substr(split);
        double imag;
        if (imag_part == "+") {
            imag = 1.0;
        } else if (imag_part == "-") {
            imag = -1.0;
        } else {
            imag = parse_component(imag_part);
        }
        return {parse_component(real_part), imag};
    }
    return {parse_component(text), 0.0};
}

std::vector<SuperpositionTerm> parse_terms(std::string_view text) {
    std::vector<SuperpositionTerm> terms;
    std::stringstream stream{std::string(text)};
    std::string item;
    while (std::getline(stream, item, ',')) {
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            throw UsageError("--terms: expected offset:coeff, got '" + item + "'");
        }
        SuperpositionTerm term;
        try {
            term.offset = parse_double(std::string_view(item).substr(0, colon));
            term.coeff = parse_complex(std::string_view(item).substr(colon + 1));
        } catch (const ParseError& error) {
            throw UsageError(std::string("--terms: ") + error.what());
        }
        terms.push_back(term);
    }
    if (terms.empty()) throw UsageError("--terms: empty term list");
    return terms;
}

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig config;

    CLI::App app{"momentum operators on a 1-D ring with twisted seam cells",
                 "ringop"};
    app.require_subcommand(1);

    std::string format_text = "csv";
    std::string terms_text;
    std::string k_list_text;
    std::string n_list_text = "20,40,80,160,320";

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", config.output_path,
                        "output file (default: standard output)");
        cmd->add_option("--format", format_text, "csv, json or svg")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
    };

    auto* spectrum = app.add_subcommand(
        "spectrum", "sorted eigenvalues of one twisted operator");
    spectrum->add_option("--n", config.n_points, "grid points");
    spectrum->add_option("--k", config.gauge_k, "gauge constant");
    spectrum->add_option("--phi", config.phi, "seam twist (rad)");
    add_common(spectrum);

    auto* sweep = app.add_subcommand(
        "sweep", "eigenvalues against the twist magnitude on [0, pi]");
    sweep->add_option("--n", config.n_points, "grid points");
    sweep->add_option("--k", config.gauge_k, "gauge constant");
    sweep->add_option("--steps", config.steps, "twist values on [0, pi]");
    add_common(sweep);

    auto* bands = app.add_subcommand(
        "bands", "quadratic band energies (q + n)^2");
    bands->add_option("--n-min", config.n_min, "lowest band index");
    bands->add_option("--n-max", config.n_max, "highest band index");
    bands->add_option("--q-samples", config.q_samples, "q values on [-0.5, 0.5]");
    add_common(bands);

    auto* superpose = app.add_subcommand(
        "superpose", "density and periodicity of a plane-wave superposition");
    superpose->add_option("--q", config.q, "base momentum");
    superpose->add_option("--k", config.gauge_k, "gauge constant");
    superpose->add_option("--terms", terms_text, "offset:coeff list, e.g. 0:1,1:0.5i")
        ->required();
    superpose->add_option("--amplitude", config.amplitude, "overall amplitude A");
    superpose->add_option("--samples", config.samples, "density sample count");
    add_common(superpose);

    auto* gauge_check = app.add_subcommand(
        "gauge-check",
        "gauge dependence of the smooth-join eigenvalue next to gauge "
        "invariance of the twisted-operator eigenvalue");
    gauge_check->add_option("--q", config.q, "target momentum");
    gauge_check->add_option("--k-list", k_list_text, "gauge constants, comma separated")
        ->required();
    gauge_check->add_option("--n", config.n_points, "grid points");
    add_common(gauge_check);

    auto* converge = app.add_subcommand(
        "converge", "grid-refinement errors of the twisted eigenvalue");
    converge->add_option("--q", config.q, "target momentum");
    converge->add_option("--k-list", k_list_text, "gauge constants, comma separated");
    converge->add_option("--n-list", n_list_text, "grid sizes, comma separated");
    add_common(converge);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* deepest = &app;
        while (!deepest->get_subcommands().empty()) {
            deepest = deepest->get_subcommands().front();
        }
        throw HelpRequested(deepest->help());
    } catch (const CLI::ParseError& error) {
        throw UsageError(error.what());
    }

    if (spectrum->parsed()) config.command = Command::Spectrum;
    if (sweep->parsed()) config.command = Command::Sweep;
    if (bands->parsed()) config.command = Command::Bands;
    if (superpose->parsed()) config.command = Command::Superpose;
    if (gauge_check->parsed()) config.command = Command::GaugeCheck;
    if (converge->parsed()) config.command = Command::Converge;

    static const std::map<std::string, OutputFormat> formats = {
        {"csv", OutputFormat::Csv},
        {"json", OutputFormat::Json},
        {"svg", OutputFormat::Svg}};
    config.format = formats.at(format_text);
    if (config.format == OutputFormat::Svg && config.command != Command::Sweep) {
        throw UsageError("--format svg is only available for sweep");
    }

    const bool needs_grid = config.command == Command::Spectrum ||
                            config.command == Command::Sweep ||
                            config.command == Command::GaugeCheck;
    if (needs_grid && config.n_points < 3) {
        throw UsageError("--n: grid needs at least 3 points (stencil degenerate)");
    }
    if (config.command == Command::Sweep && config.steps < 2) {
        throw UsageError("--steps: sweep needs at least 2 steps");
    }
    if (config.command == Command::Bands) {
        if (config.q_samples < 2) throw UsageError("--q-samples: need at least 2");
        if (config.n_min > config.n_max) {
            throw UsageError("--n-min/--n-max: empty band range");
        }
    }
    if (config.command == Command::Superpose) {
        config.terms = parse_terms(terms_text);
        if (config.samples < 2) throw UsageError("--samples: need at least 2");
        if (!(config.amplitude > 0.0)) {
            throw UsageError("--amplitude: must be positive");
        }
        for (std::size_t j = 1; j < config.terms.size(); ++j) {
            if (!(config.terms[j].offset > config.terms[j - 1].offset)) {
                throw UsageError("--terms: offsets must be strictly increasing");
            }
        }
    }
    if (config.command == Command::GaugeCheck || config.command == Command::Converge) {
        if (!k_list_text.empty()) {
            config.gauge_k_list = parse_double_list("--k-list", k_list_text);
        } else {
            config.gauge_k_list = {0.0, 0.5, 1.2};
        }
    }
    if (config.command == Command::Converge) {
        config.n_points_list = parse_int_list("--n-list", n_list_text);
        for (int n : config.n_points_list) {
            if (n < 3) {
                throw UsageError("--n-list: grid needs at least 3 points (stencil degenerate)");
            }
        }
    }
    return config;
}

namespace {

void run_with_stream(const RunConfig& config, std::ostream& out) {
    switch (config.command) {
        case Command::Spectrum: {
            const RingGrid grid(config.n_points);
            const auto spectrum =
                hermitian_eigen(build_twisted_operator(grid, config.gauge_k, config.phi))
                    .eigenvalues;
            if (config.format == OutputFormat::Json) {
                emit_spectrum_json(spectrum, out);
            } else {
                emit_spectrum_csv(spectrum, out);
            }
            break;
        }
        case Command::Sweep: {
            const RingGrid grid(config.n_points);
            const SweepTable table = phi_sweep(grid, config.gauge_k, config.steps);
            if (config.format == OutputFormat::Svg) {
                render_sweep_svg(table, out);
            } else if (config.format == OutputFormat::Json) {
                emit_sweep_json(table, out);
            } else {
                emit_sweep_csv(table, out);
            }
            break;
        }
        case Command::Bands: {
            const auto rows = band_table(config.n_min, config.n_max, config.q_samples);
            if (config.format == OutputFormat::Json) {
                emit_band_json(rows, out);
            } else {
                emit_band_csv(rows, out);
            }
            break;
        }
        case Command::Superpose: {
            const SuperpositionState state(config.q, config.gauge_k, config.terms,
                                           config.amplitude);
            const SeamWitness witness = is_density_periodic(state);
            const int samples = config.samples;
            if (config.format == OutputFormat::Json) {
                nlohmann::json report;
                report["q"] = state.q();
                report["gauge_k"] = state.gauge_k();
                report["amplitude"] = state.amplitude();
                auto terms = nlohmann::json::array();
                for (const auto& term : state.terms()) {
                    terms.push_back({{"offset", term.offset},
                                     {"re", term.coeff.real()},
                                     {"im", term.coeff.imag()}});
                }
                report["terms"] = terms;
                report["periodic"] = witness.periodic;
                report["value_jump"] = witness.value_jump;
                report["slope_jump"] = witness.slope_jump;
                if (witness.offending_pair) {
                    report["offending_pair"] = {witness.offending_pair->first,
                                                witness.offending_pair->second};
                } else {
                    report["offending_pair"] = nullptr;
                }
                auto rows = nlohmann::json::array();
                for (int i = 0; i < samples; ++i) {
                    const double x =
                        -std::numbers::pi +
                        2.0 * std::numbers::pi * i / (samples - 1);
                    rows.push_back({{"x", x}, {"density", density(state, x)}});
                }
                report["samples"] = rows;
                out << report.dump(2) << '\n';
            } else {
                out << "x,density\n";
                for (int i = 0; i < samples; ++i) {
                    const double x =
                        -std::numbers::pi +
                        2.0 * std::numbers::pi * i / (samples - 1);
                    out << format_double(x) << ',' << format_double(density(state, x))
                        << '\n';
                }
            }
            break;
        }
        case Command::GaugeCheck: {
            // Smooth-join eigenvalue m - k moves with the gauge; the twisted
            // operator's eigenvalue next to q stays put.
            const RingGrid grid(config.n_points);
            struct Row {
                double k;
                int m;
                double linear;
                double twisted;
                double twisted_error;
            };
            std::vector<Row> rows;
            for (double k : config.gauge_k_list) {
                const int m = static_cast<int>(std::lround(config.q + k));
                const double linear = linear_bc_eigenvalue(m, k);
                const double phi = twist_from_state(config.q, k);
                const auto spectrum =
                    hermitian_eigen(build_twisted_operator(grid, k, phi)).eigenvalues;
                double twisted = spectrum.front();
                for (double value : spectrum) {
                    if (std::abs(value - config.q) < std::abs(twisted - config.q)) {
                        twisted = value;
                    }
                }
                rows.push_back({k, m, linear, twisted, std::abs(twisted - config.q)});
            }
            if (config.format == OutputFormat::Json) {
                nlohmann::json array = nlohmann::json::array();
                for (const auto& row : rows) {
                    array.push_back({{"k", row.k},
                                     {"m", row.m},
                                     {"linear_eigenvalue", row.linear},
                                     {"twisted_eigenvalue", row.twisted},
                                     {"twisted_error", row.twisted_error}});
                }
                out << array.dump(2) << '\n';
            } else {
                out << "k,m,linear_eigenvalue,twisted_eigenvalue,twisted_error\n";
                for (const auto& row : rows) {
                    out << format_double(row.k) << ',' << row.m << ','
                        << format_double(row.linear) << ','
                        << format_double(row.twisted) << ','
                        << format_double(row.twisted_error) << '\n';
                }
            }
            break;
        }
        case Command::Converge: {
            const auto rows =
                convergence_study(config.q, config.gauge_k_list, config.n_points_list);
            if (config.format == OutputFormat::Json) {
                emit_convergence_json(rows, out);
            } else {
                emit_convergence_csv(rows, out);
            }
            break;
        }
    }
}

} // namespace

void run_command(const RunConfig& config) {
    if (config.output_path.empty()) {
        run_with_stream(config, std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + config.output_path + "' for writing");
    }
    run_with_stream(config, out);
    out.flush();
    if (!out) {
        throw IoError("write to '" + config.output_path + "' failed");
    }
}

} // namespace ringop
