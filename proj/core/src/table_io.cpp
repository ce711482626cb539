#include "ringop/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <ostream>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace ringop {

std::string format_double(double value) {
    char buffer[40];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto result = std::from_chars(first, last, value);
    if (result.ec != std::errc{} || result.ptr != last) {
        throw ParseError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

namespace {

long parse_long(std::string_view text) {
    long value = 0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
        throw ParseError("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

} // namespace

void emit_sweep_csv(const SweepTable& table, std::ostream& out) {
    out << "phi,branch_sign,index,eigenvalue\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.eigenvalues.size(); ++i) {
            out << format_double(row.phi) << ',' << row.branch_sign << ',' << i
                << ',' << format_double(row.eigenvalues[i]) << '\n';
        }
    }
}

void emit_spectrum_csv(const std::vector<double>& eigenvalues, std::ostream& out) {
    out << "index,eigenvalue\n";
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        out << i << ',' << format_double(eigenvalues[i]) << '\n';
    }
}

void emit_band_csv(const std::vector<BandRow>& rows, std::ostream& out) {
    out << "q,n,energy\n";
    for (const auto& row : rows) {
        out << format_double(row.q) << ',' << row.n << ','
            << format_double(row.energy) << '\n';
    }
}

void emit_convergence_csv(const std::vector<ConvergenceRow>& rows,
                          std::ostream& out) {
    out << "n_points,gauge_k,dx,error\n";
    for (const auto& row : rows) {
        out << row.n_points << ',' << format_double(row.gauge_k) << ','
            << format_double(row.dx) << ',' << format_double(row.error) << '\n';
    }
}

std::vector<SweepCsvRecord> parse_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "phi,branch_sign,index,eigenvalue") {
        throw ParseError("missing sweep CSV header");
    }
    std::vector<SweepCsvRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 4) {
            throw ParseError("expected 4 fields, got " + std::to_string(fields.size()));
        }
        SweepCsvRecord record;
        record.phi = parse_double(fields[0]);
        record.branch_sign = static_cast<int>(parse_long(fields[1]));
        record.index = static_cast<int>(parse_long(fields[2]));
        record.eigenvalue = parse_double(fields[3]);
        records.push_back(record);
    }
    return records;
}

// ---- JSON ----------------------------------------------------------------

void emit_sweep_json(const SweepTable& table, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.eigenvalues.size(); ++i) {
            rows.push_back({{"phi", row.phi},
                            {"branch_sign", row.branch_sign},
                            {"index", i},
                            {"eigenvalue", row.eigenvalues[i]}});
        }
    }
    out << rows.dump(2) << '\n';
}

void emit_spectrum_json(const std::vector<double>& eigenvalues, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        rows.push_back({{"index", i}, {"eigenvalue", eigenvalues[i]}});
    }
    out << rows.dump(2) << '\n';
}

void emit_band_json(const std::vector<BandRow>& rows, std::ostream& out) {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& row : rows) {
        array.push_back({{"q", row.q}, {"n", row.n}, {"energy", row.energy}});
    }
    out << array.dump(2) << '\n';
}

void emit_convergence_json(const std::vector<ConvergenceRow>& rows,
                           std::ostream& out) {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& row : rows) {
        array.push_back({{"n_points", row.n_points},
                         {"gauge_k", row.gauge_k},
                         {"dx", row.dx},
                         {"error", row.error}});
    }
    out << array.dump(2) << '\n';
}

// ---- SVG -----------------------------------------------------------------

namespace {

// Follow each eigenvalue across consecutive sweep steps: pair previous branch
// tips with the new row greedily by distance.
std::vector<std::vector<double>> track_branches(
    const std::vector<const SweepRow*>& rows) {
    const std::size_t levels = rows.front()->eigenvalues.size();
    std::vector<std::vector<double>> branches(levels);
    for (std::size_t b = 0; b < levels; ++b) {
        branches[b].push_back(rows.front()->eigenvalues[b]);
    }
    for (std::size_t s = 1; s < rows.size(); ++s) {
        const auto& values = rows[s]->eigenvalues;
        struct Pair {
            double distance;
            std::size_t branch;
            std::size_t value;
        };
        std::vector<Pair> pairs;
        pairs.reserve(levels * levels);
        for (std::size_t b = 0; b < levels; ++b) {
            for (std::size_t v = 0; v < levels; ++v) {
                pairs.push_back({std::abs(branches[b].back() - values[v]), b, v});
            }
        }
        std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (a.distance != b.distance) return a.distance < b.distance;
            if (a.branch != b.branch) return a.branch < b.branch;
            return a.value < b.value;
        });
        std::vector<bool> branch_done(levels, false), value_done(levels, false);
        for (const auto& pair : pairs) {
            if (branch_done[pair.branch] || value_done[pair.value]) continue;
            branches[pair.branch].push_back(values[pair.value]);
            branch_done[pair.branch] = true;
            value_done[pair.value] = true;
        }
    }
    return branches;
}

} // namespace

void render_sweep_svg(const SweepTable& table, std::ostream& out) {
    constexpr double width = 800.0, height = 600.0;
    constexpr double margin_x = 80.0, margin_y = 60.0; // 10% each side
    const double plot_w = width - 2.0 * margin_x;
    const double plot_h = height - 2.0 * margin_y;

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& row : table.rows) {
        for (double v : row.eigenvalues) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const double pad = 0.05 * (hi - lo == 0.0 ? 1.0 : hi - lo);
    lo -= pad;
    hi += pad;

    const auto to_x = [&](double phi) {
        return margin_x + phi / std::numbers::pi * plot_w;
    };
    const auto to_y = [&](double value) {
        return margin_y + (hi - value) / (hi - lo) * plot_h;
    };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";

    // axes
    out << "  <line x1=\"" << margin_x << "\" y1=\"" << margin_y + plot_h
        << "\" x2=\"" << margin_x + plot_w << "\" y2=\"" << margin_y + plot_h
        << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << margin_x << "\" y1=\"" << margin_y << "\" x2=\""
        << margin_x << "\" y2=\"" << margin_y + plot_h << "\" stroke=\"black\"/>\n";

    const struct {
        double phi;
        const char* label;
    } x_ticks[] = {{0.0, "0"}, {std::numbers::pi / 2.0, "pi/2"},
                   {std::numbers::pi, "pi"}};
    for (const auto& tick : x_ticks) {
        const double x = to_x(tick.phi);
        out << "  <line x1=\"" << x << "\" y1=\"" << margin_y + plot_h
            << "\" x2=\"" << x << "\" y2=\"" << margin_y + plot_h + 6
            << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << x << "\" y=\"" << margin_y + plot_h + 22
            << "\" text-anchor=\"middle\" font-size=\"14\">" << tick.label
            << "</text>\n";
    }
    for (int tick = static_cast<int>(std::ceil(lo)); tick <= static_cast<int>(std::floor(hi)); ++tick) {
        const double y = to_y(tick);
        out << "  <line x1=\"" << margin_x - 6 << "\" y1=\"" << y << "\" x2=\""
            << margin_x << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << margin_x - 10 << "\" y=\"" << y + 5
            << "\" text-anchor=\"end\" font-size=\"14\">" << tick << "</text>\n";
    }
    out << "  <text x=\"" << margin_x + plot_w / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"16\">phi (rad)</text>\n";
    out << "  <text x=\"20\" y=\"" << margin_y + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"16\" transform=\"rotate(-90 20 "
        << margin_y + plot_h / 2 << ")\">eigenvalue</text>\n";

    // one polyline per tracked branch, one color per twist sign
    for (int sign : {+1, -1}) {
        std::vector<const SweepRow*> rows;
        for (const auto& row : table.rows) {
            if (row.branch_sign == sign) rows.push_back(&row);
        }
        if (rows.empty()) continue;
        const char* stroke = sign > 0 ? "#1f77b4" : "#d62728";
        const auto branches = track_branches(rows);
        for (const auto& branch : branches) {
            out << "  <polyline fill=\"none\" stroke=\"" << stroke
                << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t s = 0; s < branch.size(); ++s) {
                if (s > 0) out << ' ';
                out << format_double(to_x(rows[s]->phi)) << ','
                    << format_double(to_y(branch[s]));
            }
            out << "\"/>\n";
        }
    }

    out << "</svg>\n";
}

} // namespace ringop
