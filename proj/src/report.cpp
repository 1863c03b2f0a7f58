#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "symplt/experiments.h"
#include "symplt/matrix_io.h"

namespace symplt {

namespace {

std::string sci5(double x) {
    if (std::isnan(x)) return "failed";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", x);
    return buf;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("stats csv: bad number '" + std::string(s) + "'");
    return v;
}

std::string markdown(const std::vector<ExperimentStats>& stats) {
    std::ostringstream out;
    out << "| statistic |";
    for (const auto& row : stats) out << ' ' << row.label << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < stats.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& f : stat_fields()) {
        out << "| " << f.label << " |";
        for (const auto& row : stats) out << ' ' << sci5(row.*f.member) << " |";
        out << '\n';
    }
    bool any_failed = false;
    for (const auto& row : stats) {
        if (row.ok()) continue;
        if (!any_failed) out << '\n';
        any_failed = true;
        out << "- " << row.label << ": " << row.failure << '\n';
    }
    return out.str();
}

std::string csv(const std::vector<ExperimentStats>& stats) {
    std::ostringstream out;
    out << "label,x,status";
    for (const auto& f : stat_fields()) out << ',' << f.key;
    out << '\n';
    for (const auto& row : stats) {
        out << row.label << ',' << format_double(row.x) << ',' << (row.ok() ? "ok" : "failed");
        for (const auto& f : stat_fields()) out << ',' << format_double(row.*f.member);
        out << '\n';
    }
    return out.str();
}

std::string json(const std::vector<ExperimentStats>& stats) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : stats) {
        nlohmann::ordered_json j;
        j["label"] = row.label;
        j["x"] = row.x;
        j["status"] = row.ok() ? "ok" : "failed";
        if (!row.ok()) j["failure"] = row.failure;
        for (const auto& f : stat_fields()) j[f.key] = row.*f.member;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

}  // namespace

std::string emit_table(const std::vector<ExperimentStats>& stats, OutputFormat format) {
    switch (format) {
        case OutputFormat::Markdown: return markdown(stats);
        case OutputFormat::Csv: return csv(stats);
        case OutputFormat::Json: return json(stats);
    }
    return {};
}

std::vector<ExperimentStats> parse_stats_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("stats csv: empty input");
    const auto& fields = stat_fields();
    if (split_commas(line).size() != 3 + fields.size())
        throw ParseError("stats csv: unexpected header");

    std::vector<ExperimentStats> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_commas(line);
        if (cells.size() != 3 + fields.size())
            throw ParseError("stats csv: wrong number of fields in '" + line + "'");
        ExperimentStats row;
        row.label = std::string(cells[0]);
        row.x = parse_double(cells[1]);
        if (cells[2] != "ok") row.failure = std::string(cells[2]);
        for (std::size_t k = 0; k < fields.size(); ++k)
            row.*fields[k].member = parse_double(cells[3 + k]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::pair<std::string, std::string>> figure_series(
    const std::vector<ExperimentStats>& stats) {
    struct Panel {
        const char* name;
        std::vector<std::pair<const char*, double ExperimentStats::*>> columns;
    };
    const std::vector<Panel> panels{
        {"fig1a", {{"kappa_a", &ExperimentStats::kappa_a}}},
        {"fig1b", {{"dec_w1", &ExperimentStats::dec_w1}, {"dec_w2", &ExperimentStats::dec_w2}}},
        {"fig2a", {{"symp_a", &ExperimentStats::symp_a}}},
        {"fig2b",
         {{"symp_l_w1", &ExperimentStats::symp_l_w1}, {"symp_l_w2", &ExperimentStats::symp_l_w2}}},
        {"fig3a", {{"delta_a", &ExperimentStats::delta_a}}},
        {"fig3b",
         {{"delta_l_w1", &ExperimentStats::delta_l_w1},
          {"delta_l_w2", &ExperimentStats::delta_l_w2}}},
    };
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : panels) {
        std::ostringstream s;
        s << 'x';
        for (const auto& [key, member] : p.columns) s << ',' << key;
        s << '\n';
        for (const auto& row : stats) {
            s << format_double(row.x);
            for (const auto& [key, member] : p.columns) s << ',' << format_double(row.*member);
            s << '\n';
        }
        out.emplace_back(p.name, s.str());
    }
    return out;
}

std::vector<ExperimentStats> run_and_write(const RunConfig& config) {
    auto rows = run_experiment(config);
    if (config.out.empty()) throw DomainError("run_and_write: output path is empty");
    write_text(config.out, emit_table(rows, config.format));
    if (config.id == 5) {
        const auto dir = config.out.parent_path();
        const auto stem = config.out.stem().string();
        for (const auto& [name, text] : figure_series(rows))
            write_text(dir / (stem + "." + name + ".csv"), text);
    }
    return rows;
}

}  // namespace symplt
