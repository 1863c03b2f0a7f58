#include "symplt/matrix_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace symplt {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_entry(std::string_view field, std::size_t line) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError("matrix csv: bad number '" + std::string(field) + "' on line " +
                         std::to_string(line));
    if (!std::isfinite(value))
        throw ParseError("matrix csv: non-finite entry on line " + std::to_string(line));
    return value;
}

}  // namespace

Matrix parse_matrix_csv(std::istream& in) {
    std::vector<double> data;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = trim(line);
        if (body.empty()) continue;
        std::size_t count = 0;
        std::size_t start = 0;
        while (true) {
            const auto comma = body.find(',', start);
            data.push_back(parse_entry(body.substr(start, comma - start), lineno));
            ++count;
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (rows == 0)
            cols = count;
        else if (count != cols)
            throw ParseError("matrix csv: line " + std::to_string(lineno) + " has " +
                             std::to_string(count) + " entries, expected " + std::to_string(cols));
        ++rows;
    }
    if (rows == 0) throw ParseError("matrix csv: no data");
    return Matrix(rows, cols, std::move(data));
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_matrix_csv(in);
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_matrix_csv(out, m);
}

}  // namespace symplt
