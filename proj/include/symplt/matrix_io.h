#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "symplt/matrix.h"

namespace symplt {

// Plain CSV: one matrix row per line, comma separated, no header. Entries are
// written with 17 significant digits so that reading back is exact.

Matrix parse_matrix_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const Matrix& m);

Matrix read_matrix_csv(const std::filesystem::path& path);
void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);

/// Shortest "%.17g" rendering used by every writer in the project.
std::string format_double(double x);

}  // namespace symplt
