#pragma once

#include <iosfwd>
#include <string>

#include "ptsim/sweep.hpp"

namespace ptsim {

enum class TableFormat { csv, json };

/// CSV layout: metadata as leading '#'-prefixed "key = value" comment
/// lines, then a header row of column names, ',' separators, '\n' line
/// ends. Reals are printed with 17 significant digits so a parse
/// round-trips bit-exactly.
///
/// JSON layout: {"metadata": {...}, "columns": {name: [...]}} with
/// insertion order preserved.
void write_table(const SweepTable& table, TableFormat format, std::ostream& out);

/// Serializes to a string (what write_table_file writes verbatim).
std::string table_to_string(const SweepTable& table, TableFormat format);

/// Writes to a file; I/O failures throw std::runtime_error naming the path.
void write_table_file(const SweepTable& table, TableFormat format,
                      const std::string& path);

std::optional<TableFormat> format_from_string(const std::string& s);
const char* to_string(TableFormat f);

/// %.17g rendering used for every real in CSV output.
std::string format_real(double v);

}  // namespace ptsim
