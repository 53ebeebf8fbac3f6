#include "ptsim/table_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ptsim {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void write_csv(const SweepTable& t, std::ostream& out) {
    for (const auto& [key, value] : t.metadata) {
        out << "# " << key << " = " << value << '\n';
    }
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out << ',';
        out << t.columns[c].first;
    }
    out << '\n';
    const std::size_t rows = t.n_rows();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            if (c) out << ',';
            out << format_real(t.columns[c].second[r]);
        }
        out << '\n';
    }
}

void write_json(const SweepTable& t, std::ostream& out) {
    nlohmann::ordered_json j;
    auto& meta = j["metadata"];
    for (const auto& [key, value] : t.metadata) meta[key] = value;
    auto& cols = j["columns"];
    for (const auto& [name, values] : t.columns) cols[name] = values;
    out << j.dump(2) << '\n';
}

}  // namespace

void write_table(const SweepTable& table, TableFormat format, std::ostream& out) {
    if (format == TableFormat::csv) {
        write_csv(table, out);
    } else {
        write_json(table, out);
    }
}

std::string table_to_string(const SweepTable& table, TableFormat format) {
    std::ostringstream ss;
    write_table(table, format, ss);
    return ss.str();
}

void write_table_file(const SweepTable& table, TableFormat format,
                      const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_table: cannot open '" + path + "' for writing");
    }
    write_table(table, format, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write_table: write to '" + path + "' failed");
    }
}

std::optional<TableFormat> format_from_string(const std::string& s) {
    if (s == "csv") return TableFormat::csv;
    if (s == "json") return TableFormat::json;
    return std::nullopt;
}

const char* to_string(TableFormat f) {
    return f == TableFormat::csv ? "csv" : "json";
}

}  // namespace ptsim
