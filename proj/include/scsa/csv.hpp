#pragma once

#include <string>
#include <vector>

namespace scsa {

// Minimal RFC-4180-style table: header row plus string cells.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

// Writes with a trailing newline; throws std::runtime_error on unwritable paths.
void emit_csv(const CsvTable& table, const std::string& path);

}  // namespace scsa
