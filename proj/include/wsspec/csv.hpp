#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wsspec
{

// Header plus rows of already formatted cells. Serialization uses LF line
// endings and quotes a cell only when it holds a comma, quote or newline.
struct CsvTable
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;
};

// 12 significant digits; empty cell when the value is absent or not finite.
std::string format_number(double value);
std::string format_number(std::optional<double> value);

// Inverse of CsvTable::to_string. Throws ConfigError on malformed input.
CsvTable parse_csv(std::string_view text);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

} // namespace wsspec
