#include "wsspec/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wsspec/errors.hpp"

namespace wsspec
{

namespace
{

bool needs_quotes(const std::string& cell)
{
    return cell.find_first_of(",\"\n\r") != std::string::npos;
}

void append_cell(std::string& out, const std::string& cell)
{
    if (!needs_quotes(cell))
    {
        out += cell;
        return;
    }
    out += '"';
    for (char c : cell)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
}

void append_row(std::string& out, const std::vector<std::string>& row)
{
    for (std::size_t i = 0; i < row.size(); ++i)
    {
        if (i)
            out += ',';
        append_cell(out, row[i]);
    }
    out += '\n';
}

} // namespace

std::string CsvTable::to_string() const
{
    std::string out;
    append_row(out, header);
    for (const auto& row : rows)
        append_row(out, row);
    return out;
}

std::string format_number(double value)
{
    if (!std::isfinite(value))
        return {};
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string format_number(std::optional<double> value)
{
    return value ? format_number(*value) : std::string{};
}

CsvTable parse_csv(std::string_view text)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string cell;
    bool quoted = false;
    bool at_line_start = true;

    std::size_t i = 0;
    while (i < text.size())
    {
        const char c = text[i];
        if (quoted)
        {
            if (c == '"')
            {
                if (i + 1 < text.size() && text[i + 1] == '"')
                {
                    cell += '"';
                    ++i;
                }
                else
                    quoted = false;
            }
            else
                cell += c;
            ++i;
            continue;
        }
        at_line_start = false;
        if (c == '"')
        {
            if (!cell.empty())
                throw ConfigError("csv: quote inside unquoted cell");
            quoted = true;
        }
        else if (c == ',')
        {
            record.push_back(std::move(cell));
            cell.clear();
        }
        else if (c == '\n')
        {
            record.push_back(std::move(cell));
            cell.clear();
            records.push_back(std::move(record));
            record.clear();
            at_line_start = true;
        }
        else if (c == '\r')
            throw ConfigError("csv: CR line endings are not accepted");
        else
            cell += c;
        ++i;
    }
    if (quoted)
        throw ConfigError("csv: unterminated quoted cell");
    if (!at_line_start)
        throw ConfigError("csv: missing final line feed");
    if (records.empty())
        throw ConfigError("csv: missing header");

    CsvTable table;
    table.header = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r)
    {
        if (records[r].size() != table.header.size())
            throw ConfigError("csv: row " + std::to_string(r) +
                              " has the wrong number of cells");
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open " + path + " for writing");
    out << contents;
    if (!out)
        throw ConfigError("write failed: " + path);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace wsspec
