#include "timo_app/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "timo_app/config.hpp"

namespace timo::app {

std::string format_shortest(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), ptr};
}

std::string format17(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return {buf.data(), ptr};
}

void write_row(std::ostream& out, const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << format17(values[i]);
    }
    out << '\n';
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    CsvTable table;
    std::string line;
    if (!std::getline(in, line) || line.empty()) {
        throw IoError("'" + path + "' is empty");
    }
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) {
            table.header.push_back(cell);
        }
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            const auto cell = rest.substr(0, comma);
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
                throw IoError("'" + path + "' line " + std::to_string(line_no) +
                              ": malformed number '" + std::string(cell) + "'");
            }
            row.push_back(v);
            if (comma == std::string_view::npos) {
                break;
            }
            rest = rest.substr(comma + 1);
        }
        if (row.size() != table.header.size()) {
            throw IoError("'" + path + "' line " + std::to_string(line_no) + ": expected " +
                          std::to_string(table.header.size()) + " columns");
        }
        table.rows.push_back(std::move(row));
    }
    if (table.rows.empty()) {
        throw IoError("'" + path + "' has no data rows");
    }
    return table;
}

}  // namespace timo::app
