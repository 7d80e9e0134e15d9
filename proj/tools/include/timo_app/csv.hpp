#ifndef TIMO_APP_CSV_HPP
#define TIMO_APP_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace timo::app {

/// Shortest decimal string that round-trips to the same double.
[[nodiscard]] std::string format_shortest(double v);
/// Fixed 17 significant digits (general notation), locale independent.
[[nodiscard]] std::string format17(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Reads a numeric CSV with one header line. Throws IoError if the file cannot be
/// opened, has no header or no data rows, or a row is malformed.
[[nodiscard]] CsvTable read_csv(const std::string& path);

void write_row(std::ostream& out, const std::vector<double>& values);

}  // namespace timo::app

#endif  // TIMO_APP_CSV_HPP
