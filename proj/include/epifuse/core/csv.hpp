#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace epifuse::csv {

/// Reads a whole CSV file. Handles double-quoted cells with embedded commas,
/// quotes and newlines. Throws DataError on I/O failure.
std::vector<std::vector<std::string>> read_file(const std::string& path);

/// Full-precision text for a double (round-trips through strtod).
std::string format_double(double v);

/// Minimal row-at-a-time CSV writer; quotes cells only when needed.
class Writer {
public:
    explicit Writer(const std::string& path);
    void row(const std::vector<std::string>& cells);

private:
    std::ofstream out_;
    std::string path_;
};

} // namespace epifuse::csv
