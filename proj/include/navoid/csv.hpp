#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace navoid {

// 12 significant digits; scientific notation for |v| outside [1e-4, 1e12].
std::string format_sig12(double v);

// RFC-4180 quoting: fields containing comma, quote, CR or LF get quoted,
// embedded quotes doubled.
std::string csv_escape(const std::string& field);

// Writes header + rows with LF newlines.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& out_;
};

}  // namespace navoid
