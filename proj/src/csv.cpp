#include "navoid/csv.hpp"

#include <cmath>
#include <cstdio>

namespace navoid {

std::string format_sig12(double v) {
    if (v == 0.0) return "0";
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const double mag = std::abs(v);
    if (mag < 1e-4 || mag > 1e12) {
        std::snprintf(buf, sizeof buf, "%.11e", v);
    } else {
        int decimals = 11 - static_cast<int>(std::floor(std::log10(mag)));
        if (decimals < 0) decimals = 0;
        std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    }
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << csv_escape(fields[i]);
    }
    out_ << '\n';
}

}  // namespace navoid
