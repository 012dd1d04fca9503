#pragma once

// Text format for tabulated wave functions:
//
//   x,re,im
//   -1.0,0.0,0.0
//   ...
//
// Comma separated, '.' as the decimal point, x strictly increasing.

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>

#include "riemannwave/errors.hpp"
#include "riemannwave/spectral.hpp"

namespace riemannwave {

namespace detail {

inline std::string_view trim(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

inline double parse_number(std::string_view field, std::size_t line)
{
    field = trim(field);
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size() || field.empty()) {
        throw DomainError("sampled wave csv: line " + std::to_string(line) + ": malformed number '" +
                          std::string(field) + "'");
    }
    return value;
}

} // namespace detail

/// Parses the `x,re,im` format and validates the result.
inline SampledWave read_sampled_wave_csv(std::istream &in)
{
    SampledWave wave;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = detail::trim(line);
        if (row.empty()) {
            continue;
        }
        if (!header_seen) {
            if (row != "x,re,im") {
                throw DomainError("sampled wave csv: expected header 'x,re,im'");
            }
            header_seen = true;
            continue;
        }
        const auto c1 = row.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : row.find(',', c1 + 1);
        if (c2 == std::string_view::npos || row.find(',', c2 + 1) != std::string_view::npos) {
            throw DomainError("sampled wave csv: line " + std::to_string(line_no) + ": expected 3 fields");
        }
        wave.xs.push_back(detail::parse_number(row.substr(0, c1), line_no));
        const double re = detail::parse_number(row.substr(c1 + 1, c2 - c1 - 1), line_no);
        const double im = detail::parse_number(row.substr(c2 + 1), line_no);
        wave.values.emplace_back(re, im);
    }
    if (!header_seen) {
        throw DomainError("sampled wave csv: empty input");
    }
    wave.validate();
    return wave;
}

/// Writes the `x,re,im` format with 17 significant digits.
inline void write_sampled_wave_csv(std::ostream &out, const SampledWave &wave)
{
    wave.validate();
    out << "x,re,im\n";
    char buffer[64];
    auto put = [&](double v) {
        const auto result = std::to_chars(buffer, buffer + sizeof(buffer), v, std::chars_format::general, 17);
        out.write(buffer, result.ptr - buffer);
    };
    for (std::size_t i = 0; i < wave.xs.size(); ++i) {
        put(wave.xs[i]);
        out << ',';
        put(wave.values[i].real());
        out << ',';
        put(wave.values[i].imag());
        out << '\n';
    }
}

} // namespace riemannwave
