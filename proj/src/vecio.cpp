#include "relvel/vecio.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <vector>

namespace relvel {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_double(std::string_view token) {
    token = trim(token);
    if (token.empty()) return std::nullopt;
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

std::optional<std::array<double, 3>> parse_triple(std::string_view text) {
    std::array<double, 3> out{};
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t comma = text.find(',', start);
        const bool last = i == 2;
        if (last != (comma == std::string_view::npos)) return std::nullopt;
        const auto token = last ? text.substr(start) : text.substr(start, comma - start);
        const auto v = parse_double(token);
        if (!v) return std::nullopt;
        out[static_cast<std::size_t>(i)] = *v;
        start = comma + 1;
    }
    return out;
}

std::string format9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

}  // namespace

std::optional<CVec3> parse_cvec3(std::string_view text) {
    const std::size_t semi = text.find(';');
    const auto re_part = text.substr(0, semi);
    const auto re = parse_triple(re_part);
    if (!re) return std::nullopt;

    std::array<double, 3> im{0.0, 0.0, 0.0};
    if (semi != std::string_view::npos) {
        const auto im_text = text.substr(semi + 1);
        if (im_text.find(';') != std::string_view::npos) return std::nullopt;
        const auto parsed = parse_triple(im_text);
        if (!parsed) return std::nullopt;
        im = *parsed;
    }
    return CVec3{CScalar{(*re)[0], im[0]}, CScalar{(*re)[1], im[1]}, CScalar{(*re)[2], im[2]}};
}

std::string canonical(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string canonical(const CVec3& v) {
    std::string out = canonical(v.x.real());
    out += ',';
    out += canonical(v.y.real());
    out += ',';
    out += canonical(v.z.real());
    if (!is_real(v)) {
        out += ';';
        out += canonical(v.x.imag());
        out += ',';
        out += canonical(v.y.imag());
        out += ',';
        out += canonical(v.z.imag());
    }
    return out;
}

std::string pretty(double value) { return format9(value); }

std::string pretty(CScalar s) {
    if (s.imag() == 0.0) return format9(s.real());
    std::string out = format9(s.real());
    out += s.imag() < 0.0 ? '-' : '+';
    out += format9(std::abs(s.imag()));
    out += 'i';
    return out;
}

std::string pretty(const CVec3& v) {
    std::string out = "(";
    out += pretty(v.x);
    out += ", ";
    out += pretty(v.y);
    out += ", ";
    out += pretty(v.z);
    out += ")";
    return out;
}

}  // namespace relvel
