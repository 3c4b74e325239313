#include "popdiff/rational.hpp"

#include "popdiff/errors.hpp"

#include <cctype>
#include <limits>

namespace popdiff {

Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q); // d > 0 by cpp_rational canonical form
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

Int rat_ceil(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n > 0 && t * d != n) ++t;
    return t;
}

Int rat_round_half_up(const Rat& q) { return rat_floor(q + Rat(1, 2)); }

long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw cap_exceeded_error("integer value out of 64-bit range: " + v.str());
    return static_cast<long long>(v);
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::size_t& i) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw parse_error("bad rational literal '" + text + "'");
        return text.substr(start, i - start);
    };
    std::string ipart = digits(pos);
    Rat value;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string den = digits(pos);
        Int d(den);
        if (d == 0) throw parse_error("zero denominator in '" + text + "'");
        value = Rat(Int(ipart), d);
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string frac = digits(pos);
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rat(Int(ipart) * scale + Int(frac), scale);
    } else {
        value = Rat(Int(ipart));
    }
    if (pos != text.size()) throw parse_error("trailing characters in rational '" + text + "'");
    return neg ? Rat(-value) : value;
}

std::string format_rational(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

std::string decimal_string(const Rat& q, int digits) {
    bool neg = q < 0;
    Rat a = neg ? Rat(-q) : q;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled = rat_floor(Rat(a * scale) + Rat(1, 2)); // half away from zero
    Int whole = scaled / scale, frac = scaled % scale;
    std::string fs = frac.str();
    fs.insert(fs.begin(), static_cast<std::size_t>(digits) - fs.size(), '0');
    std::string out = whole.str();
    if (digits > 0) out += "." + fs;
    if (neg && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
    return out;
}

} // namespace popdiff
