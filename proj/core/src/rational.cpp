#include <orbcc/rational.hpp>

#include <orbcc/errors.hpp>

#include <cctype>
#include <cstdio>

namespace orbcc {

namespace {

bool is_decimal_integer(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_decimal_integer(text, true)) {
            throw ParseError("not a rational: \"" + std::string(text) + "\"");
        }
        return Rational(Integer(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_decimal_integer(num, true) || !is_decimal_integer(den, false)) {
        throw ParseError("not a rational: \"" + std::string(text) + "\"");
    }
    Integer d{std::string(den)};
    if (d == 0) {
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    Integer n{std::string(num)};
    return Rational(n, d);
}

std::string render_rational(const Rational& q) {
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string render_approx(const Rational& q, int significant_digits) {
    double v = q.convert_to<double>();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
    return buf;
}

}  // namespace orbcc
