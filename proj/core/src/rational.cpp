#include "dirackit/rational.hpp"

#include "dirackit/errors.hpp"

#include <cctype>

namespace dirackit {

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw ParseError("invalid integer literal '" + std::string(s) + "'");
    std::string text(s);
    if (text[0] == '+') text.erase(0, 1);
    return mpz_class(text, 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part[0] == '-';
        std::string digits(int_part);
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        digits.append(frac_part);
        if (frac_part.empty() || !is_integer_literal(frac_part) || frac_part[0] == '-' || frac_part[0] == '+') {
            throw ParseError("invalid decimal literal '" + std::string(text) + "'");
        }
        mpz_class num = parse_integer(digits);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
        Rational q(num, den);
        q.canonicalize();
        if (negative && q > 0) q = -q;
        return q;
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

std::vector<double> to_double(const RationalPoint& point) {
    std::vector<double> out;
    out.reserve(point.size());
    for (const auto& q : point) out.push_back(q.get_d());
    return out;
}

} // namespace dirackit
