#include "polytrope/rational.hpp"

#include <cctype>

namespace polytrope {

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    if (!valid_integer_token(num) || (slash != std::string_view::npos && !valid_integer_token(den)))
        throw ParseError("malformed rational: '" + std::string(text) + "'");

    Integer p(std::string(num), 10);
    Integer q = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");

    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign_of_dot(const std::vector<int>& coeffs, const std::vector<Rational>& point) {
    Rational acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        acc += coeffs[i] * point[i];
    }
    return sgn(acc);
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

} // namespace polytrope
