#include "ckgeom/rational.hpp"

#include "ckgeom/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ckgeom {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    if (s.front() == '-' || s.front() == '+') {
        s.remove_prefix(1);
    }
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                 : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw FormatError("not a rational literal: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
    if (d == 0) {
        throw FormatError("zero denominator in '" + std::string(text) + "'");
    }
    Rational value(n, d);
    value.canonicalize();
    return value;
}

} // namespace ckgeom
