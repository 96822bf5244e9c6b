#include "ashwa/core/rational.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace ashwa {

Rational rational_from_double(double v)
{
    Rational r;
    mpq_set_d(r.get_mpq_t(), v);
    return r;
}

namespace {

Rational pow10(long e)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    Rational r = e < 0 ? Rational(mpz_class(1), p) : Rational(p);
    r.canonicalize();
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto fail = [&] { throw std::invalid_argument("not a number: '" + s + "'"); };
    if (s.empty()) fail();

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0 || r.get_den() == 0) fail();
        r.canonicalize();
        return r;
    }

    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
    std::string digits;
    long exponent = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) --exponent;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) fail();
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') fail();
        try {
            std::size_t used = 0;
            long e = std::stol(s.substr(i + 1), &used);
            if (i + 1 + used != s.size()) fail();
            exponent += e;
        } catch (const std::logic_error&) {
            fail();
        }
    }
    Rational r(mpz_class(digits, 10));
    r *= pow10(exponent);
    if (negative) r = -r;
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r)
{
    // get_d truncates; step to whichever neighbour is nearest.
    const double t = r.get_d();
    if (!std::isfinite(t)) return t;
    const double up = std::nextafter(t, r > t ? INFINITY : -INFINITY);
    if (!std::isfinite(up)) return t;
    const Rational err_t = abs(r - rational_from_double(t));
    const Rational err_up = abs(r - rational_from_double(up));
    return err_up < err_t ? up : t;
}

std::string to_decimal(const Rational& r)
{
    mpz_class den = r.get_den();
    unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
    unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
    if (den != 1) return fmt::format("{}", to_double(r));

    const unsigned long places = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    const mpz_class scaled = abs(r.get_num()) * scale / r.get_den();
    std::string digits = scaled.get_str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    if (places > 0) digits.insert(digits.size() - places, ".");
    return (r < 0 ? "-" : "") + digits;
}

}  // namespace ashwa
