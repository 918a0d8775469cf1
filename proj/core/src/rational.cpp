#include "chromatic/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace chromatic {

Rat parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw input_error("empty rational literal");

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        Int num, den;
        if (num.set_str(t.substr(0, slash), 10) != 0)
            throw input_error("bad rational numerator: " + text);
        if (den.set_str(t.substr(slash + 1), 10) != 0 || den == 0)
            throw input_error("bad rational denominator: " + text);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }

    // Decimal / scientific form, parsed exactly.
    std::string mantissa = t;
    long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        mantissa = t.substr(0, epos);
        try {
            exp10 = std::stol(t.substr(epos + 1));
        } catch (...) {
            throw input_error("bad exponent: " + text);
        }
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false, seen_digit = false;
    std::size_t i = 0;
    if (i < mantissa.size() && (mantissa[i] == '+' || mantissa[i] == '-')) {
        if (mantissa[i] == '-') digits += '-';
        ++i;
    }
    for (; i < mantissa.size(); ++i) {
        char c = mantissa[i];
        if (c == '.') {
            if (seen_point) throw input_error("bad number: " + text);
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_point) ++frac_digits;
        } else {
            throw input_error("bad number: " + text);
        }
    }
    if (!seen_digit) throw input_error("bad number: " + text);

    Int num;
    if (num.set_str(digits, 10) != 0) throw input_error("bad number: " + text);
    long net = exp10 - frac_digits;
    Rat q(num, 1);
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
    if (net > 0)
        q *= pow10;
    else if (net < 0)
        q /= pow10;
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string double_to_decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string rational_to_decimal(const Rat& q) { return double_to_decimal(q.get_d()); }

std::optional<Rat> exact_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace chromatic
