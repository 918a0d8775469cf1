#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromatic {

using Rat = mpq_class;
using Int = mpz_class;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct general_position_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q", plain integers, and decimals like "-1.25" or "3e-2", all exactly.
Rat parse_rational(const std::string& text);

// Lowest-terms "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rat& q);

// Fixed-precision decimal used for display-only fields (12 significant digits).
std::string rational_to_decimal(const Rat& q);
std::string double_to_decimal(double x);

inline double to_double(const Rat& q) { return q.get_d(); }

// sqrt of a nonnegative rational as a double, for output boundaries only.
inline double sqrt_to_double(const Rat& q) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    return std::sqrt(q.get_d());
}

// Exact square root if q is a perfect square in Q.
std::optional<Rat> exact_sqrt(const Rat& q);

inline bool is_perfect_square(const Rat& q) { return exact_sqrt(q).has_value(); }

// Deterministic dyadic rationals in [0,1) with denominator 2^bits.  Drawing
// from the raw mt19937_64 stream keeps results identical across platforms.
class DyadicSampler {
public:
    explicit DyadicSampler(std::uint64_t seed, unsigned bits = 16) : rng_(seed), bits_(bits) {}

    Rat unit() {
        std::uint64_t r = rng_() >> (64 - bits_);
        Rat q(static_cast<unsigned long>(r), 1);
        q /= (Int(1) << bits_);
        return q;
    }

    // Uniform in [lo, hi).
    Rat uniform(const Rat& lo, const Rat& hi) { return lo + unit() * (hi - lo); }

    std::uint64_t raw() { return rng_(); }

    std::uint64_t below(std::uint64_t n) { return rng_() % n; }

private:
    std::mt19937_64 rng_;
    unsigned bits_;
};

}  // namespace chromatic
