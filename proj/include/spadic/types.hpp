#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace spadic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a computed value contradicts an identity that must hold
/// (connection formulas, theorem predictions checked against exact values).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A prime validated once at construction by trial division.
class Prime {
public:
    explicit Prime(long p);

    long value() const noexcept { return p_; }
    operator long() const noexcept { return p_; }

    static bool is_prime(long n) noexcept;

private:
    long p_;
};

/// p-adic valuation, or +infinity for zero.
class Valuation {
public:
    constexpr Valuation() = default;  // infinite
    constexpr Valuation(long v) : v_(v) {}

    static constexpr Valuation infinite() { return Valuation(); }

    constexpr bool is_infinite() const noexcept { return !v_.has_value(); }
    long value() const;

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;

    std::string to_string() const;

private:
    std::optional<long> v_;
};

/// Converts a non-negative exact integer into a native index, rejecting
/// values that do not fit.
unsigned long to_index(const Integer& n, const char* what);

/// Residue of n modulo m normalized to [0, m-1].
long mod_normal(const Integer& n, long m);
long mod_normal(long n, long m);

/// Inverse of a modulo prime p; a must be prime to p.
long inverse_mod(long a, long p);

/// (-1)^e as +1 / -1 for a possibly huge exponent.
int sign_pow(const Integer& e);

}  // namespace spadic
