#pragma once

// Base-p digits, p-adic valuations and unit parts, and the standard
// factorial / binomial congruences they support.

#include "spadic/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace spadic {

/// Little-endian base-p digits: digits[i] is the coefficient of p^i.
/// Zero is the empty sequence; there are never trailing zero digits.
class DigitVector {
public:
    DigitVector(const Integer& n, Prime p);

    const std::vector<long>& digits() const noexcept { return digits_; }
    Prime prime() const noexcept { return p_; }
    std::size_t size() const noexcept { return digits_.size(); }

    /// Digit i, with zero beyond the most significant digit.
    long operator[](std::size_t i) const noexcept {
        return i < digits_.size() ? digits_[i] : 0;
    }

    long sum() const noexcept;
    Integer value() const;

private:
    std::vector<long> digits_;
    Prime p_;
};

/// Valuation plus unit part; for zero the valuation is infinite and the
/// unit is absent.
struct ValUnit {
    Valuation valuation;
    std::optional<Rational> unit;
    std::optional<long> unit_residue;  // in [1, p-1]
};

DigitVector digits(const Integer& n, Prime p);
long digit_sum(const Integer& n, Prime p);

/// nu_p(q); throws std::domain_error for q == 0.
long nu(const Rational& q, Prime p);
long nu(const Integer& n, Prime p);
ValUnit val_unit(const Rational& q, Prime p);

/// Residue of a p-adic integer q modulo p. Throws std::domain_error if q has
/// a pole at p.
long residue_mod_p(const Rational& q, Prime p);

/// Unit-part residue of q in [1, p-1]; throws std::domain_error for q == 0.
long unit_residue(const Rational& q, Prime p);

long nu_factorial(const Integer& n, Prime p);
long nu_binomial(const Integer& n, const Integer& m, Prime p);

/// Number of carries when adding m and n-m in base p.
long carry_count(const Integer& m, const Integer& r, Prime p);

/// Lucas: C(n, m) mod p as the product of digit binomials.
long lucas_residue(const Integer& n, const Integer& m, Prime p);

/// C(top, r) mod p for any integer top (negative tops go through
/// C(-a, r) = (-1)^r C(a+r-1, r)). r must be non-negative.
long binomial_residue(const Integer& top, const Integer& r, Prime p);

/// Anton: (-1)^e eps_p(C(n, m)) mod p, e = nu_p(C(n, m)).
long anton_epsilon(const Integer& n, const Integer& m, Prime p);

/// C(-a, r) = (-1)^r C(a+r-1, r).
Integer neg_binomial(const Integer& a, const Integer& r);

/// eps_p((a p^h)!) mod p, computed as (-1)^{ah} a!.
long epsilon_factorial_single_digit(long a, long h, Prime p);

/// eps_p((pk)!) mod p, computed as (-1)^k eps_p(k!).
long epsilon_factorial_p_shift(const Integer& k, Prime p);

/// eps_p(n!) mod p from the digits of n: (-1)^{nu_p(n!)} prod n_i!.
long epsilon_factorial(const Integer& n, Prime p);

/// eps_p(n! / k!) mod p for n >= k >= 0.
long epsilon_factorial_ratio(const Integer& n, const Integer& k, Prime p);

struct DigitSumStep {
    long sigma_next;  // sigma_p(k+1)
    long u;           // nu_p(k+1), the trailing run of (p-1) digits of k
};

DigitSumStep digit_sum_successor(const Integer& k, Prime p);

/// ceil(num / den) for den > 0.
long ceil_div(long num, long den);

}  // namespace spadic
