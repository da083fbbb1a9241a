#pragma once

// Minimum-zero classification of Stirling numbers and maximum-pole
// classification of higher-order Bernoulli numbers, with the valuation and
// unit-residue predictions that hold in those cases.
//
// Classification is pure digit arithmetic and works for arbitrarily large
// n and k. Functions that check a prediction against an exact Stirling or
// Bernoulli value need n small enough to compute that value.

#include "spadic/exact_seq.hpp"
#include "spadic/padic_core.hpp"

#include <optional>
#include <utility>

namespace spadic {

struct ClassificationReport {
    Kind kind = Kind::Second;
    Integer n;
    Integer k;
    long p = 2;
    std::optional<Integer> r;                   // (n-k)/(p-1) when integral
    std::optional<long> binomial_test_value;    // criterion binomial mod p
    bool is_min_zero = false;
    std::optional<long> predicted_valuation;
    std::optional<long> predicted_unit_residue;
    std::optional<Valuation> witnessed_valuation;
    std::optional<long> witnessed_unit_residue;
};

/// Valuation and unit residue (in [1, p-1]) of a nonzero value.
struct ValuationResidue {
    long valuation;
    long unit_residue;

    friend bool operator==(const ValuationResidue&, const ValuationResidue&) = default;
};

/// ceil((sigma(k) - sigma(n)) / (p-1)), a lower bound for nu_p(S(n,k)).
long lower_bound_second(const Integer& n, const Integer& k, Prime p);

/// ceil((sigma(k-1) - sigma(n-1)) / (p-1)), a lower bound for nu_p(s(n,k)).
long lower_bound_first(const Integer& n, const Integer& k, Prime p);

/// Minimum zero iff r = (n-k)/(p-1) is integral and p does not divide
/// C(n+r, r). With `witness`, S(n,k) is computed exactly, attached, and
/// checked against the prediction (ConsistencyError on mismatch).
ClassificationReport classify_second(const Integer& n, const Integer& k, Prime p,
                                     bool witness = false);

/// Minimum zero iff r = (n-k)/(p-1) is integral, r <= k-1 and p does not
/// divide C(k-1, r). Never holds for n >= kp.
ClassificationReport classify_first(const Integer& n, const Integer& k, Prime p,
                                    bool witness = false);

ClassificationReport classify(Kind kind, const Integer& n, const Integer& k, Prime p,
                              bool witness = false);

/// Exact nu_p and unit residue of S(n,k) or s(n,k); nullopt when the value is 0.
std::optional<ValuationResidue> exact_valuation_residue(Kind kind, unsigned long n,
                                                        unsigned long k, Prime p);

/// n = a p^h with 1 <= a <= p-1, 1 <= k <= n, (p-1) | (n-k): valuation
/// (sigma(k)-a)/(p-1) and residue (-1)^{r+ah} a! / eps(k!).
ValuationResidue dewannemacker_second(long a, long h, const Integer& k, Prime p);

/// Classification of (n+b, k+b) for a minimum-zero (n,k) and
/// 0 <= b < min(p^nu(k), p^nu(n)); asserts the valuation and residue carry over.
ClassificationReport invariance_second(const Integer& n, const Integer& k, const Integer& b,
                                       Prime p, bool witness = false);

/// Every pair of adjacent base-p digits of k sums to at most p-1.
bool central_fibbinary(const Integer& k, Prime p);

/// prod_i C(a_i + a_{i+1}, a_i) mod p over the digits a_i of k; equals S(pk,k) mod p.
long central_residue(const Integer& k, Prime p);

/// For a minimum-zero S(n,k): the common valuation and residue of S(n,k) and
/// S(n+1,k+1), checked against the exact S(n+1,k+1).
ValuationResidue shift_second(const Integer& n, const Integer& k, Prime p);

/// k = a p^h, k <= n < kp, (p-1) | (n-k): predicted nu_p(s(n,k)) and residue,
/// checked against the exact s(n,k).
ValuationResidue single_digit_first(long a, long h, const Integer& n, Prime p);

/// Classification of (t+n, t+k) for a minimum-zero s(n,k) and p^nu(t) > n
/// (t = 0 is the identity).
ClassificationReport invariance_first(const Integer& n, const Integer& k, const Integer& t,
                                      Prime p, bool witness = false);

/// For a minimum-zero s(n,k) with n, k >= 2: the common valuation and residue
/// of s(n,k) and s(n-1,k-1), checked against the exact s(n-1,k-1).
ValuationResidue shift_first(const Integer& n, const Integer& k, Prime p);

struct MaxPoleReport {
    unsigned long n = 0;
    long l = 0;
    long p = 2;
    bool is_max_pole = false;
    std::optional<unsigned long> r;          // n/(p-1) when integral
    std::optional<long> congruence_residue;  // (-1)^r C(n-l+r, r) mod p
    Valuation witnessed_valuation;           // nu_p(B_n^(l))
    std::optional<long> witnessed_residue;   // p^r B_n^(l) / n! mod p
};

/// Maximum pole iff r = n/(p-1) is integral and p does not divide
/// C(l-n-1, r). Checked against the exact B_n^(l).
MaxPoleReport max_pole_classify(unsigned long n, long l, Prime p);

/// (-1)^r C(n+r-l, r) mod p for (p-1) | n, checked against the residue of
/// (-1)^n p^r B_n^(l) / n!.
long proposition_congruence(unsigned long n, long l, Prime p);

/// Reports for (n,k) and (np,kp); asserts that minimum zero transfers and
/// that the valuation (second kind only) and residue agree.
std::pair<ClassificationReport, ClassificationReport> scaling_second(const Integer& n,
                                                                     const Integer& k,
                                                                     Prime p,
                                                                     bool witness = false);
std::pair<ClassificationReport, ClassificationReport> scaling_first(const Integer& n,
                                                                    const Integer& k,
                                                                    Prime p,
                                                                    bool witness = false);

}  // namespace spadic
