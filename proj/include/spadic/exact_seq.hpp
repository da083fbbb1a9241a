#pragma once

// Exact Stirling numbers of both kinds and higher-order Bernoulli numbers
// and polynomials, with the identities connecting them.

#include "spadic/series.hpp"
#include "spadic/types.hpp"

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace spadic {

enum class Kind { First, Second };

const char* to_string(Kind kind) noexcept;

/// Memoized triangle rows[n][k], 0 <= k <= n <= n_max. Rows are appended
/// once and never modified, so references handed out stay valid and
/// concurrent readers always observe a consistent prefix.
class StirlingTriangle {
public:
    static constexpr unsigned long default_n_max = 512;

    explicit StirlingTriangle(Kind kind, unsigned long n_max = default_n_max);

    StirlingTriangle(const StirlingTriangle&) = delete;
    StirlingTriangle& operator=(const StirlingTriangle&) = delete;

    Kind kind() const noexcept { return kind_; }
    unsigned long n_max() const noexcept { return n_max_; }

    /// Entry (n, k); zero for k > n. Throws std::out_of_range for n > n_max.
    const Integer& at(unsigned long n, unsigned long k) const;
    const std::vector<Integer>& row(unsigned long n) const;

    /// Number of rows computed so far.
    std::size_t rows_computed() const;

private:
    void extend_to(unsigned long n) const;

    Kind kind_;
    unsigned long n_max_;
    mutable std::shared_mutex mutex_;
    mutable std::deque<std::vector<Integer>> rows_;
};

/// Process-wide triangles with the default row limit.
const StirlingTriangle& shared_triangle(Kind kind);

/// Next row from the previous one: row n -> row n+1.
std::vector<Integer> next_stirling_row(Kind kind, const std::vector<Integer>& row);

/// Row n computed from scratch with two rolling rows (no memo).
std::vector<Integer> stirling_row(Kind kind, unsigned long n);

/// Rows modulo m, advanced one at a time. Entries are exact residues in
/// [0, m-1]; m must be below 2^62.
class ModularStirlingRows {
public:
    ModularStirlingRows(Kind kind, std::uint64_t modulus);

    unsigned long n() const noexcept { return n_; }
    const std::vector<std::uint64_t>& row() const noexcept { return row_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    void advance();
    void advance_to(unsigned long n);

private:
    Kind kind_;
    std::uint64_t modulus_;
    unsigned long n_ = 0;
    std::vector<std::uint64_t> row_;
};

/// S(n, k). Served from the shared triangle when n fits, otherwise by the
/// alternating-sum formula.
Integer stirling2(unsigned long n, unsigned long k);

/// Signed s(n, k). Served from the shared triangle when n fits, otherwise
/// by rolling rows.
Integer stirling1(unsigned long n, unsigned long k);

Integer stirling(Kind kind, unsigned long n, unsigned long k);

/// S(n, k) = (1/k!) sum_j (-1)^{k-j} C(k, j) j^n.
Integer stirling2_explicit(unsigned long n, unsigned long k);

/// (x)_n = x (x-1) ... (x-n+1) as a polynomial of degree n.
SeriesPoly falling_factorial(unsigned long n);

/// B_n^(l) = n! [t^n] (t / (e^t - 1))^l.
Rational bernoulli_number(unsigned long n, long l);

/// B_0^(l), ..., B_{n_max}^(l). Cached per order l.
std::vector<Rational> bernoulli_numbers(unsigned long n_max, long l);

/// B_n^(l)(x) = sum_i C(n, i) B_i^(l) x^{n-i}.
SeriesPoly bernoulli_poly(unsigned long n, long l);

/// C(n, k) B_{n-k}^(-k), checked against S(n, k).
Integer connect_second(unsigned long n, unsigned long k);

/// C(n-1, k-1) B_{n-k}^(n), checked against s(n, k).
Integer connect_first(unsigned long n, unsigned long k);

/// nu_p of each coefficient of B_n^(l)(x), indexed by codegree i
/// (the coefficient of x^{n-i}).
std::vector<std::pair<unsigned long, Valuation>> coefficient_valuations(unsigned long n,
                                                                        long l, Prime p);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace spadic
