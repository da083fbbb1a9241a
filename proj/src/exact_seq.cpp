#include "spadic/exact_seq.hpp"

#include "spadic/padic_core.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace spadic {

const char* to_string(Kind kind) noexcept {
    return kind == Kind::First ? "first" : "second";
}

std::vector<Integer> next_stirling_row(Kind kind, const std::vector<Integer>& row) {
    const std::size_t n = row.size() - 1;
    std::vector<Integer> next(n + 2);
    for (std::size_t k = 1; k <= n + 1; ++k) {
        const Integer& left = row[k - 1];
        if (k > n) {
            next[k] = left;
            continue;
        }
        if (kind == Kind::Second) {
            next[k] = left + row[k] * k;            // S(n+1,k) = S(n,k-1) + k S(n,k)
        } else {
            next[k] = left - row[k] * n;            // s(n+1,k) = s(n,k-1) - n s(n,k)
        }
    }
    return next;
}

std::vector<Integer> stirling_row(Kind kind, unsigned long n) {
    std::vector<Integer> row{1};
    for (unsigned long i = 0; i < n; ++i) row = next_stirling_row(kind, row);
    return row;
}

StirlingTriangle::StirlingTriangle(Kind kind, unsigned long n_max)
    : kind_(kind), n_max_(n_max) {
    rows_.push_back({Integer(1)});
}

void StirlingTriangle::extend_to(unsigned long n) const {
    if (n > n_max_) {
        throw std::out_of_range("row " + std::to_string(n) + " beyond triangle limit " +
                                std::to_string(n_max_));
    }
    {
        std::shared_lock lock(mutex_);
        if (rows_.size() > n) return;
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) rows_.push_back(next_stirling_row(kind_, rows_.back()));
}

const std::vector<Integer>& StirlingTriangle::row(unsigned long n) const {
    extend_to(n);
    std::shared_lock lock(mutex_);
    return rows_[n];
}

const Integer& StirlingTriangle::at(unsigned long n, unsigned long k) const {
    static const Integer zero = 0;
    const auto& r = row(n);
    return k < r.size() ? r[k] : zero;
}

std::size_t StirlingTriangle::rows_computed() const {
    std::shared_lock lock(mutex_);
    return rows_.size();
}

const StirlingTriangle& shared_triangle(Kind kind) {
    static const StirlingTriangle first(Kind::First);
    static const StirlingTriangle second(Kind::Second);
    return kind == Kind::First ? first : second;
}

ModularStirlingRows::ModularStirlingRows(Kind kind, std::uint64_t modulus)
    : kind_(kind), modulus_(modulus), row_{modulus > 1 ? 1u : 0u} {
    if (modulus == 0 || modulus >= (std::uint64_t{1} << 62)) {
        throw std::invalid_argument("modulus must lie in [1, 2^62)");
    }
}

void ModularStirlingRows::advance() {
    using u128 = unsigned __int128;
    const std::size_t n = row_.size() - 1;
    row_.push_back(0);
    // Walk downward so row_[k-1] still holds row n when row_[k] is rewritten.
    for (std::size_t k = n + 1; k >= 1; --k) {
        const std::uint64_t left = row_[k - 1];
        const std::uint64_t cur = k <= n ? row_[k] : 0;
        std::uint64_t term;
        if (kind_ == Kind::Second) {
            term = static_cast<std::uint64_t>(u128(cur) * k % modulus_);
            row_[k] = (left + term) % modulus_;
        } else {
            term = static_cast<std::uint64_t>(u128(cur) * n % modulus_);
            row_[k] = (left + modulus_ - term) % modulus_;
        }
    }
    row_[0] = 0;
    ++n_;
}

void ModularStirlingRows::advance_to(unsigned long n) {
    if (n < n_) throw std::invalid_argument("modular rows only move forward");
    while (n_ < n) advance();
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

Integer stirling2_explicit(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k == 0) return n == 0 ? 1 : 0;
    Integer sum = 0;
    Integer c = 1;  // C(k, j)
    Integer power;
    for (unsigned long j = 0; j <= k; ++j) {
        if (j > 0) {
            c *= k - j + 1;
            c /= j;
        }
        mpz_ui_pow_ui(power.get_mpz_t(), j, n);
        if ((k - j) % 2 == 0) {
            sum += c * power;
        } else {
            sum -= c * power;
        }
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), factorial(k).get_mpz_t());
    return q;
}

Integer stirling2(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    const auto& tri = shared_triangle(Kind::Second);
    if (n <= tri.n_max()) return tri.at(n, k);
    return stirling2_explicit(n, k);
}

Integer stirling1(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    const auto& tri = shared_triangle(Kind::First);
    if (n <= tri.n_max()) return tri.at(n, k);
    return stirling_row(Kind::First, n)[k];
}

Integer stirling(Kind kind, unsigned long n, unsigned long k) {
    return kind == Kind::First ? stirling1(n, k) : stirling2(n, k);
}

SeriesPoly falling_factorial(unsigned long n) {
    std::vector<Rational> poly{Rational(1)};
    for (unsigned long j = 0; j < n; ++j) {
        // multiply by (x - j)
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * j;
        }
        poly = std::move(next);
    }
    return SeriesPoly(std::move(poly));
}

namespace {

// (e^t - 1)/t = sum_i t^i / (i+1)!
SeriesPoly exp_quotient_series(std::size_t order) {
    SeriesPoly s(order);
    Integer f = 1;
    for (std::size_t i = 0; i < order; ++i) {
        f *= i + 1;
        s[i] = Rational(1, f);
    }
    return s;
}

std::vector<Rational> compute_bernoulli(unsigned long n_max, long l) {
    const std::size_t order = n_max + 1;
    SeriesPoly base = exp_quotient_series(order);
    if (l > 0) base = base.reciprocal();
    const unsigned long e = l < 0 ? static_cast<unsigned long>(-(l + 1)) + 1
                                  : static_cast<unsigned long>(l);
    SeriesPoly powered = base.pow(e);
    std::vector<Rational> out(order);
    Integer f = 1;
    for (std::size_t i = 0; i < order; ++i) {
        if (i > 0) f *= i;
        out[i] = powered[i] * f;
    }
    return out;
}

struct BernoulliCache {
    std::mutex mutex;
    std::map<long, std::vector<Rational>> columns;
};

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

}  // namespace

std::vector<Rational> bernoulli_numbers(unsigned long n_max, long l) {
    auto& cache = bernoulli_cache();
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.columns.find(l);
        if (it != cache.columns.end() && it->second.size() > n_max) {
            return {it->second.begin(), it->second.begin() + n_max + 1};
        }
    }
    auto column = compute_bernoulli(n_max, l);
    std::lock_guard lock(cache.mutex);
    auto& slot = cache.columns[l];
    if (slot.size() < column.size()) slot = column;
    return column;
}

Rational bernoulli_number(unsigned long n, long l) {
    return bernoulli_numbers(n, l)[n];
}

SeriesPoly bernoulli_poly(unsigned long n, long l) {
    const auto numbers = bernoulli_numbers(n, l);
    std::vector<Rational> coeffs(n + 1);
    for (unsigned long i = 0; i <= n; ++i) {
        coeffs[n - i] = numbers[i] * binomial(n, i);
    }
    return SeriesPoly(std::move(coeffs));
}

Integer connect_second(unsigned long n, unsigned long k) {
    if (k > n) throw std::invalid_argument("connect_second requires n >= k");
    const Rational value = bernoulli_number(n - k, -static_cast<long>(k)) * binomial(n, k);
    if (value.get_den() != 1 || value.get_num() != stirling2(n, k)) {
        throw ConsistencyError("C(n,k) B_{n-k}^(-k) != S(n,k) at n=" + std::to_string(n) +
                               " k=" + std::to_string(k) + ": " + value.get_str());
    }
    return value.get_num();
}

Integer connect_first(unsigned long n, unsigned long k) {
    if (k < 1 || k > n) throw std::invalid_argument("connect_first requires n >= k >= 1");
    const Rational value =
        bernoulli_number(n - k, static_cast<long>(n)) * binomial(n - 1, k - 1);
    if (value.get_den() != 1 || value.get_num() != stirling1(n, k)) {
        throw ConsistencyError("C(n-1,k-1) B_{n-k}^(n) != s(n,k) at n=" + std::to_string(n) +
                               " k=" + std::to_string(k) + ": " + value.get_str());
    }
    return value.get_num();
}

std::vector<std::pair<unsigned long, Valuation>> coefficient_valuations(unsigned long n,
                                                                        long l, Prime p) {
    const SeriesPoly poly = bernoulli_poly(n, l);
    std::vector<std::pair<unsigned long, Valuation>> out;
    out.reserve(n + 1);
    for (unsigned long i = 0; i <= n; ++i) {
        const Rational& c = poly[n - i];
        out.emplace_back(i, sgn(c) == 0 ? Valuation::infinite() : Valuation(nu(c, p)));
    }
    return out;
}

}  // namespace spadic
