#include "spadic/padic_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace spadic {
namespace {

// Factorials 0!, ..., (p-1)! mod p.
std::vector<long> digit_factorials(long p) {
    std::vector<long> f(static_cast<std::size_t>(p), 1);
    for (long i = 1; i < p; ++i) f[i] = f[i - 1] * i % p;
    return f;
}

// C(n, m) mod p for single digits 0 <= m, n < p.
long digit_binomial(long n, long m, const std::vector<long>& fact, long p) {
    if (m > n) return 0;
    return fact[n] * inverse_mod(fact[m] * fact[n - m] % p, p) % p;
}

void require_range(const Integer& n, const Integer& m) {
    if (sgn(m) < 0 || m > n) {
        throw std::invalid_argument("binomial requires 0 <= m <= n, got n=" +
                                    n.get_str() + " m=" + m.get_str());
    }
}

// Strips all factors of p from z, returning how many were removed.
long remove_factor(Integer& z, long p) {
    Integer pp = p;
    return static_cast<long>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t()));
}

}  // namespace

DigitVector::DigitVector(const Integer& n, Prime p) : p_(p) {
    if (sgn(n) < 0) throw std::invalid_argument("digits of a negative integer");
    Integer rest = n;
    const long base = p.value();
    while (sgn(rest) != 0) {
        digits_.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                                        static_cast<unsigned long>(base)));
    }
}

long DigitVector::sum() const noexcept {
    long s = 0;
    for (long d : digits_) s += d;
    return s;
}

Integer DigitVector::value() const {
    Integer v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        v = v * p_.value() + *it;
    }
    return v;
}

DigitVector digits(const Integer& n, Prime p) { return DigitVector(n, p); }

long digit_sum(const Integer& n, Prime p) { return DigitVector(n, p).sum(); }

long nu(const Integer& n, Prime p) {
    if (sgn(n) == 0) throw std::domain_error("valuation of zero");
    Integer z = abs(n);
    return remove_factor(z, p);
}

long nu(const Rational& q, Prime p) {
    if (sgn(q) == 0) throw std::domain_error("valuation of zero");
    Integer num = abs(q.get_num());
    Integer den = q.get_den();
    return remove_factor(num, p) - remove_factor(den, p);
}

ValUnit val_unit(const Rational& q, Prime p) {
    if (sgn(q) == 0) return {};
    Integer num = q.get_num();
    Integer den = q.get_den();
    const long v = remove_factor(num, p) - remove_factor(den, p);
    Rational unit(num, den);
    unit.canonicalize();
    const long residue =
        mod_normal(num, p) * inverse_mod(mod_normal(den, p), p) % p.value();
    return {Valuation(v), unit, residue};
}

long residue_mod_p(const Rational& q, Prime p) {
    if (sgn(q) == 0) return 0;
    const long v = nu(q, p);
    if (v < 0) {
        throw std::domain_error("not a p-adic integer: " + q.get_str());
    }
    if (v > 0) return 0;
    return *val_unit(q, p).unit_residue;
}

long unit_residue(const Rational& q, Prime p) {
    if (sgn(q) == 0) throw std::domain_error("unit part of zero");
    return *val_unit(q, p).unit_residue;
}

long nu_factorial(const Integer& n, Prime p) {
    if (sgn(n) < 0) throw std::invalid_argument("factorial of a negative integer");
    Integer num = n - digit_sum(n, p);
    return Integer(num / (p.value() - 1)).get_si();
}

long nu_binomial(const Integer& n, const Integer& m, Prime p) {
    require_range(n, m);
    const long diff = digit_sum(m, p) + digit_sum(n - m, p) - digit_sum(n, p);
    return diff / (p.value() - 1);
}

long carry_count(const Integer& m, const Integer& r, Prime p) {
    DigitVector a(m, p), b(r, p);
    const std::size_t len = std::max(a.size(), b.size());
    long carry = 0, count = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const long s = a[i] + b[i] + carry;
        carry = s >= p.value() ? 1 : 0;
        count += carry;
    }
    return count;
}

long lucas_residue(const Integer& n, const Integer& m, Prime p) {
    require_range(n, m);
    const auto fact = digit_factorials(p);
    DigitVector nd(n, p), md(m, p);
    long acc = 1;
    for (std::size_t i = 0; i < nd.size() && acc != 0; ++i) {
        acc = acc * digit_binomial(nd[i], md[i], fact, p) % p.value();
    }
    return acc;
}

long binomial_residue(const Integer& top, const Integer& r, Prime p) {
    if (sgn(r) < 0) throw std::invalid_argument("binomial with negative lower index");
    if (sgn(top) >= 0) {
        if (r > top) return 0;
        return lucas_residue(top, r, p);
    }
    const Integer a = -top;
    const long res = lucas_residue(a + r - 1, r, p);
    return sign_pow(r) > 0 ? res : mod_normal(-res, p);
}

long anton_epsilon(const Integer& n, const Integer& m, Prime p) {
    require_range(n, m);
    const auto fact = digit_factorials(p);
    DigitVector nd(n, p), md(m, p), rd(n - m, p);
    long num = 1, den = 1;
    for (std::size_t i = 0; i < nd.size(); ++i) {
        num = num * fact[nd[i]] % p.value();
        den = den * fact[md[i]] % p.value() * fact[rd[i]] % p.value();
    }
    return num * inverse_mod(den, p) % p.value();
}

Integer neg_binomial(const Integer& a, const Integer& r) {
    if (sgn(a) < 1 || sgn(r) < 0) {
        throw std::invalid_argument("neg_binomial requires a >= 1, r >= 0");
    }
    Integer c;
    mpz_bin_ui(c.get_mpz_t(), Integer(a + r - 1).get_mpz_t(), to_index(r, "r"));
    return sign_pow(r) > 0 ? c : Integer(-c);
}

long epsilon_factorial_single_digit(long a, long h, Prime p) {
    if (a < 1 || a > p.value() - 1) {
        throw std::invalid_argument("single digit must lie in [1, p-1]");
    }
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    long f = 1;
    for (long i = 2; i <= a; ++i) f = f * i % p.value();
    return (a * h) % 2 == 0 ? f : mod_normal(-f, p);
}

long epsilon_factorial(const Integer& n, Prime p) {
    if (sgn(n) < 0) throw std::invalid_argument("factorial of a negative integer");
    const auto fact = digit_factorials(p);
    DigitVector nd(n, p);
    long acc = 1;
    for (long d : nd.digits()) acc = acc * fact[d] % p.value();
    return nu_factorial(n, p) % 2 == 0 ? acc : mod_normal(-acc, p);
}

long epsilon_factorial_p_shift(const Integer& k, Prime p) {
    const long e = epsilon_factorial(k, p);
    return sign_pow(k) > 0 ? e : mod_normal(-e, p);
}

long epsilon_factorial_ratio(const Integer& n, const Integer& k, Prime p) {
    require_range(n, k);
    return epsilon_factorial(n, p) * inverse_mod(epsilon_factorial(k, p), p) % p.value();
}

DigitSumStep digit_sum_successor(const Integer& k, Prime p) {
    DigitVector kd(k, p);
    long u = 0;
    while (static_cast<std::size_t>(u) < kd.size() && kd[u] == p.value() - 1) ++u;
    return {kd.sum() + 1 - (p.value() - 1) * u, u};
}

long ceil_div(long num, long den) {
    if (den <= 0) throw std::invalid_argument("ceil_div requires a positive divisor");
    long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

}  // namespace spadic
