#pragma once

// Slow, independent reference computations used as oracles by the tests.
// Nothing here calls into the library.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace ref {

inline std::vector<long> digits(unsigned long n, long p) {
    std::vector<long> out;
    while (n > 0) {
        out.push_back(static_cast<long>(n % p));
        n /= p;
    }
    return out;
}

inline long digit_sum(unsigned long n, long p) {
    const auto d = digits(n, p);
    return std::accumulate(d.begin(), d.end(), 0L);
}

// nu_p of a nonzero integer by repeated division
inline long nu(mpz_class n, long p) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// unit part of a nonzero integer reduced mod p, in [1, p-1]
inline long unit_residue(mpz_class n, long p) {
    while (n % p == 0) n /= p;
    mpz_class r = n % p;
    if (r < 0) r += p;
    return r.get_si();
}

inline mpz_class factorial(unsigned long n) {
    mpz_class f = 1;
    for (unsigned long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline mpz_class binomial(unsigned long n, unsigned long m) {
    if (m > n) return 0;
    mpz_class c = 1;
    for (unsigned long i = 0; i < m; ++i) c = c * (n - i) / (i + 1);
    return c;
}

// C(top, r) for any integer top via the falling product
inline mpz_class general_binomial(const mpz_class& top, unsigned long r) {
    mpz_class num = 1;
    for (unsigned long i = 0; i < r; ++i) num *= top - i;
    return num / factorial(r);
}

// S(n,k) by enumerating restricted growth strings (set partitions)
inline mpz_class stirling2_bruteforce(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<int> a(n, 0);
    long count = 0;
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            if (blocks == k) ++count;
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            a[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return count;
}

// signed s(n,k) = (-1)^{n-k} * #{permutations of n with k cycles}
inline mpz_class stirling1_bruteforce(int n, int k) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        std::vector<bool> seen(n, false);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
        }
        if (cycles == k) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n == 0) count = k == 0 ? 1 : 0;
    return (n - k) % 2 == 0 ? mpz_class(count) : mpz_class(-count);
}

// Closed forms of the first higher-order Bernoulli numbers as polynomials in l.
inline mpq_class bernoulli_closed(int n, long l) {
    const mpq_class L(l);
    switch (n) {
        case 0: return 1;
        case 1: return -L / 2;
        case 2: return L * (3 * L - 1) / 12;
        case 3: return -L * L * (L - 1) / 8;
        case 4: return L * (15 * L * L * L - 30 * L * L + 5 * L + 2) / 240;
        default: return 0;
    }
}

// Random rational p^e * u/v with u, v prime to p.
class RationalGen {
public:
    RationalGen(long p, std::uint64_t seed) : p_(p), rng_(seed) {}

    mpq_class unit() {
        std::uniform_int_distribution<long> d(1, 1000000);
        long u, v;
        do u = d(rng_); while (u % p_ == 0);
        do v = d(rng_); while (v % p_ == 0);
        mpq_class q(d(rng_) % 2 ? u : -u, v);
        q.canonicalize();
        return q;
    }

    mpq_class with_valuation(long e) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p_, std::abs(e));
        mpq_class q = unit();
        return e >= 0 ? mpq_class(q * pw) : mpq_class(q / pw);
    }

    long exponent(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

private:
    long p_;
    std::mt19937_64 rng_;
};

}  // namespace ref
