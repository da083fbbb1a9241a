#include "spadic/types.hpp"

#include <limits>

namespace spadic {

Prime::Prime(long p) : p_(p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("not a prime: " + std::to_string(p));
    }
}

bool Prime::is_prime(long n) noexcept {
    if (n < 2) return false;
    for (long d = 2; d <= n / d; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

long Valuation::value() const {
    if (!v_) throw std::domain_error("infinite valuation has no finite value");
    return *v_;
}

std::string Valuation::to_string() const {
    return v_ ? std::to_string(*v_) : std::string("inf");
}

unsigned long to_index(const Integer& n, const char* what) {
    if (sgn(n) < 0) {
        throw std::invalid_argument(std::string(what) + " must be non-negative");
    }
    if (!n.fits_ulong_p()) {
        throw std::out_of_range(std::string(what) + " is too large: " + n.get_str());
    }
    return n.get_ui();
}

long mod_normal(const Integer& n, long m) {
    Integer r = n % m;
    if (sgn(r) < 0) r += m;
    return r.get_si();
}

long mod_normal(long n, long m) {
    long r = n % m;
    return r < 0 ? r + m : r;
}

long inverse_mod(long a, long p) {
    Integer inv;
    Integer base = mod_normal(a, p);
    if (mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), Integer(p).get_mpz_t()) == 0) {
        throw std::domain_error("no inverse of " + std::to_string(a) + " mod " +
                                std::to_string(p));
    }
    return inv.get_si();
}

int sign_pow(const Integer& e) { return mpz_odd_p(e.get_mpz_t()) ? -1 : 1; }

}  // namespace spadic
