#include "spadic/minzero.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spadic {
namespace {

std::string pair_str(const Integer& n, const Integer& k) {
    return "(" + n.get_str() + "," + k.get_str() + ")";
}

void require_pair(const Integer& n, const Integer& k, const char* who) {
    if (sgn(k) < 1 || k > n) {
        throw std::invalid_argument(std::string(who) + " requires n >= k >= 1, got " +
                                    pair_str(n, k));
    }
}

// r = num/(p-1) when integral.
std::optional<Integer> quotient_by(const Integer& num, Prime p) {
    const long d = p.value() - 1;
    if (sgn(num) < 0 || mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(d)) == 0) {
        return std::nullopt;
    }
    return Integer(num / d);
}

long signed_residue(int sign, long residue, Prime p) {
    return sign > 0 ? residue : mod_normal(-residue, p);
}

// p^e as an exact integer.
Integer prime_power(Prime p, const Integer& e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p.value()),
                  to_index(e, "exponent"));
    return out;
}

void attach_witness(ClassificationReport& rep, Prime p) {
    const auto exact = exact_valuation_residue(rep.kind, to_index(rep.n, "n"),
                                               to_index(rep.k, "k"), p);
    if (!exact) {
        rep.witnessed_valuation = Valuation::infinite();
        throw ConsistencyError(std::string("Stirling number of the ") + to_string(rep.kind) +
                               " kind vanishes at " + pair_str(rep.n, rep.k));
    }
    rep.witnessed_valuation = Valuation(exact->valuation);
    rep.witnessed_unit_residue = exact->unit_residue;
    const std::string where = std::string(to_string(rep.kind)) + " kind " +
                              pair_str(rep.n, rep.k) + " p=" + std::to_string(p.value());
    if (rep.is_min_zero) {
        if (exact->valuation != *rep.predicted_valuation ||
            exact->unit_residue != *rep.predicted_unit_residue) {
            throw ConsistencyError("minimum zero prediction fails for " + where);
        }
    } else if (rep.r) {
        // Integral bound that is not attained.
        const long bound = rep.kind == Kind::Second ? lower_bound_second(rep.n, rep.k, p)
                                                    : lower_bound_first(rep.n, rep.k, p);
        if (exact->valuation == bound) {
            throw ConsistencyError("bound attained outside the minimum zero criterion for " +
                                   where);
        }
    }
}

void expect_same(const ClassificationReport& a, const ClassificationReport& b, bool valuation,
                 const char* what) {
    if (!b.is_min_zero || (valuation && a.predicted_valuation != b.predicted_valuation) ||
        a.predicted_unit_residue != b.predicted_unit_residue) {
        throw ConsistencyError(std::string(what) + ": " + pair_str(a.n, a.k) + " -> " +
                               pair_str(b.n, b.k) + " does not carry over");
    }
}

}  // namespace

long lower_bound_second(const Integer& n, const Integer& k, Prime p) {
    if (sgn(k) < 0 || k > n) {
        throw std::invalid_argument("lower_bound_second requires n >= k >= 0, got " +
                                    pair_str(n, k));
    }
    return ceil_div(digit_sum(k, p) - digit_sum(n, p), p.value() - 1);
}

long lower_bound_first(const Integer& n, const Integer& k, Prime p) {
    require_pair(n, k, "lower_bound_first");
    return ceil_div(digit_sum(k - 1, p) - digit_sum(n - 1, p), p.value() - 1);
}

std::optional<ValuationResidue> exact_valuation_residue(Kind kind, unsigned long n,
                                                        unsigned long k, Prime p) {
    const Integer value = stirling(kind, n, k);
    if (sgn(value) == 0) return std::nullopt;
    const auto vu = val_unit(Rational(value), p);
    return ValuationResidue{vu.valuation.value(), *vu.unit_residue};
}

ClassificationReport classify_second(const Integer& n, const Integer& k, Prime p,
                                     bool witness) {
    require_pair(n, k, "classify_second");
    ClassificationReport rep;
    rep.kind = Kind::Second;
    rep.n = n;
    rep.k = k;
    rep.p = p.value();
    rep.r = quotient_by(n - k, p);
    if (rep.r) {
        const Integer& r = *rep.r;
        rep.binomial_test_value = lucas_residue(n + r, r, p);
        rep.is_min_zero = *rep.binomial_test_value != 0;
    }
    if (rep.is_min_zero) {
        const Integer& r = *rep.r;
        rep.predicted_valuation = (digit_sum(k, p) - digit_sum(n, p)) / (p.value() - 1);
        const long unit = epsilon_factorial_ratio(n, k, p) * *rep.binomial_test_value % p;
        rep.predicted_unit_residue = signed_residue(sign_pow(r), unit, p);
    }
    if (witness) attach_witness(rep, p);
    return rep;
}

ClassificationReport classify_first(const Integer& n, const Integer& k, Prime p,
                                    bool witness) {
    require_pair(n, k, "classify_first");
    ClassificationReport rep;
    rep.kind = Kind::First;
    rep.n = n;
    rep.k = k;
    rep.p = p.value();
    rep.r = quotient_by(n - k, p);
    if (rep.r) {
        // r > k-1 makes C(k-1, r) vanish.
        rep.binomial_test_value = binomial_residue(k - 1, *rep.r, p);
        rep.is_min_zero = *rep.binomial_test_value != 0;
    }
    if (rep.is_min_zero) {
        rep.predicted_valuation =
            (digit_sum(k - 1, p) - digit_sum(n - 1, p)) / (p.value() - 1);
        rep.predicted_unit_residue =
            epsilon_factorial_ratio(n - 1, k - 1, p) * *rep.binomial_test_value % p;
    }
    if (witness) attach_witness(rep, p);
    return rep;
}

ClassificationReport classify(Kind kind, const Integer& n, const Integer& k, Prime p,
                              bool witness) {
    return kind == Kind::First ? classify_first(n, k, p, witness)
                               : classify_second(n, k, p, witness);
}

ValuationResidue dewannemacker_second(long a, long h, const Integer& k, Prime p) {
    if (a < 1 || a > p.value() - 1 || h < 0) {
        throw std::invalid_argument("dewannemacker_second requires 1 <= a <= p-1, h >= 0");
    }
    const Integer n = prime_power(p, h) * a;
    require_pair(n, k, "dewannemacker_second");
    const auto r = quotient_by(n - k, p);
    if (!r) throw std::invalid_argument("dewannemacker_second requires (p-1) | (n-k)");
    if (!classify_second(n, k, p).is_min_zero) {
        throw ConsistencyError("a p^h row entry " + pair_str(n, k) + " is not minimum zero");
    }
    long a_fact = 1;
    for (long i = 2; i <= a; ++i) a_fact = a_fact * i % p;
    const long residue = a_fact * inverse_mod(epsilon_factorial(k, p), p) % p;
    const int sign = sign_pow(*r + Integer(a) * h);
    return {(digit_sum(k, p) - a) / (p.value() - 1), signed_residue(sign, residue, p)};
}

ClassificationReport invariance_second(const Integer& n, const Integer& k, const Integer& b,
                                       Prime p, bool witness) {
    const auto base = classify_second(n, k, p, witness);
    if (!base.is_min_zero) {
        throw std::invalid_argument("invariance_second requires a minimum zero case, got " +
                                    pair_str(n, k));
    }
    const Integer limit = std::min(prime_power(p, nu(k, p)), prime_power(p, nu(n, p)));
    if (sgn(b) < 0 || b >= limit) {
        throw std::invalid_argument("shift b=" + b.get_str() + " outside [0, " +
                                    limit.get_str() + ")");
    }
    auto shifted = classify_second(n + b, k + b, p, witness);
    expect_same(base, shifted, true, "invariance_second");
    return shifted;
}

bool central_fibbinary(const Integer& k, Prime p) {
    if (sgn(k) < 1) throw std::invalid_argument("central_fibbinary requires k >= 1");
    const DigitVector d(k, p);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] + d[i + 1] > p.value() - 1) return false;
    }
    return true;
}

long central_residue(const Integer& k, Prime p) {
    if (sgn(k) < 1) throw std::invalid_argument("central_residue requires k >= 1");
    const DigitVector d(k, p);
    long acc = 1;
    for (std::size_t i = 0; i < d.size() && acc != 0; ++i) {
        const long top = d[i] + d[i + 1];
        acc = acc * binomial_residue(Integer(top), Integer(d[i]), p) % p;
    }
    return acc;
}

ValuationResidue shift_second(const Integer& n, const Integer& k, Prime p) {
    const auto base = classify_second(n, k, p);
    if (!base.is_min_zero) {
        throw std::invalid_argument("shift_second requires a minimum zero case, got " +
                                    pair_str(n, k));
    }
    const ValuationResidue predicted{*base.predicted_valuation, *base.predicted_unit_residue};
    const auto exact = exact_valuation_residue(Kind::Second, to_index(n + 1, "n"),
                                               to_index(k + 1, "k"), p);
    if (!exact || *exact != predicted) {
        throw ConsistencyError("S(n+1,k+1) disagrees with S(n,k) at " + pair_str(n, k));
    }
    return predicted;
}

ValuationResidue single_digit_first(long a, long h, const Integer& n, Prime p) {
    if (a < 1 || a > p.value() - 1 || h < 0) {
        throw std::invalid_argument("single_digit_first requires 1 <= a <= p-1, h >= 0");
    }
    const Integer k = prime_power(p, h) * a;
    if (n < k || n >= k * p.value()) {
        throw std::invalid_argument("single_digit_first requires k <= n < kp, got " +
                                    pair_str(n, k));
    }
    const auto r = quotient_by(n - k, p);
    if (!r) throw std::invalid_argument("single_digit_first requires (p-1) | (n-k)");
    const long r_h = DigitVector(*r, p)[static_cast<std::size_t>(h)];
    const long valuation = (a - 1 - digit_sum(n - 1, p)) / (p.value() - 1) + h;
    long a1_fact = 1;
    for (long i = 2; i <= a - 1; ++i) a1_fact = a1_fact * i % p;
    long residue = epsilon_factorial(n - 1, p) * inverse_mod(a1_fact, p) % p;
    residue = residue * binomial_residue(Integer(a - 1), Integer(r_h), p) % p;
    const int sign = sign_pow(Integer(a) * h + *r - r_h);
    const ValuationResidue predicted{valuation, signed_residue(sign, residue, p)};
    const auto exact =
        exact_valuation_residue(Kind::First, to_index(n, "n"), to_index(k, "k"), p);
    if (!exact || *exact != predicted) {
        throw ConsistencyError("single-digit prediction fails for s" + pair_str(n, k));
    }
    return predicted;
}

ClassificationReport invariance_first(const Integer& n, const Integer& k, const Integer& t,
                                      Prime p, bool witness) {
    const auto base = classify_first(n, k, p, witness);
    if (!base.is_min_zero) {
        throw std::invalid_argument("invariance_first requires a minimum zero case, got " +
                                    pair_str(n, k));
    }
    if (sgn(t) < 0) throw std::invalid_argument("invariance_first requires t >= 0");
    if (sgn(t) == 0) return base;
    if (prime_power(p, nu(t, p)) <= n) {
        throw std::invalid_argument("invariance_first requires p^nu(t) > n, got t=" +
                                    t.get_str());
    }
    auto shifted = classify_first(t + n, t + k, p, witness);
    expect_same(base, shifted, true, "invariance_first");
    return shifted;
}

ValuationResidue shift_first(const Integer& n, const Integer& k, Prime p) {
    if (k < 2) throw std::invalid_argument("shift_first requires n >= k >= 2");
    const auto base = classify_first(n, k, p);
    if (!base.is_min_zero) {
        throw std::invalid_argument("shift_first requires a minimum zero case, got " +
                                    pair_str(n, k));
    }
    const ValuationResidue predicted{*base.predicted_valuation, *base.predicted_unit_residue};
    const auto exact = exact_valuation_residue(Kind::First, to_index(n - 1, "n"),
                                               to_index(k - 1, "k"), p);
    if (!exact || *exact != predicted) {
        throw ConsistencyError("s(n-1,k-1) disagrees with s(n,k) at " + pair_str(n, k));
    }
    return predicted;
}

MaxPoleReport max_pole_classify(unsigned long n, long l, Prime p) {
    MaxPoleReport rep;
    rep.n = n;
    rep.l = l;
    rep.p = p.value();
    const unsigned long d = static_cast<unsigned long>(p.value() - 1);
    const Rational bern = bernoulli_number(n, l);
    rep.witnessed_valuation = sgn(bern) == 0 ? Valuation::infinite() : Valuation(nu(bern, p));
    if (n % d != 0) {
        if (!rep.witnessed_valuation.is_infinite() &&
            rep.witnessed_valuation.value() * static_cast<long>(d) <= -digit_sum(n, p)) {
            throw ConsistencyError("maximum pole reached with (p-1) not dividing n");
        }
        return rep;
    }
    const unsigned long r = n / d;
    rep.r = r;
    const Integer top = Integer(l) - static_cast<long>(n) - 1;
    rep.is_max_pole = binomial_residue(top, Integer(r), p) != 0;

    const Rational scaled = bern * prime_power(p, Integer(r)) / factorial(n);
    const long min_valuation = -digit_sum(Integer(n), p) / static_cast<long>(d);
    const std::string where = "B_" + std::to_string(n) + "^(" + std::to_string(l) + ") p=" +
                              std::to_string(p.value());
    if (rep.is_max_pole) {
        const Integer top2 = Integer(static_cast<long>(n)) - l + static_cast<long>(r);
        const long c = binomial_residue(top2, Integer(r), p);
        rep.congruence_residue = signed_residue(sign_pow(Integer(r)), c, p);
        rep.witnessed_residue = residue_mod_p(scaled, p);
        if (rep.witnessed_valuation != Valuation(min_valuation) ||
            rep.witnessed_residue != rep.congruence_residue) {
            throw ConsistencyError("maximum pole prediction fails for " + where);
        }
    } else if (rep.witnessed_valuation == Valuation(min_valuation)) {
        throw ConsistencyError("maximum pole reached outside the criterion for " + where);
    }
    return rep;
}

long proposition_congruence(unsigned long n, long l, Prime p) {
    const unsigned long d = static_cast<unsigned long>(p.value() - 1);
    if (n % d != 0) throw std::invalid_argument("proposition_congruence requires (p-1) | n");
    const unsigned long r = n / d;
    const Integer top = Integer(static_cast<long>(n)) + static_cast<long>(r) - l;
    const long predicted =
        signed_residue(sign_pow(Integer(r)), binomial_residue(top, Integer(r), p), p);
    Rational lhs = bernoulli_number(n, l) * prime_power(p, Integer(r)) / factorial(n);
    if (n % 2 == 1) lhs = -lhs;
    if (residue_mod_p(lhs, p) != predicted) {
        throw ConsistencyError("Bernoulli residue congruence fails at n=" + std::to_string(n) +
                               " l=" + std::to_string(l) + " p=" + std::to_string(p.value()));
    }
    return predicted;
}

namespace {

std::pair<ClassificationReport, ClassificationReport> scaling(Kind kind, const Integer& n,
                                                              const Integer& k, Prime p,
                                                              bool witness) {
    auto base = classify(kind, n, k, p, witness);
    auto scaled = classify(kind, n * p.value(), k * p.value(), p, witness);
    if (base.is_min_zero != scaled.is_min_zero) {
        throw ConsistencyError("minimum zero does not transfer from " + pair_str(n, k) +
                               " to its p-multiple");
    }
    if (base.is_min_zero) {
        expect_same(base, scaled, kind == Kind::Second, "scaling");
    }
    return {std::move(base), std::move(scaled)};
}

}  // namespace

std::pair<ClassificationReport, ClassificationReport> scaling_second(const Integer& n,
                                                                     const Integer& k,
                                                                     Prime p, bool witness) {
    return scaling(Kind::Second, n, k, p, witness);
}

std::pair<ClassificationReport, ClassificationReport> scaling_first(const Integer& n,
                                                                    const Integer& k,
                                                                    Prime p, bool witness) {
    return scaling(Kind::First, n, k, p, witness);
}

}  // namespace spadic
