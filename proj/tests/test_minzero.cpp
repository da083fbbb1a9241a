#include "reference.hpp"
#include "spadic/minzero.hpp"

#include <gtest/gtest.h>

using namespace spadic;

namespace {

const long kPrimes[] = {2, 3, 5, 7};

// nu and unit residue of an exact nonzero value
std::pair<long, long> exact_pair(const Integer& v, long p) {
    return {ref::nu(v, p), ref::unit_residue(v, p)};
}

bool second_attains(unsigned long n, unsigned long k, long p) {
    const Integer s = stirling2(n, k);
    const long diff = ref::digit_sum(k, p) - ref::digit_sum(n, p);
    return diff % (p - 1) == 0 && ref::nu(s, p) == diff / (p - 1);
}

bool first_attains(unsigned long n, unsigned long k, long p) {
    const Integer s = stirling1(n, k);
    const long diff = ref::digit_sum(k - 1, p) - ref::digit_sum(n - 1, p);
    return diff % (p - 1) == 0 && ref::nu(s, p) == diff / (p - 1);
}

}  // namespace

TEST(LowerBound, Examples) {
    EXPECT_EQ(lower_bound_second(Integer(4), Integer(3), Prime(2)), 1);
    EXPECT_EQ(lower_bound_second(Integer(9), Integer(5), Prime(3)), 1);
    EXPECT_EQ(lower_bound_first(Integer(6), Integer(4), Prime(2)), 0);
    EXPECT_EQ(lower_bound_first(Integer(5), Integer(4), Prime(2)), 1);
    for (long p : kPrimes) {
        for (long n = 1; n < 40; ++n) {
            EXPECT_EQ(lower_bound_second(Integer(n), Integer(n), Prime(p)), 0);
            EXPECT_EQ(lower_bound_first(Integer(n), Integer(n), Prime(p)), 0);
        }
    }
    EXPECT_THROW(lower_bound_second(Integer(2), Integer(3), Prime(2)), std::invalid_argument);
    EXPECT_THROW(lower_bound_first(Integer(3), Integer(0), Prime(2)), std::invalid_argument);
}

TEST(LowerBound, HoldsForExactValues) {
    for (long p : kPrimes) {
        for (unsigned long n = 1; n <= 80; ++n) {
            for (unsigned long k = 1; k <= n; ++k) {
                ASSERT_GE(ref::nu(stirling2(n, k), p),
                          lower_bound_second(Integer(n), Integer(k), Prime(p)));
                ASSERT_GE(ref::nu(stirling1(n, k), p),
                          lower_bound_first(Integer(n), Integer(k), Prime(p)));
            }
        }
    }
}

TEST(ClassifySecond, Examples) {
    auto rep = classify_second(Integer(5), Integer(3), Prime(2), true);
    EXPECT_TRUE(rep.is_min_zero);
    EXPECT_EQ(*rep.predicted_valuation, 0);
    EXPECT_EQ(*rep.witnessed_valuation, Valuation(0));
    EXPECT_EQ(*rep.r, 2);

    rep = classify_second(Integer(6), Integer(4), Prime(2), true);
    EXPECT_FALSE(rep.is_min_zero);
    EXPECT_FALSE(rep.predicted_valuation.has_value());
    EXPECT_EQ(*rep.binomial_test_value, 0);

    rep = classify_second(Integer(4), Integer(2), Prime(3), true);
    EXPECT_TRUE(rep.is_min_zero);
    EXPECT_EQ(*rep.predicted_valuation, 0);
    EXPECT_EQ(*rep.predicted_unit_residue, 1);
    EXPECT_EQ(*rep.witnessed_unit_residue, 1);
}

TEST(ClassifySecond, NonIntegralR) {
    const auto rep = classify_second(Integer(6), Integer(3), Prime(3));
    EXPECT_FALSE(rep.r.has_value());
    EXPECT_FALSE(rep.binomial_test_value.has_value());
    EXPECT_FALSE(rep.is_min_zero);
}

TEST(ClassifySecond, AgreesWithExactValues) {
    for (long p : kPrimes) {
        for (unsigned long n = 1; n <= 90; ++n) {
            for (unsigned long k = 1; k <= n; ++k) {
                const auto rep = classify_second(Integer(n), Integer(k), Prime(p));
                ASSERT_EQ(rep.is_min_zero, second_attains(n, k, p)) << n << "," << k << " p=" << p;
                if (rep.is_min_zero) {
                    const auto [v, e] = exact_pair(stirling2(n, k), p);
                    ASSERT_EQ(*rep.predicted_valuation, v);
                    ASSERT_EQ(*rep.predicted_unit_residue, e);
                }
            }
        }
    }
}

TEST(ClassifySecond, HugeArguments) {
    // classification is digit arithmetic only
    Integer n;
    mpz_ui_pow_ui(n.get_mpz_t(), 2, 200);
    const auto rep = classify_second(n, Integer(3), Prime(2));
    EXPECT_TRUE(rep.is_min_zero);
    EXPECT_EQ(*rep.predicted_valuation, 1);
}

TEST(ClassifyFirst, Examples) {
    auto rep = classify_first(Integer(3), Integer(2), Prime(2), true);
    EXPECT_TRUE(rep.is_min_zero);
    EXPECT_EQ(*rep.predicted_valuation, 0);
    EXPECT_EQ(*rep.witnessed_unit_residue, 1);

    rep = classify_first(Integer(6), Integer(4), Prime(2), true);
    EXPECT_TRUE(rep.is_min_zero);
    EXPECT_EQ(*rep.witnessed_valuation, Valuation(0));

    for (long p : kPrimes) {
        for (long k = 1; k <= 8; ++k) {
            for (long n = k * p; n <= k * p + 12; ++n) {
                EXPECT_FALSE(classify_first(Integer(n), Integer(k), Prime(p)).is_min_zero);
            }
        }
    }
}

TEST(ClassifyFirst, AgreesWithExactValues) {
    for (long p : kPrimes) {
        for (unsigned long n = 1; n <= 90; ++n) {
            for (unsigned long k = 1; k <= n; ++k) {
                const auto rep = classify_first(Integer(n), Integer(k), Prime(p));
                ASSERT_EQ(rep.is_min_zero, first_attains(n, k, p)) << n << "," << k << " p=" << p;
                if (rep.is_min_zero) {
                    const auto [v, e] = exact_pair(stirling1(n, k), p);
                    ASSERT_EQ(*rep.predicted_valuation, v);
                    ASSERT_EQ(*rep.predicted_unit_residue, e);
                }
            }
        }
    }
}

TEST(ClassifyFirst, WitnessOnManyPairs) {
    for (long p : {2L, 3L}) {
        for (long n = 1; n <= 40; ++n) {
            for (long k = 1; k <= n; ++k) {
                EXPECT_NO_THROW(classify_first(Integer(n), Integer(k), Prime(p), true));
                EXPECT_NO_THROW(classify_second(Integer(n), Integer(k), Prime(p), true));
            }
        }
    }
}

TEST(ExactValuationResidue, ZeroIsAbsent) {
    EXPECT_FALSE(exact_valuation_residue(Kind::Second, 3, 5, Prime(2)).has_value());
    const auto v = exact_valuation_residue(Kind::Second, 9, 5, Prime(3));
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(*v, (ValuationResidue{1, 1}));
}

TEST(Dewannemacker, Examples) {
    EXPECT_EQ(dewannemacker_second(1, 2, Integer(3), Prime(2)).valuation, 1);
    EXPECT_EQ(dewannemacker_second(1, 2, Integer(5), Prime(3)), (ValuationResidue{1, 1}));
    for (long h = 0; h <= 6; ++h) {
        const long n = 1L << h;
        EXPECT_EQ(dewannemacker_second(1, h, Integer(n), Prime(2)).valuation, 0);
    }
    EXPECT_THROW(dewannemacker_second(3, 1, Integer(2), Prime(3)), std::invalid_argument);
    EXPECT_THROW(dewannemacker_second(1, 2, Integer(4), Prime(3)), std::invalid_argument);
}

TEST(Dewannemacker, AgainstExactRows) {
    for (long p : {2L, 3L, 5L}) {
        for (long a = 1; a < p; ++a) {
            unsigned long n = a;
            for (long h = 0; n <= 400; ++h, n *= p) {
                for (unsigned long k = 1; k <= n; ++k) {
                    if ((n - k) % (p - 1) != 0) continue;
                    const auto pred = dewannemacker_second(a, h, Integer(k), Prime(p));
                    const auto [v, e] = exact_pair(stirling2(n, k), p);
                    ASSERT_EQ(pred, (ValuationResidue{v, e})) << n << "," << k << " p=" << p;
                }
            }
        }
    }
}

TEST(InvarianceSecond, Examples) {
    const auto same = invariance_second(Integer(5), Integer(3), Integer(0), Prime(2), true);
    EXPECT_EQ(same.n, 5);
    EXPECT_TRUE(same.is_min_zero);

    const auto rep = invariance_second(Integer(4), Integer(2), Integer(1), Prime(2), true);
    EXPECT_EQ(rep.n, 5);
    EXPECT_EQ(rep.k, 3);
    EXPECT_TRUE(rep.is_min_zero);
    EXPECT_EQ(*rep.predicted_valuation, 0);

    const auto rep3 = invariance_second(Integer(9), Integer(3), Integer(2), Prime(3), true);
    EXPECT_EQ(rep3.n, 11);
    EXPECT_EQ(rep3.k, 5);
    EXPECT_TRUE(rep3.is_min_zero);
    EXPECT_EQ(*rep3.witnessed_valuation, Valuation(ref::nu(stirling2(9, 3), 3)));

    EXPECT_THROW(invariance_second(Integer(4), Integer(2), Integer(2), Prime(2)),
                 std::invalid_argument);
    EXPECT_THROW(invariance_second(Integer(6), Integer(4), Integer(0), Prime(2)),
                 std::invalid_argument);
}

TEST(Central, Examples) {
    EXPECT_FALSE(central_fibbinary(Integer(3), Prime(2)));
    EXPECT_TRUE(central_fibbinary(Integer(2), Prime(2)));
    EXPECT_FALSE(central_fibbinary(Integer(5), Prime(3)));
    EXPECT_EQ(central_residue(Integer(2), Prime(3)), 1);
    EXPECT_EQ(central_residue(Integer(3), Prime(2)), 0);
    for (long p : kPrimes) EXPECT_EQ(central_residue(Integer(1), Prime(p)), 1);
}

TEST(Central, AgainstExactValues) {
    for (long p : kPrimes) {
        for (unsigned long k = 1; k <= 120; ++k) {
            Integer s = stirling2(k * p, k) % p;
            ASSERT_EQ(central_residue(Integer(k), Prime(p)), s.get_si()) << k;
            ASSERT_EQ(central_fibbinary(Integer(k), Prime(p)), s != 0) << k;
        }
    }
}

TEST(ShiftSecond, Examples) {
    EXPECT_EQ(shift_second(Integer(4), Integer(3), Prime(2)).valuation, 1);
    EXPECT_EQ(shift_second(Integer(5), Integer(3), Prime(2)).valuation, 0);
    for (long n = 1; n < 20; ++n) {
        EXPECT_EQ(shift_second(Integer(n), Integer(n), Prime(2)).valuation, 0);
    }
    EXPECT_THROW(shift_second(Integer(6), Integer(4), Prime(2)), std::invalid_argument);
}

TEST(SingleDigitFirst, Examples) {
    EXPECT_EQ(single_digit_first(1, 2, Integer(6), Prime(2)).valuation, 0);
    EXPECT_EQ(single_digit_first(1, 2, Integer(5), Prime(2)).valuation, 1);
    EXPECT_EQ(single_digit_first(1, 0, Integer(1), Prime(2)).valuation, 0);
    EXPECT_THROW(single_digit_first(1, 2, Integer(8), Prime(2)), std::invalid_argument);
    EXPECT_THROW(single_digit_first(1, 1, Integer(4), Prime(3)), std::invalid_argument);
}

TEST(SingleDigitFirst, AgainstExactValues) {
    for (long p : {2L, 3L, 5L, 7L}) {
        for (long a = 1; a < p; ++a) {
            unsigned long k = a;
            for (long h = 0; k <= 120; ++h, k *= p) {
                for (unsigned long n = k; n < k * p && n <= 200; ++n) {
                    if ((n - k) % (p - 1) != 0) continue;
                    const auto pred = single_digit_first(a, h, Integer(n), Prime(p));
                    const auto [v, e] = exact_pair(stirling1(n, k), p);
                    ASSERT_EQ(pred, (ValuationResidue{v, e})) << n << "," << k << " p=" << p;
                }
            }
        }
    }
}

TEST(InvarianceFirst, Examples) {
    const auto same = invariance_first(Integer(6), Integer(4), Integer(0), Prime(2), true);
    EXPECT_EQ(same.n, 6);
    EXPECT_EQ(same.k, 4);

    const auto rep = invariance_first(Integer(3), Integer(2), Integer(4), Prime(2), true);
    EXPECT_EQ(rep.n, 7);
    EXPECT_EQ(rep.k, 6);
    EXPECT_TRUE(rep.is_min_zero);
    EXPECT_EQ(*rep.witnessed_valuation, Valuation(0));
    EXPECT_EQ(stirling1(7, 6), -21);

    const auto rep3 = invariance_first(Integer(4), Integer(2), Integer(9), Prime(3), true);
    EXPECT_EQ(rep3.n, 13);
    EXPECT_EQ(rep3.k, 11);
    EXPECT_EQ(*rep3.witnessed_valuation, Valuation(ref::nu(stirling1(4, 2), 3)));

    EXPECT_THROW(invariance_first(Integer(3), Integer(2), Integer(2), Prime(2)),
                 std::invalid_argument);
}

TEST(ShiftFirst, Examples) {
    EXPECT_EQ(shift_first(Integer(6), Integer(4), Prime(2)).valuation, 0);
    EXPECT_EQ(shift_first(Integer(5), Integer(4), Prime(2)).valuation, 1);
    for (long n = 2; n < 20; ++n) EXPECT_EQ(shift_first(Integer(n), Integer(n), Prime(3)).valuation, 0);
    EXPECT_THROW(shift_first(Integer(5), Integer(1), Prime(2)), std::invalid_argument);
}

TEST(MaxPole, Examples) {
    auto rep = max_pole_classify(2, -3, Prime(2));
    EXPECT_TRUE(rep.is_max_pole);
    EXPECT_EQ(rep.witnessed_valuation, Valuation(-1));

    for (long l = -5; l <= 5; ++l) {
        rep = max_pole_classify(0, l, Prime(3));
        EXPECT_TRUE(rep.is_max_pole);
        EXPECT_EQ(*rep.r, 0u);
        EXPECT_EQ(rep.witnessed_valuation, Valuation(0));
    }

    rep = max_pole_classify(2, 2, Prime(2));
    EXPECT_TRUE(rep.is_max_pole);
    EXPECT_EQ(*rep.congruence_residue, 1);
    EXPECT_EQ(*rep.witnessed_residue, 1);

    rep = max_pole_classify(3, 2, Prime(3));
    EXPECT_FALSE(rep.is_max_pole);
    EXPECT_FALSE(rep.r.has_value());
}

TEST(MaxPole, StirlingMinZeroEquivalence) {
    for (long p : {2L, 3L, 5L}) {
        for (unsigned long n = 1; n <= 30; ++n) {
            for (unsigned long k = 1; k <= n; ++k) {
                const long lk = static_cast<long>(k);
                const long ln = static_cast<long>(n);
                EXPECT_EQ(max_pole_classify(n - k, -lk, Prime(p)).is_max_pole,
                          classify_second(Integer(n), Integer(k), Prime(p)).is_min_zero);
                EXPECT_EQ(max_pole_classify(n - k, ln, Prime(p)).is_max_pole,
                          classify_first(Integer(n), Integer(k), Prime(p)).is_min_zero);
            }
        }
    }
}

TEST(ScaledCongruence, Examples) {
    EXPECT_EQ(proposition_congruence(2, -1, Prime(2)), 0);
    for (long l = -5; l <= 5; ++l) EXPECT_EQ(proposition_congruence(0, l, Prime(5)), 1);
    EXPECT_EQ(proposition_congruence(2, 2, Prime(2)), 1);
    EXPECT_THROW(proposition_congruence(3, 1, Prime(3)), std::invalid_argument);
}

TEST(ScaledCongruence, ClosedFormSecondOrder) {
    // p = 3, n = 2, r = 1: (-1)^2 * 3 * B_2^(l) / 2 = l(3l-1)/8 against -(3-l) mod 3
    for (long l = -30; l <= 30; ++l) {
        const Rational lhs = Rational(3) * ref::bernoulli_closed(2, l) / 2;
        const long expected = ((l - 3) % 3 + 3) % 3;
        Rational q = lhs;
        Integer num = q.get_num() % 3, den = q.get_den() % 3;
        if (num < 0) num += 3;
        const long got = (num.get_si() * (den.get_si() == 1 ? 1 : 2)) % 3;
        ASSERT_EQ(got, expected) << l;
        ASSERT_EQ(proposition_congruence(2, l, Prime(3)), expected) << l;
    }
}

TEST(Scaling, Examples) {
    auto [a, b] = scaling_second(Integer(5), Integer(3), Prime(2), true);
    EXPECT_TRUE(a.is_min_zero);
    EXPECT_TRUE(b.is_min_zero);
    EXPECT_EQ(*a.witnessed_valuation, Valuation(0));
    EXPECT_EQ(*b.witnessed_valuation, Valuation(0));

    for (long p : kPrimes) {
        auto [c, d] = scaling_second(Integer(1), Integer(1), Prime(p));
        EXPECT_TRUE(c.is_min_zero && d.is_min_zero);
        auto [e, f] = scaling_first(Integer(1), Integer(1), Prime(p));
        EXPECT_TRUE(e.is_min_zero && f.is_min_zero);
    }

    auto [g, h] = scaling_second(Integer(6), Integer(4), Prime(2));
    EXPECT_FALSE(g.is_min_zero);
    EXPECT_FALSE(h.is_min_zero);
}
