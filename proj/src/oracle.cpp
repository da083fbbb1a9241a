#include "spadic/oracle.hpp"

#include "spadic/minzero.hpp"
#include "spadic/padic_core.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

namespace spadic {
namespace {

struct ClaimInfo {
    ClaimId id;
    std::string_view name;
    std::string_view statement;
};

constexpr std::array<ClaimInfo, 28> kClaims{{
    {ClaimId::L2_1, "L2.1", "nu_p(S(n,k)) >= ceil((sigma(k)-sigma(n))/(p-1)) for n >= k"},
    {ClaimId::T2_1, "T2.1",
     "S(n,k) attains the bound iff r=(n-k)/(p-1) is integral and p does not divide "
     "C(n+r,r), iff B_{n-k}^(-k) has a maximum pole; then "
     "eps(S(n,k)) = (-1)^r eps(n!/k!) C(n+r,r) mod p"},
    {ClaimId::C2_1, "C2.1",
     "S(n,k) is minimum zero iff S(np,kp) is; then equal valuation and residue"},
    {ClaimId::C2_2, "C2.2",
     "sigma(k)=sigma(n) implies S(n,k) = (-1)^r eps(n!/k!) C(n+r,r) mod p"},
    {ClaimId::T2_2, "T2.2",
     "n=a p^h, (p-1)|(n-k): S(n,k) is minimum zero with nu = (sigma(k)-a)/(p-1)"},
    {ClaimId::C2_3, "C2.3", "n=a p^h: eps(S(n,k)) = (-1)^{r+ah} a!/eps(k!) mod p"},
    {ClaimId::T2_3, "T2.3",
     "minimum zero S(n,k), 0<=b<min(p^nu(k),p^nu(n)): S(n+b,k+b) minimum zero with the "
     "same valuation and residue"},
    {ClaimId::C2_4, "C2.4",
     "n=a p^h, 0<=b<p^nu(k): S(n+b,k+b) minimum zero, nu = (sigma(k)-a)/(p-1), residue "
     "of S(n,k)"},
    {ClaimId::T2_4, "T2.4", "p does not divide S(pk,k) iff k is p-Fibbinary"},
    {ClaimId::C2_5, "C2.5", "S(pk,k) = prod_i C(a_i+a_{i+1}, a_i) mod p over digits a_i of k"},
    {ClaimId::T2_5, "T2.5",
     "minimum zero S(n,k): S(n+1,k+1) has the same valuation and residue"},
    {ClaimId::EQ1_1, "EQ1.1", "nu_2(S(2^h,k)) = sigma_2(k)-1 for 1<=k<=2^h"},
    {ClaimId::EQ1_3, "EQ1.3",
     "nu_2(S(c 2^h,k)) = sigma_2(k)-1 for c>=1, 1<=k<=2^h (checked as a conjecture)"},
    {ClaimId::EQ1_4, "EQ1.4", "nu_2(S(2^h+1,k+1)) = sigma_2(k)-1 for 1<=k<=2^h"},
    {ClaimId::L3_1, "L3.1", "nu_p(s(n,k)) >= ceil((sigma(k-1)-sigma(n-1))/(p-1))"},
    {ClaimId::T3_1, "T3.1",
     "s(n,k) attains the bound iff r integral, r<=k-1 and p does not divide C(k-1,r), iff "
     "B_{n-k}^(n) has a maximum pole; then eps(s(n,k)) = eps((n-1)!/(k-1)!) C(k-1,r) mod "
     "p; never for n >= kp"},
    {ClaimId::C3_1, "C3.1",
     "s(n,k) is minimum zero iff s(np,kp) is; then residues agree mod p"},
    {ClaimId::T3_2, "T3.2", "k=a p^h, k<=n<kp, (p-1)|(n-k): s(n,k) is minimum zero"},
    {ClaimId::C3_2, "C3.2",
     "k=a p^h: nu(s(n,k)) = (a-1-sigma(n-1))/(p-1)+h and eps(s(n,k)) = "
     "(-1)^{ah+r-r_h} eps((n-1)!)/(a-1)! C(a-1,r_h) mod p"},
    {ClaimId::C3_3, "C3.3", "nu_2(s(n,2^h)) = h - sigma_2(n-1) for 2^h <= n < 2^{h+1}"},
    {ClaimId::T3_3, "T3.3",
     "minimum zero s(n,k), p^nu(t) > n: s(t+n,t+k) minimum zero with the same valuation "
     "and residue"},
    {ClaimId::T3_4, "T3.4",
     "minimum zero s(n,k): s(n-1,k-1) has the same valuation and residue"},
    {ClaimId::L5_1, "L5.1", "nu_p(B_n^(l)) >= -floor(sigma(n)/(p-1))"},
    {ClaimId::P5_1, "P5.1",
     "(p-1)|n, r=n/(p-1): (-1)^n p^r B_n^(l)/n! = (-1)^r C(n+r-l,r) mod p"},
    {ClaimId::EQ5_6, "EQ5.6",
     "maximum pole iff p does not divide C(l-n-1,r); then p^r B_n^(l)/n! = (-1)^r "
     "C(n-l+r,r) mod p"},
    {ClaimId::L4_1, "L4.1", "eps((a p^h)!) = (-1)^{ah} a! mod p"},
    {ClaimId::L4_2, "L4.2", "sigma(k+1) = sigma(k) + 1 - (p-1) nu(k+1)"},
    {ClaimId::EQ4_x, "EQ4.x",
     "digit sums, factorial and binomial valuations, carries, Lucas, Anton, digit "
     "shifts, negative binomials, valuation of sums, eps((pk)!)"},
}};

const ClaimInfo& info(ClaimId id) {
    for (const auto& c : kClaims) {
        if (c.id == id) return c;
    }
    throw std::invalid_argument("unknown claim id");
}

using Entry = std::pair<unsigned long, unsigned long>;

Witness witness_from_exact(const Integer& value, Prime p) {
    if (sgn(value) == 0) return {};
    const auto vu = val_unit(Rational(value), p);
    return {vu.valuation, *vu.unit_residue, false};
}

Witness witness_from_residue(std::uint64_t x, std::uint64_t modulus, long exponent, Prime p) {
    if (x == 0) return {Valuation(exponent), 0, true};
    long v = 0;
    const auto pp = static_cast<std::uint64_t>(p.value());
    while (x % pp == 0) {
        x /= pp;
        ++v;
    }
    (void)modulus;
    return {Valuation(v), static_cast<long>(x % pp), false};
}

Witness exact_witness(Kind kind, unsigned long n, unsigned long k, Prime p) {
    return witness_from_exact(stirling(kind, n, k), p);
}

std::string show(const Witness& w) {
    if (w.at_least) return ">=" + w.valuation.to_string();
    if (w.valuation.is_infinite()) return "zero";
    return fmt::format("nu={} eps={}", w.valuation.value(), w.unit_residue);
}

std::string show(long valuation, long residue) {
    return fmt::format("nu={} eps={}", valuation, residue);
}

bool matches(const Witness& w, long valuation, long residue) {
    return !w.at_least && !w.valuation.is_infinite() && w.valuation.value() == valuation &&
           w.unit_residue == residue;
}

bool same(const Witness& a, const Witness& b) {
    return !a.at_least && !b.at_least && a.valuation == b.valuation &&
           a.unit_residue == b.unit_residue;
}

bool valuation_is(const Witness& w, long v) {
    return !w.at_least && !w.valuation.is_infinite() && w.valuation.value() == v;
}

long sigma(unsigned long n, Prime p) { return digit_sum(Integer(n), p); }

unsigned long upow(long p, unsigned long e) {
    unsigned long out = 1;
    for (unsigned long i = 0; i < e; ++i) out *= static_cast<unsigned long>(p);
    return out;
}

unsigned long unu(unsigned long n, Prime p) {
    return static_cast<unsigned long>(nu(Integer(n), p));
}

// One checked case. Every failed expectation adds a failure entry.
class Case {
public:
    Case(std::vector<SweepFailure>& out, std::string inputs)
        : out_(out), inputs_(std::move(inputs)) {}

    void expect(bool ok, std::string expected, std::string observed) {
        if (!ok) out_.push_back({inputs_, std::move(expected), std::move(observed)});
    }

private:
    std::vector<SweepFailure>& out_;
    std::string inputs_;
};

class Recorder {
public:
    Recorder(SweepReport& report) : report_(report) {}

    void skip(std::size_t count = 1) { report_.cases_skipped += count; }

    template <class Body>
    void check(std::string inputs, Body&& body) {
        ++report_.cases_checked;
        Case c(report_.failures,
               fmt::format("claim={} {}", info(report_.claim).name, inputs));
        try {
            body(c);
        } catch (const std::exception& e) {
            c.expect(false, "no exception", fmt::format("exception: {}", e.what()));
        }
    }

private:
    SweepReport& report_;
};

// ---------------------------------------------------------------------------
// Second kind

void sweep_lower_bound(Kind kind, const SweepRanges& rg, Prime p, Recorder& rec) {
    for (unsigned long n = 1; n <= rg.n_max; ++n) {
        for (unsigned long k = 1; k <= rg.n_max; ++k) {
            if (k > n) {
                rec.skip();  // S(n,k) = 0: valuation infinite, bound vacuous
                continue;
            }
            rec.check(fmt::format("p={} n={} k={}", p.value(), n, k), [&](Case& c) {
                const long bound = kind == Kind::Second
                                       ? lower_bound_second(Integer(n), Integer(k), p)
                                       : lower_bound_first(Integer(n), Integer(k), p);
                const Witness w = exact_witness(kind, n, k, p);
                c.expect(w.valuation.is_infinite() || w.valuation.value() >= bound,
                         fmt::format("nu >= {}", bound), show(w));
            });
        }
    }
}

// bound attained in the sense of the minimum zero definition
bool attains(const Witness& w, long sigma_diff, Prime p) {
    return sigma_diff % (p.value() - 1) == 0 && valuation_is(w, sigma_diff / (p.value() - 1));
}

void sweep_t2_1(const SweepRanges& rg, Prime p, Recorder& rec) {
    for (unsigned long n = 1; n <= rg.n_max; ++n) {
        for (unsigned long k = 1; k <= n; ++k) {
            rec.check(fmt::format("p={} n={} k={}", p.value(), n, k), [&](Case& c) {
                const auto rep = classify_second(Integer(n), Integer(k), p);
                const Witness w = exact_witness(Kind::Second, n, k, p);
                const bool attained = attains(w, sigma(k, p) - sigma(n, p), p);
                c.expect(attained == rep.is_min_zero,
                         fmt::format("min_zero={}", rep.is_min_zero), show(w));
                if (rep.is_min_zero) {
                    c.expect(w.unit_residue == *rep.predicted_unit_residue,
                             fmt::format("eps={}", *rep.predicted_unit_residue), show(w));
                }
                if (static_cast<long>(k) <= rg.l_max && static_cast<long>(n - k) <= rg.l_max) {
                    const auto mp = max_pole_classify(n - k, -static_cast<long>(k), p);
                    c.expect(mp.is_max_pole == rep.is_min_zero,
                             fmt::format("max_pole={}", rep.is_min_zero),
                             fmt::format("max_pole={}", mp.is_max_pole));
                }
            });
        }
    }
}

void sweep_scaling(Kind kind, const SweepRanges& rg, Prime p, Recorder& rec) {
    std::vector<Entry> scaled_entries;
    for (unsigned long n = 1; n <= rg.n_max; ++n) {
        for (unsigned long k = 1; k <= n; ++k) scaled_entries.emplace_back(n * p.value(), k * p.value());
    }
    const auto scaled_witnesses = witness_batch(kind, p, scaled_entries);
    std::size_t idx = 0;
    for (unsigned long n = 1; n <= rg.n_max; ++n) {
        for (unsigned long k = 1; k <= n; ++k, ++idx) {
            rec.check(fmt::format("p={} n={} k={}", p.value(), n, k), [&](Case& c) {
                const unsigned long np = n * p.value(), kp = k * p.value();
                const Witness base = exact_witness(kind, n, k, p);
                const Witness& scaled = scaled_witnesses[idx];
                const long diff = kind == Kind::Second ? sigma(k, p) - sigma(n, p)
                                                       : sigma(k - 1, p) - sigma(n - 1, p);
                const long diff_scaled = kind == Kind::Second
                                             ? sigma(kp, p) - sigma(np, p)
                                             : sigma(kp - 1, p) - sigma(np - 1, p);
                const bool mz = attains(base, diff, p);
                const bool mz_scaled = attains(scaled, diff_scaled, p);
                c.expect(mz == mz_scaled, fmt::format("min_zero={}", mz),
                         fmt::format("scaled min_zero={}", mz_scaled));
                if (mz && mz_scaled) {
                    c.expect(base.unit_residue == scaled.unit_residue, show(base), show(scaled));
                    if (kind == Kind::Second) {
                        c.expect(base.valuation == scaled.valuation, show(base), show(scaled));
                    }
                }
                if (kind == Kind::Second) {
                    scaling_second(Integer(n), Integer(k), p);
                } else {
                    scaling_first(Integer(n), Integer(k), p);
                }
            });
        }
    }
}

long theorem_residue_second(unsigned long n, unsigned long k, unsigned long r, Prime p) {
    long res = epsilon_factorial_ratio(Integer(n), Integer(k), p) *
               lucas_residue(Integer(n + r), Integer(r), p) % p;
    return r % 2 == 0 ? res : mod_normal(-res, p);
}

void sweep_c2_2(const SweepRanges& rg, Prime p, Recorder& rec) {
    for (unsigned long n = 1; n <= rg.n_max; ++n) {
        for (unsigned long k = 1; k <= n; ++k) {
            if (sigma(k, p) != sigma(n, p)) {
                rec.skip();
                continue;
            }
            rec.check(fmt::format("p={} n={} k={}", p.value(), n, k), [&](Case& c) {
                const unsigned long r = (n - k) / (p.value() - 1);
                const long expected = theorem_residue_second(n, k, r, p);
                const long observed = mod_normal(stirling2(n, k), p);
                c.expect(expected == observed, fmt::format("S mod p = {}", expected),
                         fmt::format("S mod p = {}", observed));
            });
        }
    }
}

struct DigitFamilyCase {
    long a;
    unsigned long h;
    unsigned long n;
    unsigned long k;
};

// n = a p^h with (p-1) | (n-k); other k are skipped.
std::vector<DigitFamilyCase> single_digit_rows(const SweepRanges& rg, Prime p, Recorder& rec) {
    std::vector<DigitFamilyCase> out;
    for (unsigned long h = 0; h <= rg.h_max; ++h) {
        for (long a = 1; a <= p.value() - 1; ++a) {
            const unsigned long n = static_cast<unsigned long>(a) * upow(p, h);
            for (unsigned long k = 1; k <= n; ++k) {
                if ((n - k) % (p.value() - 1) != 0) {
                    rec.skip();
                    continue;
                }
                out.push_back({a, h, n, k});
            }
        }
    }
    return out;
}

void sweep_t2_2(bool residues, const SweepRanges& rg, Prime p, Recorder& rec) {
    const auto cases = single_digit_rows(rg, p, rec);
    std::vector<Entry> entries;
    entries.reserve(cases.size());
    for (const auto& cs : cases) entries.emplace_back(cs.n, cs.k);
    const auto witnesses = witness_batch(Kind::Second, p, entries);
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& cs = cases[i];
        const Witness& w = witnesses[i];
        rec.check(fmt::format("p={} a={} h={} n={} k={}", p.value(), cs.a, cs.h, cs.n, cs.k),
                  [&](Case& c) {
                      const auto pred = dewannemacker_second(cs.a, static_cast<long>(cs.h),
                                                             Integer(cs.k), p);
                      if (residues) {
                          c.expect(matches(w, pred.valuation, pred.unit_residue),
                                   show(pred.valuation, pred.unit_residue), show(w));
                      } else {
                          const long v = (sigma(cs.k, p) - cs.a) / (p.value() - 1);
                          c.expect(valuation_is(w, v), fmt::format("nu={}", v), show(w));
                          c.expect(classify_second(Integer(cs.n), Integer(cs.k), p).is_min_zero,
                                   "min_zero=true", "min_zero=false");
                      }
                  });
    }
}

template <class Fn>
void for_each_min_zero(Kind kind, unsigned long n_max, Prime p, Recorder& rec, Fn&& fn) {
    for (unsigned long n = 1; n <= n_max; ++n) {
        for (unsigned long k = 1; k <= n; ++k) {
            if (!classify(kind, Integer(n), Integer(k), p).is_min_zero) {
                rec.skip();
                continue;
            }
            fn(n, k);
        }
    }
}

void sweep_t2_3(const SweepRanges& rg, Prime p, Recorder& rec) {
    for_each_min_zero(Kind::Second, rg.n_max, p, rec, [&](unsigned long n, unsigned long k) {
        const unsigned long limit = std::min(upow(p, unu(k, p)), upow(p, unu(n, p)));
        if (limit <= 1) {
            rec.skip();
            return;
        }
        const Witness base = exact_witness(Kind::Second, n, k, p);
        for (unsigned long b = 1; b < limit; ++b) {
            rec.check(fmt::format("p={} n={} k={} b={}", p.value(), n, k, b), [&](Case& c) {
                const Witness shifted = exact_witness(Kind::Second, n + b, k + b, p);
                c.expect(same(base, shifted), show(base), show(shifted));
                invariance_second(Integer(n), Integer(k), Integer(b), p);
            });
        }
    });
}

void sweep_c2_4(const SweepRanges& rg, Prime p, Recorder& rec) {
    const auto rows = single_digit_rows(rg, p, rec);
    struct Item {
        DigitFamilyCase base;
        unsigned long b;
    };
    std::vector<Item> items;
    std::vector<Entry> entries;
    for (const auto& cs : rows) {
        const unsigned long limit = upow(p, unu(cs.k, p));
        entries.emplace_back(cs.n, cs.k);
        for (unsigned long b = 0; b < limit; ++b) {
            items.push_back({cs, b});
            entries.emplace_back(cs.n + b, cs.k + b);
        }
    }
    // A row tuple with its shifts counts as one case per shift; the base
    // tuple itself is not a separate case.
    const auto witnesses = witness_batch(Kind::Second, p, entries);
    std::size_t pos = 0;
    std::size_t item = 0;
    for (const auto& cs : rows) {
        const Witness& base = witnesses[pos++];
        const unsigned long limit = upow(p, unu(cs.k, p));
        for (unsigned long b = 0; b < limit; ++b, ++item) {
            const Witness& w = witnesses[pos++];
            rec.check(fmt::format("p={} a={} h={} k={} b={}", p.value(), cs.a, cs.h, cs.k, b),
                      [&](Case& c) {
                          const long v = (sigma(cs.k, p) - cs.a) / (p.value() - 1);
                          c.expect(valuation_is(w, v), fmt::format("nu={}", v), show(w));
                          c.expect(w.unit_residue == base.unit_residue, show(base), show(w));
                          c.expect(classify_second(Integer(cs.n + b), Integer(cs.k + b), p)
                                       .is_min_zero,
                                   "min_zero=true", "min_zero=false");
                      });
        }
    }
}

void sweep_central(bool residues, const SweepRanges& rg, Prime p, Recorder& rec) {
    for (unsigned long k = 1; k <= rg.k_max; ++k) {
        rec.check(fmt::format("p={} k={}", p.value(), k), [&](Case& c) {
            const long s_mod = mod_normal(stirling2(k * p.value(), k), p);
            if (residues) {
                const long pred = central_residue(Integer(k), p);
                c.expect(s_mod == pred, fmt::format("S(pk,k) mod p = {}", pred),
                         fmt::format("S(pk,k) mod p = {}", s_mod));
            } else {
                const bool fib = central_fibbinary(Integer(k), p);
                c.expect((s_mod != 0) == fib, fmt::format("p divides S(pk,k): {}", !fib),
                         fmt::format("p divides S(pk,k): {}", s_mod == 0));
            }
        });
    }
}

void sweep_t2_5(const SweepRanges& rg, Prime p, Recorder& rec) {
    for_each_min_zero(Kind::Second, rg.n_max, p, rec, [&](unsigned long n, unsigned long k) {
        rec.check(fmt::format("p={} n={} k={}", p.value(), n, k), [&](Case& c) {
            const Witness base = exact_witness(Kind::Second, n, k, p);
            const Witness next = exact_witness(Kind::Second, n + 1, k + 1, p);
            c.expect(same(base, next), show(base), show(next));
            shift_second(Integer(n), Integer(k), p);
        });
    });
}

// nu_2(S(n(h), k + shift)) = sigma_2(k) - 1 for 1 <= k <= 2^h.
void sweep_two_power(ClaimId id, const SweepRanges& rg, Recorder& rec) {
    const Prime two(2);
    struct Item {
        unsigned long c, h, n, k;
    };
    std::vector<Item> items;
    const unsigned long c_max = id == ClaimId::EQ1_3 ? rg.c_max : 1;
    for (unsigned long c = 1; c <= c_max; ++c) {
        for (unsigned long h = 0; h <= rg.h_max; ++h) {
            const unsigned long top = upow(2, h);
            for (unsigned long k = 1; k <= top; ++k) {
                if (id == ClaimId::EQ1_4) {
                    items.push_back({c, h, top + 1, k + 1});
                } else {
                    items.push_back({c, h, c * top, k});
                }
            }
        }
    }
    std::vector<Entry> entries;
    for (const auto& it : items) entries.emplace_back(it.n, it.k);
    const auto witnesses = witness_batch(Kind::Second, two, entries);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& it = items[i];
        const unsigned long k = id == ClaimId::EQ1_4 ? it.k - 1 : it.k;
        rec.check(fmt::format("p=2 c={} h={} n={} k={}", it.c, it.h, it.n, it.k), [&](Case& c) {
            const long v = sigma(k, two) - 1;
            c.expect(valuation_is(witnesses[i], v), fmt::format("nu={}", v),
                     show(witnesses[i]));
        });
    }
}

// ---------------------------------------------------------------------------
// First kind

void sweep_t3_1(const SweepRanges& rg, Prime p, Recorder& rec) {
    for (unsigned long n = 1; n <= rg.n_max; ++n) {
        for (unsigned long k = 1; k <= n; ++k) {
            rec.check(fmt::format("p={} n={} k={}", p.value(), n, k), [&](Case& c) {
                const auto rep = classify_first(Integer(n), Integer(k), p);
                const Witness w = exact_witness(Kind::First, n, k, p);
                const bool attained = attains(w, sigma(k - 1, p) - sigma(n - 1, p), p);
                c.expect(attained == rep.is_min_zero,
                         fmt::format("min_zero={}", rep.is_min_zero), show(w));
                if (rep.is_min_zero) {
                    c.expect(w.unit_residue == *rep.predicted_unit_residue,
                             fmt::format("eps={}", *rep.predicted_unit_residue), show(w));
                }
                if (n >= k * p.value()) {
                    c.expect(!rep.is_min_zero, "min_zero=false for n >= kp", "min_zero=true");
                }
                if (static_cast<long>(n) <= rg.l_max) {
                    const auto mp = max_pole_classify(n - k, static_cast<long>(n), p);
                    c.expect(mp.is_max_pole == rep.is_min_zero,
                             fmt::format("max_pole={}", rep.is_min_zero),
                             fmt::format("max_pole={}", mp.is_max_pole));
                }
            });
        }
    }
}

void sweep_t3_2(bool residues, const SweepRanges& rg, Prime p, Recorder& rec) {
    for (unsigned long h = 0; upow(p, h) <= rg.n_max; ++h) {
        for (long a = 1; a <= p.value() - 1; ++a) {
            const unsigned long k = static_cast<unsigned long>(a) * upow(p, h);
            if (k > rg.n_max) break;
            const unsigned long n_end = std::min(k * p.value() - 1, rg.n_max);
            for (unsigned long n = k; n <= n_end; ++n) {
                if ((n - k) % (p.value() - 1) != 0) {
                    rec.skip();
                    continue;
                }
                rec.check(fmt::format("p={} a={} h={} n={}", p.value(), a, h, n),
                          [&](Case& c) {
                              const Witness w = exact_witness(Kind::First, n, k, p);
                              if (residues) {
                                  const auto pred =
                                      single_digit_first(a, static_cast<long>(h), Integer(n), p);
                                  c.expect(matches(w, pred.valuation, pred.unit_residue),
                                           show(pred.valuation, pred.unit_residue), show(w));
                              } else {
                                  const long v =
                                      (sigma(k - 1, p) - sigma(n - 1, p)) / (p.value() - 1);
                                  c.expect(valuation_is(w, v), fmt::format("nu={}", v), show(w));
                                  c.expect(
                                      classify_first(Integer(n), Integer(k), p).is_min_zero,
                                      "min_zero=true", "min_zero=false");
                              }
                          });
            }
        }
    }
}

void sweep_c3_3(const SweepRanges& rg, Recorder& rec) {
    const Prime two(2);
    for (unsigned long h = 0; h <= rg.h_max; ++h) {
        const unsigned long k = upow(2, h);
        for (unsigned long n = k; n < 2 * k; ++n) {
            rec.check(fmt::format("p=2 h={} n={}", h, n), [&](Case& c) {
                const long v = static_cast<long>(h) - sigma(n - 1, two);
                const Witness w = exact_witness(Kind::First, n, k, two);
                c.expect(valuation_is(w, v), fmt::format("nu={}", v), show(w));
            });
        }
    }
}

void sweep_t3_3(const SweepRanges& rg, Prime p, Recorder& rec) {
    struct Item {
        unsigned long n, k, t;
    };
    std::vector<Item> items;
    for_each_min_zero(Kind::First, rg.n_max, p, rec, [&](unsigned long n, unsigned long k) {
        unsigned long step = 1;
        while (step <= n) step *= static_cast<unsigned long>(p.value());
        for (unsigned long m = 1; m <= rg.c_max; ++m) items.push_back({n, k, m * step});
    });
    std::vector<Entry> entries;
    for (const auto& it : items) {
        entries.emplace_back(it.n, it.k);
        entries.emplace_back(it.t + it.n, it.t + it.k);
    }
    const auto witnesses = witness_batch(Kind::First, p, entries);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& it = items[i];
        rec.check(fmt::format("p={} n={} k={} t={}", p.value(), it.n, it.k, it.t),
                  [&](Case& c) {
                      const Witness& base = witnesses[2 * i];
                      const Witness& shifted = witnesses[2 * i + 1];
                      c.expect(same(base, shifted), show(base), show(shifted));
                      invariance_first(Integer(it.n), Integer(it.k), Integer(it.t), p);
                  });
    }
}

void sweep_t3_4(const SweepRanges& rg, Prime p, Recorder& rec) {
    for_each_min_zero(Kind::First, rg.n_max, p, rec, [&](unsigned long n, unsigned long k) {
        if (k < 2) {
            rec.skip();
            return;
        }
        rec.check(fmt::format("p={} n={} k={}", p.value(), n, k), [&](Case& c) {
            const Witness base = exact_witness(Kind::First, n, k, p);
            const Witness prev = exact_witness(Kind::First, n - 1, k - 1, p);
            c.expect(same(base, prev), show(base), show(prev));
            shift_first(Integer(n), Integer(k), p);
        });
    });
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

void sweep_l5_1(const SweepRanges& rg, Prime p, Recorder& rec) {
    for (long l = -rg.l_max; l <= rg.l_max; ++l) {
        const auto column = bernoulli_numbers(rg.n_max, l);
        for (unsigned long n = 0; n <= rg.n_max; ++n) {
            rec.check(fmt::format("p={} n={} l={}", p.value(), n, l), [&](Case& c) {
                const long bound = -(sigma(n, p) / (p.value() - 1));
                if (sgn(column[n]) == 0) return;
                const long v = nu(column[n], p);
                c.expect(v >= bound, fmt::format("nu >= {}", bound), fmt::format("nu={}", v));
            });
        }
    }
}

// (-1)^r C(top, r) mod p
long signed_binomial(const Integer& top, unsigned long r, Prime p) {
    const long c = binomial_residue(top, Integer(r), p);
    return r % 2 == 0 ? c : mod_normal(-c, p);
}

void sweep_p5_1(const SweepRanges& rg, Prime p, Recorder& rec) {
    const unsigned long d = static_cast<unsigned long>(p.value() - 1);
    for (long l = -rg.l_max; l <= rg.l_max; ++l) {
        const auto column = bernoulli_numbers(rg.n_max, l);
        for (unsigned long n = 0; n <= rg.n_max; ++n) {
            if (n % d != 0) {
                rec.skip();
                continue;
            }
            rec.check(fmt::format("p={} n={} l={}", p.value(), n, l), [&](Case& c) {
                const unsigned long r = n / d;
                Rational lhs = column[n] * upow(p, 0);
                Integer scale;
                mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p.value()), r);
                lhs = lhs * scale / factorial(n);
                if (n % 2 == 1) lhs = -lhs;
                const long observed = residue_mod_p(lhs, p);
                const long expected =
                    signed_binomial(Integer(static_cast<long>(n + r)) - l, r, p);
                c.expect(observed == expected, fmt::format("residue={}", expected),
                         fmt::format("residue={}", observed));
                proposition_congruence(n, l, p);
            });
        }
    }
}

void sweep_eq5_6(const SweepRanges& rg, Prime p, Recorder& rec) {
    const unsigned long d = static_cast<unsigned long>(p.value() - 1);
    for (long l = -rg.l_max; l <= rg.l_max; ++l) {
        const auto column = bernoulli_numbers(rg.n_max, l);
        for (unsigned long n = 0; n <= rg.n_max; ++n) {
            if (n % d != 0) {
                rec.skip();
                continue;
            }
            rec.check(fmt::format("p={} n={} l={}", p.value(), n, l), [&](Case& c) {
                const unsigned long r = n / d;
                const Integer top = Integer(l) - static_cast<long>(n) - 1;
                const bool criterion = binomial_residue(top, Integer(r), p) != 0;
                const long min_v = -sigma(n, p) / static_cast<long>(d);
                const Rational& b = column[n];
                const bool max_pole = sgn(b) != 0 && nu(b, p) == min_v;
                c.expect(max_pole == criterion, fmt::format("max_pole={}", criterion),
                         fmt::format("max_pole={}", max_pole));
                if (criterion && max_pole) {
                    Integer scale;
                    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p.value()), r);
                    const long observed = residue_mod_p(b * scale / factorial(n), p);
                    const long expected =
                        signed_binomial(Integer(static_cast<long>(n + r)) - l, r, p);
                    c.expect(observed == expected, fmt::format("residue={}", expected),
                             fmt::format("residue={}", observed));
                }
                const auto rep = max_pole_classify(n, l, p);
                c.expect(rep.is_max_pole == criterion, fmt::format("max_pole={}", criterion),
                         fmt::format("reported max_pole={}", rep.is_max_pole));
            });
        }
    }
}

// ---------------------------------------------------------------------------
// p-adic preliminaries

void sweep_l4_1(const SweepRanges& rg, Prime p, Recorder& rec) {
    for (unsigned long h = 0; h <= rg.h_max; ++h) {
        for (long a = 1; a <= p.value() - 1; ++a) {
            rec.check(fmt::format("p={} a={} h={}", p.value(), a, h), [&](Case& c) {
                const unsigned long n = static_cast<unsigned long>(a) * upow(p, h);
                const long observed = unit_residue(Rational(factorial(n)), p);
                const long expected =
                    epsilon_factorial_single_digit(a, static_cast<long>(h), p);
                c.expect(observed == expected, fmt::format("eps={}", expected),
                         fmt::format("eps={}", observed));
            });
        }
    }
}

void sweep_l4_2(const SweepRanges& rg, Prime p, Recorder& rec) {
    for (unsigned long k = 0; k <= rg.digit_max; ++k) {
        rec.check(fmt::format("p={} k={}", p.value(), k), [&](Case& c) {
            const auto step = digit_sum_successor(Integer(k), p);
            const long s_next = sigma(k + 1, p);
            const long u = nu(Integer(k + 1), p);
            c.expect(step.sigma_next == s_next && step.u == u,
                     fmt::format("sigma={} u={}", s_next, u),
                     fmt::format("sigma={} u={}", step.sigma_next, step.u));
            c.expect(s_next == sigma(k, p) + 1 - (p.value() - 1) * u,
                     "sigma(k+1) = sigma(k) + 1 - (p-1)u", fmt::format("sigma(k+1)={}", s_next));
        });
    }
}

// no digit position where both n and r are nonzero
bool disjoint_digits(unsigned long n, unsigned long r, Prime p) {
    const auto pu = static_cast<unsigned long>(p.value());
    for (; n > 0 && r > 0; n /= pu, r /= pu) {
        if (n % pu != 0 && r % pu != 0) return false;
    }
    return true;
}

ValUnit binomial_val_unit(unsigned long n, unsigned long m, Prime p) {
    return val_unit(Rational(binomial(n, m)), p);
}

void sweep_eq4_x(const SweepRanges& rg, Prime p, Recorder& rec) {
    const long pv = p.value();
    // digit sums
    for (unsigned long n = 0; n <= rg.digit_max; ++n) {
        rec.check(fmt::format("p={} part=digits n={}", pv, n), [&](Case& c) {
            const DigitVector d = digits(Integer(n), p);
            c.expect(d.value() == n, fmt::format("{}", n), d.value().get_str());
            const long s = d.sum();
            c.expect((static_cast<long>(n) - s) % (pv - 1) == 0, "(p-1) | n - sigma(n)",
                     fmt::format("sigma={}", s));
            c.expect(sigma(n * pv, p) == s, "sigma(pn) = sigma(n)",
                     fmt::format("sigma(pn)={}", sigma(n * pv, p)));
        });
    }
    // factorial valuations and unit residues
    Integer fact = 1;
    for (unsigned long n = 0; n <= rg.factorial_max; ++n) {
        if (n > 0) fact *= n;
        rec.check(fmt::format("p={} part=factorial n={}", pv, n), [&](Case& c) {
            const auto vu = val_unit(Rational(fact), p);
            const long v = nu_factorial(Integer(n), p);
            c.expect(vu.valuation == Valuation(v), fmt::format("nu={}", v),
                     vu.valuation.to_string());
            const long e = epsilon_factorial(Integer(n), p);
            c.expect(*vu.unit_residue == e, fmt::format("eps={}", e),
                     fmt::format("eps={}", *vu.unit_residue));
            if (n % pv == 0) {
                const long shifted = epsilon_factorial_p_shift(Integer(n / pv), p);
                c.expect(*vu.unit_residue == shifted, fmt::format("eps={}", shifted),
                         fmt::format("eps={}", *vu.unit_residue));
            }
        });
    }
    // binomials: Kummer, Lucas, Anton
    for (unsigned long n = 0; n <= rg.n_max; ++n) {
        for (unsigned long m = 0; m <= n; ++m) {
            rec.check(fmt::format("p={} part=binomial n={} m={}", pv, n, m), [&](Case& c) {
                const auto vu = binomial_val_unit(n, m, p);
                const long e = vu.valuation.value();
                const long by_sigma = nu_binomial(Integer(n), Integer(m), p);
                const long carries = carry_count(Integer(m), Integer(n - m), p);
                c.expect(by_sigma == e && carries == e, fmt::format("nu={}", e),
                         fmt::format("sigma form {} carries {}", by_sigma, carries));
                const long lucas = lucas_residue(Integer(n), Integer(m), p);
                const long direct = mod_normal(binomial(n, m), p);
                c.expect(lucas == direct, fmt::format("C mod p = {}", direct),
                         fmt::format("lucas {}", lucas));
                c.expect((lucas == 0) == (e > 0), "p | C iff a digit of m exceeds n",
                         fmt::format("lucas {} nu {}", lucas, e));
                const long anton = anton_epsilon(Integer(n), Integer(m), p);
                const long signed_eps =
                    e % 2 == 0 ? *vu.unit_residue : mod_normal(-*vu.unit_residue, p);
                c.expect(anton == signed_eps, fmt::format("(-1)^e eps = {}", signed_eps),
                         fmt::format("anton {}", anton));
            });
        }
    }
    // digit shift: C(np, mp) against C(n, m)
    const unsigned long shift_max = rg.n_max * 2 / 3;
    for (unsigned long n = 0; n <= shift_max; ++n) {
        for (unsigned long m = 0; m <= n; ++m) {
            rec.check(fmt::format("p={} part=shift n={} m={}", pv, n, m), [&](Case& c) {
                const auto a = binomial_val_unit(n, m, p);
                const auto b = binomial_val_unit(n * pv, m * pv, p);
                c.expect(a.valuation == b.valuation && a.unit_residue == b.unit_residue,
                         fmt::format("nu={} eps={}", a.valuation.to_string(), *a.unit_residue),
                         fmt::format("nu={} eps={}", b.valuation.to_string(), *b.unit_residue));
            });
        }
    }
    // disjoint digits: C(n+r, r) = 1 mod p
    for (unsigned long n = 0; n <= rg.n_max; ++n) {
        for (unsigned long r = 0; n + r <= rg.n_max; ++r) {
            if (!disjoint_digits(n, r, p)) {
                rec.skip();
                continue;
            }
            rec.check(fmt::format("p={} part=disjoint n={} r={}", pv, n, r), [&](Case& c) {
                const long res = lucas_residue(Integer(n + r), Integer(r), p);
                c.expect(res == 1, "1", fmt::format("{}", res));
            });
        }
    }
    // C(n,k) = eps(n!/k!) p^{(n-k)/(p-1)} p^{(sigma(k)-sigma(n))/(p-1)} / (n-k)!
    for (unsigned long n = 0; n <= shift_max; ++n) {
        for (unsigned long k = 0; k <= n; ++k) {
            if ((n - k) % (pv - 1) != 0) {
                rec.skip();
                continue;
            }
            rec.check(fmt::format("p={} part=remark n={} k={}", pv, n, k), [&](Case& c) {
                const Rational ratio(factorial(n), factorial(k));
                const Rational unit = *val_unit(ratio, p).unit;
                const long e1 = static_cast<long>(n - k) / (pv - 1);
                const long e2 = (sigma(k, p) - sigma(n, p)) / (pv - 1);
                Integer pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(pv),
                              static_cast<unsigned long>(e1 + e2));
                const Rational rhs = unit * pw / factorial(n - k);
                c.expect(rhs == Rational(binomial(n, k)), binomial(n, k).get_str(),
                         rhs.get_str());
            });
        }
    }
    // negative binomials
    for (long a = 1; a <= 12; ++a) {
        for (long r = 0; r <= 12; ++r) {
            rec.check(fmt::format("p={} part=negbinomial a={} r={}", pv, a, r), [&](Case& c) {
                Integer num = 1;
                for (long i = 0; i < r; ++i) num *= -a - i;
                const Integer direct = num / factorial(static_cast<unsigned long>(r));
                const Integer formula = neg_binomial(Integer(a), Integer(r));
                c.expect(direct == formula, direct.get_str(), formula.get_str());
            });
        }
    }
    // nu(a) < nu(b) implies nu(a+b) = nu(a) and eps(a+b) = eps(a) mod p
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long>(pv));
    std::uniform_int_distribution<long> unit_dist(1, 1000000);
    std::uniform_int_distribution<long> exp_dist(-6, 6);
    const unsigned long samples = rg.n_max * 4;
    for (unsigned long i = 0; i < samples; ++i) {
        auto draw = [&] {
            Rational q(unit_dist(rng) * (unit_dist(rng) % 2 == 0 ? 1 : -1), unit_dist(rng));
            q.canonicalize();
            const long e = exp_dist(rng);
            Integer pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(pv),
                          static_cast<unsigned long>(std::abs(e)));
            return e >= 0 ? Rational(q * pw) : Rational(q / pw);
        };
        Rational a = draw();
        Rational b = draw();
        if (nu(a, p) == nu(b, p)) {
            rec.skip();
            continue;
        }
        if (nu(a, p) > nu(b, p)) std::swap(a, b);
        rec.check(fmt::format("p={} part=sum a={} b={}", pv, a.get_str(), b.get_str()),
                  [&](Case& c) {
                      const auto sum = val_unit(Rational(a + b), p);
                      const auto first = val_unit(a, p);
                      c.expect(sum.valuation == first.valuation &&
                                   sum.unit_residue == first.unit_residue,
                               fmt::format("nu={} eps={}", first.valuation.to_string(),
                                           *first.unit_residue),
                               fmt::format("nu={} eps={}", sum.valuation.to_string(),
                                           *sum.unit_residue));
                  });
    }
}

void run_for_prime(const SweepSpec& spec, Prime p, Recorder& rec) {
    const auto& rg = spec.ranges;
    switch (spec.claim) {
        case ClaimId::L2_1: return sweep_lower_bound(Kind::Second, rg, p, rec);
        case ClaimId::T2_1: return sweep_t2_1(rg, p, rec);
        case ClaimId::C2_1: return sweep_scaling(Kind::Second, rg, p, rec);
        case ClaimId::C2_2: return sweep_c2_2(rg, p, rec);
        case ClaimId::T2_2: return sweep_t2_2(false, rg, p, rec);
        case ClaimId::C2_3: return sweep_t2_2(true, rg, p, rec);
        case ClaimId::T2_3: return sweep_t2_3(rg, p, rec);
        case ClaimId::C2_4: return sweep_c2_4(rg, p, rec);
        case ClaimId::T2_4: return sweep_central(false, rg, p, rec);
        case ClaimId::C2_5: return sweep_central(true, rg, p, rec);
        case ClaimId::T2_5: return sweep_t2_5(rg, p, rec);
        case ClaimId::EQ1_1:
        case ClaimId::EQ1_3:
        case ClaimId::EQ1_4: return sweep_two_power(spec.claim, rg, rec);
        case ClaimId::L3_1: return sweep_lower_bound(Kind::First, rg, p, rec);
        case ClaimId::T3_1: return sweep_t3_1(rg, p, rec);
        case ClaimId::C3_1: return sweep_scaling(Kind::First, rg, p, rec);
        case ClaimId::T3_2: return sweep_t3_2(false, rg, p, rec);
        case ClaimId::C3_2: return sweep_t3_2(true, rg, p, rec);
        case ClaimId::C3_3: return sweep_c3_3(rg, rec);
        case ClaimId::T3_3: return sweep_t3_3(rg, p, rec);
        case ClaimId::T3_4: return sweep_t3_4(rg, p, rec);
        case ClaimId::L5_1: return sweep_l5_1(rg, p, rec);
        case ClaimId::P5_1: return sweep_p5_1(rg, p, rec);
        case ClaimId::EQ5_6: return sweep_eq5_6(rg, p, rec);
        case ClaimId::L4_1: return sweep_l4_1(rg, p, rec);
        case ClaimId::L4_2: return sweep_l4_2(rg, p, rec);
        case ClaimId::EQ4_x: return sweep_eq4_x(rg, p, rec);
    }
}

// Whether the exact comparison of a claim needs Stirling or Bernoulli values.
bool needs_exact_values(ClaimId id) {
    switch (id) {
        case ClaimId::L4_2:
        case ClaimId::EQ4_x:
        case ClaimId::L4_1: return false;
        default: return true;
    }
}

}  // namespace

const std::vector<ClaimId>& all_claims() {
    static const std::vector<ClaimId> ids = [] {
        std::vector<ClaimId> v;
        for (const auto& c : kClaims) v.push_back(c.id);
        return v;
    }();
    return ids;
}

std::string_view claim_name(ClaimId id) { return info(id).name; }

std::string_view claim_statement(ClaimId id) { return info(id).statement; }

std::optional<ClaimId> parse_claim(std::string_view name) {
    for (const auto& c : kClaims) {
        if (c.name == name) return c.id;
    }
    return std::nullopt;
}

bool is_conjecture(ClaimId id) { return id == ClaimId::EQ1_3; }

bool fixed_to_two(ClaimId id) {
    return id == ClaimId::EQ1_1 || id == ClaimId::EQ1_3 || id == ClaimId::EQ1_4 ||
           id == ClaimId::C3_3;
}

void validate(const SweepSpec& spec) {
    if (spec.primes.empty()) throw std::invalid_argument("sweep needs at least one prime");
    for (long p : spec.primes) Prime{p};
    const auto& rg = spec.ranges;
    if (rg.n_max == 0 || rg.k_max == 0 || rg.c_max == 0 || rg.l_max < 0) {
        throw std::invalid_argument("sweep ranges must be non-empty");
    }
}

SweepReport run_sweep(const SweepSpec& spec) {
    validate(spec);
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.claim = spec.claim;
    report.conjecture_flag = is_conjecture(spec.claim);
    report.primes = fixed_to_two(spec.claim) ? std::vector<long>{2} : spec.primes;
    Recorder rec(report);
    if (!spec.witness && needs_exact_values(spec.claim)) {
        // Nothing to compare against; count one skipped case per prime.
        rec.skip(report.primes.size());
    } else {
        for (long p : report.primes) run_for_prime(spec, Prime(p), rec);
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::optional<Profile> parse_profile(std::string_view name) {
    if (name == "quick") return Profile::Quick;
    if (name == "full") return Profile::Full;
    return std::nullopt;
}

std::vector<SweepSpec> profile_specs(Profile profile) {
    std::vector<SweepSpec> out;
    auto add = [&](ClaimId id, std::vector<long> primes, auto&& tweak) {
        SweepSpec s;
        s.claim = id;
        s.primes = std::move(primes);
        tweak(s.ranges);
        out.push_back(std::move(s));
    };
    using R = SweepRanges;
    if (profile == Profile::Quick) {
        const std::vector<long> ps{2, 3, 5};
        add(ClaimId::L2_1, ps, [](R& r) { r.n_max = 40; });
        add(ClaimId::T2_1, ps, [](R& r) { r.n_max = 40; r.l_max = 12; });
        add(ClaimId::C2_1, ps, [](R& r) { r.n_max = 25; });
        add(ClaimId::C2_2, ps, [](R& r) { r.n_max = 60; });
        add(ClaimId::T2_2, ps, [](R& r) { r.h_max = 3; });
        add(ClaimId::C2_3, ps, [](R& r) { r.h_max = 3; });
        add(ClaimId::T2_3, ps, [](R& r) { r.n_max = 60; });
        add(ClaimId::C2_4, ps, [](R& r) { r.h_max = 3; });
        add(ClaimId::T2_4, ps, [](R& r) { r.k_max = 60; });
        add(ClaimId::C2_5, ps, [](R& r) { r.k_max = 60; });
        add(ClaimId::T2_5, ps, [](R& r) { r.n_max = 60; });
        add(ClaimId::EQ1_1, {2}, [](R& r) { r.h_max = 6; });
        add(ClaimId::EQ1_3, {2}, [](R& r) { r.h_max = 4; r.c_max = 4; });
        add(ClaimId::EQ1_4, {2}, [](R& r) { r.h_max = 6; });
        add(ClaimId::L3_1, ps, [](R& r) { r.n_max = 40; });
        add(ClaimId::T3_1, ps, [](R& r) { r.n_max = 40; r.l_max = 16; });
        add(ClaimId::C3_1, ps, [](R& r) { r.n_max = 25; });
        add(ClaimId::T3_2, ps, [](R& r) { r.n_max = 60; });
        add(ClaimId::C3_2, ps, [](R& r) { r.n_max = 60; });
        add(ClaimId::C3_3, {2}, [](R& r) { r.h_max = 5; });
        add(ClaimId::T3_3, ps, [](R& r) { r.n_max = 30; r.c_max = 2; });
        add(ClaimId::T3_4, ps, [](R& r) { r.n_max = 60; });
        add(ClaimId::L5_1, ps, [](R& r) { r.n_max = 16; r.l_max = 10; });
        add(ClaimId::P5_1, ps, [](R& r) { r.n_max = 12; r.l_max = 10; });
        add(ClaimId::EQ5_6, ps, [](R& r) { r.n_max = 12; r.l_max = 10; });
        add(ClaimId::L4_1, {2, 3, 5, 7}, [](R& r) { r.h_max = 3; });
        add(ClaimId::L4_2, ps, [](R& r) { r.digit_max = 2000; });
        add(ClaimId::EQ4_x, ps, [](R& r) {
            r.n_max = 60;
            r.digit_max = 2000;
            r.factorial_max = 300;
        });
        return out;
    }
    const std::vector<long> p3{2, 3, 5};
    const std::vector<long> p4{2, 3, 5, 7};
    add(ClaimId::EQ1_1, {2}, [](R& r) { r.h_max = 10; });
    add(ClaimId::T2_2, {2}, [](R& r) { r.h_max = 10; });
    add(ClaimId::T2_2, {3, 5, 7}, [](R& r) { r.h_max = 4; });
    add(ClaimId::C2_3, {2}, [](R& r) { r.h_max = 10; });
    add(ClaimId::C2_3, {3, 5, 7}, [](R& r) { r.h_max = 4; });
    add(ClaimId::T2_5, p3, [](R& r) { r.n_max = 300; });
    add(ClaimId::EQ1_4, {2}, [](R& r) { r.h_max = 8; });
    add(ClaimId::T2_4, p3, [](R& r) { r.k_max = 500; });
    add(ClaimId::C2_5, p3, [](R& r) { r.k_max = 500; });
    add(ClaimId::T3_1, p3, [](R& r) { r.n_max = 300; r.l_max = 40; });
    add(ClaimId::C3_1, p3, [](R& r) { r.n_max = 300; });
    add(ClaimId::T3_2, p3, [](R& r) { r.n_max = 300; });
    add(ClaimId::C3_2, p3, [](R& r) { r.n_max = 300; });
    add(ClaimId::C3_3, {2}, [](R& r) { r.h_max = 8; });
    add(ClaimId::T3_3, p3, [](R& r) { r.n_max = 300; r.c_max = 3; });
    add(ClaimId::T3_4, p3, [](R& r) { r.n_max = 300; });
    add(ClaimId::L2_1, p4, [](R& r) { r.n_max = 300; });
    add(ClaimId::L3_1, p4, [](R& r) { r.n_max = 300; });
    add(ClaimId::L5_1, p4, [](R& r) { r.n_max = 40; r.l_max = 40; });
    add(ClaimId::P5_1, p3, [](R& r) { r.n_max = 24; r.l_max = 30; });
    add(ClaimId::EQ5_6, p3, [](R& r) { r.n_max = 24; r.l_max = 30; });
    add(ClaimId::T2_1, p4, [](R& r) { r.n_max = 300; r.l_max = 40; });
    add(ClaimId::C2_1, p3, [](R& r) { r.n_max = 300; });
    add(ClaimId::C2_2, p4, [](R& r) { r.n_max = 300; });
    add(ClaimId::T2_3, p3, [](R& r) { r.n_max = 300; });
    add(ClaimId::C2_4, {2}, [](R& r) { r.h_max = 8; });
    add(ClaimId::C2_4, {3, 5}, [](R& r) { r.h_max = 3; });
    add(ClaimId::L4_1, p4, [](R& r) { r.h_max = 4; });
    add(ClaimId::L4_2, p4, [](R& r) { r.digit_max = 10000; });
    add(ClaimId::EQ4_x, p4, [](R& r) {
        r.n_max = 300;
        r.digit_max = 10000;
        r.factorial_max = 2000;
    });
    add(ClaimId::EQ1_3, {2}, [](R& r) { r.h_max = 6; r.c_max = 8; });
    return out;
}

std::vector<SweepReport> run_all(const std::vector<SweepSpec>& specs) {
    std::vector<SweepReport> out;
    out.reserve(specs.size());
    for (const auto& s : specs) out.push_back(run_sweep(s));
    return out;
}

std::vector<SweepReport> run_all(Profile profile) { return run_all(profile_specs(profile)); }

std::vector<std::pair<unsigned long, unsigned long>> find_non_minzero_shift_examples(
    long p, unsigned long n_max, Kind kind) {
    const Prime prime(p);
    std::vector<std::pair<unsigned long, unsigned long>> out;
    for (unsigned long n = 1; n <= n_max; ++n) {
        for (unsigned long k = 1; k <= n; ++k) {
            if (!classify(kind, Integer(n), Integer(k), prime).is_min_zero) continue;
            if (kind == Kind::Second) {
                if (!classify_second(Integer(n + 1), Integer(k + 1), prime).is_min_zero) {
                    out.emplace_back(n, k);
                }
            } else if (k >= 2 &&
                       !classify_first(Integer(n - 1), Integer(k - 1), prime).is_min_zero) {
                out.emplace_back(n, k);
            }
        }
    }
    return out;
}

std::string to_log_line(const SweepReport& report) {
    std::string verdict = "PASS";
    if (!report.passed()) verdict = report.conjecture_flag ? "CONJECTURE-VIOLATION" : "FAIL";
    return fmt::format("{} {} p={} checked={} skipped={} failures={} elapsed={:.3f}s{}", verdict,
                       claim_name(report.claim), fmt::join(report.primes, ","),
                       report.cases_checked, report.cases_skipped, report.failures.size(),
                       report.elapsed.count(), report.conjecture_flag ? " conjecture" : "");
}

std::vector<Witness> witness_batch(Kind kind, Prime p, const std::vector<Entry>& entries,
                                   unsigned long exact_row_limit) {
    std::vector<Witness> out(entries.size());
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return entries[a].first < entries[b].first;
    });

    const auto& tri = shared_triangle(kind);
    std::vector<Integer> exact_row;
    unsigned long exact_n = 0;
    bool exact_started = false;

    // modulus p^m < 2^32 keeps products inside 64 bits
    std::uint64_t modulus = 1;
    long exponent = 0;
    const auto pu = static_cast<std::uint64_t>(p.value());
    while (modulus * pu < (std::uint64_t{1} << 32)) {
        modulus *= pu;
        ++exponent;
    }
    std::optional<ModularStirlingRows> modular;

    for (std::size_t idx : order) {
        const auto [n, k] = entries[idx];
        if (k > n || (k == 0 && n > 0)) {
            out[idx] = Witness{};
            continue;
        }
        if (n <= tri.n_max()) {
            out[idx] = witness_from_exact(tri.at(n, k), p);
        } else if (n <= exact_row_limit) {
            if (!exact_started) {
                exact_row = tri.row(tri.n_max());
                exact_n = tri.n_max();
                exact_started = true;
            }
            while (exact_n < n) {
                exact_row = next_stirling_row(kind, exact_row);
                ++exact_n;
            }
            out[idx] = witness_from_exact(exact_row[k], p);
        } else {
            if (!modular) modular.emplace(kind, modulus);
            modular->advance_to(n);
            out[idx] = witness_from_residue(modular->row()[k], modulus, exponent, p);
        }
    }
    return out;
}

}  // namespace spadic
