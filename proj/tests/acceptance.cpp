// Acceptance run: every criterion at its full range, exact equality only.
// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "spadic/exact_seq.hpp"
#include "spadic/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace spadic;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

SweepSpec make(ClaimId id, std::vector<long> primes, const std::function<void(SweepRanges&)>& tweak) {
    SweepSpec s;
    s.claim = id;
    s.primes = std::move(primes);
    tweak(s.ranges);
    return s;
}

Outcome sweeps(const std::vector<SweepSpec>& specs) {
    Outcome out;
    std::size_t checked = 0, skipped = 0;
    for (const auto& s : specs) {
        const SweepReport rep = run_sweep(s);
        checked += rep.cases_checked;
        skipped += rep.cases_skipped;
        if (rep.passed() && rep.cases_checked > 0) continue;
        out.ok = false;
        std::printf("    %s\n", to_log_line(rep).c_str());
        for (std::size_t i = 0; i < rep.failures.size() && i < 5; ++i) {
            const auto& f = rep.failures[i];
            std::printf("      %s expected: %s observed: %s\n", f.inputs.c_str(),
                        f.expected.c_str(), f.observed.c_str());
        }
    }
    out.detail = "checked=" + std::to_string(checked) + " skipped=" + std::to_string(skipped);
    return out;
}

Outcome connection_formulas() {
    Outcome out;
    std::size_t checked = 0;
    for (unsigned long n = 0; n <= 60; ++n) {
        for (unsigned long k = 0; k <= n; ++k) {
            try {
                if (connect_second(n, k) != stirling2(n, k)) out.ok = false;
                if (k >= 1) {
                    if (connect_first(n, k) != stirling1(n, k)) out.ok = false;
                } else if (stirling1(n, 0) != (n == 0 ? 1 : 0)) {
                    out.ok = false;
                }
                checked += 2;
            } catch (const std::exception& e) {
                std::printf("      failure n=%lu k=%lu: %s\n", n, k, e.what());
                out.ok = false;
            }
        }
        const SeriesPoly f = falling_factorial(n);
        for (unsigned long k = 0; k <= n; ++k) {
            if (f[k] != stirling1(n, k)) out.ok = false;
            ++checked;
        }
    }
    out.detail = std::to_string(checked) + " identities";
    return out;
}

struct Criterion {
    int number;
    const char* title;
    double time_limit_seconds;  // 0: none
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<long> p3{2, 3, 5};
    const std::vector<long> p4{2, 3, 5, 7};
    const std::vector<Criterion> criteria{
        {1, "nu_2(S(2^h,k)) = sigma_2(k)-1 for h<=10", 120,
         [] { return sweeps({make(ClaimId::EQ1_1, {2}, [](auto& r) { r.h_max = 10; })}); }},
        {2, "S(a p^h,k) valuation and residue, p=2 h<=10, p=3,5,7 h<=4", 0,
         [] {
             return sweeps({make(ClaimId::T2_2, {2}, [](auto& r) { r.h_max = 10; }),
                            make(ClaimId::T2_2, {3, 5, 7}, [](auto& r) { r.h_max = 4; }),
                            make(ClaimId::C2_3, {2}, [](auto& r) { r.h_max = 10; }),
                            make(ClaimId::C2_3, {3, 5, 7}, [](auto& r) { r.h_max = 4; })});
         }},
        {3, "S(n+1,k+1) keeps valuation and residue of minimum-zero S(n,k), n<=300", 0,
         [&] {
             return sweeps({make(ClaimId::T2_5, p3, [](auto& r) { r.n_max = 300; }),
                            make(ClaimId::EQ1_4, {2}, [](auto& r) { r.h_max = 8; })});
         }},
        {4, "S(pk,k) mod p against p-Fibbinary digits, k<=500", 300,
         [&] {
             return sweeps({make(ClaimId::T2_4, p3, [](auto& r) { r.k_max = 500; }),
                            make(ClaimId::C2_5, p3, [](auto& r) { r.k_max = 500; })});
         }},
        {5, "first kind predictions against exact s(n,k), n<=300", 0,
         [&] {
             return sweeps({make(ClaimId::T3_1, p3, [](auto& r) { r.n_max = 300; r.l_max = 40; }),
                            make(ClaimId::C3_1, p3, [](auto& r) { r.n_max = 300; }),
                            make(ClaimId::T3_2, p3, [](auto& r) { r.n_max = 300; }),
                            make(ClaimId::C3_2, p3, [](auto& r) { r.n_max = 300; }),
                            make(ClaimId::T3_3, p3, [](auto& r) { r.n_max = 300; r.c_max = 3; }),
                            make(ClaimId::T3_4, p3, [](auto& r) { r.n_max = 300; }),
                            make(ClaimId::C3_3, {2}, [](auto& r) { r.h_max = 8; })});
         }},
        {6, "lower bounds for S, s (n<=300) and B_n^(l) (n<=40, |l|<=40)", 0,
         [&] {
             return sweeps({make(ClaimId::L2_1, p4, [](auto& r) { r.n_max = 300; }),
                            make(ClaimId::L3_1, p4, [](auto& r) { r.n_max = 300; }),
                            make(ClaimId::L5_1, p4, [](auto& r) { r.n_max = 40; r.l_max = 40; })});
         }},
        {7, "p^r B_n^(l)/n! residues, n<=24, |l|<=30", 0,
         [&] {
             return sweeps({make(ClaimId::P5_1, p3, [](auto& r) { r.n_max = 24; r.l_max = 30; }),
                            make(ClaimId::EQ5_6, p3, [](auto& r) { r.n_max = 24; r.l_max = 30; })});
         }},
        {8, "Bernoulli connection formulas and (x)_n coefficients, n<=60", 0,
         connection_formulas},
        {9, "digit, factorial and binomial congruence suites", 0,
         [&] {
             return sweeps({make(ClaimId::L4_1, p4, [](auto& r) { r.h_max = 4; }),
                            make(ClaimId::L4_2, p4, [](auto& r) { r.digit_max = 10000; }),
                            make(ClaimId::EQ4_x, p4, [](auto& r) {
                                r.n_max = 300;
                                r.digit_max = 10000;
                                r.factorial_max = 2000;
                            })});
         }},
        {10, "conjecture nu_2(S(c 2^h,k)) = sigma_2(k)-1, c<=8, h<=6", 0,
         [] {
             return sweeps({make(ClaimId::EQ1_3, {2}, [](auto& r) {
                 r.h_max = 6;
                 r.c_max = 8;
             })});
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string note = o.detail;
        if (c.time_limit_seconds > 0 && secs > c.time_limit_seconds) {
            o.ok = false;
            note += " time limit exceeded";
        }
        if (c.number == 10) note += (note.empty() ? "" : " ") + std::string("empirical evidence, conjecture");
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.title,
                    secs, note.empty() ? "" : " ", note.c_str());
        std::fflush(stdout);
        if (!o.ok) ++failed;
    }
    std::printf("%s %zu/%zu criteria\n", failed == 0 ? "PASS" : "FAIL", criteria.size() - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
