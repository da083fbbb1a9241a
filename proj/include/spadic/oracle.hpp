#pragma once

// Exhaustive verification sweeps. Each claim is evaluated against exact
// Stirling and Bernoulli values over a finite range; disagreements are
// collected as failure entries instead of being thrown.

#include "spadic/exact_seq.hpp"
#include "spadic/types.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spadic {

enum class ClaimId {
    L2_1, T2_1, C2_1, C2_2, T2_2, C2_3, T2_3, C2_4, T2_4, C2_5, T2_5,
    EQ1_1, EQ1_3, EQ1_4,
    L3_1, T3_1, C3_1, T3_2, C3_2, C3_3, T3_3, T3_4,
    L5_1, P5_1, EQ5_6,
    L4_1, L4_2, EQ4_x,
};

/// Every claim, in declaration order.
const std::vector<ClaimId>& all_claims();

/// Short identifier such as "T2.1" or "EQ4.x".
std::string_view claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);

/// One-line statement of what the sweep checks.
std::string_view claim_statement(ClaimId id);

/// True for claims checked as evidence for an unproven statement.
bool is_conjecture(ClaimId id);

/// True for claims that only make sense at p = 2; their sweeps ignore the
/// prime list.
bool fixed_to_two(ClaimId id);

/// Bounds for the enumerated variables. Which fields a claim reads is part
/// of its documented semantics (see README); unused fields are ignored.
struct SweepRanges {
    unsigned long n_max = 60;         // n (Stirling rows, Bernoulli index, binomial tops)
    unsigned long k_max = 100;        // k for central Stirling numbers S(pk, k)
    unsigned long h_max = 3;          // exponent h in a p^h and 2^h families
    long l_max = 10;                  // |l| for Bernoulli orders
    unsigned long c_max = 4;          // c in c 2^h; multiplier m in shifts t = m p^e
    unsigned long digit_max = 2000;   // range for digit-sum identities
    unsigned long factorial_max = 400;  // range for exact factorial checks
};

struct SweepSpec {
    ClaimId claim = ClaimId::L2_1;
    std::vector<long> primes{2};
    SweepRanges ranges;
    bool witness = true;  // false: cases that need exact values are skipped
};

struct SweepFailure {
    std::string inputs;    // "claim=T2.1 p=2 n=5 k=3"
    std::string expected;
    std::string observed;
};

struct SweepReport {
    ClaimId claim = ClaimId::L2_1;
    std::vector<long> primes;
    std::size_t cases_checked = 0;
    std::size_t cases_skipped = 0;
    std::vector<SweepFailure> failures;
    std::chrono::duration<double> elapsed{0};
    bool conjecture_flag = false;

    bool passed() const noexcept { return failures.empty(); }
    std::size_t cardinality() const noexcept { return cases_checked + cases_skipped; }
};

/// Throws std::invalid_argument for empty prime lists, composite primes or
/// empty ranges.
void validate(const SweepSpec& spec);

SweepReport run_sweep(const SweepSpec& spec);

enum class Profile { Quick, Full };

std::optional<Profile> parse_profile(std::string_view name);

/// Sweep list of a profile. Quick covers every claim on small ranges; full
/// uses the acceptance ranges.
std::vector<SweepSpec> profile_specs(Profile profile);

std::vector<SweepReport> run_all(Profile profile);
std::vector<SweepReport> run_all(const std::vector<SweepSpec>& specs);

/// Minimum-zero (n,k) with n <= n_max whose shifted neighbour is not a
/// minimum zero case: (n+1,k+1) for the second kind, (n-1,k-1) for the first.
std::vector<std::pair<unsigned long, unsigned long>> find_non_minzero_shift_examples(
    long p, unsigned long n_max, Kind kind = Kind::Second);

/// "PASS T2.1 p=2,3 checked=... skipped=... failures=0 elapsed=0.12s"
/// (CONJECTURE-VIOLATION replaces FAIL for conjecture claims).
std::string to_log_line(const SweepReport& report);

/// nu_p and unit residue of a Stirling number as seen by the sweeps. When a
/// row is only available modulo p^m, a zero residue means nu >= m.
struct Witness {
    Valuation valuation;   // infinite for an exact zero
    long unit_residue = 0; // in [1, p-1] when the valuation is finite
    bool at_least = false; // valuation is only a lower bound (modular row)
};

/// Witnesses for a batch of (n, k) entries. Rows within the shared triangle
/// are exact; larger rows are streamed exactly up to `exact_row_limit` and
/// modulo the largest power of p below 2^32 beyond it.
std::vector<Witness> witness_batch(Kind kind, Prime p,
                                   const std::vector<std::pair<unsigned long, unsigned long>>& entries,
                                   unsigned long exact_row_limit = 2600);

}  // namespace spadic
