#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "core/word.hpp"

namespace zimav {

inline constexpr unsigned long kDefaultEnumBudget = 100'000'000; // q^M cap
inline constexpr std::size_t kDefaultDigitCap = 1'000'000;       // decimal digits

struct InstanceCount {
    std::uint32_t n = 0;
    int q = 0;
    std::uint32_t M = 0;
    mpz_class count;
};

// Exact count of length-M q-ary words that are themselves Z_n-instances, by
// exhaustive enumeration.
InstanceCount count_instances(std::uint32_t n, int q, std::uint32_t M,
                              unsigned long budget = kDefaultEnumBudget,
                              int jobs = 1);

struct MonotonicityReport {
    InstanceCount at_M;
    InstanceCount at_M_plus_1;
    bool holds = false;    // count(M+1) >= q * count(M)
    bool equality = false; // count(M+1) == q * count(M)
};

// Both sides of the count inequality |C(n,q,M+1)| >= q|C(n,q,M)|, exactly.
MonotonicityReport check_monotonicity(std::uint32_t n, int q, std::uint32_t M,
                                      unsigned long budget = kDefaultEnumBudget,
                                      int jobs = 1);

// (q/(q-1))^(n-1) * q^(M - 2^n + n + 1) as an exact rational.
mpq_class lemma2_bound(std::uint32_t n, int q, std::uint32_t M);

// count_instances / q^M as an exact rational.
mpq_class instance_probability(std::uint32_t n, int q, std::uint32_t M,
                               unsigned long budget = kDefaultEnumBudget,
                               int jobs = 1);

// Exact values that can outgrow any fixed-width type; beyond the digit cap
// only a symbolic power-tower description survives.
enum class BoundKind { ExactInteger, Tower };

struct BoundValue {
    BoundKind kind = BoundKind::ExactInteger;
    mpz_class integer;         // ExactInteger
    unsigned long tower_base = 0;
    std::uint32_t tower_height = 0;
};

std::string render_bound(const BoundValue& v);

// Power tower of Q = 2q+1 of height n-1 (height 0 = 1).
BoundValue tower_upper_bound(std::uint32_t n, int q,
                             std::size_t digit_cap = kDefaultDigitCap);

// Iterate T_1 = 1, T_{k+1} = (T_k + 1)(q^{T_k} + 1) - 1 up to k = n; falls
// back to the tower description once the exact value passes the digit cap.
BoundValue recurrence_upper_bound(std::uint32_t n, int q,
                                  std::size_t digit_cap = kDefaultDigitCap);

// binom(M+1,2) * (q/(q-1))^(n-1) * q^(-2^n + n + 1), exactly.
mpq_class moment_expectation_upper(std::uint32_t n, int q, const mpz_class& M);

// Largest M whose expectation bound stays below 1, i.e. largest M with
// M(M+1) < 2 (q-1)^(n-1) q^(2^n - 2n). Returns 0 for n = 1.
mpz_class first_moment_max_length(std::uint32_t n, int q,
                                  std::size_t digit_cap = kDefaultDigitCap);

} // namespace zimav
