#pragma once

#include "dioquad/numeric.hpp"

#include <cstdint>
#include <vector>

namespace dioquad {

/// Ascending list of all primes <= n.
std::vector<long> primes_up_to(long n);

/// Miller-Rabin with the first thirteen primes as witnesses. This is a proof of
/// primality for n < kDeterministicPrimeLimit (3317044064679887385961981); above
/// that the extra fixed witnesses make it a strong probable-prime test.
bool is_prime(const Int& n);

extern const char* const kDeterministicPrimeLimit;

struct FactorBudget {
    long trial_bound = 1L << 16;
    std::uint64_t rho_iterations = 1ULL << 20;  // per attempt
    unsigned rho_attempts = 6;
    std::uint64_t seed = 0x5eed5eedULL;
};

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// |n| = prod(prime^exponent) * cofactor. A cofactor other than 1 is a
/// composite that the budget could not split.
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;  // ascending by prime
    Int cofactor = 1;
    bool complete = true;

    Int value() const;
};

/// Deterministic for a fixed budget. Throws std::domain_error on zero.
Factorization factorize(const Int& n, const FactorBudget& budget = {});

struct OmegaCount {
    unsigned count = 0;
    bool is_lower_bound = false;

    friend bool operator==(const OmegaCount&, const OmegaCount&) = default;
};

/// Distinct prime divisors; an unsplit cofactor counts as one.
OmegaCount omega(const Factorization& f);

}  // namespace dioquad
