#include "dioquad/factor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

namespace dioquad {

const char* const kDeterministicPrimeLimit = "3317044064679887385961981";

std::vector<long> primes_up_to(long n) {
    std::vector<long> primes;
    if (n < 2) {
        return primes;
    }
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) {
            continue;
        }
        primes.push_back(i);
        for (long j = i * i; j <= n; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return primes;
}

namespace {

constexpr std::array<unsigned long, 13> kBaseWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                                          19, 23, 29, 31, 37, 41};
constexpr std::array<unsigned long, 7> kExtraWitnesses = {43, 47, 53, 59, 61, 67, 71};

bool strong_probable_prime(const Int& n, const Int& d, unsigned s, unsigned long base) {
    Int a = base;
    if (a % n == 0) {
        return true;
    }
    const Int n_minus_1 = n - 1;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) {
        return true;
    }
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n_minus_1) {
            return true;
        }
        if (x == 1) {
            return false;
        }
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) {
        return false;
    }
    for (unsigned long p : kBaseWitnesses) {
        if (n == p) {
            return true;
        }
        if (n % p == 0) {
            return false;
        }
    }
    Int d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t()) != 0) {
        d /= 2;
        ++s;
    }
    for (unsigned long base : kBaseWitnesses) {
        if (!strong_probable_prime(n, d, s, base)) {
            return false;
        }
    }
    static const Int limit(kDeterministicPrimeLimit);
    if (n < limit) {
        return true;
    }
    return std::all_of(kExtraWitnesses.begin(), kExtraWitnesses.end(),
                       [&](unsigned long base) { return strong_probable_prime(n, d, s, base); });
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial divisor or nullopt when
// the iteration budget runs out.
std::optional<Int> rho_split(const Int& n, std::uint64_t iterations, std::mt19937_64& rng) {
    if (mpz_even_p(n.get_mpz_t()) != 0) {
        return Int(2);
    }
    const Int c = Int(static_cast<unsigned long>(rng() % 1000003)) % n + 1;
    Int y = Int(static_cast<unsigned long>(rng() % 1000003)) % n;
    const std::uint64_t batch = 128;
    Int g = 1, q = 1, x, ys;
    std::uint64_t r = 1, used = 0;
    auto step = [&](Int& v) { v = (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) {
            step(y);
        }
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t m = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < m; ++i) {
                step(y);
                q = (q * abs(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
            used += m;
            if (used > iterations) {
                return std::nullopt;
            }
        }
        r *= 2;
    }
    if (g == n) {
        // Backtrack one step at a time from the last saved state.
        do {
            step(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    if (g == n) {
        return std::nullopt;
    }
    return g;
}

}  // namespace

Int Factorization::value() const {
    Int v = cofactor;
    for (const auto& pp : factors) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= pw;
    }
    return sign < 0 ? Int(-v) : v;
}

Factorization factorize(const Int& n, const FactorBudget& budget) {
    if (n == 0) {
        throw std::domain_error("factorize of zero");
    }
    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    Int m = abs(n);
    std::map<Int, unsigned> found;

    static const std::vector<long> small_primes = primes_up_to(1L << 16);
    const std::vector<long> trial_primes = budget.trial_bound <= (1L << 16)
                                               ? std::vector<long>{}
                                               : primes_up_to(budget.trial_bound);
    const auto& primes = trial_primes.empty() ? small_primes : trial_primes;
    for (long p : primes) {
        if (p > budget.trial_bound || Int(p) * p > m) {
            break;
        }
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
            m /= p;
            ++found[Int(p)];
        }
    }

    std::mt19937_64 rng(budget.seed);
    std::vector<Int> pending;
    if (m > 1) {
        pending.push_back(m);
    }
    while (!pending.empty()) {
        Int v = pending.back();
        pending.pop_back();
        if (v == 1) {
            continue;
        }
        if (is_prime(v)) {
            ++found[v];
            continue;
        }
        std::optional<Int> d;
        for (unsigned attempt = 0; attempt < budget.rho_attempts && !d; ++attempt) {
            d = rho_split(v, budget.rho_iterations, rng);
        }
        if (!d) {
            out.cofactor *= v;
            out.complete = false;
            continue;
        }
        pending.push_back(*d);
        pending.push_back(v / *d);
    }

    for (auto& [p, e] : found) {
        out.factors.push_back({p, e});
    }
    return out;
}

OmegaCount omega(const Factorization& f) {
    OmegaCount r;
    r.count = static_cast<unsigned>(f.factors.size()) + (f.cofactor > 1 ? 1U : 0U);
    r.is_lower_bound = !f.complete;
    return r;
}

}  // namespace dioquad
