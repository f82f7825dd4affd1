#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace dioquad {

/// Arbitrary precision signed integer.
using Int = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
  public:
    Rat() = default;
    Rat(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(const Int& n) : value_(n) {}  // NOLINT(google-explicit-constructor)

    /// Throws std::domain_error when den is zero.
    Rat(const Int& num, const Int& den);

    static Rat from_mpq(const mpq_class& q);

    Int num() const { return value_.get_num(); }
    Int den() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    /// Throws std::domain_error on division by zero.
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;

  private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& q);

Rat abs(const Rat& q);
Rat pow(const Rat& q, unsigned e);
Rat reciprocal(const Rat& q);

/// Parses "n/d" or "n" with an optional leading minus and no whitespace.
/// Throws ParseError (column is 1-based within `text`).
Rat parse_rat(std::string_view text);

/// Integer square root when n is a perfect square. Throws on negative n.
std::optional<Int> int_sqrt(const Int& n);

/// Nonnegative rational square root when q is a square of a rational.
/// 0 counts as a square; negative inputs yield nullopt.
std::optional<Rat> perfect_square(const Rat& q);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace dioquad
