#pragma once

#include "dioquad/numeric.hpp"

#include <span>
#include <vector>

namespace dioquad {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zero coefficients are trimmed so degree() is exact.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading() const { return coeffs_.back(); }

    Rat operator()(const Rat& x) const;
    Polynomial derivative() const;

  private:
    std::vector<Rat> coeffs_;
};

Polynomial operator-(const Polynomial& p);
Polynomial remainder(const Polynomial& a, const Polynomial& b);
Polynomial quotient(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Scales p to a primitive integer polynomial with positive leading
/// coefficient. The result has the same roots.
std::vector<Int> primitive_integer_coeffs(const Polynomial& p);

/// All distinct rational roots, ascending. Real roots of the square-free part
/// are isolated with a Sturm sequence and refined until each interval is
/// narrower than 1/L^2, L the leading coefficient of the primitive integer
/// model. A rational root n/d has d | L, and two distinct rationals with
/// denominators <= L are at least 1/L^2 apart, so the root is the simplest
/// rational in its interval. No factorization of the coefficients is needed.
std::vector<Rat> rational_roots(const Polynomial& p);

}  // namespace dioquad
