#include "dioquad/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dioquad {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rat Polynomial::operator()(const Rat& x) const {
    Rat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * Rat(static_cast<long>(i)));
    }
    return Polynomial(std::move(d));
}

Polynomial operator-(const Polynomial& p) {
    std::vector<Rat> c = p.coeffs();
    for (auto& x : c) {
        x = -x;
    }
    return Polynomial(std::move(c));
}

namespace {

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Rat> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) {
        return {Polynomial(), a};
    }
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        const Rat f = r[static_cast<std::size_t>(i)] / b.leading();
        q[static_cast<std::size_t>(i - db)] = f;
        if (f.is_zero()) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

}  // namespace

Polynomial remainder(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial quotient(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) {
        return a;
    }
    std::vector<Rat> c = a.coeffs();
    const Rat lead = a.leading();
    for (auto& x : c) {
        x /= lead;
    }
    return Polynomial(std::move(c));
}

std::vector<Int> primitive_integer_coeffs(const Polynomial& p) {
    Int den = 1;
    for (const auto& c : p.coeffs()) {
        den = lcm(den, c.den());
    }
    std::vector<Int> out;
    Int content = 0;
    for (const auto& c : p.coeffs()) {
        Int v = c.num() * (den / c.den());
        content = gcd(content, v);
        out.push_back(v);
    }
    if (content == 0) {
        return out;
    }
    if (out.back() < 0) {
        content = -content;
    }
    for (auto& v : out) {
        v /= content;
    }
    return out;
}

namespace {

class SturmSequence {
  public:
    explicit SturmSequence(const Polynomial& p) {
        chain_.push_back(p);
        chain_.push_back(p.derivative());
        while (!chain_.back().is_zero()) {
            chain_.push_back(-remainder(chain_[chain_.size() - 2], chain_.back()));
        }
        chain_.pop_back();
    }

    int variations(const Rat& x) const {
        int count = 0;
        int last = 0;
        for (const auto& s : chain_) {
            const int sg = s(x).sign();
            if (sg == 0) {
                continue;
            }
            if (last != 0 && sg != last) {
                ++count;
            }
            last = sg;
        }
        return count;
    }

  private:
    std::vector<Polynomial> chain_;
};

// Rational in [lo, hi] with the smallest denominator.
Rat simplest_between(Rat lo, Rat hi) {
    if (lo.sign() <= 0 && hi.sign() >= 0) {
        return Rat(0);
    }
    if (hi.sign() < 0) {
        return -simplest_between(-hi, -lo);
    }
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
    if (Rat(fl) == lo) {
        return lo;
    }
    if (Rat(fl + 1) <= hi) {
        return Rat(fl + 1);
    }
    // lo and hi share the integer part fl.
    return Rat(fl) + reciprocal(simplest_between(reciprocal(hi - Rat(fl)),
                                                 reciprocal(lo - Rat(fl))));
}

}  // namespace

std::vector<Rat> rational_roots(const Polynomial& p) {
    if (p.is_zero()) {
        throw std::domain_error("rational_roots of the zero polynomial");
    }
    std::vector<Rat> roots;
    std::vector<Rat> coeffs = p.coeffs();
    if (coeffs.front().is_zero()) {
        roots.emplace_back(0);
        auto first = std::find_if(coeffs.begin(), coeffs.end(),
                                  [](const Rat& c) { return !c.is_zero(); });
        coeffs.erase(coeffs.begin(), first);
    }
    Polynomial f(std::move(coeffs));
    if (f.degree() >= 1) {
        const Polynomial g = poly_gcd(f, f.derivative());
        if (g.degree() > 0) {
            f = quotient(f, g);
        }
    }
    if (f.degree() < 1) {
        return roots;
    }

    const std::vector<Int> prim = primitive_integer_coeffs(f);
    const Int lead = prim.back();
    const Rat tolerance = reciprocal(Rat(lead * lead));

    Rat bound;
    for (const auto& c : f.coeffs()) {
        bound = std::max(bound, abs(c / f.leading()));
    }
    bound += 1;

    const SturmSequence sturm(f);
    // Stack of intervals (lo, hi] with their root counts.
    std::vector<std::tuple<Rat, Rat, int>> work;
    const int total = sturm.variations(-bound) - sturm.variations(bound);
    if (total > 0) {
        work.emplace_back(-bound, bound, total);
    }
    while (!work.empty()) {
        auto [lo, hi, count] = work.back();
        work.pop_back();
        if (count > 1) {
            const Rat mid = (lo + hi) / 2;
            const int left = sturm.variations(lo) - sturm.variations(mid);
            if (left > 0) {
                work.emplace_back(lo, mid, left);
            }
            if (count - left > 0) {
                work.emplace_back(mid, hi, count - left);
            }
            continue;
        }
        // Exactly one root in (lo, hi].
        const int v_lo = sturm.variations(lo);
        bool exact = false;
        while (hi - lo >= tolerance) {
            if (f(hi).is_zero()) {
                roots.push_back(hi);
                exact = true;
                break;
            }
            const Rat mid = (lo + hi) / 2;
            if (v_lo - sturm.variations(mid) == 1) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if (exact) {
            continue;
        }
        const Rat candidate = simplest_between(lo, hi);
        if (candidate > lo && f(candidate).is_zero()) {
            roots.push_back(candidate);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace dioquad
