#include "dioquad/numeric.hpp"

#include "dioquad/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace dioquad {

Rat::Rat(const Int& num, const Int& den) : value_(num, den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rat Rat::from_mpq(const mpq_class& q) {
    Rat r;
    r.value_ = q;
    r.value_.canonicalize();
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    value_ += o.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    value_ -= o.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    value_ *= o.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rat Rat::operator-() const {
    Rat r;
    r.value_ = -value_;
    return r;
}

std::string Rat::to_string() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.to_string(); }

Rat abs(const Rat& q) { return q.sign() < 0 ? -q : q; }

Rat pow(const Rat& q, unsigned e) {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), q.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q.den().get_mpz_t(), e);
    return Rat(n, d);
}

Rat reciprocal(const Rat& q) { return Rat(1) / q; }

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
        ++end;
    }
    return end;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty fraction token", 0, 1);
    }
    std::size_t pos = text[0] == '-' ? 1 : 0;
    const std::size_t num_end = scan_digits(text, pos);
    if (num_end == pos) {
        throw ParseError("expected digit in fraction '" + std::string(text) + "'", 0, pos + 1);
    }
    Int num(std::string(text.substr(pos, num_end - pos)));
    if (pos == 1) {
        num = -num;
    }
    if (num_end == text.size()) {
        return Rat(num);
    }
    if (text[num_end] != '/') {
        throw ParseError("unexpected character in fraction '" + std::string(text) + "'", 0,
                         num_end + 1);
    }
    const std::size_t den_end = scan_digits(text, num_end + 1);
    if (den_end == num_end + 1) {
        throw ParseError("expected denominator digits in '" + std::string(text) + "'", 0,
                         num_end + 2);
    }
    if (den_end != text.size()) {
        throw ParseError("trailing characters in fraction '" + std::string(text) + "'", 0,
                         den_end + 1);
    }
    Int den(std::string(text.substr(num_end + 1)));
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'", 0, num_end + 2);
    }
    return Rat(num, den);
}

std::optional<Int> int_sqrt(const Int& n) {
    if (n < 0) {
        throw std::domain_error("int_sqrt of negative integer");
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

std::optional<Rat> perfect_square(const Rat& q) {
    if (q.sign() < 0) {
        return std::nullopt;
    }
    // Lowest terms: q is a square iff numerator and denominator both are.
    auto n = int_sqrt(q.num());
    if (!n) {
        return std::nullopt;
    }
    auto d = int_sqrt(q.den());
    if (!d) {
        return std::nullopt;
    }
    return Rat(*n, *d);
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace dioquad
