#include <l2hodge/polynomial.hpp>

#include <l2hodge/error.hpp>

#include <sstream>

namespace l2hodge {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::x_power_minus_one(long d) {
    require(d >= 1, errc::precondition_failed, "x^d - 1 needs d >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
    c[0] = -1;
    c[static_cast<std::size_t>(d)] = 1;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(long degree, Rational c) {
    require(degree >= 0, errc::precondition_failed, "monomial degree must be >= 0");
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

Rational Polynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

bool Polynomial::is_monic() const {
    return !c_.empty() && c_.back() == 1;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
    require(!den.is_zero(), errc::precondition_failed, "polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial(), num};

    std::vector<Rational> rem = num.c_;
    const long dq = num.degree() - den.degree();
    std::vector<Rational> quo(static_cast<std::size_t>(dq) + 1, Rational(0));
    const Rational& lead = den.c_.back();
    for (long i = dq; i >= 0; --i) {
        Rational f = rem[static_cast<std::size_t>(i + den.degree())] / lead;
        if (f == 0) continue;
        quo[static_cast<std::size_t>(i)] = f;
        for (long j = 0; j <= den.degree(); ++j)
            rem[static_cast<std::size_t>(i + j)] -= f * den.c_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::divide_exact(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    require(r.is_zero(), errc::inconsistent_input, "polynomial division left a remainder");
    return q;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

long euler_phi(long d) {
    require(d >= 1, errc::precondition_failed, "euler_phi needs d >= 1");
    long result = d;
    long m = d;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors_of(long n) {
    require(n >= 1, errc::precondition_failed, "divisors_of needs n >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Polynomial cyclotomic(long d) {
    require(d >= 1, errc::precondition_failed, "cyclotomic order must be >= 1");
    Polynomial result = Polynomial::x_power_minus_one(d);
    for (long e : divisors_of(d)) {
        if (e == d) continue;
        result = Polynomial::divide_exact(result, cyclotomic(e));
    }
    return result;
}

} // namespace l2hodge
