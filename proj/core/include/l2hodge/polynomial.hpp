#ifndef L2HODGE_POLYNOMIAL_HPP
#define L2HODGE_POLYNOMIAL_HPP

#include <l2hodge/rational.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace l2hodge {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// lowest degree first; the leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial x_power_minus_one(long d);  // x^d - 1
    static Polynomial monomial(long degree, Rational c = Rational(1));

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(long i) const;                                     // 0 outside range
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_monic() const;

    Rational eval(const Rational& x) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial&) const = default;

    /// Euclidean division, exact rational arithmetic; den must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

    /// Division that must leave no remainder; throws otherwise.
    static Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

/// The d-th cyclotomic polynomial, by iterated exact division of x^d - 1
/// by Phi_e over the proper divisors e of d.
Polynomial cyclotomic(long d);

long euler_phi(long d);

/// Divisors of n in increasing order.
std::vector<long> divisors_of(long n);

} // namespace l2hodge

#endif
