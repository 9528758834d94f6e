#ifndef L2HODGE_MATRIX_HPP
#define L2HODGE_MATRIX_HPP

#include <l2hodge/polynomial.hpp>
#include <l2hodge/rational.hpp>

#include <optional>
#include <vector>

namespace l2hodge {

/// Square matrix over the rationals. Monodromy matrices are 2x2..4x4 and
/// test fixtures go up to 6x6, so plain exact elimination is used throughout;
/// entries stay normalized because Rational is canonical.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n);                        // zero matrix
    Matrix(int n, std::vector<Rational> entries);  // row-major, n*n entries

    static Matrix identity(int n);
    /// Companion matrix of a monic polynomial of degree >= 1.
    static Matrix companion(const Polynomial& monic);
    static Matrix direct_sum(const Matrix& a, const Matrix& b);

    int n() const { return n_; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator*(const Rational& s) const;
    bool operator==(const Matrix&) const = default;

    Matrix pow(long e) const;  // e >= 0, repeated squaring
    Rational trace() const;
    Rational det() const;
    Matrix inverse() const;  // throws on a singular matrix

    Vec apply(const Vec& v) const;  // matrix * column vector

private:
    int n_ = 0;
    std::vector<Rational> a_;
};

/// Rank over the rationals by exact Gaussian elimination.
long matrix_rank(const Matrix& m);

/// Monic characteristic polynomial det(xI - M), computed by the
/// Faddeev-LeVerrier recursion (divisions only by 1..n).
Polynomial char_poly(const Matrix& m);

Matrix eval_poly(const Polynomial& p, const Matrix& m);

/// p * m * p^{-1}
Matrix conjugate(const Matrix& m, const Matrix& p);

// Subspaces of Q^n are handled as lists of coordinate vectors kept in
// reduced row echelon form, so equal subspaces have equal bases.
std::vector<Vec> rref(std::vector<Vec> rows);
long rank_of_rows(const std::vector<Vec>& rows);
std::vector<Vec> kernel_basis(const Matrix& m);
std::vector<Vec> image_basis(const Matrix& m);
std::vector<Vec> span_union(const std::vector<Vec>& a, const std::vector<Vec>& b);
bool in_span(const std::vector<Vec>& rref_rows, const Vec& v);

/// Coefficients x with sum_i x_i basis_i = target, when target lies in the
/// span of an independent family.
std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& target);

} // namespace l2hodge

#endif
