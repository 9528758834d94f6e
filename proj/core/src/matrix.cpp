#include <l2hodge/matrix.hpp>

#include <l2hodge/error.hpp>

#include <utility>

namespace l2hodge {

Matrix::Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {
    require(n >= 1, errc::malformed_input, "matrix size must be >= 1");
}

Matrix::Matrix(int n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
    require(n >= 1, errc::malformed_input, "matrix size must be >= 1");
    require(a_.size() == static_cast<std::size_t>(n) * n, errc::malformed_input,
            "matrix entry count does not match its size");
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::companion(const Polynomial& monic) {
    require(monic.is_monic() && monic.degree() >= 1, errc::precondition_failed,
            "companion matrix needs a monic polynomial of degree >= 1");
    const int n = static_cast<int>(monic.degree());
    Matrix m(n);
    for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m.at(i, n - 1) = -monic.coeff(i);
    return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.n_ + b.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.n_; ++i)
        for (int j = 0; j < b.n_; ++j) m.at(a.n_ + i, a.n_ + j) = b.at(i, j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.n_ == b.n_, errc::malformed_input, "matrix size mismatch");
    Matrix m(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.n_ == b.n_, errc::malformed_input, "matrix size mismatch");
    Matrix m(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.n_ == b.n_, errc::malformed_input, "matrix size mismatch");
    const int n = a.n_;
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational& f = a.at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) m.at(i, j) += f * b.at(k, j);
        }
    return m;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

Matrix Matrix::pow(long e) const {
    require(e >= 0, errc::precondition_failed, "matrix power needs e >= 0");
    Matrix result = identity(n_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Rational Matrix::trace() const {
    Rational t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Rational Matrix::det() const {
    // elimination with row swaps; pivots multiply up to the determinant
    Matrix w = *this;
    Rational d(1);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int i = col; i < n_; ++i)
            if (w.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            d = -d;
        }
        d *= w.at(col, col);
        const Rational inv = 1 / w.at(col, col);
        for (int i = col + 1; i < n_; ++i) {
            if (w.at(i, col) == 0) continue;
            const Rational f = w.at(i, col) * inv;
            for (int j = col; j < n_; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    // Gauss-Jordan on [M | I]
    Matrix w = *this;
    Matrix inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int i = col; i < n_; ++i)
            if (w.at(i, col) != 0) {
                pivot = i;
                break;
            }
        require(pivot >= 0, errc::precondition_failed, "matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const Rational scale = 1 / w.at(col, col);
        for (int j = 0; j < n_; ++j) {
            w.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (int i = 0; i < n_; ++i) {
            if (i == col || w.at(i, col) == 0) continue;
            const Rational f = w.at(i, col);
            for (int j = 0; j < n_; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Vec Matrix::apply(const Vec& v) const {
    require(static_cast<int>(v.size()) == n_, errc::malformed_input, "vector size mismatch");
    Vec out(static_cast<std::size_t>(n_), Rational(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

std::vector<Vec> rref(std::vector<Vec> rows) {
    if (rows.empty()) return rows;
    const std::size_t width = rows[0].size();
    for (const auto& r : rows)
        require(r.size() == width, errc::malformed_input, "ragged rows");
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[r]);
        const Rational inv = 1 / rows[r][col];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rational f = rows[i][col];
            for (std::size_t j = 0; j < width; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

long rank_of_rows(const std::vector<Vec>& rows) {
    return static_cast<long>(rref(rows).size());
}

long matrix_rank(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(m.n()));
    for (int i = 0; i < m.n(); ++i) {
        Vec row(static_cast<std::size_t>(m.n()));
        for (int j = 0; j < m.n(); ++j) row[static_cast<std::size_t>(j)] = m.at(i, j);
        rows.push_back(std::move(row));
    }
    return rank_of_rows(rows);
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    const int n = m.n();
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) {
        Vec row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = m.at(i, j);
        rows.push_back(std::move(row));
    }
    auto red = rref(std::move(rows));

    std::vector<int> pivot_col(red.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (std::size_t r = 0; r < red.size(); ++r) {
        int c = 0;
        while (red[r][static_cast<std::size_t>(c)] == 0) ++c;
        pivot_col[r] = c;
        is_pivot[static_cast<std::size_t>(c)] = true;
    }
    std::vector<Vec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec v(static_cast<std::size_t>(n), Rational(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < red.size(); ++r)
            v[static_cast<std::size_t>(pivot_col[r])] = -red[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return rref(std::move(basis));
}

std::vector<Vec> image_basis(const Matrix& m) {
    const int n = m.n();
    std::vector<Vec> cols;
    for (int j = 0; j < n; ++j) {
        Vec col(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = m.at(i, j);
        cols.push_back(std::move(col));
    }
    return rref(std::move(cols));
}

std::vector<Vec> span_union(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> rows = a;
    rows.insert(rows.end(), b.begin(), b.end());
    return rref(std::move(rows));
}

bool in_span(const std::vector<Vec>& rref_rows, const Vec& v) {
    Vec w = v;
    for (const auto& row : rref_rows) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size()) continue;
        if (w[c] == 0) continue;
        const Rational f = w[c];
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * row[j];
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& target) {
    if (basis.empty()) {
        for (const auto& x : target)
            if (x != 0) return std::nullopt;
        return Vec{};
    }
    const std::size_t n = target.size();
    const std::size_t mcount = basis.size();
    // rows of the augmented system [B^T | t]: unknowns are the coefficients
    std::vector<Vec> rows(n, Vec(mcount + 1, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < mcount; ++j) rows[i][j] = basis[j][i];
        rows[i][mcount] = target[i];
    }
    auto red = rref(std::move(rows));
    Vec x(mcount, Rational(0));
    for (const auto& row : red) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == mcount) return std::nullopt;  // pivot in the augmented column
        if (c > mcount) continue;
        x[c] = row[mcount];
    }
    return x;
}

Polynomial char_poly(const Matrix& m) {
    const int n = m.n();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    c[static_cast<std::size_t>(n)] = 1;
    Matrix a = m;
    Rational ck = -a.trace();
    c[static_cast<std::size_t>(n - 1)] = ck;
    for (int k = 2; k <= n; ++k) {
        Matrix t = a;
        for (int i = 0; i < n; ++i) t.at(i, i) += ck;
        a = m * t;
        ck = -a.trace() / k;
        c[static_cast<std::size_t>(n - k)] = ck;
    }
    return Polynomial(std::move(c));
}

Matrix eval_poly(const Polynomial& p, const Matrix& m) {
    const int n = m.n();
    Matrix acc(n);
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        const Rational c = p.coeff(i);
        for (int d = 0; d < n; ++d) acc.at(d, d) += c;
    }
    return acc;
}

Matrix conjugate(const Matrix& m, const Matrix& p) {
    return p * m * p.inverse();
}

} // namespace l2hodge
