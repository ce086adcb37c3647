#include "tnnlab/matrix.hpp"

#include <stdexcept>

namespace tnnlab {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& q : data_)
    if (sgn(q) != 0) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  Rational tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        tmp = aik * bkj;
        c(i, j) += tmp;
      }
    }
  }
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  RatVector out(a.rows());
  Rational tmp;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (sgn(a(i, k)) == 0) continue;
      tmp = a(i, k) * v[k];
      out[i] += tmp;
    }
  }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  RatMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  RatMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix c(a.rows(), a.cols());
  if (sgn(s) == 0) return c;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) c(i, j) = s * a(i, j);
  return c;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) continue;
    s += a[i] * b[i];
  }
  return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector scaled(const Rational& s, const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_zero(const RatVector& v) {
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

RowReduction row_reduce(RatMatrix m) {
  RowReduction out;
  std::size_t pivot_row = 0;
  Rational factor, tmp;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) swap(m(sel, c), m(pivot_row, c));
    }
    Rational inv = 1 / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || sgn(m(r, col)) == 0) continue;
      factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (sgn(m(pivot_row, c)) == 0) continue;
        tmp = factor * m(pivot_row, c);
        m(r, c) -= tmp;
      }
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

std::size_t rank(const std::vector<RatVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(RatMatrix::from_rows(vectors));
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  auto rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto rr = row_reduce(std::move(aug));
  RatVector x(a.cols());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] == a.cols()) return std::nullopt;
    x[rr.pivots[r]] = rr.reduced(r, a.cols());
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto rr = row_reduce(std::move(aug));
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
  return inv;
}

Rational determinant(RatMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1, factor, tmp;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && sgn(m(sel, col)) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) swap(m(sel, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) {
        tmp = factor * m(col, c);
        m(r, c) -= tmp;
      }
    }
  }
  return det;
}

RatVector primitive(const RatVector& v) {
  mpz_class l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * Rational(l);
    ints[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  RatVector out(v.size());
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

SparseMatrix::SparseMatrix(const RatMatrix& dense) : rows_(dense.rows()), columns_(dense.cols()) {
  for (std::size_t c = 0; c < dense.cols(); ++c)
    for (std::size_t r = 0; r < dense.rows(); ++r)
      if (sgn(dense(r, c)) != 0) columns_[c].emplace_back(r, dense(r, c));
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

RatVector SparseMatrix::apply(const RatVector& x) const {
  if (x.size() != columns_.size()) throw std::invalid_argument("sparse apply: shape mismatch");
  RatVector y(rows_);
  Rational tmp;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (sgn(x[c]) == 0) continue;
    for (const auto& [r, value] : columns_[c]) {
      tmp = value * x[c];
      y[r] += tmp;
    }
  }
  return y;
}

}  // namespace tnnlab
