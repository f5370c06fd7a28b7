#include "floer/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace floer {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat: shape mismatch in product");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Coef v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat: shape mismatch");
  IntMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

bool IntMat::is_zero() const {
  for (Coef v : a_)
    if (v != 0) return false;
  return true;
}

IntMat IntMat::transposed() const {
  IntMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Coef> IntMat::apply(const std::vector<Coef>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMat: vector size mismatch");
  std::vector<Coef> r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Coef IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("IntMat: det of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMat m = *this;
  Coef sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

IntMat IntMat::inverse_unimodular() const {
  Coef d = det();
  if (d != 1 && d != -1) throw std::invalid_argument("IntMat: inverse of non-unimodular matrix");
  int n = rows_;
  // Adjugate-free: Gauss-Jordan over Q would need fractions; instead run the
  // Smith machinery: for unimodular A, solve A x = e_i columnwise.
  IntMat inv(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Coef> e(n, 0);
    e[j] = 1;
    auto x = solve_integer(*this, e);
    if (!x) throw std::logic_error("IntMat: unimodular solve failed");
    for (int i = 0; i < n; ++i) inv.at(i, j) = (*x)[i];
  }
  return inv;
}

namespace {

struct SnfWork {
  IntMat s, u, v;

  void row_swap(int i, int j) {
    for (int c = 0; c < s.cols(); ++c) std::swap(s.at(i, c), s.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(int i, int j) {
    for (int r = 0; r < s.rows(); ++r) std::swap(s.at(r, i), s.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_add(int dst, int src, Coef c) {  // row dst += c * row src
    for (int k = 0; k < s.cols(); ++k) s.at(dst, k) += c * s.at(src, k);
    for (int k = 0; k < u.cols(); ++k) u.at(dst, k) += c * u.at(src, k);
  }
  void col_add(int dst, int src, Coef c) {  // col dst += c * col src
    for (int k = 0; k < s.rows(); ++k) s.at(k, dst) += c * s.at(k, src);
    for (int k = 0; k < v.rows(); ++k) v.at(k, dst) += c * v.at(k, src);
  }
  void row_negate(int i) {
    for (int k = 0; k < s.cols(); ++k) s.at(i, k) = -s.at(i, k);
    for (int k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
  SnfWork w{a, IntMat::identity(a.rows()), IntMat::identity(a.cols())};
  int m = a.rows(), n = a.cols();
  int t = 0;
  while (t < m && t < n) {
    // Find the smallest-magnitude nonzero pivot in the remaining block.
    int pi = -1, pj = -1;
    Coef best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        Coef v = w.s.at(i, j);
        if (v != 0 && (pi < 0 || std::llabs(v) < std::llabs(best))) {
          pi = i; pj = j; best = v;
        }
      }
    if (pi < 0) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    if (w.s.at(t, t) < 0) w.row_negate(t);

    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      Coef q = w.s.at(i, t) / w.s.at(t, t);
      if (q != 0) w.row_add(i, t, -q);
      if (w.s.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < n; ++j) {
      Coef q = w.s.at(t, j) / w.s.at(t, t);
      if (q != 0) w.col_add(j, t, -q);
      if (w.s.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // remainders left; repick a smaller pivot

    // Divisibility: the pivot must divide the rest of the block.
    bool divides = true;
    for (int i = t + 1; i < m && divides; ++i)
      for (int j = t + 1; j < n && divides; ++j)
        if (w.s.at(i, j) % w.s.at(t, t) != 0) {
          w.row_add(t, i, 1);  // pull the bad row up and restart this step
          divides = false;
        }
    if (!divides) continue;
    ++t;
  }

  SmithForm out;
  out.s = w.s;
  out.u = w.u;
  out.v = w.v;
  for (int i = 0; i < std::min(m, n); ++i)
    if (out.s.at(i, i) != 0) {
      out.diagonal.push_back(out.s.at(i, i));
      ++out.rank;
    }
  return out;
}

std::optional<std::vector<Coef>> solve_integer(const IntMat& a, const std::vector<Coef>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve_integer: rhs size mismatch");
  SmithForm f = smith_normal_form(a);
  std::vector<Coef> ub = f.u.apply(b);
  std::vector<Coef> y(a.cols(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    Coef s = (i < std::min(a.rows(), a.cols())) ? f.s.at(i, i) : 0;
    if (s == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (i >= a.cols()) return std::nullopt;
      if (ub[i] % s != 0) return std::nullopt;
      y[i] = ub[i] / s;
    }
  }
  return f.v.apply(y);
}

std::vector<std::vector<Coef>> integer_kernel(const IntMat& a) {
  SmithForm f = smith_normal_form(a);
  std::vector<std::vector<Coef>> basis;
  for (int j = f.rank; j < a.cols(); ++j) {
    std::vector<Coef> col(a.cols());
    for (int i = 0; i < a.cols(); ++i) col[i] = f.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace floer
