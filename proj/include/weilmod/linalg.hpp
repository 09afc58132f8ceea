#pragma once
#include <string>
#include <vector>

#include "weilmod/basefield.hpp"

namespace weilmod {

template <class T>
struct Mat {
  int r = 0, c = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int rows, int cols, const T& fill) : r(rows), c(cols), a(size_t(rows) * cols, fill) {}

  T& operator()(int i, int j) { return a[size_t(i) * c + j]; }
  const T& operator()(int i, int j) const { return a[size_t(i) * c + j]; }
  friend bool operator==(const Mat& x, const Mat& y) { return x.r == y.r && x.c == y.c && x.a == y.a; }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

template <class K>
Mat<typename K::Elem> zeros(const K& F, int r, int c) {
  return Mat<typename K::Elem>(r, c, F.zero());
}

template <class K>
Mat<typename K::Elem> identity(const K& F, int n) {
  auto m = zeros(F, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = F.one();
  return m;
}

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
  if (x.c != y.r) fail(ErrorKind::InvalidInput, "matrix shape mismatch");
  T z = x.a.empty() ? T() : x.a[0] - x.a[0];
  Mat<T> m(x.r, y.c, z);
  for (int i = 0; i < x.r; ++i)
    for (int k = 0; k < x.c; ++k) {
      const T& v = x(i, k);
      if (is_zero(v)) continue;
      for (int j = 0; j < y.c; ++j) m(i, j) += v * y(k, j);
    }
  return m;
}

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> m = x;
  for (size_t i = 0; i < m.a.size(); ++i) m.a[i] += y.a[i];
  return m;
}

template <class T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> m = x;
  for (size_t i = 0; i < m.a.size(); ++i) m.a[i] -= y.a[i];
  return m;
}

template <class T>
Mat<T> scaled(const Mat<T>& x, const T& s) {
  Mat<T> m = x;
  for (auto& v : m.a) v *= s;
  return m;
}

template <class T>
Mat<T> transpose(const Mat<T>& x) {
  Mat<T> m(x.c, x.r, x.a.empty() ? T() : x.a[0]);
  for (int i = 0; i < x.r; ++i)
    for (int j = 0; j < x.c; ++j) m(j, i) = x(i, j);
  return m;
}

template <class T>
Mat<T> block(const Mat<T>& x, int i0, int j0, int rows, int cols) {
  Mat<T> m(rows, cols, x.a.empty() ? T() : x.a[0]);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = x(i0 + i, j0 + j);
  return m;
}

template <class T>
void set_block(Mat<T>& x, int i0, int j0, const Mat<T>& b) {
  for (int i = 0; i < b.r; ++i)
    for (int j = 0; j < b.c; ++j) x(i0 + i, j0 + j) = b(i, j);
}

template <class T>
Mat<T> hcat(const Mat<T>& x, const Mat<T>& y) {
  if (x.c == 0) return y;
  if (y.c == 0) return x;
  Mat<T> m(x.r, x.c + y.c, x.a.empty() ? y.a[0] : x.a[0]);
  set_block(m, 0, 0, x);
  set_block(m, 0, x.c, y);
  return m;
}

template <class T>
Mat<T> column(const Mat<T>& x, int j) {
  return block(x, 0, j, x.r, 1);
}

template <class T>
Mat<T> columns(const Mat<T>& x, const std::vector<int>& js) {
  Mat<T> m(x.r, int(js.size()), x.a.empty() ? T() : x.a[0]);
  for (int i = 0; i < x.r; ++i)
    for (size_t k = 0; k < js.size(); ++k) m(i, int(k)) = x(i, js[k]);
  return m;
}

// In-place reduced row echelon form; returns pivot columns.
template <class K>
std::vector<int> rref(const K& F, Mat<typename K::Elem>& m) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int sel = -1;
    for (int i = row; i < m.r; ++i)
      if (!is_zero(m(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.c; ++j) std::swap(m(sel, j), m(row, j));
    auto iv = inverse(m(row, col));
    for (int j = 0; j < m.c; ++j) m(row, j) *= iv;
    for (int i = 0; i < m.r; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      auto f = m(i, col);
      for (int j = 0; j < m.c; ++j) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  (void)F;
  return piv;
}

template <class K>
int rank(const K& F, Mat<typename K::Elem> m) {
  return int(rref(F, m).size());
}

// columns form a basis of the null space
template <class K>
Mat<typename K::Elem> kernel(const K& F, Mat<typename K::Elem> m) {
  int n = m.c;
  auto piv = rref(F, m);
  std::vector<char> is_piv(n, 0);
  for (int p : piv) is_piv[p] = 1;
  std::vector<int> free;
  for (int j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  auto k = zeros(F, n, int(free.size()));
  for (size_t t = 0; t < free.size(); ++t) {
    k(free[t], int(t)) = F.one();
    for (size_t i = 0; i < piv.size(); ++i) k(piv[i], int(t)) = -m(int(i), free[t]);
  }
  return k;
}

template <class K>
Mat<typename K::Elem> inverse(const K& F, const Mat<typename K::Elem>& m) {
  if (m.r != m.c) fail(ErrorKind::InvalidInput, "inverse of a non-square matrix");
  int n = m.r;
  auto aug = hcat(m, identity(F, n));
  auto piv = rref(F, aug);
  if (int(piv.size()) < n || piv[n - 1] != n - 1) fail(ErrorKind::NotInvertible, "singular matrix");
  return block(aug, 0, n, n, n);
}

template <class K>
typename K::Elem det(const K& F, Mat<typename K::Elem> m) {
  int n = m.r;
  auto d = F.one();
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (!is_zero(m(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) return F.zero();
    if (sel != col) {
      for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    auto iv = inverse(m(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      auto f = m(i, col) * iv;
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

// solution X of A X = B (A invertible)
template <class K>
Mat<typename K::Elem> solve(const K& F, const Mat<typename K::Elem>& A, const Mat<typename K::Elem>& B) {
  return inverse(F, A) * B;
}

// basis (columns) of the column space
template <class K>
Mat<typename K::Elem> colspace(const K& F, const Mat<typename K::Elem>& m) {
  auto t = m;
  auto piv = rref(F, t);
  return columns(m, piv);
}

// basis of span(U) ∩ span(V); U, V given by independent columns
template <class K>
Mat<typename K::Elem> intersect(const K& F, const Mat<typename K::Elem>& U, const Mat<typename K::Elem>& V) {
  if (U.c == 0 || V.c == 0) return zeros(F, U.r, 0);
  auto st = hcat(U, scaled(V, -F.one()));
  auto k = kernel(F, st);
  if (k.c == 0) return zeros(F, U.r, 0);
  return colspace(F, U * block(k, 0, 0, U.c, k.c));
}

// columns completing the independent columns of U to a basis, chosen among
// the columns of `pool` (standard basis by default)
template <class K>
Mat<typename K::Elem> complete_basis(const K& F, const Mat<typename K::Elem>& U, const Mat<typename K::Elem>& pool) {
  auto st = hcat(U, pool);
  auto t = st;
  auto piv = rref(F, t);
  std::vector<int> extra;
  for (int p : piv)
    if (p >= U.c) extra.push_back(p - U.c);
  return columns(pool, extra);
}

template <class K>
Mat<typename K::Elem> from_rows(const K& F, const std::vector<std::vector<long long>>& rows) {
  int r = int(rows.size()), c = r ? int(rows[0].size()) : 0;
  auto m = zeros(F, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = F.from_int(rows[i][j]);
  return m;
}

template <class K>
bool is_zero_mat(const Mat<typename K::Elem>& m, const K&) {
  for (auto& v : m.a)
    if (!is_zero(v)) return false;
  return true;
}

template <class K>
std::string mat_str(const K& F, const Mat<typename K::Elem>& m) {
  std::string s = "[";
  for (int i = 0; i < m.r; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < m.c; ++j) s += (j ? "," : "") + F.str(m(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace weilmod
