#pragma once
#include <algorithm>
#include <vector>

#include "weilmod/linalg.hpp"

namespace weilmod {

template <class K>
struct SquareClass {
  typename K::Elem rep;
  int tag = 0;  // finite: 0 = square, 1 = nonsquare; Q_p: bit0 nonresidue unit, bit1 odd valuation
  friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.tag == b.tag; }
  friend bool operator!=(const SquareClass& a, const SquareClass& b) { return a.tag != b.tag; }
};

SquareClass<FqBase> square_class(const FqBase& F, const GFElem& a);
SquareClass<QpBase> square_class(const QpBase& F, const Rational& a);

int hilbert(const FqBase& F, const GFElem& a, const GFElem& b);
int hilbert(const QpBase& F, const Rational& a, const Rational& b);
// ground truth: primitive solvability of z^2 = a x^2 + b y^2 modulo p^3
int hilbert_by_search(int p, const Rational& a, const Rational& b);

template <class K>
int hilbert(const K& F, const SquareClass<K>& a, const SquareClass<K>& b) {
  return hilbert(F, a.rep, b.rep);
}

template <class K>
struct Diagonalization {
  Mat<typename K::Elem> basis;          // columns v_1..v_r (r = rank), in original coordinates
  std::vector<typename K::Elem> diag;   // a_i = Q(v_i)
};

// Q(x) = x^T G x with G symmetric
template <class K>
class QuadraticForm {
 public:
  using Elem = typename K::Elem;

  QuadraticForm(const K& F, Mat<Elem> gram) : F_(F), G_(std::move(gram)) {
    if (G_.r != G_.c) fail(ErrorKind::InvalidInput, "Gram matrix must be square");
    for (int i = 0; i < G_.r; ++i)
      for (int j = 0; j < i; ++j)
        if (G_(i, j) != G_(j, i)) fail(ErrorKind::InvalidInput, "Gram matrix must be symmetric");
    radical_ = kernel(F_, G_);
    diag_ = diagonalize_with(false);
  }

  static QuadraticForm diagonal(const K& F, const std::vector<Elem>& a) {
    auto g = zeros(F, int(a.size()), int(a.size()));
    for (size_t i = 0; i < a.size(); ++i) g(int(i), int(i)) = a[i];
    return QuadraticForm(F, g);
  }

  const K& field() const { return F_; }
  int dim() const { return G_.r; }
  int rank() const { return int(diag_.diag.size()); }
  const Mat<Elem>& gram() const { return G_; }
  const Mat<Elem>& radical() const { return radical_; }
  bool nondegenerate() const { return radical_.c == 0; }
  const Diagonalization<K>& diagonalization() const { return diag_; }

  Elem value(const Mat<Elem>& x) const { return (transpose(x) * G_ * x)(0, 0); }
  Elem bilinear(const Mat<Elem>& x, const Mat<Elem>& y) const { return (transpose(x) * G_ * y)(0, 0); }

  Elem det_nd() const {
    Elem d = F_.one();
    for (auto& a : diag_.diag) d *= a;
    return d;
  }
  SquareClass<K> det_class() const { return square_class(F_, det_nd()); }

  int hasse() const { return hasse_of(diag_.diag); }
  int hasse_of(const std::vector<Elem>& a) const {
    int h = 1;
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = i + 1; j < a.size(); ++j) h *= hilbert(F_, a[i], a[j]);
    return h;
  }

  // independent diagonalization: pivots taken from the end of a shuffled basis
  Diagonalization<K> diagonalize_with(bool reverse, const std::vector<int>& perm = {}) const {
    int n = G_.r;
    auto comp = complete_basis(F_, radical_, identity(F_, n));
    std::vector<Mat<Elem>> vs;
    for (int j = 0; j < comp.c; ++j) vs.push_back(column(comp, j));
    if (!perm.empty()) {
      std::vector<Mat<Elem>> w;
      for (int i : perm)
        if (i < int(vs.size())) w.push_back(vs[i]);
      vs = w;
    }
    if (reverse) std::reverse(vs.begin(), vs.end());
    Diagonalization<K> out;
    out.basis = zeros(F_, n, 0);
    while (!vs.empty()) {
      int piv = -1;
      for (size_t i = 0; i < vs.size(); ++i)
        if (!is_zero(value(vs[i]))) {
          piv = int(i);
          break;
        }
      Mat<Elem> u;
      if (piv >= 0) {
        u = vs[piv];
        vs.erase(vs.begin() + piv);
      } else {
        // all isotropic: v_i + v_j with B(v_i, v_j) != 0 exists since the span is non-degenerate
        int bi = -1, bj = -1;
        for (size_t i = 0; i < vs.size() && bi < 0; ++i)
          for (size_t j = i + 1; j < vs.size(); ++j)
            if (!is_zero(bilinear(vs[i], vs[j]))) {
              bi = int(i);
              bj = int(j);
              break;
            }
        if (bi < 0) fail(ErrorKind::CheckFailed, "diagonalize: degenerate remainder");
        u = vs[bi] + vs[bj];
        vs.erase(vs.begin() + bi);
      }
      Elem qu = value(u);
      for (auto& v : vs) {
        Elem c = bilinear(v, u) / qu;
        v = v - scaled(u, c);
      }
      out.basis = hcat(out.basis, u);
      out.diag.push_back(qu);
    }
    return out;
  }

 private:
  K F_;
  Mat<Elem> G_;
  Mat<Elem> radical_;
  Diagonalization<K> diag_;
};

}  // namespace weilmod
