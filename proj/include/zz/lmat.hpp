#pragma once

#include "zz/laurent.hpp"

#include <vector>

namespace zz {

// Dense matrix over Laurent polynomials.
class LMat {
public:
  LMat() : r_(0), c_(0) {}
  LMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

  static LMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Laurent& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Laurent& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  bool is_zero() const;
  LMat operator*(const LMat& o) const;
  LMat operator+(const LMat& o) const;
  LMat operator-(const LMat& o) const;
  LMat scaled(const Laurent& s) const;
  friend bool operator==(const LMat& a, const LMat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const LMat& a, const LMat& b) { return !(a == b); }

  LMat transpose() const;
  LMat bar() const; // entrywise q -> q^{-1}

private:
  int r_, c_;
  std::vector<Laurent> a_;
};

// Adjugate and determinant by the Faddeev-LeVerrier recursion (divisions by
// integers only, so everything stays in Q[q,q^-1]). Checks A*adj = det*I.
struct AdjDet {
  LMat adj;
  Laurent det;
};
AdjDet adjugate_det(const LMat& a);

} // namespace zz
