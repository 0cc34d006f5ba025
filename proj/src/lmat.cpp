#include "zz/lmat.hpp"

#include <stdexcept>

namespace zz {

LMat LMat::identity(int n) {
  LMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Laurent(1);
  return m;
}

bool LMat::is_zero() const {
  for (auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

LMat LMat::operator*(const LMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("LMat::mul: shape mismatch");
  LMat p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Laurent& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        p.at(i, j) += v * o.at(k, j);
      }
    }
  return p;
}

LMat LMat::operator+(const LMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("LMat::add: shape mismatch");
  LMat s(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
  return s;
}

LMat LMat::operator-(const LMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("LMat::sub: shape mismatch");
  LMat s(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
  return s;
}

LMat LMat::scaled(const Laurent& s) const {
  LMat m(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

LMat LMat::transpose() const {
  LMat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

LMat LMat::bar() const {
  LMat b(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) b.at(i, j) = at(i, j).bar();
  return b;
}

AdjDet adjugate_det(const LMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("adjugate_det: not square");
  const int n = a.rows();
  if (n == 0) return {LMat(0, 0), Laurent(1)};
  LMat b = LMat::identity(n);
  Laurent c;
  LMat prev = b;
  for (int k = 1; k <= n; ++k) {
    LMat ab = a * b;
    Laurent tr;
    for (int i = 0; i < n; ++i) tr += ab.at(i, i);
    c = Rat(-1, k) * tr;
    prev = b;
    b = ab;
    for (int i = 0; i < n; ++i) b.at(i, i) += c;
  }
  // b = A*B_{n-1} + c_n I must vanish (Cayley-Hamilton)
  if (!b.is_zero()) throw std::logic_error("adjugate_det: Cayley-Hamilton failure");
  Laurent det = (n % 2 == 0) ? c : -c; // det = (-1)^n c_n
  LMat adj = (n % 2 == 1) ? prev : prev.scaled(Laurent(-1));
  return {std::move(adj), std::move(det)};
}

} // namespace zz
