#include "zz/laurent.hpp"

#include <sstream>

namespace zz {

int Laurent::lo() const {
  if (c_.empty()) throw std::logic_error("lo() of zero polynomial");
  return c_.begin()->first;
}

int Laurent::hi() const {
  if (c_.empty()) throw std::logic_error("hi() of zero polynomial");
  return c_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto& [e, v] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, v);
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto& [e, v] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, -v);
    } else {
      it->second -= v;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto& [ea, va] : a.c_)
    for (auto& [eb, vb] : b.c_) {
      int e = ea + eb;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        Rat p = va * vb;
        if (p != 0) r.c_.emplace(e, p);
      } else {
        it->second += va * vb;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

Laurent operator*(const Rat& s, Laurent p) {
  if (s == 0) return Laurent();
  for (auto& [e, v] : p.c_) v *= s;
  return p;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (auto& [e, v] : c_) r.c_[-e] = v;
  return r;
}

Laurent Laurent::shift(int k) const {
  Laurent r;
  for (auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

Rat Laurent::eval_minus_one() const {
  Rat s(0);
  for (auto& [e, v] : c_) s += (e % 2 == 0) ? v : -v;
  return s;
}

Rat Laurent::eval_one() const {
  Rat s(0);
  for (auto& [e, v] : c_) s += v;
  return s;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, v] : c_) {
    Rat a = v;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::vector<std::vector<std::string>> Laurent::json_triples() const {
  std::vector<std::vector<std::string>> out;
  for (auto& [e, v] : c_)
    out.push_back({std::to_string(e), v.get_num().get_str(), v.get_den().get_str()});
  return out;
}

Laurent quantum_integer(int i) {
  if (i < 0) throw std::invalid_argument("quantum_integer: negative input");
  Laurent r;
  for (int e = i - 1; e >= 1 - i; e -= 2) r.set_coeff(e, Rat(1));
  return r;
}

Laurent laurent_divexact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::invalid_argument("laurent_divexact: division by zero");
  if (a.is_zero()) return Laurent();
  // shift both to ordinary polynomials and long-divide
  Laurent num = a.shift(-a.lo());
  Laurent den = b.shift(-b.lo());
  int dn = num.hi(), dd = den.hi();
  if (dn < dd) throw std::invalid_argument("laurent_divexact: not divisible");
  std::vector<Rat> n(dn + 1), d(dd + 1), qo(dn - dd + 1);
  for (auto& [e, v] : num.coeffs()) n[e] = v;
  for (auto& [e, v] : den.coeffs()) d[e] = v;
  for (int k = dn - dd; k >= 0; --k) {
    Rat c = n[k + dd] / d[dd];
    qo[k] = c;
    if (c != 0)
      for (int j = 0; j <= dd; ++j) n[k + j] -= c * d[j];
  }
  for (int j = 0; j < dd; ++j)
    if (n[j] != 0) throw std::invalid_argument("laurent_divexact: not divisible");
  Laurent res;
  int off = a.lo() - b.lo();
  for (int k = 0; k < (int)qo.size(); ++k)
    if (qo[k] != 0) res.set_coeff(k + off, qo[k]);
  return res;
}

bool Series::is_zero() const {
  for (auto& v : c_)
    if (v != 0) return false;
  return true;
}

Series operator+(const Series& a, const Series& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("Series: order mismatch");
  Series r(a.order_);
  for (int i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("Series: order mismatch");
  Series r(a.order_);
  for (int i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("Series: order mismatch");
  Series r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

bool operator==(const Series& a, const Series& b) {
  return a.order_ == b.order_ && a.c_ == b.c_;
}

Series Series::in_minus_q() const {
  Series r(order_);
  for (int i = 0; i <= order_; ++i) r.c_[i] = (i % 2 == 0) ? c_[i] : -c_[i];
  return r;
}

bool Series::nonnegative() const {
  for (auto& v : c_)
    if (v < 0) return false;
  return true;
}

std::string Series::str() const {
  Laurent p;
  for (int i = 0; i <= order_; ++i) p.set_coeff(i, c_[i]);
  if (p.is_zero()) return "0 + O(q^" + std::to_string(order_ + 1) + ")";
  return p.str() + " + O(q^" + std::to_string(order_ + 1) + ")";
}

Series series_expand(const Laurent& num, const Laurent& den, int order) {
  if (den.is_zero())
    throw SeriesError(SeriesError::ZeroDenominator, "series_expand: zero denominator");
  Series r(order);
  if (num.is_zero()) return r;
  int shift = -den.lo();
  Laurent d = den.shift(shift);
  Laurent n = num.shift(shift);
  if (n.lo() < 0)
    throw SeriesError(SeriesError::NegativePole,
                      "series_expand: num/den has a pole at q=0 (negative-order term)");
  Rat d0 = d.coeff(0); // nonzero by construction
  std::vector<Rat> dv(order + 1), nv(order + 1);
  for (auto& [e, v] : d.coeffs())
    if (e <= order) dv[e] = v;
  for (auto& [e, v] : n.coeffs())
    if (e <= order) nv[e] = v;
  for (int k = 0; k <= order; ++k) {
    Rat acc = nv[k];
    for (int j = 1; j <= k; ++j)
      if (dv[j] != 0) acc -= dv[j] * r.coeff(k - j);
    r.coeff(k) = acc / d0;
  }
  return r;
}

} // namespace zz
