#pragma once

#include "zz/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace zz {

// Laurent polynomial in q with exact rational coefficients, stored as a
// sparse exponent map with no zero entries.
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(const Rat& c) {
    if (c != 0) c_[0] = c;
  }
  explicit Laurent(long c) : Laurent(Rat(c)) {}

  static Laurent q(int k = 1, const Rat& c = Rat(1)) {
    Laurent p;
    if (c != 0) p.c_[k] = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

  Rat coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
  }
  void set_coeff(int e, const Rat& v) {
    if (v == 0)
      c_.erase(e);
    else
      c_[e] = v;
  }
  // lowest / highest exponent; require nonzero
  int lo() const;
  int hi() const;

  const std::map<int, Rat>& coeffs() const { return c_; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator*(const Rat& s, Laurent p);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent bar() const;              // q -> q^{-1}
  Laurent shift(int k) const;       // multiply by q^k
  Rat eval_minus_one() const;       // q := -1
  Rat eval_one() const;             // q := 1

  // Canonical text form, increasing exponents: "q^-1 + 2 + 3*q^2".
  std::string str() const;

  // JSON form: list of [exponent, numerator, denominator].
  std::vector<std::vector<std::string>> json_triples() const;

private:
  std::map<int, Rat> c_;
};

Laurent quantum_integer(int i); // [i] = q^{i-1} + q^{i-3} + ... + q^{1-i}, i >= 0

// Exact division: returns a/b if b divides a in Q[q,q^-1], throws otherwise.
Laurent laurent_divexact(const Laurent& a, const Laurent& b);

// Truncated power series in q: exponents 0..order with exact coefficients.
class Series {
public:
  Series() : order_(0), c_(1) {}
  explicit Series(int order) : order_(order), c_(order + 1) {}
  Series(int order, const Laurent& p) : order_(order), c_(order + 1) {
    for (auto& [e, v] : p.coeffs()) {
      if (e < 0) throw std::invalid_argument("Series: negative exponent");
      if (e <= order_) c_[e] = v;
    }
  }

  int order() const { return order_; }
  const Rat& coeff(int e) const { return c_.at(e); }
  Rat& coeff(int e) { return c_.at(e); }
  bool is_zero() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  // coefficients of q^n multiplied by (-1)^n, i.e. the series rewritten in -q
  Series in_minus_q() const;
  bool nonnegative() const; // all coefficients >= 0

  std::string str() const;

private:
  int order_;
  std::vector<Rat> c_;
};

struct SeriesError : std::runtime_error {
  enum Kind { ZeroDenominator, NegativePole } kind;
  SeriesError(Kind k, const std::string& m) : std::runtime_error(m), kind(k) {}
};

// The unique s with den*s = num mod q^{order+1}. Throws SeriesError with
// distinct kinds for a zero denominator and for num/den not a power series.
Series series_expand(const Laurent& num, const Laurent& den, int order);

} // namespace zz
