#pragma once

#include "zz/rational.hpp"

#include <memory>
#include <vector>

namespace zz {

// Q(zeta_m), elements as polynomials in zeta reduced mod the m-th cyclotomic
// polynomial. Exact throughout.
class CycloField {
public:
  static std::shared_ptr<const CycloField> get(int m); // cached per conductor

  int conductor() const { return m_; }
  int degree() const { return (int)phi_.size() - 1; } // deg Phi_m
  // x^k mod Phi_m for 0 <= k < 2*degree (reduction table)
  const std::vector<Rat>& power(int k) const { return powers_[k]; }

private:
  explicit CycloField(int m);
  int m_;
  std::vector<Rat> phi_;                 // monic cyclotomic polynomial
  std::vector<std::vector<Rat>> powers_; // reduced powers of zeta
};

class Cyc {
public:
  Cyc() = default;
  explicit Cyc(std::shared_ptr<const CycloField> f) : f_(std::move(f)), c_(f_->degree()) {}
  static Cyc rational(std::shared_ptr<const CycloField> f, const Rat& r);
  static Cyc zeta_pow(std::shared_ptr<const CycloField> f, long k);

  const std::shared_ptr<const CycloField>& field() const { return f_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rat_value() const; // throws when not rational

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator-() const;
  Cyc scaled(const Rat& s) const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  Cyc galois(long t) const; // zeta -> zeta^t, gcd(t, m) = 1
  Cyc conj() const { return galois(f_->conductor() - 1); }

  std::string str() const;

private:
  std::shared_ptr<const CycloField> f_;
  std::vector<Rat> c_; // coefficients, degree < deg Phi_m
};

} // namespace zz
