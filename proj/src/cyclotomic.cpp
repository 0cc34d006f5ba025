#include "zz/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zz {

namespace {
// exact division of integer-coefficient polynomials (rational arithmetic)
std::vector<Rat> poly_divexact(std::vector<Rat> num, const std::vector<Rat>& den) {
  int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
  std::vector<Rat> q(dn - dd + 1);
  for (int k = dn - dd; k >= 0; --k) {
    Rat c = num[k + dd] / den[dd];
    q[k] = c;
    if (c != 0)
      for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (auto& r : num)
    if (r != 0) throw std::logic_error("poly_divexact: not divisible");
  return q;
}

std::vector<Rat> cyclotomic_poly(int m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<Rat> num(m + 1);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_divexact(std::move(num), cyclotomic_poly(d));
  }
  return num;
}
} // namespace

CycloField::CycloField(int m) : m_(m), phi_(cyclotomic_poly(m)) {
  int deg = degree();
  powers_.resize(std::max(2 * deg, m + 1));
  std::vector<Rat> cur(deg); // represents 1
  if (deg > 0) cur[0] = 1;
  for (int k = 0; k < (int)powers_.size(); ++k) {
    powers_[k] = cur;
    // multiply by x and reduce mod Phi
    std::vector<Rat> nxt(deg + 1);
    for (int i = 0; i < deg; ++i) nxt[i + 1] = cur[i];
    if (nxt[deg] != 0) {
      Rat lead = nxt[deg];
      for (int i = 0; i < deg; ++i) nxt[i] -= lead * phi_[i];
    }
    nxt.resize(deg);
    cur = std::move(nxt);
  }
}

std::shared_ptr<const CycloField> CycloField::get(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<const CycloField>(new CycloField(m));
  cache[m] = f;
  return f;
}

Cyc Cyc::rational(std::shared_ptr<const CycloField> f, const Rat& r) {
  Cyc c(std::move(f));
  if (!c.c_.empty()) c.c_[0] = r;
  return c;
}

Cyc Cyc::zeta_pow(std::shared_ptr<const CycloField> f, long k) {
  long m = f->conductor();
  k %= m;
  if (k < 0) k += m;
  Cyc c(f);
  c.c_ = f->power((int)k);
  return c;
}

bool Cyc::is_zero() const {
  for (auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyc::rat_value() const {
  if (!is_rational()) throw std::logic_error("Cyc::rat_value: not rational: " + str());
  return c_.empty() ? Rat(0) : c_[0];
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Cyc Cyc::scaled(const Rat& s) const {
  Cyc r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  const int deg = (int)c_.size();
  Cyc r(f_);
  for (int i = 0; i < deg; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.c_[j] == 0) continue;
      Rat p = c_[i] * o.c_[j];
      if (i + j < deg) {
        r.c_[i + j] += p;
      } else {
        const auto& red = f_->power(i + j);
        for (int t = 0; t < deg; ++t)
          if (red[t] != 0) r.c_[t] += p * red[t];
      }
    }
  }
  return r;
}

bool Cyc::operator==(const Cyc& o) const { return c_ == o.c_; }

Cyc Cyc::galois(long t) const {
  long m = f_->conductor();
  if (std::gcd(t % m + m, (long)m) != 1) throw std::invalid_argument("Cyc::galois: t not coprime");
  Cyc r(f_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Cyc term = zeta_pow(f_, (long)i * t);
    for (size_t j = 0; j < c_.size(); ++j) r.c_[j] += c_[i] * term.c_[j];
  }
  return r;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

} // namespace zz
