#include "zz/linalg.hpp"

#include <atomic>
#include <cstdlib>

namespace zz {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (at(i, j) != ((i == j) ? 1 : 0)) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("Mat::mul: shape mismatch");
  Mat p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.c_; ++j) {
        if (o.at(k, j) == 0) continue;
        p.at(i, j) += v * o.at(k, j);
      }
    }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat::add: shape mismatch");
  Mat s(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
  return s;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat::sub: shape mismatch");
  Mat s(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
  return s;
}

Mat Mat::operator-() const {
  Mat s(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
  return s;
}

Mat Mat::scaled(const Rat& s) const {
  Mat m(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

Mat Mat::hstack(const Mat& o) const {
  if (r_ != o.r_) throw std::invalid_argument("Mat::hstack: row mismatch");
  Mat m(r_, c_ + o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.c_; ++j) m.at(i, c_ + j) = o.at(i, j);
  }
  return m;
}

Mat Mat::vstack(const Mat& o) const {
  if (c_ != o.c_) throw std::invalid_argument("Mat::vstack: col mismatch");
  Mat m(r_ + o.r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < o.r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(r_ + i, j) = o.at(i, j);
  return m;
}

Mat Mat::cols_slice(int from, int to) const {
  Mat m(r_, to - from);
  for (int i = 0; i < r_; ++i)
    for (int j = from; j < to; ++j) m.at(i, j - from) = at(i, j);
  return m;
}

Mat Mat::pow(long n) const {
  if (r_ != c_) throw std::invalid_argument("Mat::pow: not square");
  Mat acc = Mat::identity(r_), base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Rat Mat::trace() const {
  Rat t(0);
  for (int i = 0; i < r_ && i < c_; ++i) t += at(i, i);
  return t;
}

namespace {
std::atomic<bool> g_parallel{true};
bool env_serial() {
  const char* s = std::getenv("ZZ_SERIAL");
  return s && s[0] == '1';
}

template <bool Parallel>
Rref rref_impl(Mat m) {
  Rref out;
  const int rows = m.rows(), cols = m.cols();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int piv = -1;
    for (int i = lead; i < rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = col; j < cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Rat inv = 1 / m.at(lead, col);
    if (inv != 1)
      for (int j = col; j < cols; ++j)
        if (m.at(lead, j) != 0) m.at(lead, j) *= inv;
    // eliminate the pivot column from every other row; rows are independent
#pragma omp parallel for schedule(dynamic) if (Parallel)
    for (int i = 0; i < rows; ++i) {
      if (i == lead) continue;
      const Rat& f = m.at(i, col);
      if (f == 0) continue;
      Rat fac = f;
      for (int j = col + 1; j < cols; ++j)
        if (m.at(lead, j) != 0) m.at(i, j) -= fac * m.at(lead, j);
      m.at(i, col) = 0;
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = (int)out.pivots.size();
  out.r = std::move(m);
  return out;
}
} // namespace

bool linalg_parallel_enabled() { return g_parallel.load() && !env_serial(); }
void set_linalg_parallel(bool on) { g_parallel.store(on); }

Rref rref_serial(Mat m) { return rref_impl<false>(std::move(m)); }
Rref rref_parallel(Mat m) { return rref_impl<true>(std::move(m)); }
Rref rref(Mat m) {
  return linalg_parallel_enabled() ? rref_parallel(std::move(m)) : rref_serial(std::move(m));
}

int rank(const Mat& m) { return rref(m).rank; }

Mat nullspace(const Mat& m) {
  Rref e = rref(m);
  const int cols = m.cols();
  std::vector<int> pivot_of_col(cols, -1);
  for (int k = 0; k < e.rank; ++k) pivot_of_col[e.pivots[k]] = k;
  std::vector<int> free_cols;
  for (int j = 0; j < cols; ++j)
    if (pivot_of_col[j] < 0) free_cols.push_back(j);
  Mat ns(cols, (int)free_cols.size());
  for (int k = 0; k < (int)free_cols.size(); ++k) {
    int fc = free_cols[k];
    ns.at(fc, k) = 1;
    for (int pr = 0; pr < e.rank; ++pr) ns.at(e.pivots[pr], k) = -e.r.at(pr, fc);
  }
  return ns;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  Rref e = rref(a.hstack(b));
  // consistent iff no pivot falls in the b-block
  for (int k = 0; k < e.rank; ++k)
    if (e.pivots[k] >= a.cols()) return std::nullopt;
  Mat x(a.cols(), b.cols());
  for (int k = 0; k < e.rank; ++k)
    for (int j = 0; j < b.cols(); ++j) x.at(e.pivots[k], j) = e.r.at(k, a.cols() + j);
  return x;
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
  auto xt = solve(a.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Rref e = rref(m.hstack(Mat::identity(m.rows())));
  if (e.rank != m.rows()) return std::nullopt;
  for (int k = 0; k < e.rank; ++k)
    if (e.pivots[k] != k) return std::nullopt;
  return e.r.cols_slice(m.cols(), 2 * m.cols());
}

Rat det(Mat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  const int n = m.rows();
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j)
        if (m.at(col, j) != 0) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

Mat column_space(const Mat& m) {
  Rref e = rref(m);
  Mat b(m.rows(), e.rank);
  for (int k = 0; k < e.rank; ++k)
    for (int i = 0; i < m.rows(); ++i) b.at(i, k) = m.at(i, e.pivots[k]);
  return b;
}

SpanSplit quotient_split(const Mat& span_cols, int ambient) {
  Rref e = rref(span_cols.transpose());
  std::vector<char> is_piv(ambient, 0);
  for (int p : e.pivots) is_piv[p] = 1;
  std::vector<int> free;
  for (int i = 0; i < ambient; ++i)
    if (!is_piv[i]) free.push_back(i);
  Mat proj((int)free.size(), ambient);
  for (int f = 0; f < (int)free.size(); ++f) proj.at(f, free[f]) = 1;
  for (int r = 0; r < e.rank; ++r) {
    int p = e.pivots[r];
    for (int f = 0; f < (int)free.size(); ++f) {
      int j = free[f];
      if (e.r.at(r, j) != 0) proj.at(f, p) = -e.r.at(r, j);
    }
  }
  Mat section(ambient, (int)free.size());
  for (int f = 0; f < (int)free.size(); ++f) section.at(free[f], f) = 1;
  return {std::move(proj), std::move(section)};
}

SparseEchelon::Row SparseEchelon::reduce(Row v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) return v;
    // v -= v.lead * pivot-row  (merge of two sorted sparse rows)
    const Row& p = it->second;
    Rat f = v.front().second;
    Row w;
    w.reserve(v.size() + p.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < p.size()) {
      if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
        w.push_back(v[i++]);
      } else if (i == v.size() || p[j].first < v[i].first) {
        w.emplace_back(p[j].first, -f * p[j].second);
        ++j;
      } else {
        Rat x = v[i].second - f * p[j].second;
        if (x != 0) w.emplace_back(v[i].first, std::move(x));
        ++i;
        ++j;
      }
    }
    v = std::move(w);
  }
  return v;
}

bool SparseEchelon::insert(Row v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rat inv = 1 / v.front().second;
  if (inv != 1)
    for (auto& [c, x] : v) x *= inv;
  int lead = v.front().first;
  rows_.emplace(lead, std::move(v));
  return true;
}

} // namespace zz
