#pragma once

#include "zz/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace zz {

// Dense matrix over exact rationals.
class Mat {
public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Rat& s) const;
  friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat hstack(const Mat& o) const;
  Mat vstack(const Mat& o) const;
  Mat cols_slice(int from, int to) const; // columns [from, to)
  Mat pow(long n) const;                  // square matrices, n >= 0
  Rat trace() const;

private:
  int r_, c_;
  std::vector<Rat> a_;
};

struct Rref {
  Mat r;                   // reduced row echelon form
  std::vector<int> pivots; // pivot column per pivot row
  int rank = 0;
};

// Serial reference implementation and the OpenMP row-elimination variant.
// Both produce identical output for identical input (pivoting is positional).
Rref rref_serial(Mat m);
Rref rref_parallel(Mat m);
Rref rref(Mat m); // dispatches on linalg_parallel_enabled()

bool linalg_parallel_enabled();
void set_linalg_parallel(bool on);

int rank(const Mat& m);
Mat nullspace(const Mat& m);                     // columns span ker(m)
std::optional<Mat> solve(const Mat& a, const Mat& b);   // a x = b
std::optional<Mat> solve_left(const Mat& a, const Mat& b); // x a = b
std::optional<Mat> inverse(const Mat& m);
Rat det(Mat m);
Mat column_space(const Mat& m); // basis (original pivot columns)

// Coordinates for the quotient of Q^ambient by the column span: proj maps a
// vector to quotient coordinates (the non-pivot ones after reduction), section
// embeds quotient coordinates back as representatives; proj * section = id.
struct SpanSplit {
  Mat proj, section;
  int qdim() const { return proj.rows(); }
};
SpanSplit quotient_split(const Mat& span_cols, int ambient);

// Incremental sparse row echelon over Q: rows are sorted (col, coeff) lists.
// Used for the degreewise path-quotient ranks where rows are very sparse.
class SparseEchelon {
public:
  using Row = std::vector<std::pair<int, Rat>>;
  Row reduce(Row v) const; // cancel leading terms against stored rows
  // reduce v against current rows; insert if nonzero. Returns true if rank grew.
  bool insert(Row v);
  bool contains(Row v) const { return reduce(std::move(v)).empty(); }
  int rank() const { return (int)rows_.size(); }

private:
  std::map<int, Row> rows_; // lead column -> normalized row
};

} // namespace zz
