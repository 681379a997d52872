#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twocat/rational.hpp"

namespace twocat {

using Vec = std::vector<Rat>;

// Dense exact-rational matrix, row major.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  static Mat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const Rat& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  Vec row(size_t r) const;
  void setRow(size_t r, const Vec& v);
  Mat transpose() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  Vec apply(const Vec& v) const;  // matrix * column vector

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

struct RrefResult {
  Mat mat;
  std::vector<size_t> pivots;  // strictly increasing pivot column indices
};

RrefResult rref(const Mat& m);
size_t rank(const Mat& m);

// Basis of the right null space { v : m v = 0 }.
std::vector<Vec> kernel_basis(const Mat& m);

struct LinearSolution {
  Vec particular;
  std::vector<Vec> kernel;
};

// Exact solution of a x = b; nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const Mat& a, const Vec& b);

// Span utilities used by the hom-space and ideal computations.
// Rows of `vectors` span a subspace; returns an RREF basis of it.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, size_t dim);
// Dimension of span.
size_t span_dim(const std::vector<Vec>& vectors, size_t dim);
// True when v lies in the span of `basisRows`.
bool in_span(const std::vector<Vec>& basisRows, const Vec& v);
// Coordinates of v in terms of the given independent rows, if expressible.
std::optional<Vec> coords_in(const std::vector<Vec>& rows, const Vec& v);

}  // namespace twocat
