#include "twocat/matrix.hpp"

#include "twocat/error.hpp"

namespace twocat {

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Vec Mat::row(size_t r) const {
  Vec v(cols_);
  for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void Mat::setRow(size_t r, const Vec& v) {
  for (size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) fail(Errc::contract_violation, "Mat: dimension mismatch in product");
  Mat r(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).isZero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).isZero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) fail(Errc::contract_violation, "Mat: vector length mismatch");
  Vec r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).isZero() && !v[j].isZero()) r[i] += at(i, j) * v[j];
  return r;
}

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.mat = m;
  Mat& a = res.mat;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t p = r;
    while (p < a.rows() && a.at(p, c).isZero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Rat inv = a.at(r, c).inverse();
    for (size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).isZero()) continue;
      Rat f = a.at(i, c);
      for (size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  RrefResult rr = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (size_t c : rr.pivots) isPivot[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    Vec v(m.cols());
    v[f] = Rat(1);
    for (size_t pi = 0; pi < rr.pivots.size(); ++pi) v[rr.pivots[pi]] = -rr.mat.at(pi, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) fail(Errc::contract_violation, "solve_linear: rhs length mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  for (size_t c : rr.pivots)
    if (c == a.cols()) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
  LinearSolution sol;
  sol.particular.assign(a.cols(), Rat(0));
  for (size_t pi = 0; pi < rr.pivots.size(); ++pi) sol.particular[rr.pivots[pi]] = rr.mat.at(pi, a.cols());
  sol.kernel = kernel_basis(a);
  return sol;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, size_t dim) {
  Mat m(vectors.size(), dim);
  for (size_t i = 0; i < vectors.size(); ++i) m.setRow(i, vectors[i]);
  RrefResult rr = rref(m);
  std::vector<Vec> basis;
  for (size_t i = 0; i < rr.pivots.size(); ++i) basis.push_back(rr.mat.row(i));
  return basis;
}

size_t span_dim(const std::vector<Vec>& vectors, size_t dim) {
  Mat m(vectors.size(), dim);
  for (size_t i = 0; i < vectors.size(); ++i) m.setRow(i, vectors[i]);
  return rank(m);
}

bool in_span(const std::vector<Vec>& basisRows, const Vec& v) {
  if (basisRows.empty()) {
    for (const Rat& x : v)
      if (!x.isZero()) return false;
    return true;
  }
  size_t dim = v.size();
  Mat a(dim, basisRows.size());
  for (size_t j = 0; j < basisRows.size(); ++j)
    for (size_t i = 0; i < dim; ++i) a.at(i, j) = basisRows[j][i];
  return solve_linear(a, v).has_value();
}

std::optional<Vec> coords_in(const std::vector<Vec>& rows, const Vec& v) {
  size_t dim = v.size();
  Mat a(dim, rows.size());
  for (size_t j = 0; j < rows.size(); ++j)
    for (size_t i = 0; i < dim; ++i) a.at(i, j) = rows[j][i];
  auto sol = solve_linear(a, v);
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace twocat
