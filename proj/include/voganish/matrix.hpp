#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "voganish/qi.hpp"

namespace voganish {

// Dense matrix over the Gaussian rationals. Sizes here are tiny (<= ~40 rows),
// so plain fraction-filled Gaussian elimination is fine.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = QI(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  QI& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const QI& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        if (at(r, k).is_zero()) continue;
        for (int c = 0; c < o.cols_; ++c) p.at(r, c) += at(r, k) * o.at(k, c);
      }
    return p;
  }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat s(*this);
    for (size_t k = 0; k < a_.size(); ++k) s.a_[k] += o.a_[k];
    return s;
  }

  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat s(*this);
    for (size_t k = 0; k < a_.size(); ++k) s.a_[k] -= o.a_[k];
    return s;
  }

  Mat operator*(const QI& s) const {
    Mat m(*this);
    for (auto& x : m.a_) x *= s;
    return m;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  int rank() const {
    Mat w(*this);
    return w.row_reduce();
  }

  // In-place row echelon; returns rank.
  int row_reduce() {
    int lead = 0;
    for (int c = 0; c < cols_ && lead < rows_; ++c) {
      int piv = -1;
      for (int r = lead; r < rows_; ++r)
        if (!at(r, c).is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      if (piv != lead)
        for (int k = 0; k < cols_; ++k) std::swap(at(piv, k), at(lead, k));
      QI inv = QI(1) / at(lead, c);
      for (int k = c; k < cols_; ++k) at(lead, k) *= inv;
      for (int r = 0; r < rows_; ++r) {
        if (r == lead || at(r, c).is_zero()) continue;
        QI f = at(r, c);
        for (int k = c; k < cols_; ++k) at(r, k) -= f * at(lead, k);
      }
      ++lead;
    }
    return lead;
  }

  // Basis of the right null space, one column vector per basis element.
  std::vector<std::vector<QI>> null_space() const {
    Mat w(*this);
    w.row_reduce();
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols_, false);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c)
        if (!w.at(r, c).is_zero()) {
          pivot_col.push_back(c);
          is_pivot[c] = true;
          break;
        }
    }
    std::vector<std::vector<QI>> basis;
    for (int fc = 0; fc < cols_; ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<QI> v(cols_);
      v[fc] = QI(1);
      for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -w.at(static_cast<int>(r), fc);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Solves this * x = b; returns false when inconsistent.
  bool solve(const std::vector<QI>& b, std::vector<QI>& x) const {
    assert(static_cast<int>(b.size()) == rows_);
    Mat aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_) = b[r];
    }
    aug.row_reduce();
    x.assign(cols_, QI());
    for (int r = 0; r < rows_; ++r) {
      int lead = -1;
      for (int c = 0; c <= cols_; ++c)
        if (!aug.at(r, c).is_zero()) {
          lead = c;
          break;
        }
      if (lead == cols_) return false;
      if (lead >= 0) x[lead] = aug.at(r, cols_);
    }
    return true;
  }

  Mat inverse() const {
    assert(rows_ == cols_);
    Mat aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_ + r) = QI(1);
    }
    int rk = aug.row_reduce();
    if (rk != rows_) throw std::domain_error("Mat: singular matrix has no inverse");
    Mat inv(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
  }

 private:
  int rows_, cols_;
  std::vector<QI> a_;
};

}  // namespace voganish
