#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tatekit {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/// Dense matrix over Z with exact arbitrary-precision entries, row-major.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVec>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column size mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const Int& v : data_)
      if (v != 0) return false;
    return true;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Int& b = o(k, j);
          if (b != 0) r(i, j) += a * b;
        }
      }
    return r;
  }
  IntMatrix operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in sum");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }
  IntMatrix operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in difference");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }
  IntMatrix operator-() const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
  }

  IntVec operator*(const IntVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    IntVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) acc += (*this)(i, j) * v[j];
      r[i] = std::move(acc);
    }
    return r;
  }

  IntMatrix transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  IntVec column(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(std::size_t j, const IntVec& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  /// [A | B] side by side; row counts must match (a completely empty 0x0
  /// argument is treated as a neutral element).
  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) {
      if (a.rows_ == 0 && a.cols_ == 0) return b;
      if (b.rows_ == 0 && b.cols_ == 0) return a;
      throw std::invalid_argument("hcat row mismatch");
    }
    IntMatrix r(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }
  static IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_) {
      if (a.rows_ == 0 && a.cols_ == 0) return b;
      if (b.rows_ == 0 && b.cols_ == 0) return a;
      throw std::invalid_argument("vcat col mismatch");
    }
    IntMatrix r(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
    return r;
  }

  /// Kronecker product, (i1,i2),(j1,j2) -> a(i1,j1)*b(i2,j2) with row-major block layout.
  static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i1 = 0; i1 < a.rows_; ++i1)
      for (std::size_t j1 = 0; j1 < a.cols_; ++j1) {
        const Int& v = a(i1, j1);
        if (v == 0) continue;
        for (std::size_t i2 = 0; i2 < b.rows_; ++i2)
          for (std::size_t j2 = 0; j2 < b.cols_; ++j2)
            r(i1 * b.rows_ + i2, j1 * b.cols_ + j2) = v * b(i2, j2);
      }
    return r;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += (*this)(i, j).str();
      }
    }
    return s + "]";
  }

private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

inline IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline IntVec operator-(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
inline IntVec operator*(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}
inline bool is_zero(const IntVec& a) {
  for (const Int& v : a)
    if (v != 0) return false;
  return true;
}
inline IntVec zero_vec(std::size_t n) { return IntVec(n); }
inline IntVec unit_vec(std::size_t n, std::size_t i) {
  IntVec v(n);
  v[i] = 1;
  return v;
}

}  // namespace tatekit
