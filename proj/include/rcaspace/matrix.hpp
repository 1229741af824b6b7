#ifndef RCASPACE_MATRIX_HPP
#define RCASPACE_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace rcaspace {

/// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
public:
  using value_type = T;
  using size_type = std::size_t;

  Matrix() = default;
  Matrix(size_type rows, size_type cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_type rows() const noexcept { return rows_; }
  size_type cols() const noexcept { return cols_; }
  size_type size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(size_type r, size_type c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(size_type r, size_type c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<T> row(size_type r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(size_type r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(size_type c) const {
    std::vector<T> out(rows_);
    for (size_type r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (size_type r = 0; r < rows_; ++r)
      for (size_type c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  size_type rows_ = 0;
  size_type cols_ = 0;
  std::vector<T> data_;
};

} // namespace rcaspace

#endif
