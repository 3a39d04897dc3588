#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include <Eigen/Core>

namespace gl2 {

namespace detail {
constexpr std::size_t pow4(std::size_t r) { return r == 0 ? 1 : 4 * pow4(r - 1); }
}  // namespace detail

/**
 * @brief Dense multilinear array over the orthonormal frame.
 *
 * Indices are 0-based (0..3 <-> e1..e4) and the last index varies fastest.
 * Rank-4 instances are stored densely (256 entries).
 */
template<std::size_t Rank>
class FrameTensor
{
  static_assert(Rank >= 2 && Rank <= 4);

public:
  static constexpr std::size_t rank = Rank;
  static constexpr std::size_t size = detail::pow4(Rank);

  FrameTensor() { data_.fill(0.0); }

  template<typename... I>
    requires(sizeof...(I) == Rank)
  double & operator()(I... idx)
  {
    return data_[flat(idx...)];
  }

  template<typename... I>
    requires(sizeof...(I) == Rank)
  double operator()(I... idx) const
  {
    return data_[flat(idx...)];
  }

  double & at_flat(std::size_t i) { return data_[i]; }
  double at_flat(std::size_t i) const { return data_[i]; }

  /// Inverse of the flat layout, e.g. 27 -> {0, 1, 2, 3} for rank 4.
  static std::array<int, Rank> unflatten(std::size_t i)
  {
    std::array<int, Rank> idx{};
    for (std::size_t r = Rank; r-- > 0;) {
      idx[r] = static_cast<int>(i % 4);
      i /= 4;
    }
    return idx;
  }

  double max_abs() const
  {
    double m = 0.0;
    for (double v : data_) { m = std::max(m, std::abs(v)); }
    return m;
  }

  FrameTensor operator-(const FrameTensor & o) const
  {
    FrameTensor r;
    for (std::size_t i = 0; i < size; ++i) { r.data_[i] = data_[i] - o.data_[i]; }
    return r;
  }

  FrameTensor operator+(const FrameTensor & o) const
  {
    FrameTensor r;
    for (std::size_t i = 0; i < size; ++i) { r.data_[i] = data_[i] + o.data_[i]; }
    return r;
  }

  FrameTensor operator*(double s) const
  {
    FrameTensor r;
    for (std::size_t i = 0; i < size; ++i) { r.data_[i] = s * data_[i]; }
    return r;
  }

  friend FrameTensor operator*(double s, const FrameTensor & t) { return t * s; }

  // Rank-2 helpers.

  static FrameTensor from_matrix(const Eigen::Matrix4d & m)
    requires(Rank == 2)
  {
    FrameTensor t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t(i, j) = m(i, j);
    return t;
  }

  Eigen::Matrix4d to_matrix() const
    requires(Rank == 2)
  {
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  bool is_symmetric(double tol) const
    requires(Rank == 2)
  {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
  }

private:
  template<typename... I>
  static std::size_t flat(I... idx)
  {
    std::size_t f = 0;
    ((f = 4 * f + static_cast<std::size_t>(idx)), ...);
    return f;
  }

  std::array<double, size> data_;
};

using FrameTensor2 = FrameTensor<2>;
using FrameTensor3 = FrameTensor<3>;
using FrameTensor4 = FrameTensor<4>;

}  // namespace gl2
