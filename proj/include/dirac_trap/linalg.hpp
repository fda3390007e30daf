// Copyright 2026 The dirac-trap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex algebra for the fixed 2x2 and 4x4 shapes used throughout the
// library, plus a Jacobi eigensolver that serves as the independent oracle
// for every closed-form spectrum.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace dirac_trap::linalg {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<Complex, 4>;

inline constexpr Complex kI{0.0, 1.0};

/// Row-major N x N complex matrix with value semantics.
template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr SquareMatrix() = default;

  /// Row-major initializer; missing trailing entries stay zero.
  constexpr SquareMatrix(std::initializer_list<Complex> row_major) {
    std::size_t k = 0;
    for (const Complex& v : row_major) {
      if (k == N * N) break;
      data_[k++] = v;
    }
  }

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr SquareMatrix diagonal(const std::array<Complex, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  constexpr Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  constexpr const std::array<Complex, N * N>& data() const { return data_; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator-(SquareMatrix a) { return a *= -1.0; }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }
  friend SquareMatrix operator*(double s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::array<Complex, N> operator*(const SquareMatrix& a, const std::array<Complex, N>& v) {
    std::array<Complex, N> out{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<Complex, N * N> data_{};
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

template <std::size_t N>
SquareMatrix<N> adjoint(const SquareMatrix<N>& a) {
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(a(j, i));
  return out;
}

template <std::size_t N>
Complex trace(const SquareMatrix<N>& a) {
  Complex t{};
  for (std::size_t i = 0; i < N; ++i) t += a(i, i);
  return t;
}

template <std::size_t N>
double frobenius_norm(const SquareMatrix<N>& a) {
  double s = 0.0;
  for (const Complex& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

template <std::size_t N>
double max_abs(const SquareMatrix<N>& a) {
  double m = 0.0;
  for (const Complex& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

/// ||A - A^dagger||_F <= tol * ||A||_F (absolute when A is zero).
template <std::size_t N>
bool is_hermitian(const SquareMatrix<N>& a, double rel_tol = 1e-12) {
  return frobenius_norm(a - adjoint(a)) <= rel_tol * frobenius_norm(a);
}

template <std::size_t N>
SquareMatrix<N> outer(const std::array<Complex, N>& u, const std::array<Complex, N>& v) {
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

/// <u|v>, conjugate-linear in the first argument.
template <std::size_t N>
Complex inner(const std::array<Complex, N>& u, const std::array<Complex, N>& v) {
  Complex s{};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(u[i]) * v[i];
  return s;
}

template <std::size_t N>
double norm(const std::array<Complex, N>& v) {
  return std::sqrt(std::real(inner(v, v)));
}

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
/// (sigma_x, sigma_y, sigma_z)
std::array<Mat2, 3> pauli_vector();

/// (A (x) B)[2i+k][2j+l] = A[i][j] B[k][l]
Mat4 kron(const Mat2& a, const Mat2& b);

Vec4 kron(const std::array<Complex, 2>& u, const std::array<Complex, 2>& v);

/// ||AB - BA||_F
double commutator_norm(const Mat4& a, const Mat4& b);

enum class TraceOut { first, second };

/// Reduced 2x2 state after tracing out one qubit of a two-qubit operator.
Mat2 partial_trace(const Mat4& rho, TraceOut which);

struct EigDecomp {
  std::array<double, 4> eigenvalues{};  // ascending
  std::array<Vec4, 4> eigenvectors{};   // orthonormal, eigenvectors[i] pairs with eigenvalues[i]
};

/// Cyclic complex Jacobi on a Hermitian 4x4. Throws Error(not_hermitian)
/// when ||H - H^dagger||_F > 1e-12 ||H||_F. Eigenvectors inside a
/// degenerate cluster are re-orthonormalised by modified Gram-Schmidt in
/// the order the sweep produced them.
EigDecomp hermitian_eig(const Mat4& h);

/// V diag(lambda) V^dagger from a decomposition.
Mat4 reconstruct(const EigDecomp& eig);

}  // namespace dirac_trap::linalg
