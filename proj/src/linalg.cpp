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

#include "dirac_trap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dirac_trap/error.hpp"

namespace dirac_trap::linalg {

Mat2 pauli_x() { return Mat2{0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return Mat2{0.0, -kI, kI, 0.0}; }
Mat2 pauli_z() { return Mat2{1.0, 0.0, 0.0, -1.0}; }
std::array<Mat2, 3> pauli_vector() { return {pauli_x(), pauli_y(), pauli_z()}; }

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Vec4 kron(const std::array<Complex, 2>& u, const std::array<Complex, 2>& v) {
  return {u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]};
}

double commutator_norm(const Mat4& a, const Mat4& b) { return frobenius_norm(a * b - b * a); }

Mat2 partial_trace(const Mat4& rho, TraceOut which) {
  Mat2 out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t k = 0; k < 2; ++k) {
        // Tracing the first factor keeps the low index; tracing the second keeps the high one.
        out(r, c) += which == TraceOut::first ? rho(2 * k + r, 2 * k + c) : rho(2 * r + k, 2 * c + k);
      }
  return out;
}

namespace {

double off_diagonal_norm2(const Mat4& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

// One two-sided rotation that annihilates a(p,q). The complex phase of
// a(p,q) is absorbed into column q first, which leaves a real symmetric
// 2x2 problem for the classical Jacobi angle.
void rotate(Mat4& a, Mat4& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = std::real(a(p, p));
  const double aqq = std::real(a(q, q));

  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // U restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
  const Complex u_pp = c;
  const Complex u_pq = s;
  const Complex u_qp = -s * std::conj(phase);
  const Complex u_qq = c * std::conj(phase);

  // a <- a U
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  // a <- U^dagger a
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = std::real(a(p, p));
  a(q, q) = std::real(a(q, q));

  for (std::size_t k = 0; k < 4; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }
}

void gram_schmidt(std::array<Vec4, 4>& vecs, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    for (std::size_t j = begin; j < i; ++j) {
      const Complex proj = inner(vecs[j], vecs[i]);
      for (std::size_t k = 0; k < 4; ++k) vecs[i][k] -= proj * vecs[j][k];
    }
    const double n = norm(vecs[i]);
    for (auto& x : vecs[i]) x /= n;
  }
}

}  // namespace

EigDecomp hermitian_eig(const Mat4& h) {
  if (!is_hermitian(h)) throw Error(ErrorCode::not_hermitian, "hermitian_eig: input is not Hermitian");

  const double scale = frobenius_norm(h);
  Mat4 a = 0.5 * (h + adjoint(h));
  Mat4 v = Mat4::identity();

  if (scale > 0.0) {
    const double stop = 1e-34 * scale * scale;
    for (int sweep = 0; sweep < 64 && off_diagonal_norm2(a) > stop; ++sweep)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = p + 1; q < 4; ++q) rotate(a, v, p, q);
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return std::real(a(x, x)) < std::real(a(y, y)); });

  EigDecomp out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.eigenvalues[i] = std::real(a(order[i], order[i]));
    for (std::size_t k = 0; k < 4; ++k) out.eigenvectors[i][k] = v(k, order[i]);
  }

  const double cluster_tol = 1e-10 * std::max(scale, 1e-300);
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= 4; ++i) {
    if (i == 4 || out.eigenvalues[i] - out.eigenvalues[i - 1] > cluster_tol) {
      gram_schmidt(out.eigenvectors, begin, i);
      begin = i;
    }
  }
  return out;
}

Mat4 reconstruct(const EigDecomp& eig) {
  Mat4 out;
  for (std::size_t i = 0; i < 4; ++i) out += eig.eigenvalues[i] * outer(eig.eigenvectors[i], eig.eigenvectors[i]);
  return out;
}

}  // namespace dirac_trap::linalg
