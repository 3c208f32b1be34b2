// Copyright 2026 The tripent Authors
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

#include "tripent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tripent/error.hpp"

namespace tripent {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::InvalidSlot: return "InvalidSlot";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::LemmaViolation: return "LemmaViolation";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Cyclic Jacobi on an exactly Hermitian matrix. Each rotation
// J = [[c, s w], [-s conj(w), c]] on the (p, q) plane, w = a_pq / |a_pq|,
// zeroes a_pq via A <- J^H A J.
template <std::size_t N>
std::array<double, N> jacobi(Matrix<N> a) {
  const double threshold =
      kJacobiOffDiagonalThreshold * std::max(1.0, a.frobenius_norm());

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kJacobiMaxSweeps)
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi eigensolver did not converge in " +
                      std::to_string(kJacobiMaxSweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;

        const Complex w = apq / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sw = s * w;
        const Complex swc = s * std::conj(w);

        for (std::size_t k = 0; k < N; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - swc * akq;
          a(k, q) = sw * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - sw * aqk;
          a(q, k) = swc * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::array<double, N> ev{};
  for (std::size_t i = 0; i < N; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m,
                                            double hermitian_tol) {
  if (!m.all_finite())
    throw Error(ErrorCode::InvalidInput, "matrix has non-finite entries");
  const double herr = m.hermiticity_error();
  if (herr > hermitian_tol) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |M[a][b] - conj(M[b][a])| = " << herr
       << " > " << hermitian_tol;
    throw Error(ErrorCode::NonHermitian, os.str());
  }
  return jacobi(m.hermitian_part());
}

Matrix4 partial_transpose_second(const Matrix4& m) {
  Matrix4 out;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t n = 0; n < 2; ++n)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s)
          out(2 * a + n, 2 * r + s) = m(2 * a + s, 2 * r + n);
  return out;
}

Matrix4 partial_trace(const Matrix8& rho, Subsystem traced) {
  Matrix4 out;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t u = 0; u < 2; ++u)
        for (std::size_t v = 0; v < 2; ++v) {
          Complex sum = 0.0;
          for (std::size_t k = 0; k < 2; ++k) {
            switch (traced) {
              case Subsystem::C:  // keep (A, B) = (x, y), (u, v)
                sum += rho(4 * x + 2 * y + k, 4 * u + 2 * v + k);
                break;
              case Subsystem::B:  // keep (A, C)
                sum += rho(4 * x + 2 * k + y, 4 * u + 2 * k + v);
                break;
              case Subsystem::A:  // keep (B, C)
                sum += rho(4 * k + 2 * x + y, 4 * k + 2 * u + v);
                break;
            }
          }
          out(2 * x + y, 2 * u + v) = sum;
        }
  return out;
}

DensityMatrix4 partial_trace(const DensityMatrix8& rho, Subsystem traced) {
  return DensityMatrix4::validated(partial_trace(rho.matrix(), traced));
}

Matrix4 kron(const Matrix2& x, const Matrix2& y) {
  Matrix4 out;
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t n = 0; n < 2; ++n)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s)
          out(2 * m + n, 2 * r + s) = x(m, r) * y(n, s);
  return out;
}

std::string DensityDiagnostics::describe() const {
  if (ok()) return "valid density matrix";
  std::ostringstream os;
  const char* sep = "";
  if (!finite) {
    os << "non-finite entries";
    sep = "; ";
  }
  if (!hermitian) {
    os << sep << "not Hermitian (max deviation " << hermiticity_error << ")";
    sep = "; ";
  }
  if (!unit_trace) {
    os << sep << "trace off by " << trace_error;
    sep = "; ";
  }
  if (!positive) {
    if (std::isnan(min_eigenvalue))
      os << sep << "positivity not evaluated";
    else
      os << sep << "negative eigenvalue " << min_eigenvalue;
  }
  return os.str();
}

template <std::size_t N>
DensityDiagnostics check_density(const Matrix<N>& m,
                                 const DensityTolerances& tol) {
  DensityDiagnostics d;
  d.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  d.finite = m.all_finite();
  if (!d.finite) return d;

  d.hermiticity_error = m.hermiticity_error();
  d.hermitian = d.hermiticity_error <= tol.hermitian;
  d.trace_error = std::abs(m.trace() - Complex(1.0));
  d.unit_trace = d.trace_error <= tol.trace;
  if (d.hermitian) {
    d.min_eigenvalue = jacobi(m.hermitian_part())[0];
    d.positive = d.min_eigenvalue >= -tol.psd;
  }
  return d;
}

template <std::size_t N>
bool is_density_matrix(const Matrix<N>& m, double tol,
                       DensityDiagnostics* diagnostics) {
  const DensityDiagnostics d =
      check_density(m, DensityTolerances::uniform(tol));
  if (diagnostics) *diagnostics = d;
  return d.ok();
}

template <std::size_t N>
DensityMatrix<N> DensityMatrix<N>::validated(const Matrix<N>& m,
                                             const DensityTolerances& tol) {
  const DensityDiagnostics d = check_density(m, tol);
  if (!d.ok())
    throw Error(ErrorCode::InvalidInput,
                "not a " + std::to_string(N) + "x" + std::to_string(N) +
                    " density matrix: " + d.describe());
  return DensityMatrix(m.hermitian_part());
}

template std::array<double, 2> hermitian_eigenvalues(const Matrix<2>&, double);
template std::array<double, 4> hermitian_eigenvalues(const Matrix<4>&, double);
template std::array<double, 8> hermitian_eigenvalues(const Matrix<8>&, double);
template DensityDiagnostics check_density(const Matrix<2>&,
                                          const DensityTolerances&);
template DensityDiagnostics check_density(const Matrix<4>&,
                                          const DensityTolerances&);
template DensityDiagnostics check_density(const Matrix<8>&,
                                          const DensityTolerances&);
template bool is_density_matrix(const Matrix<2>&, double, DensityDiagnostics*);
template bool is_density_matrix(const Matrix<4>&, double, DensityDiagnostics*);
template bool is_density_matrix(const Matrix<8>&, double, DensityDiagnostics*);
template class DensityMatrix<2>;
template class DensityMatrix<4>;
template class DensityMatrix<8>;

}  // namespace tripent
