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

#include "dirac_trap/error.hpp"

namespace dirac_trap {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_params: return "InvalidParams";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::magnetic_field_unsupported: return "MagneticFieldUnsupported";
    case ErrorCode::degenerate_invariant: return "DegenerateInvariant";
    case ErrorCode::zero_eigenvalue: return "ZeroEigenvalue";
    case ErrorCode::complex_eigenvalue: return "ComplexEigenvalue";
    case ErrorCode::not_pure: return "NotPure";
    case ErrorCode::invalid_pair: return "InvalidPair";
    case ErrorCode::zero_coupling: return "ZeroCoupling";
  }
  return "Unknown";
}

}  // namespace dirac_trap
