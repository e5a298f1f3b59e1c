// Copyright 2026 The zxforge authors
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

#include <vector>

#include "zxforge/complex_matrix.hpp"

namespace zxforge {

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

// Cyclic Jacobi diagonalization for complex Hermitian matrices. Intended for
// the small operators this library works with (density matrices, SLDs);
// accuracy is near machine precision, A = V diag(values) V^dagger.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

}  // namespace zxforge
