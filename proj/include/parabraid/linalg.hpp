#pragma once

#include "parabraid/scalar.hpp"

#include <optional>
#include <vector>

namespace parabraid {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

ScalarMatrix identity_matrix(std::size_t n);
ScalarMatrix zero_matrix(std::size_t rows, std::size_t cols);
ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b);

/// Exact rank by Gaussian elimination over the cyclotomic field.
std::size_t matrix_rank(ScalarMatrix m);

/// Exact inverse by Gauss-Jordan; nullopt when singular or not square.
std::optional<ScalarMatrix> matrix_inverse(const ScalarMatrix& m);

}  // namespace parabraid
