#pragma once

namespace pbr::tol {

// Unit-norm and orthonormality checks.
inline constexpr double kNorm = 1e-10;
// Probability sums and the zero-flag threshold of probability tables.
inline constexpr double kProb = 1e-9;
// Below this a squared norm or a probability mass counts as zero.
inline constexpr double kZero = 1e-12;
// Equality constraints of the feasibility program.
inline constexpr double kLp = 1e-7;

}  // namespace pbr::tol
