#pragma once

namespace groupchar::tol {

// Pass/fail threshold for all equation checkers.
inline constexpr double equation = 1e-9;

// Fourier roundtrips, convolution theorem, mass accounting.
inline constexpr double strict = 1e-12;

// |f(y)| below this counts as a vanishing characteristic value.
inline constexpr double vanishing = 1e-12;

// Imaginary residue allowed when inverting a conjugate-symmetric table.
inline constexpr double imag_residue = 1e-9;

// Distribution classification: weights >= -distribution, |mass-1| <= distribution.
inline constexpr double distribution = 1e-12;

}  // namespace groupchar::tol
