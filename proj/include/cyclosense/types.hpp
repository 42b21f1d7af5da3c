#pragma once

#include <complex>

namespace cyclosense {

using cplx = std::complex<double>;

enum class Hypothesis { H0, H1 };

inline const char* to_string(Hypothesis h) { return h == Hypothesis::H0 ? "H0" : "H1"; }

}  // namespace cyclosense
