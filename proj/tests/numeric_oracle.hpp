#pragma once

// Floating-point evaluation at zeta_m = exp(2 pi i / m), used as an
// independent check of exact field arithmetic.

#include "uqb2/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

inline std::complex<double> zeta(int m, long long k = 1) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / m);
}

inline std::complex<double> numeric(const uqb2::CycNum& x) {
    const int m = x.field().m();
    std::complex<double> out = 0;
    const auto& c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out += c[i].get_d() * zeta(m, static_cast<long long>(i));
    return out;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

}  // namespace oracle
