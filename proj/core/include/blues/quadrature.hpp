#pragma once

#include <functional>

namespace blues {

// Adaptive Simpson integration of a smooth integrand over [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12);

}  // namespace blues
