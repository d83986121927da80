#ifndef FT_NUMERICS_HPP_
#define FT_NUMERICS_HPP_

#include <functional>
#include <stdexcept>
#include <vector>

#include "ft/gas.hpp"

namespace ft {

/// Adaptive Cash-Karp RK45 on a 4-vector ODE dU/ds = f(U), integrating
/// s: 0 -> s_end (either sign). Absolute error tolerance per step.
Vec4 integrate_rk45(const std::function<Vec4(const Vec4&)>& f, Vec4 u0,
                    double s_end, double atol);

/// In-place Gaussian elimination with partial pivoting: solves A x = b.
/// Throws std::runtime_error on a (numerically) singular matrix.
std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                std::vector<double> b);

}  // namespace ft

#endif  // FT_NUMERICS_HPP_
