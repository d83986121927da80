#include "ft/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace ft {

namespace {

// Cash-Karp tableau (autonomous RHS, so the abscissae are not needed).
constexpr double kB[6][5] = {
    {},
    {0.2},
    {3.0 / 40.0, 9.0 / 40.0},
    {0.3, -0.9, 1.2},
    {-11.0 / 54.0, 2.5, -70.0 / 27.0, 35.0 / 27.0},
    {1631.0 / 55296.0, 175.0 / 512.0, 575.0 / 13824.0, 44275.0 / 110592.0,
     253.0 / 4096.0}};
constexpr double kC5[6] = {37.0 / 378.0,  0.0,           250.0 / 621.0,
                           125.0 / 594.0, 0.0,           512.0 / 1771.0};
constexpr double kC4[6] = {2825.0 / 27648.0,  0.0,
                           18575.0 / 48384.0, 13525.0 / 55296.0,
                           277.0 / 14336.0,   0.25};

Vec4 axpy(const Vec4& x, double a, const Vec4& y) {
  return {x[0] + a * y[0], x[1] + a * y[1], x[2] + a * y[2], x[3] + a * y[3]};
}

}  // namespace

Vec4 integrate_rk45(const std::function<Vec4(const Vec4&)>& f, Vec4 u,
                    double s_end, double atol) {
  if (s_end == 0.0) return u;
  const double dir = (s_end > 0.0) ? 1.0 : -1.0;
  double s = 0.0;
  double h = dir * std::min(std::fabs(s_end), 0.05);
  int steps = 0;
  while (dir * (s_end - s) > 0.0) {
    if (++steps > 100000) throw std::runtime_error("rk45: step limit exceeded");
    if (dir * (s + h - s_end) > 0.0) h = s_end - s;
    Vec4 k[6];
    k[0] = f(u);
    for (int i = 1; i < 6; ++i) {
      Vec4 ui = u;
      for (int j = 0; j < i; ++j) ui = axpy(ui, h * kB[i][j], k[j]);
      k[i] = f(ui);
    }
    Vec4 u5 = u, u4 = u;
    for (int i = 0; i < 6; ++i) {
      u5 = axpy(u5, h * kC5[i], k[i]);
      u4 = axpy(u4, h * kC4[i], k[i]);
    }
    double err = 0.0;
    for (int i = 0; i < 4; ++i) err = std::max(err, std::fabs(u5[i] - u4[i]));
    if (err <= atol) {
      u = u5;
      s += h;
    }
    const double safe =
        (err > 0.0) ? 0.9 * std::pow(atol / err, 0.2) : 5.0;
    h *= std::clamp(safe, 0.1, 5.0);
  }
  return u;
}

std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-300)
      throw std::runtime_error("solve_dense: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const double m = a[r][col] / a[col][col];
      if (m == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= m * a[col][c];
      b[r] -= m * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

}  // namespace ft
