#pragma once

#include <cmath>
#include <vector>

#include "adp/errors.hpp"

namespace adp {

// Least-squares polynomial fit, coefficients in ascending powers. Normal
// equations solved in long double with partial pivoting; degrees here stay
// tiny (<= 4) so this is well conditioned enough.
inline std::vector<double> polyfit(const std::vector<double>& xs, const std::vector<double>& ys,
                                   int degree) {
  if (degree < 0) throw DomainError("polyfit: negative degree");
  size_t m = static_cast<size_t>(degree) + 1;
  if (xs.size() != ys.size() || xs.size() < m) throw DomainError("polyfit: not enough points");

  std::vector<long double> ata(m * m, 0.0L), atb(m, 0.0L);
  for (size_t i = 0; i < xs.size(); ++i) {
    long double pw[16];
    pw[0] = 1.0L;
    for (size_t j = 1; j < m; ++j) pw[j] = pw[j - 1] * xs[i];
    for (size_t r = 0; r < m; ++r) {
      for (size_t c = 0; c < m; ++c) ata[r * m + c] += pw[r] * pw[c];
      atb[r] += pw[r] * ys[i];
    }
  }
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < m; ++r)
      if (std::fabs(static_cast<double>(ata[r * m + col])) >
          std::fabs(static_cast<double>(ata[piv * m + col])))
        piv = r;
    if (ata[piv * m + col] == 0.0L) throw DomainError("polyfit: singular system");
    if (piv != col) {
      for (size_t c = 0; c < m; ++c) std::swap(ata[piv * m + c], ata[col * m + c]);
      std::swap(atb[piv], atb[col]);
    }
    for (size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      long double f = ata[r * m + col] / ata[col * m + col];
      for (size_t c = col; c < m; ++c) ata[r * m + c] -= f * ata[col * m + c];
      atb[r] -= f * atb[col];
    }
  }
  std::vector<double> out(m);
  for (size_t i = 0; i < m; ++i) out[i] = static_cast<double>(atb[i] / ata[i * m + i]);
  return out;
}

inline double polyval(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

}  // namespace adp
