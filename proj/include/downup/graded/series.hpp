#pragma once

#include <vector>

#include "downup/scalar.hpp"

namespace downup::graded {

/// Coefficients t^0..t^N of prod_k 1/(1 - t^{steps[k]}).
inline std::vector<Integer> inverse_product_series(const std::vector<int>& steps, int N) {
  std::vector<Integer> c(static_cast<std::size_t>(N) + 1, 0);
  c[0] = 1;
  for (int s : steps)
    for (int q = s; q <= N; ++q)
      c[q] += c[q - s];
  return c;
}

/// Partial sums: coefficients of series / (1 - t).
inline std::vector<Integer> cumulative(const std::vector<Integer>& c) {
  std::vector<Integer> out(c);
  for (std::size_t q = 1; q < out.size(); ++q)
    out[q] += out[q - 1];
  return out;
}

}  // namespace downup::graded
