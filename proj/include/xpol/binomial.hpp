#pragma once

namespace xpol {

// Exact C(n,k) as a 64-bit integer (n bounded well below overflow here;
// the multiplicative form is exact after each division).
inline long long binom_ll(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int t = 1; t <= k; ++t) {
    r = r * (unsigned)(n - k + t) / (unsigned)t;
  }
  return (long long)r;
}

}  // namespace xpol
