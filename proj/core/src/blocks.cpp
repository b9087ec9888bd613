#include "obbm/blocks.hpp"

#include "obbm/errors.hpp"

#include <algorithm>
#include <string>

namespace obbm {

Rational ratio(const ObstacleLandscape& L, std::size_t m, std::size_t n) {
  if (m < 1 || n < m || n > L.size())
    throw IndexRange("ratio range [" + std::to_string(m) + "," + std::to_string(n) +
                     "] invalid for ell=" + std::to_string(L.size()));
  Rational sa = 0, sb = 0;
  for (std::size_t i = m - 1; i < n; ++i) {
    sa += L.a[i];
    sb += L.b[i];
  }
  return sb / sa;
}

std::vector<std::size_t> s_indices(const ObstacleLandscape& L) {
  const std::size_t ell = L.size();
  if (ell == 0) throw EmptyLandscape();
  std::vector<std::size_t> s{0};
  for (std::size_t m = 1; m + 1 <= ell; ++m)
    if (ratio(L, 1, m) >= ratio(L, m + 1, ell)) s.push_back(m);
  s.push_back(ell);
  return s;
}

BlockDivision optimal_blocks(const ObstacleLandscape& L) {
  const std::size_t ell = L.size();
  if (ell == 0) throw EmptyLandscape();
  const std::vector<std::size_t> s = s_indices(L);
  const std::size_t last = s.size() - 1;  // index of s_{n+1} = ell

  BlockDivision d;
  d.cuts.push_back(0);
  std::size_t u = 0;  // current cut value u*_i
  while (u != ell) {
    std::size_t jt = 0;  // j~ = inf{ j : s_j > u }
    while (s[jt] <= u) ++jt;
    std::size_t next = s[jt];
    // j^ = largest j in {j~+1,...,n+1} whose full chain of strict mediant
    // inequalities (prefix from u+1 vs suffix up to s_j) holds.
    for (std::size_t jh = last; jh > jt; --jh) {
      bool chain = true;
      for (std::size_t jj = jt; jj < jh && chain; ++jj)
        chain = ratio(L, u + 1, s[jj]) < ratio(L, s[jj] + 1, s[jh]);
      if (chain) {
        next = s[jh];
        break;
      }
    }
    d.cuts.push_back(next);
    u = next;
  }
  return d;
}

bool is_admissible(const ObstacleLandscape& L, const BlockDivision& d) {
  for (std::size_t i = 0; i + 1 < d.cuts.size(); ++i) {
    const std::size_t u = d.cuts[i], v = d.cuts[i + 1];
    for (std::size_t m = u + 1; m < v; ++m)
      if (!(ratio(L, u + 1, m) < ratio(L, m + 1, v))) return false;
  }
  return true;
}

BlockDivision intersect_divisions(const BlockDivision& d1, const BlockDivision& d2) {
  if (d1.cuts.empty() || d2.cuts.empty() || d1.cuts.back() != d2.cuts.back())
    throw MismatchedLength("divisions end at different ell");
  BlockDivision out;
  std::set_intersection(d1.cuts.begin(), d1.cuts.end(), d2.cuts.begin(),
                        d2.cuts.end(), std::back_inserter(out.cuts));
  return out;
}

}  // namespace obbm
