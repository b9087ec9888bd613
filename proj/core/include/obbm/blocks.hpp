#pragma once

#include "obbm/landscape.hpp"
#include "obbm/rational.hpp"

#include <cstddef>
#include <vector>

namespace obbm {

// Increasing cut indices 0 = u_0 < ... < u_{n+1} = ell; block i is the
// obstacle range (cuts[i], cuts[i+1]].
struct BlockDivision {
  std::vector<std::size_t> cuts;

  std::size_t block_count() const { return cuts.size() - 1; }
  bool operator==(const BlockDivision&) const = default;
};

// Mediant ratio sum_{i=m..n} b_i / sum_{i=m..n} a_i, 1-based inclusive range.
// Throws IndexRange on an empty or out-of-bounds range.
Rational ratio(const ObstacleLandscape& L, std::size_t m, std::size_t n);

// The bracketed candidate cuts {0} u {m in 1..ell-1 : ratio(1,m) >= ratio(m+1,ell)} u {ell}.
std::vector<std::size_t> s_indices(const ObstacleLandscape& L);

// The optimal division u* built greedily over the s-indices.
BlockDivision optimal_blocks(const ObstacleLandscape& L);

// True iff every block internally satisfies the strict prefix < suffix
// mediant inequality (late expensive obstacles within each block).
bool is_admissible(const ObstacleLandscape& L, const BlockDivision& d);

// Sorted set-intersection of cut sets; requires equal endpoints.
BlockDivision intersect_divisions(const BlockDivision& d1, const BlockDivision& d2);

}  // namespace obbm
