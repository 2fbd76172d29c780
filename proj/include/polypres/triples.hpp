#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polypres/pointline.hpp"

namespace polypres {

// (i, j, k) with y_t = T(x_t):  x_i ∈ y_k,  x_j ∈ y_i,  x_j ∈ y_k.
// Deliberately not cyclic.
struct Triple {
  int i = 0, j = 0, k = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TripleSet {
  std::vector<Triple> triples; // sorted by (i, j, k), no duplicates
  std::string plane_name;
  uint64_t plane_hash = 0;
  uint64_t bijection_hash = 0;

  uint64_t content_hash() const;
};

// One triple per flag (x_i, y_k): j is forced as y_i ∩ y_k. Requires a
// certified bijection; the count lands on (q+1)(q²+q+1) exactly.
TripleSet enumerate_triples(const Plane& plane, const PointLineBijection& bij);

enum class PairKind { ik, ij, jk };

// The unique triple extending an admissible pair, or nullopt when the pair
// is inadmissible:
//   ik: needs x_i ∈ y_k, then j = y_i ∩ y_k
//   ij: needs x_j ∈ y_i, then k = T⁻¹(line through x_i and x_j)
//   jk: needs x_j ∈ y_k, then i = (T*)⁻¹(x_j) on I(y_k)
std::optional<Triple> complete_pair(const Plane& plane,
                                    const PointLineBijection& bij,
                                    PairKind kind, int a, int b);

// each of the three pair projections hits every admissible pair exactly once
// and no inadmissible pair at all, over all ordered index pairs
Report verify_crucial_lemma(const Plane& plane, const PointLineBijection& bij,
                            const TripleSet& triples);

void save_triples(std::ostream& out, const TripleSet& ts);
void save_triples(const std::string& path, const TripleSet& ts);
TripleSet load_triples(std::istream& in, const Plane& plane,
                       const PointLineBijection& bij);
TripleSet load_triples(const std::string& path, const Plane& plane,
                       const PointLineBijection& bij);

} // namespace polypres
