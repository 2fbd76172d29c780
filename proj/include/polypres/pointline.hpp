#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "polypres/plane.hpp"

namespace polypres {

enum class CertState { unchecked, pass, fail };

struct Certification {
  CertState state = CertState::unchecked;
  std::string witness; // first violation in index order, empty on pass
};

// A point -> line bijection carrying its own certification of the two basic
// properties: P1, no point lies on its image line; P2, for distinct points
// x1, x2 the point T(x1) ∩ T(x2) is not collinear with x1 and x2.
struct PointLineBijection {
  std::vector<int> map; // point index -> line index
  CertState certified = CertState::unchecked;
  std::string witness;
  uint64_t plane_hash = 0;

  uint64_t content_hash() const; // plane_hash + map; certification excluded
};

// T(gF) = gE on an algebraic plane: the point and line sharing a canonical
// representative correspond. Certification is always run and stored honestly;
// it passes exactly when the field has characteristic 2 (P2 has explicit
// counterexamples in characteristics 5 and 7, which the witness reports).
PointLineBijection trace_bijection(const FieldTower& tower, const Plane& plane);

// test hook: drive the construction through characteristic 3 to observe the
// forced P1 failure at the point F
PointLineBijection trace_bijection_unchecked_char(const FieldTower& tower,
                                                  const Plane& plane);

// exhaustive P1 + P2; updates bij.certified / bij.witness and returns the
// same result; throws not_bijective (with the duplicated line) first
Certification verify_properties(const Plane& plane, PointLineBijection& bij);

struct InducedPermutation {
  int line = 0;
  std::vector<std::pair<int, int>> perm; // (x, T*(x)), x over I(y) ascending
};

// T*(x) = T(x) ∩ y on the points of line y; bijective and fixed-point-free
// for every certified bijection
InducedPermutation induced_permutation(const Plane& plane,
                                       const PointLineBijection& bij, int y);

struct SearchConfig {
  uint64_t budget = 100'000'000; // nodes; budget_exceeded beyond
  int jobs = 1;
};

struct SearchResult {
  bool found = false;
  PointLineBijection bijection; // certified when found
  uint64_t nodes = 0;           // deterministic for exhausted searches
};

// Depth-first backtracking over T(x0), T(x1), ... in point order, candidate
// lines in line order, pruning on P1, on P2 against assigned points, and on
// empty future domains. Returns the lexicographically first solution by
// map[0], map[1], ... regardless of jobs; found=false means the full tree
// was refuted.
SearchResult search_bijection(const Plane& plane, const SearchConfig& config = {});

struct UniquenessReport {
  bool pass = false;                    // solutions_one == {1}
  std::vector<int> solutions_one;       // enc of g with Tr(g)=Tr(1/g)=1
  std::vector<int> solutions_trace_one; // same equations with rhs Tr(1)
  uint8_t trace_of_one = 0;
};

// Exhausts K* for the uniqueness claim behind P2. The literal equations use
// right-hand side 1; the trace_of_one variant is reported alongside because
// Tr(1) = 3, which is 1 only in characteristic 2.
UniquenessReport verify_trace_uniqueness(const FieldTower& tower);

void save_bijection(std::ostream& out, const PointLineBijection& bij,
                    const Plane& plane);
void save_bijection(const std::string& path, const PointLineBijection& bij,
                    const Plane& plane);
// re-certifies against the given plane; certification is never trusted from disk
PointLineBijection load_bijection(std::istream& in, const Plane& plane);
PointLineBijection load_bijection(const std::string& path, const Plane& plane);

} // namespace polypres
