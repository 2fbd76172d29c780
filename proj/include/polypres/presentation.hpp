#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polypres/triples.hpp"

namespace polypres {

// z1...zn over {a,b,c}: starts with abc, no adjacent repeats cyclically
// (z_n != a closes the cycle against z1 = a)
struct Word {
  std::string letters;
  int n() const { return static_cast<int>(letters.size()); }
};

Word validate_word(const std::string& s);

// +1 for ab, ca, cb; -1 for ac, ba, bc. Keyed on (previous letter, current
// letter): a copy whose incoming pair signs +1 is straight, -1 dual. The
// three +1 pairs are exactly the (container, member) letter patterns of the
// triple conditions, and the word abc lands on (straight, straight, dual).
int sign(char x, char y);

enum class Orientation { straight, dual };

// point label x_i^t / line label y_i^t; copy is 0-based internally and
// 1-based in files and display strings
struct Label {
  int point = 0;
  int copy = 0;
  friend auto operator<=>(const Label&, const Label&) = default;
};

// Polygonal presentation: n labeled copies of the plane (straight) or its
// dual, the basic bijection lambda(x_i^t) = y_i^{t+1 mod n}, and a
// rotation-closed set of k-tuples. Base tuples come first, one per triple,
// followed by the rotation blocks.
struct Presentation {
  int k = 0;
  std::string word; // "triangle" or the word letters
  std::vector<Orientation> copies;
  std::vector<std::vector<Label>> tuples;
  int num_base = 0;
  bool verified = false;

  Plane plane;
  std::vector<int> tmap;
  uint64_t plane_hash = 0;
  uint64_t bijection_hash = 0;
  uint64_t triples_hash = 0;

  int n() const { return static_cast<int>(copies.size()); }
  int num_points() const { return plane.num_points(); }

  // is x_j^c incident to y_i^c inside copy c
  bool incident_in_copy(int c, int j, int i) const;

  uint64_t content_hash() const;
};

// three copies (straight, straight, dual), tuples (x_i^1, x_j^2, x_k^3)
// over the triple set, k = 3
Presentation build_euclidean(const Plane& plane, const PointLineBijection& bij,
                             const TripleSet& ts);

// n copies oriented by sign(z_{t-1} z_t); position t of each base tuple takes
// x_i, x_j or x_k as z_t is a, b or c; k = n
Presentation build_hyperbolic(const Plane& plane, const PointLineBijection& bij,
                              const TripleSet& ts, const Word& w);

// conditions: (1) closure under cyclic rotation, (2) a pair (x1, x2) is
// consecutive in some tuple iff x2 is incident to lambda(x1) in its copy,
// (3) at most one continuation per pair; plus lambda bijectivity and copy
// disjointness. Sets p.verified on pass.
Report verify_presentation(Presentation& p);

// everything but the word field (and verification state)
bool structurally_equal(const Presentation& a, const Presentation& b);

std::string label_str(const Label& l);      // x<i>^<t+1>
std::string line_label_str(const Label& l); // y<i>^<t+1>

void save_presentation(std::ostream& out, const Presentation& p);
void save_presentation(const std::string& path, const Presentation& p);
Presentation load_presentation(std::istream& in, const Plane& plane,
                               const PointLineBijection& bij,
                               const TripleSet& ts);
Presentation load_presentation(const std::string& path, const Plane& plane,
                               const PointLineBijection& bij,
                               const TripleSet& ts);

} // namespace polypres
