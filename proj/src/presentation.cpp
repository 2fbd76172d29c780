#include "polypres/presentation.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "polypres/hash.hpp"
#include "textio.hpp"

namespace polypres {

Word validate_word(const std::string& s) {
  for (char ch : s)
    if (ch != 'a' && ch != 'b' && ch != 'c')
      fail(Errc::bad_alphabet,
           "letter '" + std::string(1, ch) + "' is not in {a,b,c}");
  if (s.size() < 3 || s.compare(0, 3, "abc") != 0)
    fail(Errc::bad_prefix, "word must start with abc: " + s);
  for (size_t t = 0; t + 1 < s.size(); ++t)
    if (s[t] == s[t + 1])
      fail(Errc::proper_power, "repeated letter at position " +
                                   std::to_string(t + 1) + " in " + s);
  if (s.back() == 'a')
    fail(Errc::cyclic_power, "word ends in a, repeating the first letter: " + s);
  return Word{s};
}

int sign(char x, char y) {
  auto ok = [](char ch) { return ch == 'a' || ch == 'b' || ch == 'c'; };
  if (!ok(x) || !ok(y))
    fail(Errc::bad_alphabet, "sign needs letters from {a,b,c}");
  if (x == y) fail(Errc::same_letter, std::string(1, x) + std::string(1, y));
  // +1 exactly for the (container, member) patterns of the triple conditions
  if ((x == 'a' && y == 'b') || (x == 'c' && y == 'a') ||
      (x == 'c' && y == 'b'))
    return 1;
  return -1;
}

bool Presentation::incident_in_copy(int c, int j, int i) const {
  return copies[c] == Orientation::straight ? plane.incident(j, tmap[i])
                                            : plane.incident(i, tmap[j]);
}

uint64_t Presentation::content_hash() const {
  Fnv1a h;
  h.u32(static_cast<uint32_t>(k)).str(word);
  for (Orientation o : copies)
    h.u32(o == Orientation::straight ? 0u : 1u);
  h.u32(static_cast<uint32_t>(num_base));
  for (int b = 0; b < num_base; ++b)
    for (const Label& l : tuples[b])
      h.u32(static_cast<uint32_t>(l.point)).u32(static_cast<uint32_t>(l.copy));
  h.u64(plane_hash).u64(bijection_hash).u64(triples_hash);
  return h.value();
}

std::string label_str(const Label& l) {
  return "x" + std::to_string(l.point) + "^" + std::to_string(l.copy + 1);
}

std::string line_label_str(const Label& l) {
  return "y" + std::to_string(l.point) + "^" + std::to_string(l.copy + 1);
}

namespace {

void require_consistent(const Plane& plane, const PointLineBijection& bij,
                        const TripleSet& ts) {
  if (bij.plane_hash != plane.content_hash() ||
      ts.plane_hash != plane.content_hash() ||
      ts.bijection_hash != bij.content_hash())
    fail(Errc::stale_input, "plane, bijection and triples do not belong together");
  if (bij.certified != CertState::pass)
    fail(Errc::not_certified,
         bij.certified == CertState::fail
             ? "bijection failed certification: " + bij.witness
             : "bijection is uncertified");
}

void append_rotations(std::vector<std::vector<Label>>& tuples, int num_base,
                      int k) {
  for (int r = 1; r < k; ++r)
    for (int b = 0; b < num_base; ++b) {
      std::vector<Label> rot(k);
      for (int pos = 0; pos < k; ++pos) rot[pos] = tuples[b][(pos + r) % k];
      tuples.push_back(std::move(rot));
    }
}

Presentation build_core(const Plane& plane, const PointLineBijection& bij,
                        const TripleSet& ts, const std::string& letters,
                        const std::string& word_field) {
  require_consistent(plane, bij, ts);
  int n = static_cast<int>(letters.size());

  Presentation p;
  p.k = n;
  p.word = word_field;
  p.plane = plane;
  p.tmap = bij.map;
  p.plane_hash = plane.content_hash();
  p.bijection_hash = bij.content_hash();
  p.triples_hash = ts.content_hash();

  // copy t is straight exactly when the pair of letters entering it signs +1
  p.copies.resize(n);
  for (int t = 0; t < n; ++t)
    p.copies[t] = sign(letters[(t + n - 1) % n], letters[t]) > 0
                      ? Orientation::straight
                      : Orientation::dual;

  for (const Triple& tr : ts.triples) {
    std::vector<Label> tuple(n);
    for (int t = 0; t < n; ++t) {
      int point = letters[t] == 'a' ? tr.i : letters[t] == 'b' ? tr.j : tr.k;
      tuple[t] = Label{point, t};
    }
    p.tuples.push_back(std::move(tuple));
  }
  p.num_base = static_cast<int>(p.tuples.size());
  append_rotations(p.tuples, p.num_base, p.k);
  return p;
}

} // namespace

Presentation build_euclidean(const Plane& plane, const PointLineBijection& bij,
                             const TripleSet& ts) {
  return build_core(plane, bij, ts, "abc", "triangle");
}

Presentation build_hyperbolic(const Plane& plane, const PointLineBijection& bij,
                              const TripleSet& ts, const Word& w) {
  validate_word(w.letters);
  return build_core(plane, bij, ts, w.letters, w.letters);
}

Report verify_presentation(Presentation& p) {
  Report rep;
  p.verified = false;
  int n = p.n();
  int P = p.num_points();

  {
    bool ok = n >= 1 && p.k >= 1 && p.num_base >= 0 &&
              p.num_base <= static_cast<int>(p.tuples.size());
    std::string w = ok ? "" : "degenerate shape";
    for (size_t f = 0; f < p.tuples.size() && ok; ++f) {
      if (static_cast<int>(p.tuples[f].size()) != p.k) {
        ok = false;
        w = "tuple " + std::to_string(f) + " has length " +
            std::to_string(p.tuples[f].size()) + ", expected " +
            std::to_string(p.k);
        break;
      }
      for (const Label& l : p.tuples[f])
        if (l.point < 0 || l.point >= P || l.copy < 0 || l.copy >= n) {
          ok = false;
          w = "tuple " + std::to_string(f) + " holds an out-of-range label";
          break;
        }
    }
    rep.add("well-formed", ok, w);
    if (!ok) return rep;
  }

  {
    std::set<std::vector<Label>> seen(p.tuples.begin(), p.tuples.end());
    bool ok = seen.size() == p.tuples.size();
    rep.add("distinct", ok, ok ? "" : "duplicate tuples");
  }

  {
    // lambda (i,t) -> (i,t+1) on labels; injective onto all of L by count
    std::set<std::pair<int, int>> image;
    for (int t = 0; t < n; ++t)
      for (int i = 0; i < P; ++i) image.insert({i, (t + 1) % n});
    bool ok = static_cast<int>(image.size()) == P * n;
    rep.add("lambda-bijection", ok, ok ? "" : "lambda image misses labels");
  }

  std::set<std::vector<Label>> tuple_set(p.tuples.begin(), p.tuples.end());

  {
    bool ok = true;
    std::string w;
    for (const auto& tuple : p.tuples) {
      std::vector<Label> rot(tuple.begin() + 1, tuple.end());
      rot.push_back(tuple.front());
      if (!tuple_set.count(rot)) {
        ok = false;
        w = "rotation of (" + label_str(tuple[0]) + " ...) is missing";
        break;
      }
    }
    rep.add("closure", ok, w);
  }

  auto label_id = [P](const Label& l) { return l.copy * P + l.point; };
  std::map<std::pair<int, int>, int> pair_count;
  for (const auto& tuple : p.tuples) {
    int k = static_cast<int>(tuple.size());
    for (int t = 0; t < k; ++t)
      ++pair_count[{label_id(tuple[t]), label_id(tuple[(t + 1) % k])}];
  }

  {
    bool ok = true;
    std::string w;
    // consecutive pairs may only bridge copy t to copy t+1
    for (const auto& [pr, cnt] : pair_count) {
      int cu = pr.first / P, cv = pr.second / P;
      if (cv != (cu + 1) % n) {
        ok = false;
        w = "consecutive pair " +
            label_str({pr.first % P, cu}) + " " +
            label_str({pr.second % P, cv}) + " skips a copy";
        break;
      }
    }
    // within bridging pairs, presence must match lambda-incidence exactly
    for (int t = 0; t < n && ok; ++t)
      for (int i = 0; i < P && ok; ++i)
        for (int j = 0; j < P && ok; ++j) {
          int c = (t + 1) % n;
          bool expected = p.incident_in_copy(c, j, i);
          bool actual = pair_count.count({t * P + i, c * P + j}) > 0;
          if (expected != actual) {
            ok = false;
            w = "pair " + label_str({i, t}) + " " + label_str({j, c}) +
                (actual ? " appears but " : " missing though ") +
                label_str({j, c}) + " is " + (expected ? "" : "not ") +
                "incident to " + line_label_str({i, c});
          }
        }
    rep.add("pairs", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    std::map<std::pair<int, int>, int> continuation;
    for (const auto& tuple : p.tuples) {
      int k = static_cast<int>(tuple.size());
      if (k < 3) continue;
      for (int t = 0; t < k && ok; ++t) {
        auto key = std::make_pair(label_id(tuple[t]),
                                  label_id(tuple[(t + 1) % k]));
        int next = label_id(tuple[(t + 2) % k]);
        auto [it, inserted] = continuation.emplace(key, next);
        if (!inserted && it->second != next) {
          ok = false;
          w = "pair " + label_str(tuple[t]) + " " +
              label_str(tuple[(t + 1) % k]) + " continues two ways";
        }
      }
      if (!ok) break;
    }
    rep.add("unique-continuation", ok, w);
  }

  p.verified = rep.pass();
  return rep;
}

bool structurally_equal(const Presentation& a, const Presentation& b) {
  return a.k == b.k && a.copies == b.copies && a.num_base == b.num_base &&
         a.tuples == b.tuples && a.tmap == b.tmap &&
         same_structure(a.plane, b.plane) && a.plane_hash == b.plane_hash &&
         a.bijection_hash == b.bijection_hash &&
         a.triples_hash == b.triples_hash;
}

void save_presentation(std::ostream& out, const Presentation& p) {
  out << "presentation k=" << p.k << " n=" << p.n() << " word=" << p.word
      << "\n";
  out << textio::derived_from_line({{"plane", p.plane_hash},
                                    {"bijection", p.bijection_hash},
                                    {"triples", p.triples_hash}})
      << "\n";
  for (int t = 0; t < p.n(); ++t)
    out << "copy " << t + 1 << " "
        << (p.copies[t] == Orientation::straight ? "straight" : "dual")
        << "\n";
  out << "lambda x<i>^<t> -> y<i>^<t+1>\n";
  for (int b = 0; b < p.num_base; ++b) {
    out << "f:";
    for (const Label& l : p.tuples[b]) out << " " << label_str(l);
    out << "\n";
  }
}

void save_presentation(const std::string& path, const Presentation& p) {
  auto out = textio::open_out(path);
  save_presentation(out, p);
}

Presentation load_presentation(std::istream& in, const Plane& plane,
                               const PointLineBijection& bij,
                               const TripleSet& ts) {
  using namespace textio;
  std::string line;
  expect(next_line(in, line), "empty presentation file");
  auto toks = split(line);
  expect(toks.size() == 4 && toks[0] == "presentation",
         "expected `presentation k=<k> n=<n> word=<w>`, got: " + line);
  int k = parse_int(field(toks[1], "k"), "k");
  int n = parse_int(field(toks[2], "n"), "n");
  std::string word = field(toks[3], "word");
  expect(k == n && n >= 3, "presentation needs k = n >= 3");

  expect(next_line(in, line, false), "missing derived-from line");
  auto hashes = parse_derived_from(line, {"plane", "bijection", "triples"});
  if (hashes[0] != plane.content_hash() || hashes[1] != bij.content_hash() ||
      hashes[2] != ts.content_hash())
    fail(Errc::stale_input, "inputs do not match the recorded hashes");

  std::string letters = word == "triangle" ? "abc" : word;
  validate_word(letters);
  expect(static_cast<int>(letters.size()) == n,
         "word length does not match n=" + std::to_string(n));

  Presentation p;
  p.k = k;
  p.word = word;
  p.plane = plane;
  p.tmap = bij.map;
  p.plane_hash = hashes[0];
  p.bijection_hash = hashes[1];
  p.triples_hash = hashes[2];

  p.copies.resize(n);
  for (int t = 0; t < n; ++t) {
    expect(next_line(in, line), "missing copy record for copy " +
                                    std::to_string(t + 1));
    toks = split(line);
    expect(toks.size() == 3 && toks[0] == "copy" &&
               parse_int(toks[1], "copy index") == t + 1 &&
               (toks[2] == "straight" || toks[2] == "dual"),
           "expected `copy " + std::to_string(t + 1) +
               " <straight|dual>`, got: " + line);
    p.copies[t] =
        toks[2] == "straight" ? Orientation::straight : Orientation::dual;
    Orientation from_word = sign(letters[(t + n - 1) % n], letters[t]) > 0
                                ? Orientation::straight
                                : Orientation::dual;
    expect(p.copies[t] == from_word,
           "copy " + std::to_string(t + 1) + " orientation contradicts the word");
  }

  expect(next_line(in, line) && line == "lambda x<i>^<t> -> y<i>^<t+1>",
         "expected the lambda rule line, got: " + line);

  int P = plane.num_points();
  while (next_line(in, line)) {
    toks = split(line);
    expect(static_cast<int>(toks.size()) == k + 1 && toks[0] == "f:",
           "expected `f:` with " + std::to_string(k) + " labels, got: " + line);
    std::vector<Label> tuple(k);
    for (int pos = 0; pos < k; ++pos) {
      auto [i, t] = parse_label(toks[pos + 1], 'x', "tuple label");
      expect(t == pos + 1, "tuple label " + toks[pos + 1] +
                               " out of copy order in: " + line);
      expect(i < P, "point index out of range in: " + line);
      tuple[pos] = Label{i, pos};
    }
    p.tuples.push_back(std::move(tuple));
  }
  p.num_base = static_cast<int>(p.tuples.size());
  append_rotations(p.tuples, p.num_base, p.k);
  return p;
}

Presentation load_presentation(const std::string& path, const Plane& plane,
                               const PointLineBijection& bij,
                               const TripleSet& ts) {
  auto in = textio::open_in(path);
  return load_presentation(in, plane, bij, ts);
}

} // namespace polypres
