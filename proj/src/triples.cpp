#include "polypres/triples.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "polypres/hash.hpp"
#include "textio.hpp"

namespace polypres {

uint64_t TripleSet::content_hash() const {
  Fnv1a h;
  h.str(plane_name).u64(plane_hash).u64(bijection_hash);
  h.u32(static_cast<uint32_t>(triples.size()));
  for (const auto& t : triples)
    h.u32(static_cast<uint32_t>(t.i))
        .u32(static_cast<uint32_t>(t.j))
        .u32(static_cast<uint32_t>(t.k));
  return h.value();
}

namespace {

void require_certified(const Plane& plane, const PointLineBijection& bij) {
  if (bij.plane_hash != plane.content_hash())
    fail(Errc::stale_input, "bijection does not belong to plane " + plane.name);
  if (bij.certified != CertState::pass)
    fail(Errc::not_certified,
         bij.certified == CertState::fail
             ? "bijection failed certification: " + bij.witness
             : "bijection is uncertified");
}

} // namespace

TripleSet enumerate_triples(const Plane& plane, const PointLineBijection& bij) {
  require_certified(plane, bij);
  TripleSet ts;
  ts.plane_name = plane.name;
  ts.plane_hash = bij.plane_hash;
  ts.bijection_hash = bij.content_hash();

  // one triple per flag (x_i, y_k): x_i on y_k forces x_j = y_i ∩ y_k
  for (int k = 0; k < plane.num_points(); ++k)
    for (int i : plane.line_points[bij.map[k]]) {
      int j = meet(plane, bij.map[i], bij.map[k]);
      ts.triples.push_back({i, j, k});
    }
  std::sort(ts.triples.begin(), ts.triples.end());
  return ts;
}

std::optional<Triple> complete_pair(const Plane& plane,
                                    const PointLineBijection& bij,
                                    PairKind kind, int a, int b) {
  require_certified(plane, bij);
  int P = plane.num_points();
  if (a < 0 || b < 0 || a >= P || b >= P)
    fail(Errc::internal_inconsistency, "point index out of range");

  switch (kind) {
    case PairKind::ik: {
      int i = a, k = b;
      if (i == k || !plane.incident(i, bij.map[k])) return std::nullopt;
      return Triple{i, meet(plane, bij.map[i], bij.map[k]), k};
    }
    case PairKind::ij: {
      int i = a, j = b;
      if (i == j || !plane.incident(j, bij.map[i])) return std::nullopt;
      int l = line_through(plane, i, j);
      int k = -1;
      for (int c = 0; c < P; ++c)
        if (bij.map[c] == l) {
          k = c;
          break;
        }
      if (k < 0)
        fail(Errc::internal_inconsistency,
             "no point maps to L" + std::to_string(l));
      return Triple{i, j, k};
    }
    case PairKind::jk: {
      int j = a, k = b;
      if (j == k || !plane.incident(j, bij.map[k])) return std::nullopt;
      int found = -1;
      for (int i : plane.line_points[bij.map[k]]) {
        if (meet(plane, bij.map[i], bij.map[k]) != j) continue;
        if (found >= 0)
          fail(Errc::internal_inconsistency,
               "two preimages of p" + std::to_string(j) +
                   " under the induced permutation of L" +
                   std::to_string(bij.map[k]));
        found = i;
      }
      if (found < 0) return std::nullopt;
      return Triple{found, j, k};
    }
  }
  fail(Errc::internal_inconsistency, "unknown pair kind");
}

Report verify_crucial_lemma(const Plane& plane, const PointLineBijection& bij,
                            const TripleSet& ts) {
  require_certified(plane, bij);
  if (ts.plane_hash != plane.content_hash() ||
      ts.bijection_hash != bij.content_hash())
    fail(Errc::stale_input, "triple set built from different inputs");

  Report rep;
  int q = plane.order;
  int P = plane.num_points();

  {
    size_t expected = static_cast<size_t>(q + 1) * (q * q + q + 1);
    bool ok = ts.triples.size() == expected;
    rep.add("count", ok,
            ok ? "" : std::to_string(ts.triples.size()) + " triples, expected " +
                          std::to_string(expected));
  }

  {
    bool ok = std::is_sorted(ts.triples.begin(), ts.triples.end()) &&
              std::adjacent_find(ts.triples.begin(), ts.triples.end()) ==
                  ts.triples.end();
    rep.add("sorted", ok, ok ? "" : "triples not sorted or not unique");
  }

  {
    bool ok = true;
    std::string w;
    for (const auto& t : ts.triples) {
      if (t.i >= 0 && t.j >= 0 && t.k >= 0 && t.i < P && t.j < P && t.k < P &&
          plane.incident(t.i, bij.map[t.k]) &&
          plane.incident(t.j, bij.map[t.i]) &&
          plane.incident(t.j, bij.map[t.k]))
        continue;
      ok = false;
      w = "triple (" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
          std::to_string(t.k) + ") violates the incidence conditions";
      break;
    }
    rep.add("membership", ok, w);
  }

  // each projection must hit every admissible pair exactly once and no
  // inadmissible pair at all
  struct Proj {
    PairKind kind;
    const char* check;
    int Triple::*first;
    int Triple::*second;
  };
  const Proj projections[] = {
      {PairKind::ik, "pair-ik", &Triple::i, &Triple::k},
      {PairKind::ij, "pair-ij", &Triple::i, &Triple::j},
      {PairKind::jk, "pair-jk", &Triple::j, &Triple::k},
  };
  for (const auto& proj : projections) {
    std::map<std::pair<int, int>, int> seen;
    for (const auto& t : ts.triples) ++seen[{t.*(proj.first), t.*(proj.second)}];
    bool ok = true;
    std::string w;
    for (int a = 0; a < P && ok; ++a)
      for (int b = 0; b < P && ok; ++b) {
        auto completed = complete_pair(plane, bij, proj.kind, a, b);
        auto it = seen.find({a, b});
        int actual = it == seen.end() ? 0 : it->second;
        std::string pair_str =
            "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (!completed) {
          if (actual != 0) {
            ok = false;
            w = "inadmissible pair " + pair_str + " appears in " +
                std::to_string(actual) + " triples";
          }
        } else if (actual != 1) {
          ok = false;
          w = "admissible pair " + pair_str + " appears in " +
              std::to_string(actual) + " triples, expected 1";
        } else if (!std::binary_search(ts.triples.begin(), ts.triples.end(),
                                       *completed)) {
          ok = false;
          w = "extension of " + pair_str + " is missing from the set";
        }
      }
    rep.add(proj.check, ok, w);
  }

  return rep;
}

void save_triples(std::ostream& out, const TripleSet& ts) {
  out << "triples over " << ts.plane_name << " " << hash_hex(ts.bijection_hash)
      << "\n";
  out << textio::derived_from_line(
             {{"plane", ts.plane_hash}, {"bijection", ts.bijection_hash}})
      << "\n";
  for (const auto& t : ts.triples)
    out << "t: " << t.i << " " << t.j << " " << t.k << "\n";
}

void save_triples(const std::string& path, const TripleSet& ts) {
  auto out = textio::open_out(path);
  save_triples(out, ts);
}

TripleSet load_triples(std::istream& in, const Plane& plane,
                       const PointLineBijection& bij) {
  using namespace textio;
  std::string line;
  expect(next_line(in, line), "empty triples file");
  auto toks = split(line);
  expect(toks.size() == 4 && toks[0] == "triples" && toks[1] == "over",
         "expected `triples over <plane> <bijection-hash>`, got: " + line);
  if (toks[2] != plane.name)
    fail(Errc::plane_mismatch, "triples are over " + toks[2] +
                                   ", loaded plane is " + plane.name);
  if (parse_hash_hex(toks[3]) != bij.content_hash())
    fail(Errc::stale_input, "bijection does not match the recorded hash");

  expect(next_line(in, line, false), "missing derived-from line");
  auto hashes = parse_derived_from(line, {"plane", "bijection"});
  if (hashes[0] != plane.content_hash() || hashes[1] != bij.content_hash())
    fail(Errc::stale_input, "inputs do not match the recorded hashes");

  TripleSet ts;
  ts.plane_name = plane.name;
  ts.plane_hash = hashes[0];
  ts.bijection_hash = hashes[1];
  int P = plane.num_points();
  while (next_line(in, line)) {
    toks = split(line);
    expect(toks.size() == 4 && toks[0] == "t:",
           "expected `t: i j k`, got: " + line);
    Triple t{parse_int(toks[1], "triple index"),
             parse_int(toks[2], "triple index"),
             parse_int(toks[3], "triple index")};
    expect(t.i < P && t.j < P && t.k < P, "triple index out of range: " + line);
    expect(ts.triples.empty() || ts.triples.back() < t,
           "triples not in sorted order at: " + line);
    ts.triples.push_back(t);
  }
  return ts;
}

TripleSet load_triples(const std::string& path, const Plane& plane,
                       const PointLineBijection& bij) {
  auto in = textio::open_in(path);
  return load_triples(in, plane, bij);
}

} // namespace polypres
