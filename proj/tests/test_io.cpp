#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "polypres/complex.hpp"
#include "polypres/hash.hpp"

using namespace polypres;

namespace {

struct Corpus {
  FieldTower tower{2, 1};
  Plane plane;
  PointLineBijection bij;
  TripleSet ts;
  Presentation pres;
  Corpus() : plane(build_pg2(tower)) {
    bij = trace_bijection(tower, plane);
    ts = enumerate_triples(plane, bij);
    pres = build_hyperbolic(plane, bij, ts, validate_word("abcbcab"));
    REQUIRE(verify_presentation(pres).pass());
  }
};

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal_inconsistency;
}

} // namespace

TEST_CASE("hash helpers") {
  Fnv1a h;
  h.str("abc");
  uint64_t v = h.value();
  CHECK(hash_hex(v).size() == 16);
  CHECK(parse_hash_hex(hash_hex(v)) == v);
  CHECK(code_of([] { parse_hash_hex("abc"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_hash_hex("xyzxyzxyzxyzxyzx"); }) ==
        Errc::parse_error);
}

TEST_CASE("planes round trip byte for byte") {
  Corpus c;
  std::ostringstream first;
  save_plane(first, c.plane);
  std::istringstream in(first.str());
  Plane back = load_plane(in);
  CHECK(same_structure(back, c.plane));
  CHECK(back.content_hash() == c.plane.content_hash());
  CHECK(back.provenance == Plane::Provenance::file);
  std::ostringstream second;
  save_plane(second, back);
  CHECK(second.str() == first.str());
}

TEST_CASE("plane files are strict") {
  auto reload = [](const std::string& text) {
    std::istringstream in(text);
    return load_plane(in);
  };
  CHECK(code_of([&] { reload("nonsense\n"); }) == Errc::parse_error);
  CHECK(code_of([&] { reload("plane x order 2\nL0: p0 p1\n"); }) ==
        Errc::parse_error); // wrong line size
  CHECK(code_of([&] { reload("plane x order 2\nL1: p0 p1 p2\n"); }) ==
        Errc::parse_error); // labels must be sequential
  CHECK(code_of([&] { reload("plane x order 2\nL0: p2 p1 p0\n"); }) ==
        Errc::parse_error); // points must ascend
}

TEST_CASE("bijections round trip and are re-certified on load") {
  Corpus c;
  std::ostringstream first;
  save_bijection(first, c.bij, c.plane);
  std::istringstream in(first.str());
  PointLineBijection back = load_bijection(in, c.plane);
  CHECK(back.map == c.bij.map);
  CHECK(back.certified == CertState::pass);
  std::ostringstream second;
  save_bijection(second, back, c.plane);
  CHECK(second.str() == first.str());
}

TEST_CASE("bijection loading distrusts the file") {
  Corpus c;
  std::ostringstream out;
  save_bijection(out, c.bij, c.plane);
  std::string text = out.str();

  // map two points to one line
  std::string dup = text;
  dup.replace(dup.find("p1 -> L1"), 8, "p1 -> L0");
  std::istringstream in1(dup);
  CHECK(code_of([&] { load_bijection(in1, c.plane); }) == Errc::not_bijective);

  // break the recorded plane hash
  std::string stale = text;
  size_t at = stale.find("plane ") + 6;
  stale[at] = stale[at] == '0' ? '1' : '0';
  std::istringstream in2(stale);
  CHECK(code_of([&] { load_bijection(in2, c.plane); }) == Errc::stale_input);

  // a different plane of the same order
  std::istringstream in3(text);
  Plane fano = oracle::fano();
  CHECK(code_of([&] { load_bijection(in3, fano); }) == Errc::plane_mismatch);
}

TEST_CASE("a loaded bijection that fails certification says so") {
  Corpus c;
  // hand-edit the file into a map violating P1
  std::ostringstream out;
  save_bijection(out, c.bij, c.plane);
  std::string text = out.str();
  text.replace(text.find("p0 -> L0"), 8, "p0 -> L2");
  text.replace(text.find("p2 -> L2"), 8, "p2 -> L0");
  std::istringstream in(text);
  PointLineBijection back = load_bijection(in, c.plane);
  CHECK(back.certified == CertState::fail);
  CHECK(!back.witness.empty());
}

TEST_CASE("triple sets round trip and refuse stale ancestry") {
  Corpus c;
  std::ostringstream first;
  save_triples(first, c.ts);
  std::istringstream in(first.str());
  TripleSet back = load_triples(in, c.plane, c.bij);
  CHECK(back.triples == c.ts.triples);
  CHECK(back.content_hash() == c.ts.content_hash());
  std::ostringstream second;
  save_triples(second, back);
  CHECK(second.str() == first.str());

  SearchResult other = search_bijection(oracle::fano());
  REQUIRE(other.found);
  std::istringstream in2(first.str());
  CHECK(code_of([&] { load_triples(in2, oracle::fano(), other.bijection); }) ==
        Errc::plane_mismatch);
}

TEST_CASE("presentations round trip with verification reset") {
  Corpus c;
  std::ostringstream first;
  save_presentation(first, c.pres);
  std::istringstream in(first.str());
  Presentation back = load_presentation(in, c.plane, c.bij, c.ts);
  CHECK(!back.verified);
  CHECK(structurally_equal(back, c.pres));
  CHECK(back.word == c.pres.word);
  CHECK(verify_presentation(back).pass());
  std::ostringstream second;
  save_presentation(second, back);
  CHECK(second.str() == first.str());
}

TEST_CASE("presentation files enforce the orientation rule") {
  Corpus c;
  std::ostringstream out;
  save_presentation(out, c.pres);
  std::string text = out.str();
  size_t at = text.find("copy 1 dual");
  REQUIRE(at != std::string::npos);
  text.replace(at, 11, "copy 1 straight");
  std::istringstream in(text);
  CHECK(code_of([&] { load_presentation(in, c.plane, c.bij, c.ts); }) ==
        Errc::parse_error);
}

TEST_CASE("derived hashes chain presentation files to their inputs") {
  Corpus c;
  std::ostringstream out;
  save_presentation(out, c.pres);
  std::string text = out.str();
  size_t at = text.find("bijection ") + 10;
  text[at] = text[at] == '0' ? '1' : '0';
  std::istringstream in(text);
  CHECK(code_of([&] { load_presentation(in, c.plane, c.bij, c.ts); }) ==
        Errc::stale_input);
}

TEST_CASE("complex reports are deterministic") {
  Corpus c;
  Polyhedron x = assemble(c.pres);
  ComplexReport rep = analyze(x);
  std::ostringstream a, b;
  write_complex_report(a, rep, x.presentation_hash);
  write_complex_report(b, rep, x.presentation_hash);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("V=7 E=49 F=21") != std::string::npos);
  CHECK(a.str().find("curvature=hyperbolic") != std::string::npos);
  std::string prefix = "# derived-from: presentation " +
                       hash_hex(x.presentation_hash);
  CHECK(a.str().find(prefix) != std::string::npos);
}
