#include "polypres/pointline.hpp"

#include <atomic>
#include <bit>
#include <climits>
#include <functional>
#include <ostream>
#include <thread>

#include "polypres/hash.hpp"
#include "textio.hpp"

namespace polypres {

uint64_t PointLineBijection::content_hash() const {
  Fnv1a h;
  h.u64(plane_hash);
  h.u32(static_cast<uint32_t>(map.size()));
  for (int l : map) h.u32(static_cast<uint32_t>(l));
  return h.value();
}

Certification verify_properties(const Plane& plane, PointLineBijection& bij) {
  int P = plane.num_points();
  int L = plane.num_lines();
  if (static_cast<int>(bij.map.size()) != P || P != L)
    fail(Errc::not_bijective, "map has " + std::to_string(bij.map.size()) +
                                  " entries for " + std::to_string(P) +
                                  " points and " + std::to_string(L) +
                                  " lines");
  std::vector<char> hit(L, 0);
  for (int x = 0; x < P; ++x) {
    int l = bij.map[x];
    if (l < 0 || l >= L)
      fail(Errc::not_bijective,
           "p" + std::to_string(x) + " maps to invalid L" + std::to_string(l));
    if (hit[l])
      fail(Errc::not_bijective, "L" + std::to_string(l) + " hit twice");
    hit[l] = 1;
  }

  Certification cert;
  cert.state = CertState::pass;
  for (int x = 0; x < P && cert.state == CertState::pass; ++x)
    if (plane.incident(x, bij.map[x])) {
      cert.state = CertState::fail;
      cert.witness = "P1: p" + std::to_string(x) + " lies on its image L" +
                     std::to_string(bij.map[x]);
    }
  for (int x1 = 0; x1 < P && cert.state == CertState::pass; ++x1)
    for (int x2 = x1 + 1; x2 < P && cert.state == CertState::pass; ++x2) {
      int z = meet(plane, bij.map[x1], bij.map[x2]);
      int l = line_through(plane, x1, x2);
      if (plane.incident(z, l)) {
        cert.state = CertState::fail;
        cert.witness = "P2: p" + std::to_string(x1) + " p" +
                       std::to_string(x2) + " and the image meet p" +
                       std::to_string(z) + " are collinear on L" +
                       std::to_string(l);
      }
    }

  bij.certified = cert.state;
  bij.witness = cert.witness;
  return cert;
}

namespace {

PointLineBijection trace_impl(const FieldTower& tower, const Plane& plane,
                              bool enforce_characteristic) {
  if (plane.provenance != Plane::Provenance::algebraic ||
      plane.tower_p != tower.characteristic() ||
      plane.tower_e != tower.base_degree() || plane.order != tower.q() ||
      static_cast<int>(plane.coset_reps.size()) != plane.num_points())
    fail(Errc::plane_mismatch,
         "plane " + plane.name + " was not built from this field tower");
  if (enforce_characteristic && tower.characteristic() == 3)
    fail(Errc::characteristic_three,
         "trace(1) = 0, so every point would lie on its image line");

  // point i and line i are the cosets g_i F and g_i E of one representative,
  // so T(gF) = gE is the identity on indices
  PointLineBijection bij;
  bij.map.resize(plane.num_points());
  for (int i = 0; i < plane.num_points(); ++i) bij.map[i] = i;
  bij.plane_hash = plane.content_hash();
  verify_properties(plane, bij);
  return bij;
}

} // namespace

PointLineBijection trace_bijection(const FieldTower& tower,
                                   const Plane& plane) {
  return trace_impl(tower, plane, true);
}

PointLineBijection trace_bijection_unchecked_char(const FieldTower& tower,
                                                  const Plane& plane) {
  return trace_impl(tower, plane, false);
}

InducedPermutation induced_permutation(const Plane& plane,
                                       const PointLineBijection& bij, int y) {
  if (bij.certified != CertState::pass)
    fail(Errc::not_certified, "induced permutation needs a certified bijection");
  if (y < 0 || y >= plane.num_lines())
    fail(Errc::internal_inconsistency, "line index out of range");
  InducedPermutation ip;
  ip.line = y;
  for (int x : plane.line_points[y])
    ip.perm.emplace_back(x, meet(plane, bij.map[x], y));
  return ip;
}

namespace {

// join/meet lookup with -1 for pairs a valid plane would never produce;
// the search treats -1 as an unsatisfiable constraint
struct Tables {
  int num_points = 0, num_lines = 0, words = 0;
  std::vector<int> join, meets;

  int join_at(int p1, int p2) const { return join[p1 * num_points + p2]; }
  int meet_at(int l1, int l2) const { return meets[l1 * num_lines + l2]; }
};

Tables make_tables(const Plane& plane) {
  Tables t;
  t.num_points = plane.num_points();
  t.num_lines = plane.num_lines();
  t.words = (t.num_lines + 63) / 64;
  t.join.assign(static_cast<size_t>(t.num_points) * t.num_points, -1);
  for (int p1 = 0; p1 < t.num_points; ++p1)
    for (int p2 = p1 + 1; p2 < t.num_points; ++p2) {
      int count = 0, found = -1;
      for (int l : plane.point_lines[p1])
        if (plane.incident(p2, l)) {
          ++count;
          found = l;
        }
      int j = count == 1 ? found : -1;
      t.join[p1 * t.num_points + p2] = j;
      t.join[p2 * t.num_points + p1] = j;
    }
  t.meets.assign(static_cast<size_t>(t.num_lines) * t.num_lines, -1);
  for (int l1 = 0; l1 < t.num_lines; ++l1)
    for (int l2 = l1 + 1; l2 < t.num_lines; ++l2) {
      int count = 0, found = -1;
      for (int p : plane.line_points[l1])
        if (plane.incident(p, l2)) {
          ++count;
          found = p;
        }
      int z = count == 1 ? found : -1;
      t.meets[l1 * t.num_lines + l2] = z;
      t.meets[l2 * t.num_lines + l1] = z;
    }
  return t;
}

// Depth-first search over one branch (fixed first assignment) or the whole
// tree. Domains carry, per unassigned point, the lines still compatible with
// P1, the used set, and P2 against everything assigned so far.
class TreeSearch {
public:
  TreeSearch(const Plane& plane, const Tables& tab, uint64_t budget,
             std::atomic<uint64_t>& nodes, std::atomic<bool>& overbudget,
             std::function<bool()> abort)
      : plane_(plane), tab_(tab), budget_(budget), nodes_(nodes),
        overbudget_(overbudget), abort_(std::move(abort)) {
    map_.assign(tab.num_points, -1);
  }

  bool aborted() const { return aborted_; }
  const std::vector<int>& solution() const { return map_; }

  std::vector<uint64_t> initial_domains() const {
    std::vector<uint64_t> dom(
        static_cast<size_t>(tab_.num_points) * tab_.words, 0);
    for (int p = 0; p < tab_.num_points; ++p)
      for (int l = 0; l < tab_.num_lines; ++l)
        if (!plane_.incident(p, l))
          dom[p * tab_.words + l / 64] |= 1ull << (l % 64);
    return dom;
  }

  bool run(int first_line) {
    auto dom = initial_domains();
    if (first_line < 0) return dfs(0, dom);
    if (tab_.num_points == 0) return true;
    if (!(dom[first_line / 64] >> (first_line % 64) & 1)) return false;
    return place(0, first_line, dom);
  }

private:
  bool dfs(int depth, std::vector<uint64_t>& dom) {
    if (depth == tab_.num_points) return true;
    for (int w = 0; w < tab_.words; ++w) {
      uint64_t bits = dom[depth * tab_.words + w];
      while (bits) {
        int l = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (place(depth, l, dom)) return true;
        if (aborted_) return false;
      }
    }
    return false;
  }

  bool place(int depth, int line, std::vector<uint64_t>& dom) {
    uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_) {
      overbudget_.store(true);
      aborted_ = true;
      return false;
    }
    if (abort_ && abort_()) {
      aborted_ = true;
      return false;
    }

    map_[depth] = line;
    std::vector<uint64_t> next(dom);
    bool dead = false;
    for (int f = depth + 1; f < tab_.num_points && !dead; ++f) {
      uint64_t* row = next.data() + static_cast<size_t>(f) * tab_.words;
      row[line / 64] &= ~(1ull << (line % 64));
      int jline = tab_.join_at(f, depth);
      uint64_t any = 0;
      for (int w = 0; w < tab_.words; ++w) {
        uint64_t bits = row[w];
        while (bits) {
          int cand = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          int z = tab_.meet_at(cand, line);
          if (z < 0 || jline < 0 || plane_.incident(z, jline))
            row[w] &= ~(1ull << (cand % 64));
        }
        any |= row[w];
      }
      dead = any == 0;
    }
    if (!dead && dfs(depth + 1, next)) return true;
    map_[depth] = -1;
    return false;
  }

  const Plane& plane_;
  const Tables& tab_;
  uint64_t budget_;
  std::atomic<uint64_t>& nodes_;
  std::atomic<bool>& overbudget_;
  std::function<bool()> abort_;
  std::vector<int> map_;
  bool aborted_ = false;
};

} // namespace

SearchResult search_bijection(const Plane& plane, const SearchConfig& config) {
  SearchResult result;
  if (plane.num_points() != plane.num_lines()) return result;

  Tables tab = make_tables(plane);
  std::atomic<uint64_t> nodes{0};
  std::atomic<bool> overbudget{false};
  bool found = false;
  std::vector<int> solution;

  if (config.jobs <= 1) {
    TreeSearch ts(plane, tab, config.budget, nodes, overbudget, {});
    found = ts.run(-1);
    if (found) solution = ts.solution();
  } else {
    // one branch per root candidate; the smallest branch holding a solution
    // wins, so workers abort only branches above the current best
    std::vector<int> branches;
    {
      TreeSearch probe(plane, tab, config.budget, nodes, overbudget, {});
      auto dom = probe.initial_domains();
      for (int l = 0; l < tab.num_lines; ++l)
        if (tab.num_points > 0 && (dom[l / 64] >> (l % 64) & 1))
          branches.push_back(l);
    }
    if (tab.num_points == 0) {
      found = true;
    } else {
      std::atomic<size_t> next{0};
      std::atomic<int> best{INT_MAX};
      std::vector<std::vector<int>> sols(branches.size());
      std::vector<std::exception_ptr> errors(config.jobs);
      std::vector<std::thread> workers;
      for (int j = 0; j < config.jobs; ++j)
        workers.emplace_back([&, j] {
          try {
            for (;;) {
              size_t i = next.fetch_add(1);
              if (i >= branches.size()) break;
              if (overbudget.load() || best.load() < static_cast<int>(i))
                continue;
              TreeSearch ts(plane, tab, config.budget, nodes, overbudget,
                            [&, i] {
                              return overbudget.load() ||
                                     best.load() < static_cast<int>(i);
                            });
              if (ts.run(branches[i])) {
                sols[i] = ts.solution();
                int cur = best.load();
                while (static_cast<int>(i) < cur &&
                       !best.compare_exchange_weak(cur, static_cast<int>(i))) {
                }
              }
            }
          } catch (...) {
            errors[j] = std::current_exception();
          }
        });
      for (auto& w : workers) w.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
      if (best.load() != INT_MAX) {
        found = true;
        solution = sols[best.load()];
      }
    }
  }

  result.nodes = nodes.load();
  if (overbudget.load())
    fail(Errc::budget_exceeded,
         "node budget " + std::to_string(config.budget) + " exceeded");
  if (!found) return result;

  result.found = true;
  result.bijection.map = std::move(solution);
  result.bijection.plane_hash = plane.content_hash();
  Certification cert = verify_properties(plane, result.bijection);
  if (cert.state != CertState::pass)
    fail(Errc::internal_inconsistency,
         "search produced an uncertifiable map: " + cert.witness);
  return result;
}

UniquenessReport verify_trace_uniqueness(const FieldTower& tower) {
  UniquenessReport r;
  r.trace_of_one = tower.trace(tower.one());
  for (int enc = 1; enc < tower.order_k(); ++enc) {
    FieldElement g = tower.from_enc(enc);
    uint8_t tg = tower.trace(g);
    uint8_t tgi = tower.trace(tower.inv(g));
    if (tg == 1 && tgi == 1) r.solutions_one.push_back(enc);
    if (tg == r.trace_of_one && tgi == r.trace_of_one)
      r.solutions_trace_one.push_back(enc);
  }
  r.pass = r.solutions_one.size() == 1 && r.solutions_one[0] == 1;
  return r;
}

void save_bijection(std::ostream& out, const PointLineBijection& bij,
                    const Plane& plane) {
  if (bij.plane_hash != plane.content_hash() ||
      static_cast<int>(bij.map.size()) != plane.num_points())
    fail(Errc::stale_input, "bijection does not belong to plane " + plane.name);
  out << "bijection over " << plane.name << "\n";
  out << textio::derived_from_line({{"plane", bij.plane_hash}}) << "\n";
  for (size_t i = 0; i < bij.map.size(); ++i)
    out << "p" << i << " -> L" << bij.map[i] << "\n";
}

void save_bijection(const std::string& path, const PointLineBijection& bij,
                    const Plane& plane) {
  auto out = textio::open_out(path);
  save_bijection(out, bij, plane);
}

PointLineBijection load_bijection(std::istream& in, const Plane& plane) {
  using namespace textio;
  std::string line;
  expect(next_line(in, line), "empty bijection file");
  auto toks = split(line);
  expect(toks.size() == 3 && toks[0] == "bijection" && toks[1] == "over",
         "expected `bijection over <plane>`, got: " + line);
  if (toks[2] != plane.name)
    fail(Errc::plane_mismatch, "bijection is over " + toks[2] +
                                   ", loaded plane is " + plane.name);

  expect(next_line(in, line, false), "missing derived-from line");
  uint64_t stored = parse_derived_from(line, {"plane"})[0];
  if (stored != plane.content_hash())
    fail(Errc::stale_input, "plane " + plane.name +
                                " does not match the bijection's recorded hash");

  PointLineBijection bij;
  bij.plane_hash = stored;
  while (next_line(in, line)) {
    toks = split(line);
    int i = static_cast<int>(bij.map.size());
    expect(toks.size() == 3 && toks[1] == "->",
           "expected `p<i> -> L<j>`, got: " + line);
    expect(parse_indexed(toks[0], 'p', "point index") == i,
           "expected record for p" + std::to_string(i) + ", got: " + line);
    bij.map.push_back(parse_indexed(toks[2], 'L', "line index"));
  }
  expect(static_cast<int>(bij.map.size()) == plane.num_points(),
         "bijection has " + std::to_string(bij.map.size()) +
             " records for " + std::to_string(plane.num_points()) + " points");
  verify_properties(plane, bij); // certification is never trusted from disk
  return bij;
}

PointLineBijection load_bijection(const std::string& path, const Plane& plane) {
  auto in = textio::open_in(path);
  return load_bijection(in, plane);
}

} // namespace polypres
