// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cohlab/attachments.hpp"
#include "cohlab/catalog.hpp"
#include "cohlab/extension.hpp"
#include "cohlab/solver.hpp"
#include "testutil.hpp"

using namespace cohlab;
using test::Rng;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool all_pass = true;

void execute(const Criterion& c) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = c.run(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > c.budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("[%s] %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs,
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  all_pass = all_pass && ok;
}

long long euler(const Polyhedron& p) {
  return static_cast<long long>(p.vertex_count) - p.edge_count() + p.face_count();
}

bool transported_vertex_coherent(const Polyhedron& p, const Labelling& l) {
  auto dc = dual(p);
  Labelling dl(dc.dual.edge_count());
  for (int e = 0; e < p.edge_count(); ++e) dl[dc.edge_bijection[e]] = l[e];
  return is_vertex_coherent(dc.dual, dl).coherent;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  // 1. Tetrahedron enumeration: the eight fixed-minimum words and the 48.
  criteria.push_back({"1 tetrahedron enumeration: 8 words, count 48", 1.0, [](std::string& d) {
    auto t = tetrahedron();
    auto lst = enumerate_with_fixed_minimum(t.poly, t.symbol_edges[0]);
    std::set<std::string> got;
    for (const auto& l : lst) got.insert(test::labelling_to_word(t, l));
    std::set<std::string> want(test::tetra_words_expected().begin(),
                               test::tetra_words_expected().end());
    auto n = count_labellings(t.poly);
    std::ostringstream ss;
    ss << lst.size() << " words, count " << n;
    d = ss.str();
    return lst.size() == 8 && got == want && n == 48;
  }});

  // 2. Cube impossibility under both engines, plus the pinned-F1 replay.
  criteria.push_back({"2 cube impossibility: both engines, pinned F1", 10.0, [](std::string& d) {
    auto cl = cuboid_layout();
    bool bt = solve_backtracking(cl.poly).status == SolveStatus::infeasible;
    bool rot = solve_by_rotation_selection(cl.poly).status == SolveStatus::infeasible;
    bool cnt = count_labellings(cl.poly) == 0 && count_by_rotation_selection(cl.poly) == 0;
    RotationOptions opts;
    opts.pin = {cl.face_ids[0], 0};  // F1: x1 < x2 < x3 < x4
    auto pinned = solve_by_rotation_selection(cl.poly, opts);
    bool all_cyclic =
        pinned.status == SolveStatus::infeasible && pinned.nodes_explored == 1024;
    std::ostringstream ss;
    ss << "pinned completions tested: " << pinned.nodes_explored;
    d = ss.str();
    return bt && rot && cnt && all_cyclic;
  }});

  // 3. Pyramid formula for n = 3..12.
  criteria.push_back({"3 pyramid labelling coherent, n = 3..12", 1.0, [](std::string& d) {
    for (int n = 3; n <= 12; ++n) {
      auto [p, l] = pyramid(n);
      if (!is_coherent(p, l).coherent) {
        d = "n = " + std::to_string(n) + " incoherent";
        return false;
      }
    }
    return true;
  }});

  // 4. Bipyramids coherent; the bare octahedron independently feasible.
  criteria.push_back({"4 bipyramid labelling coherent, octahedron solvable", 30.0,
                      [](std::string& d) {
    for (int n = 3; n <= 12; ++n) {
      auto [p, l] = bipyramid(n);
      if (!is_coherent(p, l).coherent) {
        d = "n = " + std::to_string(n) + " incoherent";
        return false;
      }
    }
    auto oct = bipyramid(4).first;
    auto r = solve_backtracking(oct);
    bool ok = r.status == SolveStatus::feasible && is_coherent(oct, *r.witness).coherent;
    if (!ok) d = "octahedron search failed";
    return ok;
  }});

  // 5. Attachment preservation: >= 20 applications per mode, the five cube
  //    assembly steps in order, and the sixth step rejected.
  criteria.push_back({"5 attachments A1-A5: corpora, cube steps, sixth rejected", 30.0,
                      [](std::string& d) {
    auto check_corpus = [&](const char* name, const std::vector<Attached>& corpus) {
      if (corpus.size() < 20) {
        d = std::string(name) + " corpus has " + std::to_string(corpus.size());
        return false;
      }
      for (const auto& out : corpus)
        if (euler(out.poly) != 2 || !is_coherent(out.poly, out.labels).coherent) {
          d = std::string(name) + " output failed validation";
          return false;
        }
      return true;
    };
    if (!check_corpus("a1", test::corpus_a1(20))) return false;
    if (!check_corpus("a2", test::corpus_a2(20))) return false;
    if (!check_corpus("a3", test::corpus_a3(20))) return false;
    if (!check_corpus("a4", test::corpus_a4(20))) return false;
    if (!check_corpus("a5", test::corpus_a5(20))) return false;

    auto asm_ = test::cube_assembly();  // throws if any of the five steps fails
    for (const auto& st : asm_.stages)
      if (!is_coherent(st.p, st.l).coherent) {
        d = "cube assembly stage incoherent";
        return false;
      }
    const auto& fin = asm_.final();
    if (fin.p.vertex_count != 7 || fin.p.edge_count() != 12 || fin.p.face_count() != 7) {
      d = "cube assembly has wrong shape";
      return false;
    }
    try {
      cap_triangle(fin.p, fin.l,
                   face_with_vertices(fin.p, std::vector<VertexId>{0, 6, 3}));
      d = "sixth step was not rejected";
      return false;
    } catch (const Error& e) {
      if (e.code() != Errc::VertexDegreeNot3) {
        d = "sixth step rejected with unexpected code";
        return false;
      }
    }
    d = "5 cube steps + 100 corpus applications";
    return true;
  }});

  // 6. Pyramidal extension property suite: 100 random pairs.
  criteria.push_back({"6 pyramidalize: 100 random labelled polyhedra", 60.0, [](std::string& d) {
    auto catalog = test::small_catalog(24);
    Rng rng(2026);
    int done = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto& p = catalog[trial % catalog.size()];
      auto l = test::random_permutation_labelling(p.edge_count(), rng);
      auto [q, ql] = pyramidalize(p, l);
      if (!is_coherent(q, ql).coherent) {
        d = "trial " + std::to_string(trial) + " incoherent";
        return false;
      }
      // original edges keep their relative order
      for (int e = 0; e < p.edge_count(); ++e)
        for (int e2 = 0; e2 < p.edge_count(); ++e2) {
          auto [a, b] = p.edges[e];
          auto [a2, b2] = p.edges[e2];
          bool before = l[e] < l[e2];
          bool after = ql[q.edge_between(a, b)] < ql[q.edge_between(a2, b2)];
          if (before != after) {
            d = "trial " + std::to_string(trial) + " disturbed the order";
            return false;
          }
        }
      ++done;
    }
    d = std::to_string(done) + "/100";
    return done == 100;
  }});

  // 7. Duality transfer on every catalog polyhedron with E <= 14.
  criteria.push_back({"7 duality: coherent iff dual vertex-coherent", 60.0, [](std::string& d) {
    Rng rng(777);
    int checked = 0;
    for (const auto& p : test::small_catalog(14)) {
      for (int i = 0; i < 50; ++i) {
        auto l = test::random_permutation_labelling(p.edge_count(), rng);
        if (is_coherent(p, l).coherent != transported_vertex_coherent(p, l)) {
          d = "disagreement found";
          return false;
        }
        ++checked;
      }
    }
    d = std::to_string(checked) + " transported labellings";
    return true;
  }});

  // 8. Truncation preserves vertex-coherence; chop-all from arbitrary labels.
  criteria.push_back({"8 truncation: 50 vertex-coherent instances + chop-all", 30.0,
                      [](std::string& d) {
    Rng rng(4242);
    auto catalog = test::small_catalog(12);
    int done = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const auto& base = catalog[trial % catalog.size()];
      auto l = test::random_permutation_labelling(base.edge_count(), rng);
      // dual of a pyramidalized polyhedron is always vertex-coherent
      auto [py, pyl] = pyramidalize(base, l);
      auto dc = dual(py);
      Labelling dl(dc.dual.edge_count());
      for (int e = 0; e < py.edge_count(); ++e) dl[dc.edge_bijection[e]] = pyl[e];
      if (!is_vertex_coherent(dc.dual, dl).coherent) {
        d = "generator failed";
        return false;
      }
      VertexId v = rng.below(dc.dual.vertex_count);
      auto [q, ql] = truncate_vertex(dc.dual, dl, v);
      if (!is_vertex_coherent(q, ql).coherent || euler(q) != 2) {
        d = "trial " + std::to_string(trial) + " lost vertex-coherence";
        return false;
      }
      ++done;
    }

    Labelling arb(6);
    for (int i = 0; i < 6; ++i) arb[i] = Rat(6 - i);
    auto t = tetrahedron();
    auto [tt, ttl] = truncate_all(t.poly, arb);
    Rng rng2(99);
    auto c = cuboid();
    auto cl = test::random_permutation_labelling(12, rng2);
    auto [tc, tcl] = truncate_all(c, cl);
    bool chop_all = is_vertex_coherent(tt, ttl).coherent &&
                    is_vertex_coherent(tc, tcl).coherent && tt.vertex_count == 12 &&
                    tc.vertex_count == 24;
    if (!chop_all) {
      d = "chop-all failed";
      return false;
    }
    d = std::to_string(done) + "/50 + cube/tetra chop-all";
    return done == 50;
  }});

  // 9. Cross-oracle equality of the two counting engines.
  criteria.push_back({"9 cross-oracle counts: tetra 48, cube 0, and friends", 300.0,
                      [](std::string& d) {
    struct Row {
      std::string name;
      Polyhedron p;
      std::optional<std::uint64_t> expected;
    };
    std::vector<Row> rows;
    rows.push_back({"tetrahedron", tetrahedron().poly, 48});
    rows.push_back({"cuboid", cuboid(), 0});
    rows.push_back({"pyramid(3)", pyramid(3).first, 48});
    rows.push_back({"pyramid(4)", pyramid(4).first, std::nullopt});
    rows.push_back({"pyramid(5)", pyramid(5).first, std::nullopt});
    rows.push_back({"prism(3)", prism(3), std::nullopt});
    rows.push_back({"bipyramid(3)", bipyramid(3).first, std::nullopt});
    std::ostringstream ss;
    for (const auto& row : rows) {
      auto a = count_labellings(row.p);
      auto b = count_by_rotation_selection(row.p);
      if (a != b) {
        d = row.name + ": engines disagree";
        return false;
      }
      if (row.expected && a != *row.expected) {
        d = row.name + ": expected " + std::to_string(*row.expected) + ", got " +
            std::to_string(a);
        return false;
      }
      ss << row.name << "=" << a << " ";
    }
    d = ss.str();
    return true;
  }});

  // 10. Symmetry closures on the tetrahedron's 48-set.
  criteria.push_back({"10 symmetry closures: cyclic shift and pair swaps", 1.0,
                      [](std::string& d) {
    auto t = tetrahedron();
    std::set<Labelling> all;
    for (EdgeId e = 0; e < 6; ++e)
      for (auto& l : enumerate_with_fixed_minimum(t.poly, e)) all.insert(l);
    if (all.size() != 48) {
      d = "48-set has " + std::to_string(all.size());
      return false;
    }
    for (const auto& l : all)
      if (all.count(cyclic_shift(l)) == 0) {
        d = "shift escapes the set";
        return false;
      }
    // all 8 subsets of the three opposite-pair swaps
    for (int mask = 0; mask < 8; ++mask) {
      for (const auto& l : all) {
        Labelling m = l;
        for (int pair = 0; pair < 3; ++pair)
          if (mask >> pair & 1)
            std::swap(m[t.symbol_edges[pair]], m[t.symbol_edges[pair + 3]]);
        if (all.count(m) == 0) {
          d = "swap mask " + std::to_string(mask) + " escapes the set";
          return false;
        }
      }
    }
    d = "48-set closed under 6 shifts and 8 swaps";
    return true;
  }});

  for (const auto& c : criteria) execute(c);
  std::printf("%s\n", all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all_pass ? 0 : 1;
}
