#pragma once

// Shared helpers for the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "cohlab/attachments.hpp"
#include "cohlab/catalog.hpp"
#include "cohlab/extension.hpp"
#include "cohlab/solver.hpp"

namespace cohlab::test {

struct LabelledPoly {
  Polyhedron p;
  Labelling l;
};

// splitmix64; self-contained so sequences are identical on every platform.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline Labelling random_permutation_labelling(int edge_count, Rng& rng) {
  std::vector<int> perm(edge_count);
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = edge_count - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  Labelling l(edge_count);
  for (int i = 0; i < edge_count; ++i) l[i] = Rat(perm[i]);
  return l;
}

// Random vertex relabelling; the face list is permuted ids, same orientation.
inline Polyhedron relabel_vertices(const Polyhedron& p, Rng& rng) {
  std::vector<VertexId> perm(p.vertex_count);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = p.vertex_count - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<std::vector<VertexId>> faces(p.faces.size());
  for (std::size_t f = 0; f < p.faces.size(); ++f)
    for (VertexId v : p.faces[f]) faces[f].push_back(perm[v]);
  return build_from_faces(std::move(faces));
}

// The eight fixed-minimum words of the tetrahedron, as (x1..x6) digit strings.
inline const std::vector<std::string>& tetra_words_expected() {
  static const std::vector<std::string> words{"124635", "134625", "125634", "135624",
                                              "135246", "136245", "145236", "146235"};
  return words;
}

inline Labelling word_to_labelling(const TetrahedronLayout& t, const std::string& word) {
  Labelling l(6);
  for (int i = 0; i < 6; ++i) l[t.symbol_edges[i]] = Rat(word[i] - '0');
  return l;
}

inline std::string labelling_to_word(const TetrahedronLayout& t, const Labelling& l) {
  std::string w;
  for (int i = 0; i < 6; ++i) w += static_cast<char>('0' + l[t.symbol_edges[i]].num());
  return w;
}

// Bipyramid over a triangle: equator 0,1,2, north apex 3, south apex 4.
inline Polyhedron bipyramid3_combinatorics() {
  return build_from_faces({{3, 0, 1}, {3, 1, 2}, {3, 2, 0}, {4, 1, 0}, {4, 2, 1}, {4, 0, 2}});
}

// A coherent labelling of that bipyramid whose north apex star is in the
// two-descent class, which is exactly what coherence-preserving corner
// truncation (uncap_vertex) needs. Kept as a frozen fixture so the capping
// corpus never depends on enumeration order.
inline LabelledPoly bipyramid3_capping_fixture() {
  Polyhedron p = bipyramid3_combinatorics();
  Labelling l(p.edge_count());
  auto put = [&](VertexId a, VertexId b, long long v) { l[p.edge_between(a, b)] = Rat(v); };
  put(3, 0, 4);  // north edges
  put(3, 1, 6);
  put(3, 2, 8);
  put(0, 1, 5);  // equator
  put(1, 2, 7);
  put(2, 0, 2);
  put(4, 0, 9);  // south edges
  put(4, 1, 1);
  put(4, 2, 3);
  return {std::move(p), std::move(l)};
}

// Coherence-preserving truncation of a degree-3 vertex: the inverse of
// cap_triangle. The three inserted labels are searched over label-gap
// midpoints; returns nullopt when no insertion keeps every face at one
// descent (which happens exactly when the corner star reads one descent in
// rotation order).
inline std::optional<LabelledPoly> uncap_vertex(const Polyhedron& p, const Labelling& l,
                                                VertexId v) {
  if (p.degree(v) != 3) return std::nullopt;
  const auto rot = p.vertex_rotations[v];
  const auto rot_f = p.rotation_faces[v];

  // A corner whose star reads one descent in rotation order admits no
  // label-preserving coherent truncation (the inserted triangle would need a
  // value inside an interval its own constraints exclude); skip the scan.
  {
    std::vector<Rat> star{l[rot[0]], l[rot[1]], l[rot[2]]};
    if (cyclic_descent_count(star) != 2) return std::nullopt;
  }

  // Vertex ids after removing v: ids above v slide down, cuts come last.
  auto remap = [&](VertexId u) { return u < v ? u : u - 1; };
  VertexId base = p.vertex_count - 1;
  std::array<VertexId, 3> cut{base, base + 1, base + 2};

  std::vector<std::vector<VertexId>> faces;
  for (FaceId f = 0; f < p.face_count(); ++f) {
    std::vector<VertexId> cyc;
    for (std::size_t i = 0; i < p.faces[f].size(); ++i) {
      VertexId u = p.faces[f][i];
      if (u != v) {
        cyc.push_back(remap(u));
        continue;
      }
      // f enters v along rot[k] and leaves along rot[k+1]; insert the two
      // cut vertices in that order.
      int k = -1;
      for (int j = 0; j < 3; ++j)
        if (rot_f[j] == f) k = j;
      cyc.push_back(cut[k]);
      cyc.push_back(cut[(k + 1) % 3]);
    }
    faces.push_back(std::move(cyc));
  }
  faces.push_back({cut[0], cut[2], cut[1]});
  Polyhedron out = build_from_faces(std::move(faces));

  Labelling base_labels(out.edge_count());
  for (int e = 0; e < p.edge_count(); ++e) {
    auto [a, b] = p.edges[e];
    VertexId a2, b2;
    if (a == v || b == v) {
      VertexId u = a == v ? b : a;
      int k = -1;
      for (int j = 0; j < 3; ++j)
        if (rot[j] == e) k = j;
      a2 = remap(u);
      b2 = cut[k];
    } else {
      a2 = remap(a);
      b2 = remap(b);
    }
    base_labels[out.edge_between(a2, b2)] = l[e];
  }

  std::array<EdgeId, 3> t{out.edge_between(cut[0], cut[1]), out.edge_between(cut[1], cut[2]),
                          out.edge_between(cut[2], cut[0])};

  auto candidates = [](const std::vector<Rat>& vals) {
    std::vector<Rat> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Rat> c;
    c.push_back(sorted.front() - Rat(1, 2));
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      c.push_back(midpoint(sorted[i], sorted[i + 1]));
    c.push_back(sorted.back() + Rat(1, 2));
    return c;
  };

  std::vector<Rat> fixed;
  for (int e = 0; e < p.edge_count(); ++e) fixed.push_back(l[e]);
  Labelling trial = base_labels;
  for (const Rat& t0 : candidates(fixed)) {
    auto with0 = fixed;
    with0.push_back(t0);
    for (const Rat& t1 : candidates(with0)) {
      auto with1 = with0;
      with1.push_back(t1);
      for (const Rat& t2 : candidates(with1)) {
        trial[t[0]] = t0;
        trial[t[1]] = t1;
        trial[t[2]] = t2;
        if (is_coherent(out, trial).coherent) return LabelledPoly{out, trial};
      }
    }
  }
  return std::nullopt;
}

// ---- attachment corpora ------------------------------------------------

inline std::vector<LabelledPoly> coherent_hosts() {
  std::vector<LabelledPoly> hosts;
  auto t = tetrahedron();
  for (const auto& w : tetra_words_expected()) hosts.push_back({t.poly, word_to_labelling(t, w)});
  for (int n = 4; n <= 6; ++n) {
    auto [p, l] = pyramid(n);
    hosts.push_back({std::move(p), std::move(l)});
  }
  for (int n = 3; n <= 5; ++n) {
    auto [p, l] = bipyramid(n);
    hosts.push_back({std::move(p), std::move(l)});
  }
  return hosts;
}

inline std::vector<Attached> corpus_a1(int want) {
  std::vector<Attached> out;
  for (const auto& host : coherent_hosts()) {
    LabelledPoly cur = host;
    for (int depth = 0; depth < 3 && static_cast<int>(out.size()) < want; ++depth) {
      FaceId f = -1;
      for (FaceId i = 0; i < cur.p.face_count(); ++i)
        if (cur.p.faces[i].size() == 3) {
          f = i;
          break;
        }
      if (f < 0) break;
      out.push_back(attach_a1(cur.p, cur.l, f));
      cur = {out.back().poly, normalize(out.back().labels)};
    }
    if (static_cast<int>(out.size()) >= want) break;
  }
  return out;
}

inline std::vector<Attached> corpus_a2(int want) {
  std::vector<Attached> out;
  for (const auto& host : coherent_hosts()) {
    for (FaceId f = 0; f < host.p.face_count() && static_cast<int>(out.size()) < want; ++f) {
      if (host.p.faces[f].size() != 3) continue;
      for (EdgeId b : host.p.face_edges[f]) {
        if (static_cast<int>(out.size()) >= want) break;
        try {
          out.push_back(attach_a2(host.p, host.l, f, b));
        } catch (const Error&) {
          // precondition not satisfiable here; skip
        }
      }
    }
    if (static_cast<int>(out.size()) >= want) break;
  }
  return out;
}

inline std::vector<Attached> corpus_a3(int want) {
  std::vector<Attached> out;
  for (const auto& host : coherent_hosts()) {
    for (FaceId f = 0; f < host.p.face_count() && static_cast<int>(out.size()) < want; ++f) {
      if (host.p.faces[f].size() != 3) continue;
      for (VertexId v : host.p.faces[f]) {
        if (static_cast<int>(out.size()) >= want) break;
        if (host.p.degree(v) != 3) continue;
        out.push_back(attach_a3(host.p, host.l, f, v));
      }
    }
    if (static_cast<int>(out.size()) >= want) break;
  }
  return out;
}

// Capping instances come from uncapping two-descent corners of coherent
// bipyramids (the frozen fixture first, then enumerated labellings).
inline std::vector<Attached> corpus_a4(int want) {
  std::vector<Attached> out;
  std::vector<LabelledPoly> sources;
  sources.push_back(bipyramid3_capping_fixture());
  {
    Polyhedron bp = bipyramid3_combinatorics();
    for (EdgeId e = 0; e < bp.edge_count() && sources.size() < 200; ++e)
      for (auto& l : enumerate_with_fixed_minimum(bp, e)) sources.push_back({bp, l});
  }
  for (const auto& src : sources) {
    for (VertexId v : {3, 4}) {
      if (static_cast<int>(out.size()) >= want) return out;
      auto host = uncap_vertex(src.p, src.l, v);
      if (!host) continue;
      FaceId triangle = host->p.face_count() - 1;  // uncap appends the cut face
      out.push_back(cap_triangle(host->p, host->l, triangle));
    }
  }
  return out;
}

inline std::vector<Attached> corpus_a5(int want) {
  std::vector<Attached> out;
  for (const auto& host : coherent_hosts()) {
    for (FaceId f1 = 0; f1 < host.p.face_count() && static_cast<int>(out.size()) < want; ++f1) {
      if (host.p.faces[f1].size() != 3) continue;
      for (FaceId f2 = f1 + 1; f2 < host.p.face_count(); ++f2) {
        if (static_cast<int>(out.size()) >= want) break;
        if (host.p.faces[f2].size() != 3) continue;
        int shared = 0;
        for (EdgeId e : host.p.face_edges[f1])
          for (EdgeId e2 : host.p.face_edges[f2])
            if (e == e2) ++shared;
        if (shared != 1) continue;
        try {
          out.push_back(attach_a5(host.p, host.l, f1, f2));
        } catch (const Error&) {
        }
      }
    }
    if (static_cast<int>(out.size()) >= want) break;
  }
  return out;
}

// ---- the cube assembly of the six-step narrative -----------------------

struct CubeAssembly {
  std::vector<LabelledPoly> stages;  // after each of the five attachments
  // vertex ids: v1=0 v6=1 v7=2 v8=3 v5=4 v4=5 v3=6 (apexes in attach order)
  LabelledPoly final() const { return stages.back(); }
};

// Runs the five-step construction; the labelling is normalized between steps
// so the cyclic-shift device stays available. Seeds are tried in word order
// until one satisfies every step's precondition.
inline CubeAssembly cube_assembly() {
  auto t = tetrahedron();
  // initial tetra on v1,v6,v7,v8 = 0,1,2,3 (the layout's own vertex cycles)
  for (const auto& word : tetra_words_expected()) {
    try {
      CubeAssembly asm_;
      LabelledPoly cur{t.poly, word_to_labelling(t, word)};

      auto step = [&](Attached a) {
        cur = {std::move(a.poly), normalize(a.labels)};
        asm_.stages.push_back(cur);
      };

      // [v1v5v6v8] glued on [v1v6v8], edge [v6v8] vanishes
      step(attach_a2(cur.p, cur.l, face_with_vertices(cur.p, std::vector<VertexId>{0, 1, 3}),
                     cur.p.edge_between(1, 3)));
      // [v1v4v5v6] glued on [v1v5v6], edge [v1v6] vanishes
      step(attach_a2(cur.p, cur.l, face_with_vertices(cur.p, std::vector<VertexId>{0, 4, 1}),
                     cur.p.edge_between(0, 1)));
      // [v1v3v4v5] glued on [v1v4v5], edge [v4v5] vanishes
      step(attach_a2(cur.p, cur.l, face_with_vertices(cur.p, std::vector<VertexId>{0, 5, 4}),
                     cur.p.edge_between(5, 4)));
      // [v1v3v5v8] glued on [v1v3v5] and [v1v5v8], edge [v1v5] vanishes
      step(attach_a5(cur.p, cur.l, face_with_vertices(cur.p, std::vector<VertexId>{0, 6, 4}),
                     face_with_vertices(cur.p, std::vector<VertexId>{0, 4, 3})));
      return asm_;
    } catch (const Error&) {
      // try the next seed word
    }
  }
  throw std::logic_error("no tetrahedron word admits the five-step cube assembly");
}

inline std::vector<Polyhedron> small_catalog(int max_edges) {
  std::vector<Polyhedron> cat;
  cat.push_back(tetrahedron().poly);
  for (int n = 4; n <= 7; ++n) cat.push_back(pyramid(n).first);
  for (int n = 3; n <= 4; ++n) cat.push_back(bipyramid(n).first);
  cat.push_back(cuboid());
  cat.push_back(prism(3));
  cat.push_back(prism(4));
  std::erase_if(cat, [&](const Polyhedron& p) { return p.edge_count() > max_edges; });
  return cat;
}

}  // namespace cohlab::test
