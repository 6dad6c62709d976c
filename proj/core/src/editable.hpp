#pragma once

// Internal helper: face lists plus labels keyed by vertex pair, so surgery
// can add/remove edges and then rebuild a validated Polyhedron whose fresh
// edge ids pick their labels back up by pair.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cohlab/labelling.hpp"
#include "cohlab/polyhedron.hpp"

namespace cohlab::detail {

inline std::pair<VertexId, VertexId> vkey(VertexId a, VertexId b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

struct EditableSolid {
  std::vector<std::vector<VertexId>> faces;
  std::map<std::pair<VertexId, VertexId>, Rat> labels;

  static EditableSolid from(const Polyhedron& p, const Labelling& l) {
    EditableSolid s;
    s.faces = p.faces;
    for (std::size_t e = 0; e < p.edges.size(); ++e) s.labels[p.edges[e]] = l[e];
    return s;
  }

  void put(VertexId a, VertexId b, const Rat& r) { labels[vkey(a, b)] = r; }

  void erase(VertexId a, VertexId b) { labels.erase(vkey(a, b)); }

  void move_edge(VertexId a, VertexId b, VertexId a2, VertexId b2) {
    auto it = labels.find(vkey(a, b));
    Rat r = it->second;
    labels.erase(it);
    labels[vkey(a2, b2)] = r;
  }

  // Compacts vertex ids (surviving ids keep their relative order) and
  // rebuilds; labels ride along keyed by vertex pair.
  std::pair<Polyhedron, Labelling> build() const {
    std::set<VertexId> live;
    for (const auto& f : faces) live.insert(f.begin(), f.end());
    std::map<VertexId, VertexId> remap;
    VertexId next = 0;
    for (VertexId v : live) remap[v] = next++;

    std::vector<std::vector<VertexId>> compacted(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f) {
      compacted[f].reserve(faces[f].size());
      for (VertexId v : faces[f]) compacted[f].push_back(remap.at(v));
    }
    Polyhedron p = build_from_faces(std::move(compacted));

    std::map<std::pair<VertexId, VertexId>, Rat> moved;
    for (const auto& [k, r] : labels) {
      auto a = remap.find(k.first);
      auto b = remap.find(k.second);
      if (a == remap.end() || b == remap.end()) continue;  // label on a removed vertex
      moved[vkey(a->second, b->second)] = r;
    }
    Labelling l(p.edges.size());
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
      auto it = moved.find(p.edges[e]);
      if (it == moved.end())
        fail(Errc::MissingLabel, "edge " + std::to_string(p.edges[e].first) + "-" +
                                     std::to_string(p.edges[e].second) + " lost its label");
      l[e] = it->second;
    }
    return {std::move(p), std::move(l)};
  }

  std::set<Rat> used_values() const {
    std::set<Rat> s;
    for (const auto& [k, v] : labels) s.insert(v);
    return s;
  }
};

// Midpoint of the widest label-free gap inside the open interval (lo, hi);
// ties go to the leftmost gap. With no occupants this is the plain midpoint,
// matching the documented defaults.
inline Rat choose_in_open_interval(const Rat& lo, const Rat& hi, const std::set<Rat>& used) {
  if (!(lo < hi)) fail(Errc::NoFeasibleGap, "empty interval (" + lo.str() + ", " + hi.str() + ")");
  std::vector<Rat> cuts{lo};
  for (const Rat& u : used)
    if (lo < u && u < hi) cuts.push_back(u);
  cuts.push_back(hi);
  std::size_t best = 0;
  Rat best_width = cuts[1] - cuts[0];
  for (std::size_t i = 1; i + 1 < cuts.size(); ++i) {
    Rat w = cuts[i + 1] - cuts[i];
    if (w > best_width) {
      best_width = w;
      best = i;
    }
  }
  return midpoint(cuts[best], cuts[best + 1]);
}

// Deterministic defaults x + 1/2 and x - 1/2, displaced only on collision.
inline Rat choose_above(const Rat& x, const std::set<Rat>& used) {
  Rat def = x + Rat(1, 2);
  if (!used.count(def)) return def;
  return choose_in_open_interval(x, x + Rat(1), used);
}

inline Rat choose_below(const Rat& x, const std::set<Rat>& used) {
  Rat def = x - Rat(1, 2);
  if (!used.count(def)) return def;
  return choose_in_open_interval(x - Rat(1), x, used);
}

}  // namespace cohlab::detail
