#include "cohlab/extension.hpp"

#include <algorithm>

#include "editable.hpp"

namespace cohlab {

namespace {

using detail::EditableSolid;
using detail::choose_in_open_interval;

// Smallest difference between consecutive sorted labels. The inductive rule
// keeps its "low zone" inside (a_1, a_1 + gap), which no other label can
// enter; canonical integer labels give gap = 1 and the documented half-offset
// defaults.
Rat min_gap(const Labelling& l) {
  std::vector<Rat> sorted(l.begin(), l.end());
  std::sort(sorted.begin(), sorted.end());
  Rat g = sorted[1] - sorted[0];
  for (std::size_t i = 1; i + 1 < sorted.size(); ++i)
    g = std::min(g, sorted[i + 1] - sorted[i]);
  return g;
}

}  // namespace

Extended attach_pyramid_to_face(const Polyhedron& p, const Labelling& l, FaceId face) {
  validate_labels(p, l);
  if (face < 0 || face >= p.face_count()) fail(Errc::UnknownFace, "face " + std::to_string(face));

  const auto& fe = p.face_edges[face];
  const auto& fv = p.faces[face];
  int n = static_cast<int>(fe.size());
  Rat gap = min_gap(l);

  // Rotate so alpha[0] is the face minimum.
  int s = 0;
  for (int i = 1; i < n; ++i)
    if (l[fe[i]] < l[fe[s]]) s = i;
  std::vector<Rat> alpha(n);
  std::vector<VertexId> u(n);
  for (int i = 0; i < n; ++i) {
    alpha[i] = l[fe[(s + i) % n]];
    u[i] = fv[(s + i) % n];
  }

  EditableSolid solid = EditableSolid::from(p, l);
  auto used = solid.used_values();

  // beta[i] labels edge {u[i], apex}: it sits between base edges i-1 and i,
  // so beta[0] is the closing label chosen last.
  std::vector<Rat> beta(n);
  Rat low = alpha[0] + gap;
  beta[1] = choose_in_open_interval(alpha[0], low, used);
  used.insert(beta[1]);
  Rat running_min = beta[1];
  for (int i = 2; i < n; ++i) {
    const Rat& ai = alpha[i - 1];
    const Rat& ai1 = alpha[i];
    if (ai < ai1) {
      Rat lo = std::max(ai, beta[i - 1]);
      Rat hi = std::min(ai + gap, ai1);
      beta[i] = choose_in_open_interval(lo, hi, used);
    } else {
      beta[i] = choose_in_open_interval(alpha[0], running_min, used);
    }
    used.insert(beta[i]);
    running_min = std::min(running_min, beta[i]);
  }
  Rat closing_floor = std::max(alpha[n - 1], beta[1]);
  beta[0] = choose_in_open_interval(closing_floor, closing_floor + gap, used);

  VertexId apex = p.vertex_count;
  solid.faces.erase(solid.faces.begin() + face);
  for (int i = 0; i < n; ++i) {
    solid.faces.push_back({u[i], u[(i + 1) % n], apex});
    solid.put(u[i], apex, beta[i]);
  }

  auto [poly, labels] = solid.build();
  // New triangles read (b_{(i-1)i}, a_i, b_{i(i+1)}); check them all.
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> tri{beta[i], alpha[i], beta[(i + 1) % n]};
    if (cyclic_descent_count(tri) != 1)
      throw std::logic_error("attach_pyramid_to_face produced an incoherent triangle");
  }

  PyramidExtensionTrace trace;
  trace.face = face;
  trace.apex = apex;
  trace.base_labels = std::move(alpha);
  trace.apex_labels.assign(beta.begin() + 1, beta.end());
  trace.apex_labels.push_back(beta[0]);
  return {std::move(poly), std::move(labels), std::move(trace)};
}

std::pair<Polyhedron, Labelling> pyramidalize(const Polyhedron& p, const Labelling& l) {
  validate_labels(p, l);
  Polyhedron cur_p = p;
  Labelling cur_l = normalize(l);
  // Only the original faces are extended; each step replaces one of them and
  // leaves every other cycle intact, so originals are re-found by cycle.
  for (const auto& cycle : p.faces) {
    FaceId f = face_with_cycle(cur_p, cycle);
    auto step = attach_pyramid_to_face(cur_p, cur_l, f);
    cur_p = std::move(step.poly);
    cur_l = std::move(step.labels);
  }
  return {std::move(cur_p), normalize(cur_l)};
}

std::pair<Polyhedron, Labelling> truncate_vertex(const Polyhedron& p, const Labelling& l, VertexId v) {
  if (v < 0 || v >= p.vertex_count) fail(Errc::UnknownVertex, "vertex " + std::to_string(v));
  auto rep = is_vertex_coherent(p, l);
  if (!rep.coherent)
    fail(Errc::NotVertexCoherent,
         std::to_string(rep.offending.size()) + " vertex star(s) lack an increasing rotation");

  auto dc = dual(p);
  Labelling dl(dc.dual.edge_count());
  for (int e = 0; e < p.edge_count(); ++e) dl[dc.edge_bijection[e]] = l[e];

  // Dual face ids coincide with primal vertex ids.
  auto ext = attach_pyramid_to_face(dc.dual, dl, v);

  auto back = dual(ext.poly);
  Labelling out(back.dual.edge_count());
  for (int e = 0; e < ext.poly.edge_count(); ++e) out[back.edge_bijection[e]] = ext.labels[e];
  return {std::move(back.dual), std::move(out)};
}

std::pair<Polyhedron, Labelling> truncate_all(const Polyhedron& p, const Labelling& l) {
  validate_labels(p, l);
  auto dc = dual(p);
  Labelling dl(dc.dual.edge_count());
  for (int e = 0; e < p.edge_count(); ++e) dl[dc.edge_bijection[e]] = l[e];

  auto [q, ql] = pyramidalize(dc.dual, dl);

  auto back = dual(q);
  Labelling out(back.dual.edge_count());
  for (int e = 0; e < q.edge_count(); ++e) out[back.edge_bijection[e]] = ql[e];
  return {std::move(back.dual), std::move(out)};
}

}  // namespace cohlab
