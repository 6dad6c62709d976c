#include "cohlab/attachments.hpp"

#include <algorithm>

#include "editable.hpp"

namespace cohlab {

namespace {

using detail::EditableSolid;
using detail::choose_above;
using detail::choose_below;
using detail::choose_in_open_interval;

void require_coherent(const Polyhedron& p, const Labelling& l) {
  auto rep = is_coherent(p, l);
  if (!rep.coherent)
    fail(Errc::NotCoherent, std::to_string(rep.offending.size()) + " face(s) lack an increasing rotation");
}

void require_triangle(const Polyhedron& p, FaceId f, Errc code = Errc::NotTriangle) {
  if (f < 0 || f >= p.face_count()) fail(Errc::UnknownFace, "face " + std::to_string(f));
  if (p.faces[f].size() != 3)
    fail(code, "face " + std::to_string(f) + " has " + std::to_string(p.faces[f].size()) + " edges");
}

void assert_coherent_output(const Polyhedron& p, const Labelling& l, const char* op) {
  if (!is_coherent(p, l).coherent)
    throw std::logic_error(std::string(op) + " produced an incoherent labelling");
}

int position_in_cycle(const std::vector<EdgeId>& cycle, EdgeId e) {
  auto it = std::find(cycle.begin(), cycle.end(), e);
  return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

}  // namespace

Attached attach_a1(const Polyhedron& p, const Labelling& l, FaceId face) {
  require_triangle(p, face);
  require_coherent(p, l);

  // Rotate the face cycle so its labels read a < b < c.
  auto seq = face_label_cycle(p, l, face);
  int dsc = descent_profile(seq).positions.front();
  int s = (dsc + 1) % 3;
  Rat a = seq[s], b = seq[(s + 1) % 3], c = seq[(s + 2) % 3];
  VertexId P = p.faces[face][s];
  VertexId Q = p.faces[face][(s + 1) % 3];
  VertexId R = p.faces[face][(s + 2) % 3];
  VertexId w = p.vertex_count;

  EditableSolid solid = EditableSolid::from(p, l);
  auto used = solid.used_values();
  Rat fv = choose_below(a, used);
  used.insert(fv);
  Rat ev = choose_in_open_interval(a, b, used);
  used.insert(ev);
  Rat dv = choose_above(c, used);

  solid.faces.erase(solid.faces.begin() + face);
  solid.faces.push_back({P, Q, w});
  solid.faces.push_back({Q, R, w});
  solid.faces.push_back({R, P, w});
  solid.put(P, w, dv);
  solid.put(Q, w, ev);
  solid.put(R, w, fv);

  auto [poly, labels] = solid.build();
  assert_coherent_output(poly, labels, "attach_a1");
  return {std::move(poly), std::move(labels),
          AttachmentSpec{AttachMode::A1, face, -1, -1, -1, dv, ev, fv, 0}};
}

Attached attach_a2(const Polyhedron& p, const Labelling& l, FaceId face, EdgeId b) {
  require_triangle(p, face);
  require_coherent(p, l);
  int bi = position_in_cycle(p.face_edges[face], b);
  if (bi < 0) fail(Errc::UnknownEdge, "edge " + std::to_string(b) + " is not on the face");

  EdgeId a_e = p.face_edges[face][(bi + 2) % 3];
  EdgeId c_e = p.face_edges[face][(bi + 1) % 3];
  FaceId g = p.neighbor_across(face, b);
  int gi = position_in_cycle(p.face_edges[g], b);
  int gn = static_cast<int>(p.face_edges[g].size());
  EdgeId z_e = p.face_edges[g][(gi + gn - 1) % gn];
  EdgeId y_e = p.face_edges[g][(gi + 1) % gn];

  // The neighbour must read z < b < y; a cyclic change of the numbers is
  // allowed first, so walk the shift orbit of a canonical labelling.
  Labelling cur = l;
  int shifts = 0;
  auto zby = [&](const Labelling& m) { return m[z_e] < m[b] && m[b] < m[y_e]; };
  if (!zby(cur)) {
    if (!is_canonical(cur))
      fail(Errc::PreconditionZBY, "z < b < y fails and the labelling is not canonical");
    bool found = false;
    for (int s = 1; s < static_cast<int>(cur.size()); ++s) {
      cur = cyclic_shift(cur);
      ++shifts;
      if (zby(cur)) {
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::PreconditionZBY, "no cyclic shift achieves z < b < y");
  }

  VertexId Q = p.faces[face][bi];
  VertexId R = p.faces[face][(bi + 1) % 3];
  VertexId P = p.faces[face][(bi + 2) % 3];
  VertexId w = p.vertex_count;

  Rat av = cur[a_e], bv = cur[b], cv = cur[c_e], zv = cur[z_e], yv = cur[y_e];

  EditableSolid solid = EditableSolid::from(p, cur);
  auto used = solid.used_values();
  used.erase(bv);  // b vanishes before the new labels are placed
  Rat fv, ev, dv;
  if (av < bv && bv < cv) {  // a < f < b < e < c < d
    fv = choose_in_open_interval(std::max(av, zv), bv, used);
    used.insert(fv);
    ev = choose_in_open_interval(bv, std::min(cv, yv), used);
    used.insert(ev);
    dv = choose_above(cv, used);
  } else if (bv < cv && cv < av) {  // f < b < e < c < d < a
    fv = choose_in_open_interval(zv, bv, used);
    used.insert(fv);
    ev = choose_in_open_interval(bv, std::min(cv, yv), used);
    used.insert(ev);
    dv = choose_in_open_interval(cv, av, used);
  } else {  // c < a < b: c < d < a < f < b < e
    dv = choose_in_open_interval(cv, av, used);
    used.insert(dv);
    fv = choose_in_open_interval(std::max(av, zv), bv, used);
    used.insert(fv);
    ev = choose_in_open_interval(bv, yv, used);
  }

  solid.erase(Q, R);
  solid.put(P, w, dv);
  solid.put(Q, w, ev);
  solid.put(R, w, fv);

  // Neighbour keeps its cycle with b replaced by the path through the apex.
  std::vector<std::vector<VertexId>> faces;
  for (FaceId fi = 0; fi < p.face_count(); ++fi) {
    if (fi == face) continue;
    std::vector<VertexId> cyc = p.faces[fi];
    if (fi == g) {
      std::vector<VertexId> widened;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        widened.push_back(cyc[i]);
        if (cyc[i] == R && cyc[(i + 1) % cyc.size()] == Q) widened.push_back(w);
      }
      cyc = std::move(widened);
    }
    faces.push_back(std::move(cyc));
  }
  faces.push_back({P, Q, w});
  faces.push_back({R, P, w});
  solid.faces = std::move(faces);

  auto [poly, labels] = solid.build();
  assert_coherent_output(poly, labels, "attach_a2");
  return {std::move(poly), std::move(labels),
          AttachmentSpec{AttachMode::A2, face, -1, b, -1, dv, ev, fv, shifts}};
}

Attached attach_a3(const Polyhedron& p, const Labelling& l, FaceId face, VertexId v) {
  require_triangle(p, face);
  require_coherent(p, l);
  auto it = std::find(p.faces[face].begin(), p.faces[face].end(), v);
  if (it == p.faces[face].end())
    fail(Errc::VertexNotOnFace, "vertex " + std::to_string(v) + " not on face " + std::to_string(face));
  if (p.degree(v) != 3)
    fail(Errc::VertexDegreeNot3, "vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(p.degree(v)));

  int j = static_cast<int>(it - p.faces[face].begin());
  VertexId P = p.faces[face][(j + 2) % 3];
  VertexId R = p.faces[face][(j + 1) % 3];
  EdgeId a_e = p.edge_between(P, v);
  EdgeId b_e = p.edge_between(v, R);
  EdgeId y_e = -1;
  for (EdgeId e : p.vertex_rotations[v])
    if (e != a_e && e != b_e) y_e = e;
  VertexId u = p.edges[y_e].first == v ? p.edges[y_e].second : p.edges[y_e].first;
  VertexId w = p.vertex_count;

  EditableSolid solid = EditableSolid::from(p, l);
  solid.erase(P, v);
  solid.erase(v, R);
  solid.put(P, w, l[a_e]);  // d = a
  solid.put(R, w, l[b_e]);  // f = b
  solid.move_edge(v, u, w, u);  // e = y, the same edge extended

  std::vector<std::vector<VertexId>> faces;
  for (FaceId fi = 0; fi < p.face_count(); ++fi) {
    if (fi == face) continue;
    std::vector<VertexId> cyc = p.faces[fi];
    for (VertexId& x : cyc)
      if (x == v) x = w;
    faces.push_back(std::move(cyc));
  }
  faces.push_back({R, P, w});
  solid.faces = std::move(faces);

  auto [poly, labels] = solid.build();
  assert_coherent_output(poly, labels, "attach_a3");
  return {std::move(poly), std::move(labels),
          AttachmentSpec{AttachMode::A3, face, -1, -1, v, l[a_e], l[y_e], l[b_e], 0}};
}

Attached cap_triangle(const Polyhedron& p, const Labelling& l, FaceId face) {
  require_triangle(p, face);
  require_coherent(p, l);
  for (VertexId v : p.faces[face])
    if (p.degree(v) != 3)
      fail(Errc::VertexDegreeNot3, "vertex " + std::to_string(v) + " has degree " +
                                       std::to_string(p.degree(v)));
  for (EdgeId e : p.face_edges[face]) {
    FaceId g = p.neighbor_across(face, e);
    if (p.faces[g].size() < 4)
      fail(Errc::NeighborTooSmall, "capping would shrink face " + std::to_string(g) + " to a 2-gon");
  }

  VertexId w = p.vertex_count;
  EditableSolid solid = EditableSolid::from(p, l);
  for (EdgeId e : p.face_edges[face]) solid.erase(p.edges[e].first, p.edges[e].second);
  for (VertexId v : p.faces[face]) {
    // outward edge at v keeps its label, re-anchored to the apex
    for (EdgeId e : p.vertex_rotations[v]) {
      VertexId other = p.edges[e].first == v ? p.edges[e].second : p.edges[e].first;
      bool on_face = std::find(p.faces[face].begin(), p.faces[face].end(), other) != p.faces[face].end();
      if (!on_face) solid.move_edge(v, other, w, other);
    }
  }

  std::vector<std::vector<VertexId>> faces;
  for (FaceId fi = 0; fi < p.face_count(); ++fi) {
    if (fi == face) continue;
    std::vector<VertexId> cyc;
    for (VertexId x : p.faces[fi]) {
      bool capped = std::find(p.faces[face].begin(), p.faces[face].end(), x) != p.faces[face].end();
      VertexId y = capped ? w : x;
      if (!cyc.empty() && cyc.back() == y) continue;  // collapse the adjacent capped pair
      cyc.push_back(y);
    }
    if (cyc.size() > 1 && cyc.front() == cyc.back()) cyc.pop_back();
    faces.push_back(std::move(cyc));
  }
  solid.faces = std::move(faces);

  auto [poly, labels] = solid.build();
  assert_coherent_output(poly, labels, "cap_triangle");
  return {std::move(poly), std::move(labels),
          AttachmentSpec{AttachMode::A4, face, -1, -1, -1, {}, {}, {}, 0}};
}

Attached attach_a5(const Polyhedron& p, const Labelling& l, FaceId face1, FaceId face2) {
  require_triangle(p, face1, Errc::NotTriangles);
  require_triangle(p, face2, Errc::NotTriangles);
  require_coherent(p, l);

  std::vector<EdgeId> shared;
  for (EdgeId e : p.face_edges[face1])
    if (position_in_cycle(p.face_edges[face2], e) >= 0) shared.push_back(e);
  if (shared.size() != 1)
    fail(Errc::FacesDontShareEdge, "faces share " + std::to_string(shared.size()) + " edges");
  EdgeId b = shared.front();

  // Orient so face1 traverses b as U -> V; X, Y are the far vertices.
  int i1 = position_in_cycle(p.face_edges[face1], b);
  int i2 = position_in_cycle(p.face_edges[face2], b);
  VertexId U = p.faces[face1][i1];
  VertexId V = p.faces[face1][(i1 + 1) % 3];
  VertexId X = p.faces[face1][(i1 + 2) % 3];
  VertexId Y = p.faces[face2][(i2 + 2) % 3];

  EdgeId a_e = p.face_edges[face1][(i1 + 2) % 3];  // {X,U}
  EdgeId c_e = p.face_edges[face1][(i1 + 1) % 3];  // {V,X}
  EdgeId e_e = p.face_edges[face2][(i2 + 2) % 3];  // {Y,V}
  EdgeId d_e = p.face_edges[face2][(i2 + 1) % 3];  // {U,Y}

  Rat av = l[a_e], cv = l[c_e], dv = l[d_e], ev = l[e_e];

  // Scan gap midpoints left to right for a value of f that leaves both new
  // faces with exactly one descent.
  std::vector<Rat> sorted;
  for (std::size_t e = 0; e < l.size(); ++e)
    if (static_cast<EdgeId>(e) != b) sorted.push_back(l[e]);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Rat> candidates;
  candidates.push_back(sorted.front() - Rat(1, 2));
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    candidates.push_back(midpoint(sorted[i], sorted[i + 1]));
  candidates.push_back(sorted.back() + Rat(1, 2));

  auto one_descent = [](const Rat& x, const Rat& y, const Rat& z) {
    int d = 0;
    if (x > y) ++d;
    if (y > z) ++d;
    if (z > x) ++d;
    return d == 1;
  };
  std::optional<Rat> fv;
  for (const Rat& t : candidates)
    if (one_descent(av, dv, t) && one_descent(t, ev, cv)) {
      fv = t;
      break;
    }
  if (!fv) fail(Errc::NoFeasibleGap, "no label gap makes both new faces coherent");

  EditableSolid solid = EditableSolid::from(p, l);
  solid.erase(U, V);
  solid.put(X, Y, *fv);
  std::vector<std::vector<VertexId>> faces;
  for (FaceId fi = 0; fi < p.face_count(); ++fi)
    if (fi != face1 && fi != face2) faces.push_back(p.faces[fi]);
  faces.push_back({X, U, Y});
  faces.push_back({X, Y, V});
  solid.faces = std::move(faces);

  auto [poly, labels] = solid.build();
  assert_coherent_output(poly, labels, "attach_a5");
  return {std::move(poly), std::move(labels),
          AttachmentSpec{AttachMode::A5, face1, face2, b, -1, {}, {}, fv, 0}};
}

}  // namespace cohlab
