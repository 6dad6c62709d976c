#include "cohlab/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cohlab {

namespace {

std::pair<VertexId, VertexId> key(VertexId a, VertexId b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EdgeId Polyhedron::find_edge(VertexId a, VertexId b) const noexcept {
  auto k = key(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), k);
  if (it == edges.end() || *it != k) return -1;
  return static_cast<EdgeId>(it - edges.begin());
}

EdgeId Polyhedron::edge_between(VertexId a, VertexId b) const {
  EdgeId e = find_edge(a, b);
  if (e < 0)
    fail(Errc::UnknownEdge, "no edge between vertices " + std::to_string(a) + " and " + std::to_string(b));
  return e;
}

int Polyhedron::degree(VertexId v) const {
  if (v < 0 || v >= vertex_count) fail(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return static_cast<int>(vertex_rotations[v].size());
}

FaceId Polyhedron::neighbor_across(FaceId f, EdgeId e) const {
  const auto& two = edge_faces[e];
  if (two[0] == f) return two[1];
  if (two[1] == f) return two[0];
  fail(Errc::UnknownFace, "face " + std::to_string(f) + " is not incident to edge " + std::to_string(e));
}

Polyhedron build_from_faces(std::vector<std::vector<VertexId>> face_cycles) {
  Polyhedron p;
  p.faces = std::move(face_cycles);
  if (p.faces.empty()) fail(Errc::NotSphere, "no faces");

  VertexId max_v = -1;
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& cyc = p.faces[f];
    if (cyc.size() < 3)
      fail(Errc::DegenerateFace, "face " + std::to_string(f) + " has fewer than 3 vertices");
    std::set<VertexId> seen;
    for (VertexId v : cyc) {
      if (v < 0) fail(Errc::UnknownVertex, "negative vertex id in face " + std::to_string(f));
      if (!seen.insert(v).second)
        fail(Errc::DegenerateFace, "face " + std::to_string(f) + " repeats vertex " + std::to_string(v));
      max_v = std::max(max_v, v);
    }
  }
  p.vertex_count = max_v + 1;

  // Each directed edge must occur exactly once; each undirected edge in
  // exactly two faces, once per direction.
  std::map<std::pair<VertexId, VertexId>, FaceId> dart_face;
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& cyc = p.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (!dart_face.emplace(std::make_pair(a, b), static_cast<FaceId>(f)).second)
        fail(Errc::NonManifold, "edge " + std::to_string(a) + "-" + std::to_string(b) +
                                    " traversed twice in the same direction");
    }
  }
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const auto& [dart, f] : dart_face) pairs.insert(key(dart.first, dart.second));
  for (const auto& pr : pairs) {
    bool fwd = dart_face.count({pr.first, pr.second}) != 0;
    bool bwd = dart_face.count({pr.second, pr.first}) != 0;
    if (!fwd || !bwd)
      fail(Errc::NonManifold, "edge " + std::to_string(pr.first) + "-" + std::to_string(pr.second) +
                                  " does not lie in exactly two faces");
  }
  p.edges.assign(pairs.begin(), pairs.end());

  p.edge_faces.resize(p.edges.size());
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    auto [a, b] = p.edges[e];
    p.edge_faces[e] = {dart_face.at({a, b}), dart_face.at({b, a})};
  }

  p.face_edges.resize(p.faces.size());
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& cyc = p.faces[f];
    auto& fe = p.face_edges[f];
    fe.reserve(cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i)
      fe.push_back(p.find_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
  }

  std::vector<int> deg(p.vertex_count, 0);
  for (auto [a, b] : p.edges) {
    ++deg[a];
    ++deg[b];
  }
  for (VertexId v = 0; v < p.vertex_count; ++v)
    if (deg[v] < 3)
      fail(Errc::LowDegreeVertex, "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));

  UnionFind uf(p.vertex_count);
  for (auto [a, b] : p.edges) uf.unite(a, b);
  for (VertexId v = 1; v < p.vertex_count; ++v)
    if (uf.find(v) != uf.find(0)) fail(Errc::NotSphere, "incidence graph is disconnected");
  long long euler = static_cast<long long>(p.vertex_count) - static_cast<long long>(p.edges.size()) +
                    static_cast<long long>(p.faces.size());
  if (euler != 2) fail(Errc::NotSphere, "V - E + F = " + std::to_string(euler));

  // Vertex rotations. From edge {u,v}, entered along the dart (u -> v) lying
  // in face f, the rotation continues with f's outgoing dart at v. A manifold
  // vertex closes a single cycle through all its edges.
  std::map<std::pair<VertexId, VertexId>, std::size_t> dart_pos;
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& cyc = p.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i)
      dart_pos[{cyc[i], cyc[(i + 1) % cyc.size()]}] = i;
  }
  std::vector<std::vector<EdgeId>> incident(p.vertex_count);
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    incident[p.edges[e].first].push_back(static_cast<EdgeId>(e));
    incident[p.edges[e].second].push_back(static_cast<EdgeId>(e));
  }
  p.vertex_rotations.resize(p.vertex_count);
  p.rotation_faces.resize(p.vertex_count);
  for (VertexId v = 0; v < p.vertex_count; ++v) {
    EdgeId start = *std::min_element(incident[v].begin(), incident[v].end());
    std::vector<EdgeId> rot;
    std::vector<FaceId> rot_f;
    EdgeId e = start;
    do {
      rot.push_back(e);
      VertexId u = p.edges[e].first == v ? p.edges[e].second : p.edges[e].first;
      FaceId f = dart_face.at({u, v});
      rot_f.push_back(f);
      const auto& cyc = p.faces[f];
      std::size_t i = dart_pos.at({u, v});
      VertexId w = cyc[(i + 2) % cyc.size()];
      e = p.find_edge(v, w);
      if (rot.size() > incident[v].size()) break;
    } while (e != start);
    if (e != start || rot.size() != incident[v].size())
      fail(Errc::NonManifold, "edges around vertex " + std::to_string(v) + " do not form a single cycle");
    p.vertex_rotations[v] = std::move(rot);
    p.rotation_faces[v] = std::move(rot_f);
  }
  return p;
}

std::vector<EdgeId> vertex_star(const Polyhedron& p, VertexId v) {
  if (v < 0 || v >= p.vertex_count) fail(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return p.vertex_rotations[v];
}

DualCorrespondence dual(const Polyhedron& p) {
  // rotation_faces[v] lists, in rotation order, the face between consecutive
  // star edges; those cycles are exactly the dual face cycles. With this
  // convention the dual's vertex rotations come out as the primal face
  // cycles, which is what makes coherence transport an edge-bijection affair.
  std::vector<std::vector<VertexId>> dual_faces(p.vertex_count);
  for (VertexId v = 0; v < p.vertex_count; ++v)
    dual_faces[v].assign(p.rotation_faces[v].begin(), p.rotation_faces[v].end());

  DualCorrespondence dc;
  dc.dual = build_from_faces(std::move(dual_faces));
  dc.edge_bijection.resize(p.edges.size());
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    auto [f, g] = p.edge_faces[e];
    dc.edge_bijection[e] = dc.dual.edge_between(f, g);
  }
  return dc;
}

FaceId face_with_vertices(const Polyhedron& p, std::span<const VertexId> verts) {
  std::set<VertexId> want(verts.begin(), verts.end());
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    if (p.faces[f].size() != want.size()) continue;
    std::set<VertexId> have(p.faces[f].begin(), p.faces[f].end());
    if (have == want) return static_cast<FaceId>(f);
  }
  fail(Errc::UnknownFace, "no face with the given vertex set");
}

FaceId face_with_cycle(const Polyhedron& p, std::span<const VertexId> cycle) {
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& cyc = p.faces[f];
    if (cyc.size() != cycle.size()) continue;
    for (std::size_t off = 0; off < cyc.size(); ++off) {
      bool ok = true;
      for (std::size_t i = 0; i < cyc.size() && ok; ++i)
        ok = cyc[(off + i) % cyc.size()] == cycle[i];
      if (ok) return static_cast<FaceId>(f);
    }
  }
  fail(Errc::UnknownFace, "no face with the given cycle");
}

namespace {

// Canonical traversal code rooted at one dart; the canonical form is the
// minimum over all 2E roots. Neighbour lists are walked in rotation order
// starting from the dart by which a vertex was first entered, so the code is
// invariant under vertex relabelling but sensitive to orientation.
std::vector<int> rooted_code(const Polyhedron& p,
                             const std::vector<std::vector<VertexId>>& nbr,
                             VertexId root, std::size_t root_idx) {
  std::vector<int> id(p.vertex_count, -1);
  std::vector<VertexId> order;
  std::vector<std::size_t> entry(p.vertex_count, 0);
  id[root] = 0;
  entry[root] = root_idx;
  order.push_back(root);
  std::vector<int> code;
  code.reserve(4 * p.edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    VertexId u = order[k];
    const auto& ring = nbr[u];
    code.push_back(static_cast<int>(ring.size()));
    for (std::size_t j = 0; j < ring.size(); ++j) {
      VertexId w = ring[(entry[u] + j) % ring.size()];
      if (id[w] < 0) {
        id[w] = static_cast<int>(order.size());
        // Start w's ring at the dart pointing back to u.
        const auto& wr = nbr[w];
        for (std::size_t t = 0; t < wr.size(); ++t)
          if (wr[t] == u) {
            entry[w] = t;
            break;
          }
        order.push_back(w);
      }
      code.push_back(id[w]);
    }
  }
  return code;
}

}  // namespace

std::string canonical_form(const Polyhedron& p) {
  std::vector<std::vector<VertexId>> nbr(p.vertex_count);
  for (VertexId v = 0; v < p.vertex_count; ++v) {
    nbr[v].reserve(p.vertex_rotations[v].size());
    for (EdgeId e : p.vertex_rotations[v])
      nbr[v].push_back(p.edges[e].first == v ? p.edges[e].second : p.edges[e].first);
  }
  std::vector<int> best;
  for (VertexId v = 0; v < p.vertex_count; ++v)
    for (std::size_t i = 0; i < nbr[v].size(); ++i) {
      auto code = rooted_code(p, nbr, v, i);
      if (best.empty() || code < best) best = std::move(code);
    }
  std::string out;
  out.reserve(best.size() * 3);
  for (int x : best) {
    out += std::to_string(x);
    out += ',';
  }
  return out;
}

bool isomorphic(const Polyhedron& a, const Polyhedron& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size() ||
      a.faces.size() != b.faces.size())
    return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace cohlab
