#include "cohlab/labelling.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cohlab {

namespace {

void check_distinct(std::span<const Rat> seq) {
  std::set<Rat> seen;
  for (const Rat& r : seq)
    if (!seen.insert(r).second) fail(Errc::DuplicateLabel, "label " + r.str() + " occurs twice");
}

}  // namespace

int cyclic_descent_count(std::span<const Rat> seq) { return descent_profile(seq).count; }

DescentProfile descent_profile(std::span<const Rat> seq) {
  if (seq.size() < 2) fail(Errc::DuplicateLabel, "cycle needs at least 2 entries");
  check_distinct(seq);
  DescentProfile d;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] > seq[(i + 1) % seq.size()]) {
      ++d.count;
      d.positions.push_back(static_cast<int>(i));
    }
  return d;
}

void validate_labels(const Polyhedron& p, const Labelling& l) {
  if (l.size() != p.edges.size())
    fail(Errc::MissingLabel, "labelling covers " + std::to_string(l.size()) + " of " +
                                 std::to_string(p.edges.size()) + " edges");
  check_distinct(l);
}

std::vector<Rat> face_label_cycle(const Polyhedron& p, const Labelling& l, FaceId f) {
  if (f < 0 || f >= p.face_count()) fail(Errc::UnknownFace, "face " + std::to_string(f));
  std::vector<Rat> seq;
  seq.reserve(p.face_edges[f].size());
  for (EdgeId e : p.face_edges[f]) seq.push_back(l[e]);
  return seq;
}

std::vector<Rat> vertex_label_cycle(const Polyhedron& p, const Labelling& l, VertexId v) {
  if (v < 0 || v >= p.vertex_count) fail(Errc::UnknownVertex, "vertex " + std::to_string(v));
  std::vector<Rat> seq;
  seq.reserve(p.vertex_rotations[v].size());
  for (EdgeId e : p.vertex_rotations[v]) seq.push_back(l[e]);
  return seq;
}

namespace {

CoherenceReport report_over(const Polyhedron& p, const Labelling& l, bool faces) {
  validate_labels(p, l);
  CoherenceReport rep;
  rep.coherent = true;
  int n = faces ? p.face_count() : p.vertex_count;
  rep.per_item.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto seq = faces ? face_label_cycle(p, l, i) : vertex_label_cycle(p, l, i);
    rep.per_item.push_back(descent_profile(seq));
    if (rep.per_item.back().count != 1) {
      rep.coherent = false;
      rep.offending.push_back(i);
    }
  }
  return rep;
}

}  // namespace

CoherenceReport is_coherent(const Polyhedron& p, const Labelling& l) {
  return report_over(p, l, true);
}

CoherenceReport is_vertex_coherent(const Polyhedron& p, const Labelling& l) {
  return report_over(p, l, false);
}

bool is_canonical(const Labelling& l) {
  std::vector<char> seen(l.size() + 1, 0);
  for (const Rat& r : l) {
    if (!r.is_integer()) return false;
    long long v = r.num();
    if (v < 1 || v > static_cast<long long>(l.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Labelling normalize(const Labelling& l) {
  check_distinct(l);
  std::vector<std::size_t> idx(l.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return l[a] < l[b]; });
  Labelling out(l.size());
  for (std::size_t rank = 0; rank < idx.size(); ++rank)
    out[idx[rank]] = Rat(static_cast<long long>(rank) + 1);
  return out;
}

Labelling cyclic_shift(const Labelling& l) {
  if (!is_canonical(l)) fail(Errc::NotCanonical, "cyclic_shift needs labels {1..E}");
  long long e = static_cast<long long>(l.size());
  Labelling out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out[i] = Rat(l[i].num() % e + 1);
  return out;
}

}  // namespace cohlab
