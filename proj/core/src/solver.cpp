#include "cohlab/solver.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace cohlab {

namespace {

// Shared backtracking core. Values are ints 1..E (0 = unassigned); faces are
// re-checked locally around the edge just assigned.
struct Search {
  const Polyhedron& p;
  int e_count;
  std::vector<int> value;      // per edge
  std::vector<char> used;      // per value
  std::uint64_t nodes = 0;
  std::function<bool(const std::vector<int>&)> on_complete;  // return true to stop

  explicit Search(const Polyhedron& poly)
      : p(poly), e_count(poly.edge_count()), value(poly.edge_count(), 0),
        used(poly.edge_count() + 1, 0) {}

  bool face_viable(FaceId f) const {
    const auto& fe = p.face_edges[f];
    int descents = 0, assigned = 0;
    for (std::size_t i = 0; i < fe.size(); ++i) {
      int a = value[fe[i]], b = value[fe[(i + 1) % fe.size()]];
      if (a) ++assigned;
      if (a && b && a > b) ++descents;
    }
    if (descents >= 2) return false;
    if (assigned == static_cast<int>(fe.size()) && descents != 1) return false;
    return true;
  }

  bool viable_around(EdgeId e) const {
    for (FaceId f : p.edge_faces[e])
      if (!face_viable(f)) return false;
    return true;
  }

  // Depth-first over edges in id order; returns true when the visitor asked
  // to stop.
  bool run(EdgeId e) {
    if (e == e_count) return on_complete(value);
    if (value[e]) {  // pinned
      if (!viable_around(e)) return false;
      return run(e + 1);
    }
    for (int v = 1; v <= e_count; ++v) {
      if (used[v]) continue;
      value[e] = v;
      used[v] = 1;
      ++nodes;
      if (viable_around(e) && run(e + 1)) return true;
      value[e] = 0;
      used[v] = 0;
    }
    return false;
  }
};

Labelling to_labelling(const std::vector<int>& value) {
  Labelling l(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) l[i] = Rat(value[i]);
  return l;
}

}  // namespace

SolveResult solve_backtracking(const Polyhedron& p) {
  Search s(p);
  SolveResult r;
  s.on_complete = [&](const std::vector<int>& v) {
    r.witness = to_labelling(v);
    return true;
  };
  bool found = s.run(0);
  r.status = found ? SolveStatus::feasible : SolveStatus::infeasible;
  r.nodes_explored = s.nodes;
  return r;
}

std::uint64_t count_labellings(const Polyhedron& p, int edge_cap) {
  if (p.edge_count() > edge_cap)
    fail(Errc::TooLarge, "E = " + std::to_string(p.edge_count()) + " exceeds cap " +
                             std::to_string(edge_cap));
  Search s(p);
  std::uint64_t count = 0;
  s.on_complete = [&](const std::vector<int>&) {
    ++count;
    return false;
  };
  s.run(0);
  return count;
}

std::vector<Labelling> enumerate_with_fixed_minimum(const Polyhedron& p, EdgeId edge) {
  if (edge < 0 || edge >= p.edge_count()) fail(Errc::UnknownEdge, "edge " + std::to_string(edge));
  Search s(p);
  s.value[edge] = 1;
  s.used[1] = 1;
  std::vector<Labelling> out;
  s.on_complete = [&](const std::vector<int>& v) {
    out.push_back(to_labelling(v));
    return false;
  };
  s.run(0);
  return out;
}

namespace {

struct SelectionIter {
  const Polyhedron& p;
  RotationOptions opts;
  std::vector<int> digit;
  std::vector<int> radix;
  bool exhausted = false;

  SelectionIter(const Polyhedron& poly, const RotationOptions& o) : p(poly), opts(o) {
    radix.resize(p.face_count());
    digit.assign(p.face_count(), 0);
    for (FaceId f = 0; f < p.face_count(); ++f) radix[f] = static_cast<int>(p.faces[f].size());
    std::uint64_t total = 1;
    for (FaceId f = 0; f < p.face_count(); ++f) {
      if (opts.pin && opts.pin->first == f) continue;
      if (total > opts.selection_cap / static_cast<std::uint64_t>(radix[f]))
        total = opts.selection_cap + 1;
      else
        total *= static_cast<std::uint64_t>(radix[f]);
    }
    if (total > opts.selection_cap)
      fail(Errc::TooLarge, "rotation-selection space exceeds cap of " +
                               std::to_string(opts.selection_cap) + " selections");
    if (opts.pin) {
      auto [f, c] = *opts.pin;
      if (f < 0 || f >= p.face_count()) fail(Errc::UnknownFace, "pinned face " + std::to_string(f));
      if (c < 0 || c >= radix[f]) fail(Errc::InvalidN, "pinned rotation out of range");
      digit[f] = c;
    }
  }

  // Odometer over unpinned faces, last face fastest.
  bool advance() {
    for (int f = p.face_count() - 1; f >= 0; --f) {
      if (opts.pin && opts.pin->first == f) continue;
      if (++digit[f] < radix[f]) return true;
      digit[f] = 0;
    }
    exhausted = true;
    return false;
  }

  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> a;
    for (FaceId f = 0; f < p.face_count(); ++f) {
      const auto& fe = p.face_edges[f];
      int n = static_cast<int>(fe.size());
      int s = digit[f];
      for (int j = 0; j + 1 < n; ++j)
        a.emplace_back(fe[(s + j) % n], fe[(s + j + 1) % n]);
    }
    return a;
  }
};

// Kahn with a smallest-id frontier; returns the topological order, empty on a
// cycle.
std::vector<int> topo_order(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : arcs) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < n; ++i)
    if (!indeg[i]) ready.push(i);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int w : out[u])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n) order.clear();
  return order;
}

}  // namespace

SolveResult solve_by_rotation_selection(const Polyhedron& p, const RotationOptions& opts) {
  SelectionIter it(p, opts);
  SolveResult r;
  while (!it.exhausted) {
    ++r.nodes_explored;
    auto order = topo_order(p.edge_count(), it.arcs());
    if (!order.empty()) {
      Labelling l(p.edge_count());
      for (std::size_t rank = 0; rank < order.size(); ++rank)
        l[order[rank]] = Rat(static_cast<long long>(rank) + 1);
      r.status = SolveStatus::feasible;
      r.witness = std::move(l);
      r.selection = RotationSelection{it.digit};
      return r;
    }
    it.advance();
  }
  r.status = SolveStatus::infeasible;
  return r;
}

std::uint64_t count_linear_extensions(int n, std::span<const std::pair<int, int>> arcs) {
  if (n < 0 || n > 20) fail(Errc::TooLarge, "linear-extension DP is limited to 20 elements");
  if (n == 0) return 1;
  std::vector<std::pair<int, int>> av(arcs.begin(), arcs.end());
  for (auto [a, b] : av)
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      fail(Errc::CyclicInput, "arc outside element range");
  if (topo_order(n, av).empty()) fail(Errc::CyclicInput, "relation contains a cycle");

  std::vector<std::uint32_t> succ(n, 0);
  for (auto [a, b] : av) succ[a] |= 1u << b;

  // f[S] = number of linear extensions of the induced order on downset S;
  // remove a maximal element last. Non-downset entries are never consumed.
  std::vector<std::uint64_t> f(std::size_t(1) << n, 0);
  f[0] = 1;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::uint64_t total = 0;
    for (int x = 0; x < n; ++x)
      if ((s >> x & 1) && !(succ[x] & s)) total += f[s & ~(1u << x)];
    f[s] = total;
  }
  return f[(std::size_t(1) << n) - 1];
}

std::uint64_t count_by_rotation_selection(const Polyhedron& p, const RotationOptions& opts) {
  if (p.edge_count() > 20)
    fail(Errc::TooLarge, "E = " + std::to_string(p.edge_count()) + " exceeds the extension-DP cap");
  SelectionIter it(p, opts);
  std::uint64_t total = 0;
  while (!it.exhausted) {
    auto a = it.arcs();
    if (!topo_order(p.edge_count(), a).empty())
      total += count_linear_extensions(p.edge_count(), a);
    it.advance();
  }
  return total;
}

}  // namespace cohlab
