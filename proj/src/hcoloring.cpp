#include "sylvan/hcoloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include <json.hpp>

#include "sylvan/canonical.hpp"
#include "sylvan/errors.hpp"
#include "sylvan/factors.hpp"
#include "sylvan/io.hpp"
#include "sylvan/structure.hpp"

namespace sylvan {

EdgeMapping EdgeMapping::blank(std::shared_ptr<const PseudoGraph> target,
                               std::shared_ptr<const PseudoGraph> host) {
  EdgeMapping f;
  f.images.assign(static_cast<std::size_t>(target->edge_count()), {kNoEdge, kNoEdge});
  f.target = std::move(target);
  f.host = std::move(host);
  return f;
}

std::vector<EdgeId> EdgeMapping::seen_at(VertexId x) const {
  std::vector<EdgeId> seen;
  for (const Incidence& inc : target->incidence(x)) {
    const auto& img = images[static_cast<std::size_t>(inc.edge)];
    if (inc.multiplicity == 2) {
      seen.push_back(img[0]);
      seen.push_back(img[1]);
    } else {
      seen.push_back(img[0]);
    }
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

CompatibilityTables CompatibilityTables::build(const PseudoGraph& host) {
  if (host.edge_count() > 64) throw PreconditionError("host graphs are limited to 64 edges");
  CompatibilityTables t;
  std::set<std::array<EdgeId, 3>> seen;
  for (VertexId y = 0; y < host.vertex_count(); ++y) {
    std::vector<EdgeId> b = host.half_edges(y);
    if (b.size() != 3) continue;
    std::sort(b.begin(), b.end());
    seen.insert({b[0], b[1], b[2]});
  }
  t.triples.assign(seen.begin(), seen.end());
  t.adjacent.assign(static_cast<std::size_t>(host.edge_count()), 0);
  for (VertexId y = 0; y < host.vertex_count(); ++y) {
    std::uint64_t at = 0;
    for (const Incidence& inc : host.incidence(y)) at |= std::uint64_t{1} << inc.edge;
    for (const Incidence& inc : host.incidence(y)) t.adjacent[static_cast<std::size_t>(inc.edge)] |= at;
  }
  // An edge is not adjacent to itself unless it is a loop (the loop's own
  // bit is set through its single vertex either way).
  for (const EdgeRecord& e : host.edges()) {
    if (!e.is_loop()) t.adjacent[static_cast<std::size_t>(e.id)] &= ~(std::uint64_t{1} << e.id);
  }
  return t;
}

bool CompatibilityTables::is_boundary(std::array<EdgeId, 3> sorted_triple) const {
  return std::binary_search(triples.begin(), triples.end(), sorted_triple);
}

namespace {

void check_mapping(const EdgeMapping& f) {
  if (!f.target || !f.host) throw PreconditionError("mapping has no target or host graph");
  if (f.images.size() != static_cast<std::size_t>(f.target->edge_count())) {
    throw PreconditionError("mapping does not cover every edge of the target");
  }
  for (const EdgeRecord& e : f.target->edges()) {
    const auto& img = f.images[static_cast<std::size_t>(e.id)];
    if (!f.host->valid_edge(img[0]) || (e.is_loop() && !f.host->valid_edge(img[1]))) {
      throw PreconditionError("edge " + std::to_string(e.id) + " has no valid image");
    }
  }
}

}  // namespace

SatisfactionReport satisfaction(const EdgeMapping& f) {
  check_mapping(f);
  const CompatibilityTables tables = CompatibilityTables::build(*f.host);
  SatisfactionReport report;
  const PseudoGraph& g = *f.target;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    std::vector<EdgeId> seen = f.seen_at(x);
    if (seen.size() == 3 && tables.is_boundary({seen[0], seen[1], seen[2]})) {
      report.satisfied.push_back(x);
      continue;
    }
    VertexFailure fail;
    fail.vertex = x;
    fail.seen = seen;
    // Pair up half-edges with equal images.
    std::vector<std::pair<EdgeId, EdgeId>> halves;  // (image, G edge)
    for (const Incidence& inc : g.incidence(x)) {
      const auto& img = f.images[static_cast<std::size_t>(inc.edge)];
      halves.emplace_back(img[0], inc.edge);
      if (inc.multiplicity == 2) halves.emplace_back(img[1], inc.edge);
    }
    std::sort(halves.begin(), halves.end());
    for (std::size_t i = 1; i < halves.size(); ++i) {
      if (halves[i].first == halves[i - 1].first) {
        fail.witness = std::array<EdgeId, 2>{halves[i - 1].second, halves[i].second};
        break;
      }
    }
    report.failures.push_back(std::move(fail));
  }
  return report;
}

bool is_h_coloring(const EdgeMapping& f) { return satisfaction(f).complete(); }

std::vector<EdgeId> used_edges(const EdgeMapping& f) {
  check_mapping(f);
  std::set<EdgeId> used;
  for (const EdgeRecord& e : f.target->edges()) {
    const auto& img = f.images[static_cast<std::size_t>(e.id)];
    used.insert(img[0]);
    if (e.is_loop()) used.insert(img[1]);
  }
  return {used.begin(), used.end()};
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kAbsent:
      return "absent";
    case SearchStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

constexpr std::array<std::array<int, 3>, 6> kPerms = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

class Search {
 public:
  Search(const PseudoGraph& g, const PseudoGraph& h, const SearchOptions& opts)
      : g_(g), h_(h), opts_(opts), tables_(CompatibilityTables::build(h)) {
    target_ = std::make_shared<const PseudoGraph>(g);
    host_ = std::make_shared<const PseudoGraph>(h);
    build_variables();
  }

  SearchResult run() {
    std::vector<Mask> dom(vars_.size(), full_mask());
    std::vector<VertexId> queue;
    for (VertexId x = 0; x < g_.vertex_count(); ++x) queue.push_back(x);
    if (propagate(dom, queue)) {
      first_branch_ = true;
      descend(dom);
    }
    if (result_.solution_count > 0) {
      result_.status = SearchStatus::kFound;
    } else {
      result_.status = exhausted_ ? SearchStatus::kBudgetExhausted : SearchStatus::kAbsent;
    }
    // A count that hit the node budget is a lower bound only.
    if (opts_.mode == SearchMode::kCount && exhausted_) result_.status = SearchStatus::kBudgetExhausted;
    return std::move(result_);
  }

 private:
  struct Var {
    EdgeId edge;
    int part;  // 1 only for the second colour of a loop
  };

  Mask full_mask() const {
    const int m = h_.edge_count();
    return m == 64 ? ~Mask{0} : ((Mask{1} << m) - 1);
  }

  void build_variables() {
    var_of_.assign(static_cast<std::size_t>(g_.edge_count()), {-1, -1});
    // Static order: edges in DFS discovery order from vertex 0.
    std::vector<EdgeId> order;
    std::vector<char> seen_v(static_cast<std::size_t>(g_.vertex_count()), 0);
    std::vector<char> seen_e(static_cast<std::size_t>(g_.edge_count()), 0);
    for (VertexId root = 0; root < g_.vertex_count(); ++root) {
      if (seen_v[static_cast<std::size_t>(root)]) continue;
      std::vector<VertexId> stack{root};
      while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        if (seen_v[static_cast<std::size_t>(x)]) continue;
        seen_v[static_cast<std::size_t>(x)] = 1;
        for (const Incidence& inc : g_.incidence(x)) {
          if (!seen_e[static_cast<std::size_t>(inc.edge)]) {
            seen_e[static_cast<std::size_t>(inc.edge)] = 1;
            order.push_back(inc.edge);
          }
          const VertexId y = g_.edge(inc.edge).other(x);
          if (!seen_v[static_cast<std::size_t>(y)]) stack.push_back(y);
        }
      }
    }
    for (EdgeId e : order) {
      var_of_[static_cast<std::size_t>(e)][0] = static_cast<int>(vars_.size());
      vars_.push_back({e, 0});
      if (g_.edge(e).is_loop()) {
        var_of_[static_cast<std::size_t>(e)][1] = static_cast<int>(vars_.size());
        vars_.push_back({e, 1});
      }
    }
    slots_.resize(static_cast<std::size_t>(g_.vertex_count()));
    for (VertexId x = 0; x < g_.vertex_count(); ++x) {
      auto& s = slots_[static_cast<std::size_t>(x)];
      for (const Incidence& inc : g_.incidence(x)) {
        s.push_back(var_of_[static_cast<std::size_t>(inc.edge)][0]);
        if (inc.multiplicity == 2) s.push_back(var_of_[static_cast<std::size_t>(inc.edge)][1]);
      }
    }
    var_vertices_.resize(vars_.size());
    for (VertexId x = 0; x < g_.vertex_count(); ++x) {
      for (int v : slots_[static_cast<std::size_t>(x)]) var_vertices_[static_cast<std::size_t>(v)].push_back(x);
    }
    for (auto& vs : var_vertices_) {
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    }
  }

  // Ordering between the two colours of a loop whose variables sit in slots
  // i and j (part 0 must not exceed part 1).
  bool ordered(const std::array<int, 3>& s, const std::array<EdgeId, 3>& val) const {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const Var& a = vars_[static_cast<std::size_t>(s[i])];
        const Var& b = vars_[static_cast<std::size_t>(s[j])];
        if (a.edge == b.edge && a.part == 0 && b.part == 1 && val[i] > val[j]) return false;
      }
    }
    return true;
  }

  // Generalized arc consistency on the vertex constraint at x.
  bool revise(std::vector<Mask>& dom, VertexId x, std::vector<VertexId>& queue) {
    const auto& sv = slots_[static_cast<std::size_t>(x)];
    const std::array<int, 3> s{sv[0], sv[1], sv[2]};
    std::array<Mask, 3> support{0, 0, 0};
    for (const auto& t : tables_.triples) {
      for (const auto& p : kPerms) {
        const std::array<EdgeId, 3> val{t[p[0]], t[p[1]], t[p[2]]};
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) ok = (dom[static_cast<std::size_t>(s[i])] >> val[i]) & 1;
        if (!ok || !ordered(s, val)) continue;
        for (int i = 0; i < 3; ++i) support[i] |= Mask{1} << val[i];
      }
    }
    for (int i = 0; i < 3; ++i) {
      Mask& d = dom[static_cast<std::size_t>(s[i])];
      const Mask next = d & support[i];
      if (next == 0) return false;
      if (next != d) {
        d = next;
        for (VertexId y : var_vertices_[static_cast<std::size_t>(s[i])]) {
          if (y != x) queue.push_back(y);
        }
      }
    }
    return true;
  }

  bool propagate(std::vector<Mask>& dom, std::vector<VertexId>& queue) {
    std::vector<char> queued(static_cast<std::size_t>(g_.vertex_count()), 0);
    std::vector<VertexId> work;
    for (VertexId x : queue) {
      if (!queued[static_cast<std::size_t>(x)]) {
        queued[static_cast<std::size_t>(x)] = 1;
        work.push_back(x);
      }
    }
    queue.clear();
    std::size_t head = 0;
    while (head < work.size()) {
      const VertexId x = work[head++];
      queued[static_cast<std::size_t>(x)] = 0;
      std::vector<VertexId> touched;
      if (!revise(dom, x, touched)) return false;
      for (VertexId y : touched) {
        if (!queued[static_cast<std::size_t>(y)]) {
          queued[static_cast<std::size_t>(y)] = 1;
          work.push_back(y);
        }
      }
    }
    return true;
  }

  bool done() const {
    if (exhausted_) return true;
    if (opts_.mode == SearchMode::kFirst) return result_.solution_count > 0;
    return opts_.solution_cap != 0 && result_.solution_count >= opts_.solution_cap;
  }

  void record(const std::vector<Mask>& dom) {
    EdgeMapping f = EdgeMapping::blank(target_, host_);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      f.images[static_cast<std::size_t>(vars_[v].edge)][static_cast<std::size_t>(vars_[v].part)] =
          static_cast<EdgeId>(std::countr_zero(dom[v]));
    }
    if (!is_h_coloring(f)) throw std::logic_error("search produced a mapping that fails the satisfaction check");
    ++result_.solution_count;
    if (!result_.mapping) result_.mapping = f;
    if (opts_.mode == SearchMode::kCount && result_.solutions.size() < opts_.keep_solutions) {
      result_.solutions.push_back(std::move(f));
    }
    if (opts_.mode == SearchMode::kCount && opts_.solution_cap != 0 &&
        result_.solution_count >= opts_.solution_cap) {
      result_.capped = true;
    }
  }

  void descend(const std::vector<Mask>& dom) {
    int best = -1;
    int best_size = 65;
    for (std::size_t v = 0; v < dom.size(); ++v) {
      const int size = std::popcount(dom[v]);
      if (size > 1 && size < best_size) {
        best = static_cast<int>(v);
        best_size = size;
      }
    }
    if (best < 0) {
      record(dom);
      return;
    }
    Mask values = dom[static_cast<std::size_t>(best)];
    if (first_branch_) {
      first_branch_ = false;
      if (opts_.break_symmetry && vars_[static_cast<std::size_t>(best)].part == 0 &&
          !g_.edge(vars_[static_cast<std::size_t>(best)].edge).is_loop()) {
        values &= orbit_representatives();
      }
    }
    while (values != 0 && !done()) {
      const int h = std::countr_zero(values);
      values &= values - 1;
      if (opts_.node_budget != 0 && result_.nodes >= opts_.node_budget) {
        exhausted_ = true;
        return;
      }
      ++result_.nodes;
      std::vector<Mask> next = dom;
      next[static_cast<std::size_t>(best)] = Mask{1} << h;
      std::vector<VertexId> queue = var_vertices_[static_cast<std::size_t>(best)];
      if (propagate(next, queue)) descend(next);
    }
  }

  Mask orbit_representatives() const {
    const std::vector<int> orbit = edge_orbits(h_);
    std::set<int> taken;
    Mask reps = 0;
    for (EdgeId e = 0; e < h_.edge_count(); ++e) {
      if (taken.insert(orbit[static_cast<std::size_t>(e)]).second) reps |= Mask{1} << e;
    }
    return reps;
  }

  const PseudoGraph& g_;
  const PseudoGraph& h_;
  SearchOptions opts_;
  CompatibilityTables tables_;
  std::shared_ptr<const PseudoGraph> target_;
  std::shared_ptr<const PseudoGraph> host_;
  std::vector<Var> vars_;
  std::vector<std::array<int, 2>> var_of_;
  std::vector<std::vector<int>> slots_;
  std::vector<std::vector<VertexId>> var_vertices_;
  SearchResult result_;
  bool exhausted_ = false;
  bool first_branch_ = false;
};

}  // namespace

SearchResult search_h_colorings(const PseudoGraph& target, const PseudoGraph& host, const SearchOptions& options) {
  if (!is_cubic(target) || !is_cubic(host)) throw PreconditionError("H-colouring search needs cubic graphs");
  Search search(target, host, options);
  return search.run();
}

std::optional<EdgeMapping> find_h_coloring(const PseudoGraph& target, const PseudoGraph& host,
                                           const SearchOptions& options) {
  SearchOptions opts = options;
  opts.mode = SearchMode::kFirst;
  SearchResult r = search_h_colorings(target, host, opts);
  if (r.status == SearchStatus::kBudgetExhausted) {
    throw Error("H-colouring search ran out of its node budget");
  }
  return std::move(r.mapping);
}

namespace {

std::vector<char> preimage(const EdgeMapping& f, std::uint64_t host_set) {
  std::vector<char> in(static_cast<std::size_t>(f.target->edge_count()), 0);
  for (EdgeId e = 0; e < f.target->edge_count(); ++e) {
    in[static_cast<std::size_t>(e)] = (host_set >> f.images[static_cast<std::size_t>(e)][0]) & 1;
  }
  return in;
}

std::vector<EdgeId> selected(const std::vector<char>& in) {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < in.size(); ++e) {
    if (in[e]) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

bool all_even(const PseudoGraph& g, const std::vector<char>& in) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const EdgeRecord& e : g.edges()) {
    if (!in[static_cast<std::size_t>(e.id)]) continue;
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

// Fundamental cycles of a spanning forest, as host edge bitmasks.
std::vector<std::uint64_t> cycle_basis(const PseudoGraph& h) {
  const int n = h.vertex_count();
  std::vector<EdgeId> parent_edge(static_cast<std::size_t>(n), kNoEdge);
  std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<char> tree(static_cast<std::size_t>(h.edge_count()), 0);
  for (VertexId r = 0; r < n; ++r) {
    if (depth[static_cast<std::size_t>(r)] >= 0) continue;
    depth[static_cast<std::size_t>(r)] = 0;
    std::vector<VertexId> queue{r};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const VertexId x = queue[i];
      for (const Incidence& inc : h.incidence(x)) {
        const VertexId y = h.edge(inc.edge).other(x);
        if (depth[static_cast<std::size_t>(y)] >= 0) continue;
        depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
        parent[static_cast<std::size_t>(y)] = x;
        parent_edge[static_cast<std::size_t>(y)] = inc.edge;
        tree[static_cast<std::size_t>(inc.edge)] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<std::uint64_t> basis;
  for (const EdgeRecord& e : h.edges()) {
    if (tree[static_cast<std::size_t>(e.id)]) continue;
    std::uint64_t c = std::uint64_t{1} << e.id;
    VertexId a = e.u;
    VertexId b = e.v;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
      c ^= std::uint64_t{1} << parent_edge[static_cast<std::size_t>(a)];
      a = parent[static_cast<std::size_t>(a)];
    }
    basis.push_back(c);
  }
  return basis;
}

}  // namespace

PropertyReport property_suite(const EdgeMapping& f) {
  check_mapping(f);
  const PseudoGraph& g = *f.target;
  const PseudoGraph& h = *f.host;
  if (g.loop_count() != 0 || h.loop_count() != 0) throw PreconditionError("property checks need loop-free graphs");
  if (!is_h_coloring(f)) throw PreconditionError("mapping is not an H-colouring");
  const CompatibilityTables tables = CompatibilityTables::build(h);
  PropertyReport r;

  r.matchings = true;
  for (VertexId x = 0; x < g.vertex_count() && r.matchings; ++x) {
    const auto inc = g.incidence(x);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const EdgeId a = f.images[static_cast<std::size_t>(inc[i].edge)][0];
        const EdgeId b = f.images[static_cast<std::size_t>(inc[j].edge)][0];
        if (a == b || !((tables.adjacent[static_cast<std::size_t>(a)] >> b) & 1)) {
          r.matchings = false;
          r.notes.push_back("(a) edges " + std::to_string(inc[i].edge) + " and " + std::to_string(inc[j].edge) +
                            " at vertex " + std::to_string(x) + " have images that fit in one matching");
        }
      }
    }
  }

  const int chi_g = chromatic_index_cubic(g).value;
  const int chi_h = chromatic_index_cubic(h).value;
  r.chromatic_index = chi_g <= chi_h;
  if (!r.chromatic_index) {
    r.notes.push_back("(b) chi'(G) = " + std::to_string(chi_g) + " exceeds chi'(H) = " + std::to_string(chi_h));
  }

  r.perfect_matchings = true;
  for_each_perfect_matching(h, [&](const std::vector<EdgeId>& m) {
    if (!r.perfect_matchings) return;
    std::uint64_t mask = 0;
    for (EdgeId e : m) mask |= std::uint64_t{1} << e;
    if (!is_perfect_matching(g, selected(preimage(f, mask)))) {
      r.perfect_matchings = false;
      r.notes.push_back("(c) a perfect matching of H pulls back to a non-perfect matching");
    }
  });

  // Preimages are linear in the host set, so checking a basis suffices;
  // small cycle spaces are walked in full anyway.
  const std::vector<std::uint64_t> basis = cycle_basis(h);
  r.even_subgraphs = true;
  if (basis.size() <= 20) {
    std::uint64_t current = 0;
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < total && r.even_subgraphs; ++i) {
      current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
      if (!all_even(g, preimage(f, current))) r.even_subgraphs = false;
    }
  } else {
    for (std::uint64_t c : basis) {
      if (!all_even(g, preimage(f, c))) r.even_subgraphs = false;
    }
  }
  if (!r.even_subgraphs) r.notes.push_back("(d) an even subgraph of H pulls back to a non-even subgraph");

  const std::vector<EdgeId> hb = bridges(h);
  r.bridges = true;
  for (EdgeId e : bridges(g)) {
    const EdgeId img = f.images[static_cast<std::size_t>(e)][0];
    if (!std::binary_search(hb.begin(), hb.end(), img)) {
      r.bridges = false;
      r.notes.push_back("(e) bridge " + std::to_string(e) + " maps to non-bridge " + std::to_string(img));
    }
  }
  return r;
}

bool matching_preimages_brute_force(const EdgeMapping& f) {
  check_mapping(f);
  const PseudoGraph& h = *f.host;
  if (h.edge_count() > 24) throw PreconditionError("brute-force matching walk is limited to 24 host edges");
  const PseudoGraph& g = *f.target;
  bool ok = true;
  std::vector<char> used(static_cast<std::size_t>(h.vertex_count()), 0);
  std::uint64_t mask = 0;
  auto walk = [&](auto&& self, EdgeId from) -> void {
    if (!ok) return;
    if (!is_matching(g, selected(preimage(f, mask)))) {
      ok = false;
      return;
    }
    for (EdgeId e = from; e < h.edge_count(); ++e) {
      const EdgeRecord& r = h.edge(e);
      if (r.is_loop() || used[static_cast<std::size_t>(r.u)] || used[static_cast<std::size_t>(r.v)]) continue;
      used[static_cast<std::size_t>(r.u)] = used[static_cast<std::size_t>(r.v)] = 1;
      mask |= std::uint64_t{1} << e;
      self(self, e + 1);
      mask &= ~(std::uint64_t{1} << e);
      used[static_cast<std::size_t>(r.u)] = used[static_cast<std::size_t>(r.v)] = 0;
    }
  };
  walk(walk, 0);
  return ok;
}

std::string mapping_to_json(const EdgeMapping& f) {
  const SatisfactionReport rep = satisfaction(f);
  nlohmann::json j;
  j["target"] = write_pgf(*f.target);
  j["host"] = write_pgf(*f.host);
  nlohmann::json assignment = nlohmann::json::array();
  for (const EdgeRecord& e : f.target->edges()) {
    const auto& img = f.images[static_cast<std::size_t>(e.id)];
    if (e.is_loop()) {
      assignment.push_back({e.id, img[0], img[1]});
    } else {
      assignment.push_back({e.id, img[0]});
    }
  }
  j["assignment"] = std::move(assignment);
  j["satisfied"] = rep.satisfied.size();
  nlohmann::json failures = nlohmann::json::array();
  for (const VertexFailure& fl : rep.failures) {
    nlohmann::json one{{"vertex", fl.vertex}, {"seen", fl.seen}};
    if (fl.witness) one["witness"] = {(*fl.witness)[0], (*fl.witness)[1]};
    failures.push_back(std::move(one));
  }
  j["failures"] = std::move(failures);
  return j.dump();
}

}  // namespace sylvan
