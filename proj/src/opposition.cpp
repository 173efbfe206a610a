#include "snortlab/opposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "snortlab/canonical.hpp"

namespace snortlab {

bool verify_opposition(const Graph& g, const VertexMap& f) {
  const int n = g.order();
  if (!is_automorphism(g, f)) return false;
  if (!is_involution(f)) return false;
  for (int v = 0; v < n; ++v) {
    const int w = f[static_cast<std::size_t>(v)];
    if (w == v) return false;                                // fixed point
    if (contains(g.closed_neighborhood(v), w)) return false; // inside N[v]
  }
  return true;
}

namespace {

// Shared matcher for find/for_each. Partners are matched lowest unmatched
// vertex first, candidates ascending, so results are deterministic. Two
// standing prunes: an opposition preserves refined colours, so partners stay
// within colour classes and every class must have even size.
class OppositionMatcher {
 public:
  OppositionMatcher(const Graph& g,
                    const std::function<bool(const Opposition&)>& visit)
      : g_(g), visit_(visit) {}

  void run() {
    const int n = g_.order();
    if (n % 2 != 0) return;
    if (n == 0) {
      visit_(Opposition{});
      return;
    }
    colors_ = refine_colors(g_, std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<int> class_size(static_cast<std::size_t>(n), 0);
    for (int c : colors_) ++class_size[static_cast<std::size_t>(c)];
    for (int c : colors_)
      if (class_size[static_cast<std::size_t>(c)] % 2 != 0) return;
    partner_.assign(static_cast<std::size_t>(n), -1);
    extend();
  }

 private:
  bool extend() {
    const int n = g_.order();
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (partner_[static_cast<std::size_t>(v)] < 0) {
        u = v;
        break;
      }
    }
    if (u < 0) return visit_(partner_);  // perfect matching reached
    for (int w = u + 1; w < n; ++w) {
      if (partner_[static_cast<std::size_t>(w)] >= 0) continue;
      if (colors_[static_cast<std::size_t>(w)] !=
          colors_[static_cast<std::size_t>(u)])
        continue;
      if (contains(g_.closed_neighborhood(u), w)) continue;
      if (!pair_condition_holds(u, w)) continue;
      partner_[static_cast<std::size_t>(u)] = w;
      partner_[static_cast<std::size_t>(w)] = u;
      const bool keep_going = extend();
      partner_[static_cast<std::size_t>(u)] = -1;
      partner_[static_cast<std::size_t>(w)] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  // Against every earlier matched pair (a,b): the cross edges must come in
  // parallel pairs, u-a with w-b and u-b with w-a. Equivalent to the K4 /
  // C4 / two-edges condition on the complement.
  bool pair_condition_holds(int u, int w) const {
    for (int a = 0; a < g_.order(); ++a) {
      const int b = partner_[static_cast<std::size_t>(a)];
      if (b <= a) continue;  // unmatched or seen from the other end
      if (g_.has_edge(u, a) != g_.has_edge(w, b)) return false;
      if (g_.has_edge(u, b) != g_.has_edge(w, a)) return false;
    }
    return true;
  }

  const Graph& g_;
  const std::function<bool(const Opposition&)>& visit_;
  std::vector<int> colors_;
  VertexMap partner_;
};

}  // namespace

std::optional<Opposition> find_opposition(const Graph& g) {
  std::optional<Opposition> found;
  OppositionMatcher(g, [&](const Opposition& f) {
    found = f;
    return false;
  }).run();
  return found;
}

void for_each_opposition(const Graph& g,
                         const std::function<bool(const Opposition&)>& visit) {
  OppositionMatcher(g, visit).run();
}

namespace {

void enumerate_pairings(VertexMap& partner, int n,
                        std::vector<Opposition>& out) {
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (partner[static_cast<std::size_t>(v)] < 0) {
      u = v;
      break;
    }
  }
  if (u < 0) {
    out.push_back(partner);
    return;
  }
  for (int w = u + 1; w < n; ++w) {
    if (partner[static_cast<std::size_t>(w)] >= 0) continue;
    partner[static_cast<std::size_t>(u)] = w;
    partner[static_cast<std::size_t>(w)] = u;
    enumerate_pairings(partner, n, out);
    partner[static_cast<std::size_t>(u)] = -1;
    partner[static_cast<std::size_t>(w)] = -1;
  }
}

}  // namespace

std::vector<Opposition> brute_force_oppositions(const Graph& g) {
  const int n = g.order();
  if (n > 10)
    throw std::length_error("brute-force opposition oracle is capped at 10 vertices");
  std::vector<Opposition> out;
  if (n % 2 != 0) return out;
  VertexMap partner(static_cast<std::size_t>(n), -1);
  std::vector<Opposition> pairings;
  enumerate_pairings(partner, n, pairings);
  for (const Opposition& f : pairings)
    if (verify_opposition(g, f)) out.push_back(f);
  return out;
}

std::vector<AdmissibleSet> admissible_sets(const Graph& g, int degree_cap) {
  const int n = g.order();
  std::vector<AdmissibleSet> out;
  std::unordered_set<VertexSet> seen;
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) > degree_cap)
      throw std::length_error("admissible-set enumeration: degree " +
                              std::to_string(g.degree(u)) +
                              " exceeds the cap of " +
                              std::to_string(degree_cap));
    const VertexSet open = g.neighbors(u);
    // Subsets of N[u] containing u, in ascending mask order.
    VertexSet sub = 0;
    for (;;) {
      const VertexSet s = sub | vertex_bit(u);
      if (seen.insert(s).second) out.push_back(AdmissibleSet{u, s});
      if (sub == open) break;
      sub = (sub - open) & open;  // next subset of `open`
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const AdmissibleSet& a, const AdmissibleSet& b) {
                     if (a.u != b.u) return a.u < b.u;
                     return a.s < b.s;
                   });
  return out;
}

namespace {

// Lift an opposition of the induced remainder back to original labels,
// with -1 on the removed set.
VertexMap to_original_labels(const InducedSubgraph& sub, const Opposition& f,
                             int n) {
  VertexMap out(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < sub.to_old.size(); ++i)
    out[static_cast<std::size_t>(sub.to_old[i])] =
        sub.to_old[static_cast<std::size_t>(f[i])];
  return out;
}

}  // namespace

bool verify_almost_witness(const Graph& g, const AlmostWitness& w) {
  const int n = g.order();
  if (w.u < 0 || w.u >= n) return false;
  if (!contains(w.s, w.u)) return false;
  if (!is_subset(w.s, g.closed_neighborhood(w.u))) return false;
  if (static_cast<int>(w.opposition.size()) != n) return false;
  const VertexSet rest = g.vertices() & ~w.s;
  InducedSubgraph sub = induced_subgraph(g, rest);
  Opposition f(sub.to_old.size());
  for (std::size_t i = 0; i < sub.to_old.size(); ++i) {
    const int img = w.opposition[static_cast<std::size_t>(sub.to_old[i])];
    if (img < 0 || img >= n || !contains(rest, img)) return false;
    f[i] = sub.to_new[static_cast<std::size_t>(img)];
  }
  for (int v = 0; v < n; ++v)
    if (contains(w.s, v) && w.opposition[static_cast<std::size_t>(v)] != -1)
      return false;
  if (!verify_opposition(sub.graph, f)) return false;
  if (w.compatible) {
    const VertexMap& a = *w.compatible;
    if (!is_automorphism(g, a) || !is_involution(a)) return false;
    for (int v = 0; v < n; ++v)
      if (contains(rest, v) &&
          a[static_cast<std::size_t>(v)] !=
              w.opposition[static_cast<std::size_t>(v)])
        return false;
  }
  return true;
}

std::optional<AlmostWitness> find_almost_opposition(const Graph& g,
                                                    int degree_cap) {
  const int n = g.order();
  for (const AdmissibleSet& adm : admissible_sets(g, degree_cap)) {
    if ((n - set_size(adm.s)) % 2 != 0) continue;
    InducedSubgraph sub = induced_subgraph(g, g.vertices() & ~adm.s);
    if (auto f = find_opposition(sub.graph)) {
      AlmostWitness w;
      w.u = adm.u;
      w.s = adm.s;
      w.opposition = to_original_labels(sub, *f, n);
      return w;
    }
  }
  return std::nullopt;
}

std::vector<VertexSet> almost_witness_sets(const Graph& g, int degree_cap) {
  const int n = g.order();
  std::vector<VertexSet> out;
  for (const AdmissibleSet& adm : admissible_sets(g, degree_cap)) {
    if ((n - set_size(adm.s)) % 2 != 0) continue;
    InducedSubgraph sub = induced_subgraph(g, g.vertices() & ~adm.s);
    if (find_opposition(sub.graph)) out.push_back(adm.s);
  }
  return out;
}

namespace {

// Involutive bijections of `members`, pruned so the combined map stays edge
// compatible with the fixed part; full automorphism check runs at the leaf.
class ExtensionSearch {
 public:
  ExtensionSearch(const Graph& g, const std::vector<int>& members,
                  VertexMap& full)
      : g_(g), members_(members), full_(full) {}

  bool found(std::size_t at = 0) {
    while (at < members_.size() &&
           full_[static_cast<std::size_t>(members_[at])] >= 0)
      ++at;
    if (at == members_.size()) return is_automorphism(g_, full_);
    const int v = members_[at];
    for (std::size_t j = at; j < members_.size(); ++j) {
      const int w = members_[j];
      if (full_[static_cast<std::size_t>(w)] >= 0) continue;
      if (!pairing_consistent(v, w)) continue;
      full_[static_cast<std::size_t>(v)] = w;
      full_[static_cast<std::size_t>(w)] = v;
      if (found(at + 1)) return true;
      full_[static_cast<std::size_t>(v)] = -1;
      full_[static_cast<std::size_t>(w)] = -1;
    }
    return false;
  }

 private:
  // v <-> w (possibly v == w, a fixed point) must preserve adjacency against
  // every vertex whose image is already decided.
  bool pairing_consistent(int v, int w) const {
    if (g_.degree(v) != g_.degree(w)) return false;
    for (int x = 0; x < g_.order(); ++x) {
      const int fx = full_[static_cast<std::size_t>(x)];
      if (fx < 0 || x == v || x == w) continue;
      if (g_.has_edge(v, x) != g_.has_edge(w, fx)) return false;
    }
    return true;
  }

  const Graph& g_;
  const std::vector<int>& members_;
  VertexMap& full_;
};

}  // namespace

std::optional<AlmostWitness> find_compatible_almost_opposition(const Graph& g,
                                                               int degree_cap) {
  const int n = g.order();
  for (const AdmissibleSet& adm : admissible_sets(g, degree_cap)) {
    if ((n - set_size(adm.s)) % 2 != 0) continue;
    InducedSubgraph sub = induced_subgraph(g, g.vertices() & ~adm.s);
    std::optional<AlmostWitness> witness;
    for_each_opposition(sub.graph, [&](const Opposition& f) {
      VertexMap full(static_cast<std::size_t>(n), -1);
      for (std::size_t i = 0; i < sub.to_old.size(); ++i)
        full[static_cast<std::size_t>(sub.to_old[i])] =
            sub.to_old[static_cast<std::size_t>(f[i])];
      std::vector<int> members = set_to_list(adm.s);
      ExtensionSearch search(g, members, full);
      if (search.found()) {
        AlmostWitness w;
        w.u = adm.u;
        w.s = adm.s;
        w.opposition = to_original_labels(sub, f, n);
        w.compatible = full;
        witness = std::move(w);
        return false;  // stop enumerating oppositions
      }
      return true;
    });
    if (witness) return witness;
  }
  return std::nullopt;
}

const char* to_string(DecompositionStatus s) {
  switch (s) {
    case DecompositionStatus::Valid: return "valid";
    case DecompositionStatus::NotAPartition: return "parts do not partition the vertices";
    case DecompositionStatus::InvalidPartOpposition: return "a part map is not an opposition of its part";
    case DecompositionStatus::CrossPairViolation: return "a cross pair induces a forbidden subgraph";
  }
  return "?";
}

DecompositionResult verify_decomposition(const Graph& g,
                                         const std::vector<VertexSet>& parts,
                                         const std::vector<Opposition>& opps) {
  VertexSet covered = 0;
  for (VertexSet part : parts) {
    if ((covered & part) != 0 || !is_subset(part, g.vertices()))
      return {DecompositionStatus::NotAPartition, std::nullopt};
    covered |= part;
  }
  if (covered != g.vertices() || parts.size() != opps.size())
    return {DecompositionStatus::NotAPartition, std::nullopt};

  const int n = g.order();
  VertexMap stitched(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    InducedSubgraph sub = induced_subgraph(g, parts[i]);
    if (static_cast<int>(opps[i].size()) != sub.graph.order() ||
        !verify_opposition(sub.graph, opps[i]))
      return {DecompositionStatus::InvalidPartOpposition, std::nullopt};
    for (std::size_t k = 0; k < sub.to_old.size(); ++k)
      stitched[static_cast<std::size_t>(sub.to_old[k])] =
          sub.to_old[static_cast<std::size_t>(opps[i][k])];
  }

  // Every pair of matched pairs from distinct parts must induce C4, 2K2 or
  // 4K1: cross edges come in parallel pairs.
  for (int u = 0; u < n; ++u) {
    const int fu = stitched[static_cast<std::size_t>(u)];
    if (fu < u) continue;
    for (int w = 0; w < n; ++w) {
      const int fw = stitched[static_cast<std::size_t>(w)];
      if (fw < w || w <= u) continue;
      if (w == fu) continue;  // same matched pair
      if (g.has_edge(u, w) != g.has_edge(fu, fw) ||
          g.has_edge(u, fw) != g.has_edge(fu, w))
        return {DecompositionStatus::CrossPairViolation, std::nullopt};
    }
  }
  if (!verify_opposition(g, stitched))
    return {DecompositionStatus::CrossPairViolation, std::nullopt};
  return {DecompositionStatus::Valid, stitched};
}

}  // namespace snortlab
