#include "snortlab/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace snortlab {

namespace {

// Re-rank arbitrary colour values to dense ids preserving their order.
void make_dense(std::vector<int>& colors) {
  std::vector<int> vals(colors);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (int& c : colors)
    c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) -
                         vals.begin());
}

int class_count(const std::vector<int>& colors) {
  int mx = -1;
  for (int c : colors) mx = std::max(mx, c);
  return mx + 1;
}

}  // namespace

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  if (static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("colour vector size must equal graph order");
  if (n == 0) return colors;
  make_dense(colors);
  int classes = class_count(colors);
  for (;;) {
    // Signature of v: own colour followed by the sorted colours of N(v).
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(colors[static_cast<std::size_t>(v)]);
      for_each_vertex(g.neighbors(v), [&](int w) {
        s.push_back(colors[static_cast<std::size_t>(w)]);
      });
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<std::vector<int>> keys(sig);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int v = 0; v < n; ++v)
      colors[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(keys.begin(), keys.end(),
                           sig[static_cast<std::size_t>(v)]) -
          keys.begin());
    const int now = class_count(colors);
    if (now == classes) return colors;  // no class split: equitable
    classes = now;
  }
}

namespace {

// Individualise v: v moves ahead of the rest of its colour class.
std::vector<int> individualize(const std::vector<int>& colors, int v) {
  std::vector<int> out(colors.size());
  for (std::size_t w = 0; w < colors.size(); ++w)
    out[w] = 2 * colors[w] + (static_cast<int>(w) == v ? 0 : 1);
  make_dense(out);
  return out;
}

class CanonSearch {
 public:
  // `raw_colors` are the caller's colour values (emitted verbatim in the
  // code); `init_colors` their dense, order-preserving ranks used to seed
  // refinement.
  CanonSearch(const Graph& g, const std::vector<int>& raw_colors,
              const std::vector<int>& init_colors)
      : g_(g), raw_(raw_colors), init_(init_colors) {}

  std::string run() {
    recurse(init_);
    return best_;
  }

 private:
  // A class whose members are mutually interchangeable (any permutation of
  // the class fixing the rest is an automorphism) needs only one branch.
  // That holds when the class induces an empty graph or a clique and all
  // members have the same neighbours outside the class.
  bool interchangeable(const std::vector<int>& members) const {
    VertexSet cls = 0;
    for (int v : members) cls |= vertex_bit(v);
    const VertexSet out0 = g_.neighbors(members[0]) & ~cls;
    bool empty_within = true;
    bool clique_within = true;
    for (int v : members) {
      const VertexSet within = g_.neighbors(v) & cls;
      if (within != 0) empty_within = false;
      if (within != (cls & ~vertex_bit(v))) clique_within = false;
      if ((g_.neighbors(v) & ~cls) != out0) return false;
    }
    return empty_within || clique_within;
  }

  void recurse(std::vector<int> colors) {
    colors = refine_colors(g_, colors);
    const int n = g_.order();
    // Locate the first colour class with two or more members.
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      classes[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])]
          .push_back(v);
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (classes[static_cast<std::size_t>(c)].size() >= 2) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      emit_leaf(colors);
      return;
    }
    const auto& members = classes[static_cast<std::size_t>(target)];
    if (interchangeable(members)) {
      recurse(individualize(colors, members[0]));
      return;
    }
    for (int v : members) recurse(individualize(colors, v));
  }

  void emit_leaf(const std::vector<int>& colors) {
    const int n = g_.order();
    std::vector<int> lab(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      lab[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
    std::string code;
    code.reserve(static_cast<std::size_t>(2 * n + n * n / 8 + 2));
    code.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i)
      code.push_back(
          static_cast<char>(raw_[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])]));
    int acc = 0;
    int acc_bits = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        acc = (acc << 1) | (g_.has_edge(lab[static_cast<std::size_t>(i)],
                                        lab[static_cast<std::size_t>(j)])
                                ? 1
                                : 0);
        if (++acc_bits == 8) {
          code.push_back(static_cast<char>(acc));
          acc = 0;
          acc_bits = 0;
        }
      }
    }
    if (acc_bits > 0) code.push_back(static_cast<char>(acc << (8 - acc_bits)));
    if (!have_best_ || code < best_) {
      best_ = std::move(code);
      have_best_ = true;
    }
  }

  const Graph& g_;
  const std::vector<int>& raw_;
  const std::vector<int>& init_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_code(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.order())
    throw std::invalid_argument("colour vector size must equal graph order");
  for (int c : colors)
    if (c < 0 || c > 255)
      throw std::invalid_argument("colour values must lie in 0..255");
  if (g.order() == 0) return std::string(1, '\0');
  std::vector<int> init(colors);
  make_dense(init);
  return CanonSearch(g, colors, init).run();
}

std::string canonical_code(const Graph& g) {
  return canonical_code(g,
                        std::vector<int>(static_cast<std::size_t>(g.order()), 0));
}

}  // namespace snortlab
