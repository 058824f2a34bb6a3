#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kcube/bitset.hpp"
#include "kcube/cube.hpp"
#include "kcube/text.hpp"

namespace kcube {

using BigInt = boost::multiprecision::cpp_int;

// A finite set of points over one cube, kept sorted and duplicate-free.
class Family {
 public:
  Family() = default;

  explicit Family(std::vector<Point> members) : members_(std::move(members)) {
    for (std::size_t i = 1; i < members_.size(); ++i)
      if (members_[i].params() != members_[0].params())
        throw domain_error("family mixes points of " + to_string(members_[0].params()) + " and " +
                           to_string(members_[i].params()));
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::span<const Point> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const Point& a) const { return std::binary_search(members_.begin(), members_.end(), a); }

  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family&, const Family&) = default;

 private:
  std::vector<Point> members_;
};

inline std::string format_family(const Family& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ';';
    out += format_point(f.members()[i]);
  }
  return out;
}

inline Family parse_family(std::string_view text, const CubeParams& p) {
  std::vector<Point> pts;
  if (!text.empty())
    for (auto tok : detail::split(text, ';')) pts.push_back(parse_point(tok, p));
  return Family(std::move(pts));
}

inline bool is_antichain(const Family& f) {
  const auto m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (preceq(m[i], m[j]) || preceq(m[j], m[i])) return false;
  return true;
}

// Every ordered pair intersects, each member with itself included.
inline bool is_intersecting(const Family& f) {
  const auto m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (!intersects(m[i], m[j])) return false;
  return true;
}

inline bool is_intersecting_antichain(const Family& f) { return is_antichain(f) && is_intersecting(f); }

struct SelfIntersecting {
  bool operator()(const Point& a) const { return self_intersecting(a); }
};

class CompatGraph;

// `keep` selects the vertices; the default is the self-intersection test.
// The ground set may be unsorted and may repeat points.
template <class VertexFilter = SelfIntersecting>
CompatGraph build_compat_graph(std::span<const Point> ground, const Budget& budget = {}, VertexFilter keep = {});

// Vertices: the points of the ground set that may appear in an intersecting
// antichain, in lexicographic order. Edges join distinct incomparable
// intersecting pairs, so intersecting antichains are exactly the cliques.
class CompatGraph {
 public:
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Bitset& neighbors(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (const auto& row : adjacency_) c += row.count();
    return c / 2;
  }

  Family family(std::span<const std::size_t> clique) const {
    std::vector<Point> pts;
    pts.reserve(clique.size());
    for (auto v : clique) pts.push_back(vertices_[v]);
    return Family(std::move(pts));
  }

  template <class VertexFilter>
  friend CompatGraph build_compat_graph(std::span<const Point>, const Budget&, VertexFilter);

 private:
  std::vector<Point> vertices_;
  std::vector<Bitset> adjacency_;
};

template <class VertexFilter>
CompatGraph build_compat_graph(std::span<const Point> ground, const Budget& budget, VertexFilter keep) {
  const auto m = static_cast<std::uint64_t>(ground.size());
  budget.require(m * m, "building the compatibility graph on " + std::to_string(m) + " points");
  for (const auto& a : ground)
    if (a.params() != ground.front().params())
      throw domain_error("ground set mixes points of " + to_string(ground.front().params()) + " and " +
                         to_string(a.params()));

  CompatGraph g;
  for (const auto& a : ground)
    if (keep(a)) g.vertices_.push_back(a);
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());

  const std::size_t n = g.vertices_.size();
  g.adjacency_.assign(n, Bitset(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const Point& a = g.vertices_[u];
      const Point& b = g.vertices_[v];
      if (intersects(a, b) && !preceq(a, b) && !preceq(b, a)) {
        g.adjacency_[u].set(v);
        g.adjacency_[v].set(u);
      }
    }
  return g;
}

// Visits every clique (the empty one first) as a sorted index sequence, in
// lexicographic order of those sequences. Throws budget_error once more than
// budget.limit cliques would be visited.
template <class Visitor>
void for_each_clique(const CompatGraph& g, Visitor&& visit, const Budget& budget = {}) {
  std::vector<std::size_t> clique;
  std::uint64_t emitted = 0;
  auto emit = [&] {
    if (++emitted > budget.limit)
      throw budget_error("more than " + std::to_string(budget.limit) + " intersecting antichains to enumerate");
    visit(std::span<const std::size_t>(clique));
  };
  auto extend = [&](auto&& self, const Bitset& cand) -> void {
    emit();
    cand.for_each([&](std::size_t v) {
      Bitset next = cand & g.neighbors(v);
      next.reset_through(v);
      clique.push_back(v);
      self(self, next);
      clique.pop_back();
    });
  };
  extend(extend, Bitset::full(g.size()));
}

template <class Visitor>
void for_each_intersecting_antichain(std::span<const Point> ground, Visitor&& visit, const Budget& budget = {}) {
  const auto g = build_compat_graph(ground, budget);
  for_each_clique(g, [&](std::span<const std::size_t> c) { visit(g.family(c)); }, budget);
}

inline std::vector<Family> enumerate_intersecting_antichains(std::span<const Point> ground, const Budget& budget = {}) {
  std::vector<Family> out;
  for_each_intersecting_antichain(ground, [&](Family&& f) { out.push_back(std::move(f)); }, budget);
  return out;
}

// Exact clique counting. Branches on a maximum-degree vertex of the candidate
// set: cliques avoiding it plus cliques containing it. Candidate sets above a
// size cutoff are memoized.
class CliqueCounter {
 public:
  explicit CliqueCounter(const CompatGraph& g, std::size_t memo_capacity = std::size_t{1} << 20)
      : graph_(g), memo_capacity_(memo_capacity) {}

  BigInt count(const Bitset& cand) {
    const std::size_t size = cand.count();
    if (size <= small_cutoff) return BigInt(count_small(cand));
    if (auto it = memo_.find(cand); it != memo_.end()) return it->second;

    std::size_t pivot = Bitset::npos;
    std::size_t best_degree = 0;
    cand.for_each([&](std::size_t v) {
      const std::size_t d = (cand & graph_.neighbors(v)).count();
      if (pivot == Bitset::npos || d > best_degree) {
        pivot = v;
        best_degree = d;
      }
    });

    BigInt result;
    if (best_degree == 0) {
      result = BigInt(size) + 1;  // no edges: the empty clique and the singletons
    } else {
      Bitset rest = cand;
      rest.reset(pivot);
      result = count(rest);
      if (best_degree == size - 1)
        result *= 2;
      else
        result += count(cand & graph_.neighbors(pivot));
    }
    if (memo_.size() < memo_capacity_) memo_.emplace(cand, result);
    return result;
  }

 private:
  static constexpr std::size_t small_cutoff = 12;

  std::uint64_t count_small(const Bitset& cand) const {
    std::uint64_t total = 1;
    cand.for_each([&](std::size_t v) {
      Bitset next = cand & graph_.neighbors(v);
      next.reset_through(v);
      total += count_small(next);
    });
    return total;
  }

  const CompatGraph& graph_;
  std::size_t memo_capacity_;
  std::unordered_map<Bitset, BigInt, BitsetHash> memo_;
};

// Number of cliques, the empty one included. With threads > 1 the cliques are
// split by their lowest vertex across workers; the result does not depend on
// the thread count.
inline BigInt count_cliques(const CompatGraph& g, unsigned threads = 1) {
  const std::size_t n = g.size();
  if (threads <= 1 || n < 2) return CliqueCounter(g).count(Bitset::full(n));

  std::vector<BigInt> by_root(n);
  std::atomic<std::size_t> next_root{0};
  auto work = [&] {
    CliqueCounter counter(g);
    for (std::size_t v; (v = next_root.fetch_add(1)) < n;) {
      Bitset cand = g.neighbors(v);
      cand.reset_through(v);
      by_root[v] = counter.count(cand);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t) pool.emplace_back(work);
  }
  BigInt total = 1;
  for (const auto& c : by_root) total += c;
  return total;
}

inline BigInt count_intersecting_antichains(std::span<const Point> ground, const Budget& budget = {},
                                            unsigned threads = 1) {
  return count_cliques(build_compat_graph(ground, budget), threads);
}

// Maximum clique by branch and bound. Candidates are expanded in increasing
// index order and bounded by the number of greedy colors left in the
// candidate suffix, so the first maximum clique reached is the
// lexicographically smallest one.
inline std::vector<std::size_t> max_clique(const CompatGraph& g) {
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;

  auto expand = [&](auto&& self, const Bitset& cand) -> void {
    if (current.size() > best.size()) best = current;
    std::vector<std::size_t> order;
    cand.for_each([&](std::size_t v) { order.push_back(v); });
    if (order.empty()) return;

    // Greedy coloring in index order; suffix_colors[j] counts the distinct
    // colors among order[j..].
    std::vector<std::size_t> color(order.size());
    std::vector<Bitset> classes;
    for (std::size_t j = 0; j < order.size(); ++j) {
      std::size_t c = 0;
      while (c < classes.size() && classes[c].intersects(g.neighbors(order[j]))) ++c;
      if (c == classes.size()) classes.emplace_back(g.size());
      classes[c].set(order[j]);
      color[j] = c;
    }
    std::vector<std::size_t> suffix_colors(order.size());
    std::vector<char> seen(classes.size(), 0);
    std::size_t distinct = 0;
    for (std::size_t j = order.size(); j-- > 0;) {
      if (!seen[color[j]]) {
        seen[color[j]] = 1;
        ++distinct;
      }
      suffix_colors[j] = distinct;
    }

    for (std::size_t j = 0; j < order.size(); ++j) {
      if (current.size() + suffix_colors[j] <= best.size()) return;
      const std::size_t v = order[j];
      Bitset next = cand & g.neighbors(v);
      next.reset_through(v);
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  expand(expand, Bitset::full(g.size()));
  return best;
}

inline Family max_intersecting_antichain(std::span<const Point> ground, const Budget& budget = {}) {
  const auto g = build_compat_graph(ground, budget);
  return g.family(max_clique(g));
}

// Independent oracle: tests every subset of the ground set with the family
// predicates. Result sorted.
inline std::vector<Family> naive_oracle_enumerate(std::span<const Point> ground) {
  std::vector<Point> pts(ground.begin(), ground.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() > 20)
    throw budget_error("naive enumeration is limited to 20 points, got " + std::to_string(pts.size()));

  std::vector<Family> out;
  const std::uint64_t subsets = std::uint64_t{1} << pts.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<Point> members;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if ((mask >> i) & 1U) members.push_back(pts[i]);
    Family f(std::move(members));
    if (is_intersecting_antichain(f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kcube
