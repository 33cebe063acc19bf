// cube_graph.hpp: Fibonacci cubes Γₙ and Lucas cubes Λₙ as explicit induced subgraphs of Qₙ.
#pragma once

#include "fibcube/bit_word.hpp"
#include "fibcube/exact_integer.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fibcube {

enum class CubeKind { Gamma, Lambda };

inline std::string_view to_string(CubeKind kind) {
  return kind == CubeKind::Gamma ? "gamma" : "lambda";
}

/// Largest n built without an explicit override; the vertex count grows like φⁿ.
inline constexpr int kDeskScaleLimit = 30;

struct BuildOptions {
  bool allow_large = false;
};

/// Edge uv differing only at coordinate k, with u_k = 0 and v_k = 1.
struct OrientedEdge {
  BitWord u;
  BitWord v;
  int k = 0;
  std::size_t u_index = 0;
  std::size_t v_index = 0;

  friend bool operator==(const OrientedEdge& a, const OrientedEdge& b) {
    return a.u == b.u && a.v == b.v && a.k == b.k;
  }
};

namespace detail {

inline void check_dimension(int n, int min_n, const BuildOptions& options, const char* what) {
  if (n < min_n)
    throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) + " below minimum " +
                            std::to_string(min_n));
  if (n > BitWord::kMaxLength)
    throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds word capacity");
  if (n > kDeskScaleLimit && !options.allow_large)
    throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) + " exceeds " +
                            std::to_string(kDeskScaleLimit) + " without override");
}

// Depth-first over coordinates 1..n, choosing 0 before 1: emits words in lexicographic order.
inline void extend_fibonacci(int n, int depth, std::uint64_t prefix, bool last_bit,
                             std::vector<BitWord>& out) {
  if (depth == n) {
    out.emplace_back(n, prefix);
    return;
  }
  extend_fibonacci(n, depth + 1, prefix << 1, false, out);
  if (!last_bit) extend_fibonacci(n, depth + 1, (prefix << 1) | 1u, true, out);
}

}  // namespace detail

/// All Fibonacci words of length n in ascending packed order; f_{n+2} of them.
inline std::vector<BitWord> enum_fib_words(int n, const BuildOptions& options = {}) {
  detail::check_dimension(n, 0, options, "enum_fib_words");
  std::vector<BitWord> out;
  detail::extend_fibonacci(n, 0, 0, false, out);
  return out;
}

/// All Lucas words of length n ≥ 2 in ascending packed order; L_n of them.
inline std::vector<BitWord> enum_lucas_words(int n, const BuildOptions& options = {}) {
  detail::check_dimension(n, 2, options, "enum_lucas_words");
  auto words = enum_fib_words(n, options);
  std::erase_if(words, [](const BitWord& w) { return !w.is_lucas(); });
  return words;
}

class CubeGraph {
 public:
  static CubeGraph build(CubeKind kind, int n, const BuildOptions& options = {}) {
    return CubeGraph(kind, n,
                     kind == CubeKind::Gamma ? enum_fib_words(n, options)
                                             : enum_lucas_words(n, options));
  }

  CubeKind kind() const { return kind_; }
  int dimension() const { return n_; }
  const std::vector<BitWord>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  /// Sorted by (u index, k).
  const std::vector<OrientedEdge>& edges() const { return edges_; }

  bool contains(const BitWord& w) const {
    return w.length() == n_ && index_.contains(w.packed());
  }

  std::size_t index_of(const BitWord& w) const {
    if (w.length() == n_)
      if (auto it = index_.find(w.packed()); it != index_.end()) return it->second;
    throw std::out_of_range("CubeGraph: \"" + w.str() + "\" is not a vertex");
  }

  bool is_valid_word(const BitWord& w) const {
    return kind_ == CubeKind::Gamma ? w.is_fibonacci() : w.is_lucas();
  }

 private:
  CubeGraph(CubeKind kind, int n, std::vector<BitWord> vertices)
      : kind_(kind), n_(n), vertices_(std::move(vertices)) {
    index_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i].packed(), i);
    // Clearing a 1 keeps a word valid, so every edge is found exactly once from its 1-endpoint.
    for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
      const BitWord& v = vertices_[vi];
      for (int k = 1; k <= n_; ++k) {
        if (!v.at(k)) continue;
        const BitWord u = v.with(k, false);
        edges_.push_back(OrientedEdge{u, v, k, index_.at(u.packed()), vi});
      }
    }
    std::sort(edges_.begin(), edges_.end(), [](const OrientedEdge& a, const OrientedEdge& b) {
      return a.u_index != b.u_index ? a.u_index < b.u_index : a.k < b.k;
    });
  }

  CubeKind kind_;
  int n_;
  std::vector<BitWord> vertices_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<OrientedEdge> edges_;
};

inline CubeGraph build_cube(CubeKind kind, int n, const BuildOptions& options = {}) {
  return CubeGraph::build(kind, n, options);
}

inline const std::vector<OrientedEdge>& edges(const CubeGraph& g) { return g.edges(); }

/// Size of the coordinate-k cut.
inline ExactInteger edges_at_coordinate(const CubeGraph& g, int k) {
  if (k < 1 || k > g.dimension())
    throw std::out_of_range("edges_at_coordinate: k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(g.dimension()) + "]");
  return ExactInteger(std::count_if(g.edges().begin(), g.edges().end(),
                                    [k](const OrientedEdge& e) { return e.k == k; }));
}

}  // namespace fibcube
