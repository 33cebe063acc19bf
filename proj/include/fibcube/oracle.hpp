// oracle.hpp: brute-force invariants computed directly from a CubeGraph.
//
// Everything here works from vertex words and graph structure alone and never
// consults a closed formula, so it can serve as ground truth for the formula
// modules. Distances use Hamming weight of XOR; distance_check() validates that
// shortcut against BFS.
//
// All functions are single-threaded and read-only on the graph.
#pragma once

#include "fibcube/cube_graph.hpp"
#include "fibcube/exact_integer.hpp"
#include "fibcube/partition.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fibcube {

struct EdgeBalance {
  OrientedEdge edge;
  ExactInteger n_u;  // vertices strictly closer to u
  ExactInteger n_v;  // vertices strictly closer to v
};

namespace detail {

struct SideCounts {
  std::uint64_t closer_to_u = 0;
  std::uint64_t closer_to_v = 0;
};

inline SideCounts count_sides(const CubeGraph& g, const OrientedEdge& e) {
  SideCounts counts;
  const std::uint64_t u = e.u.packed();
  const std::uint64_t v = e.v.packed();
  for (const BitWord& alpha : g.vertices()) {
    const int du = std::popcount(alpha.packed() ^ u);
    const int dv = std::popcount(alpha.packed() ^ v);
    if (du < dv)
      ++counts.closer_to_u;
    else if (dv < du)
      ++counts.closer_to_v;
  }
  return counts;
}

inline std::uint64_t abs_diff(std::uint64_t x, std::uint64_t y) { return x > y ? x - y : y - x; }

}  // namespace detail

inline EdgeBalance nu_nv(const CubeGraph& g, const OrientedEdge& e) {
  const int n = g.dimension();
  if (e.k < 1 || e.k > n || !g.contains(e.u) || !g.contains(e.v) ||
      hamming_distance(e.u, e.v) != 1 || e.u.at(e.k) || !e.v.at(e.k))
    throw std::invalid_argument("nu_nv: edge " + e.u.str() + "-" + e.v.str() + " (k=" +
                                std::to_string(e.k) + ") is not an oriented edge of the graph");
  const auto counts = detail::count_sides(g, e);
  return EdgeBalance{e, ExactInteger(counts.closer_to_u), ExactInteger(counts.closer_to_v)};
}

/// Σ over edges of |n_u − n_v|.
inline ExactInteger mostar_brute(const CubeGraph& g) {
  ExactInteger total = 0;
  for (const auto& e : g.edges()) {
    const auto counts = detail::count_sides(g, e);
    total += detail::abs_diff(counts.closer_to_u, counts.closer_to_v);
  }
  return total;
}

/// Sum of distances over unordered vertex pairs: ordered-pair total, halved.
inline ExactInteger wiener_brute(const CubeGraph& g) {
  ExactInteger ordered = 0;
  const auto& vs = g.vertices();
  for (const BitWord& a : vs) {
    std::uint64_t row = 0;  // ≤ |V|·n, far inside 64 bits for any buildable graph
    for (const BitWord& b : vs) row += static_cast<std::uint64_t>(std::popcount(a.packed() ^ b.packed()));
    ordered += row;
  }
  return divide_exact(ordered, 2);
}

/// True iff BFS distance equals Hamming distance for every vertex pair.
inline bool distance_check(const CubeGraph& g) {
  const std::size_t count = g.vertex_count();
  std::vector<std::vector<std::size_t>> adjacency(count);
  for (const auto& e : g.edges()) {
    adjacency[e.u_index].push_back(e.v_index);
    adjacency[e.v_index].push_back(e.u_index);
  }
  constexpr int kUnseen = std::numeric_limits<int>::max();
  std::vector<int> dist(count);
  std::deque<std::size_t> queue;
  for (std::size_t source = 0; source < count; ++source) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[source] = 0;
    queue.assign(1, source);
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : adjacency[x])
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
    for (std::size_t target = 0; target < count; ++target)
      if (dist[target] != hamming_distance(g.vertices()[source], g.vertices()[target])) return false;
  }
  return true;
}

/// Mₙ coefficients by classifying every edge of Γₙ by its endpoints' leading coordinates.
inline PartitionPolynomial mn_partition_brute(int n, const BuildOptions& options = {}) {
  if (n < 2) throw std::out_of_range("mn_partition_brute: n must be at least 2");
  const CubeGraph g = build_cube(CubeKind::Gamma, n, options);
  PartitionPolynomial m;
  for (const auto& e : g.edges()) {
    const auto counts = detail::count_sides(g, e);
    const std::uint64_t term = detail::abs_diff(counts.closer_to_u, counts.closer_to_v);
    if (e.k == 1)
      m.b += term;  // link edge 00… – 10…
    else if (!e.u.at(1))
      m.a += term;
    else
      m.c += term;
  }
  return m;
}

}  // namespace fibcube
