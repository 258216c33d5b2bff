#pragma once

#include <relaxasp/digraph.hpp>

#include <string_view>
#include <vector>

namespace relaxasp {

enum class OrderingStrategy { min_degree, input_order };

[[nodiscard]] std::string_view to_string(OrderingStrategy strategy);

//! A permutation of the vertices of a graph; order[i] is eliminated at step i+1.
struct EliminationOrdering {
    std::vector<Vertex> order;
    OrderingStrategy    strategy = OrderingStrategy::input_order;
};

//! Fill-in arcs introduced by eliminating a single vertex.
struct EliminationStep {
    Vertex           vertex;
    std::vector<Arc> fill_in; // sorted
};

struct VertexPair {
    Vertex first;  // first < second
    Vertex second;

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

struct EliminationResult {
    std::vector<EliminationStep> steps;              // in elimination order
    std::vector<Arc>             fill_in;            // union of the per-step fill-ins, sorted
    Digraph                      elimination_graph;  // input arcs plus fill_in
    std::vector<VertexPair>      two_cycle_pairs;    // sorted
    std::size_t                  width = 0;          // max residual degree at elimination time
};

//! Arcs from the in-neighbours of v to the out-neighbours of v, x != y.
//! Throws std::out_of_range for an unknown vertex.
[[nodiscard]] std::vector<Arc> fill_in_of(const Digraph& graph, Vertex v);

//! Runs the elimination process of `graph` along `ordering`.
//! Throws std::invalid_argument if the ordering is not a permutation.
[[nodiscard]] EliminationResult eliminate(const Digraph& graph, const EliminationOrdering& ordering);

//! Greedy minimum degree ordering: repeatedly eliminates the vertex with the
//! fewest incoming plus outgoing arcs in the residual graph (fill-in
//! included), ties going to the smallest vertex.
[[nodiscard]] EliminationOrdering min_degree_ordering(const Digraph& graph);

[[nodiscard]] EliminationOrdering input_ordering(const Digraph& graph);

[[nodiscard]] EliminationOrdering make_ordering(const Digraph& graph, OrderingStrategy strategy);

} // namespace relaxasp
