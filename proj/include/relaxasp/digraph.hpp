#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace relaxasp {

using Vertex = std::uint32_t;

struct Arc {
    Vertex from;
    Vertex to;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

//! Directed graph over the dense vertex set {0, ..., n-1} without self-loops.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t vertex_count);
    Digraph(std::size_t vertex_count, const std::vector<Arc>& arcs);

    [[nodiscard]] std::size_t vertex_count() const { return out_.size(); }
    [[nodiscard]] std::size_t arc_count() const { return arc_count_; }

    //! Adds (from, to); returns false if it was already present.
    //! Throws std::invalid_argument for self-loops or unknown vertices.
    bool add_arc(Vertex from, Vertex to);
    [[nodiscard]] bool has_arc(Vertex from, Vertex to) const;

    [[nodiscard]] const std::set<Vertex>& successors(Vertex v) const { return out_.at(v); }
    [[nodiscard]] const std::set<Vertex>& predecessors(Vertex v) const { return in_.at(v); }
    [[nodiscard]] std::size_t             degree(Vertex v) const { return out_.at(v).size() + in_.at(v).size(); }

    //! All arcs in lexicographic order.
    [[nodiscard]] std::vector<Arc> arcs() const;

    friend bool operator==(const Digraph& lhs, const Digraph& rhs) { return lhs.out_ == rhs.out_; }

private:
    std::vector<std::set<Vertex>> out_;
    std::vector<std::set<Vertex>> in_;
    std::size_t                   arc_count_ = 0;
};

//! Directed cycle detection (Kahn's algorithm).
[[nodiscard]] bool has_cycle(const Digraph& graph);

} // namespace relaxasp
