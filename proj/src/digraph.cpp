#include <relaxasp/digraph.hpp>

#include <stdexcept>
#include <string>

namespace relaxasp {

Digraph::Digraph(std::size_t vertex_count)
    : out_(vertex_count)
    , in_(vertex_count) {}

Digraph::Digraph(std::size_t vertex_count, const std::vector<Arc>& arcs)
    : Digraph(vertex_count) {
    for (const auto& arc : arcs) {
        add_arc(arc.from, arc.to);
    }
}

bool Digraph::add_arc(Vertex from, Vertex to) {
    if (from >= vertex_count() || to >= vertex_count()) {
        throw std::invalid_argument("arc (" + std::to_string(from) + "," + std::to_string(to) + ") has unknown vertex");
    }
    if (from == to) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(from));
    }
    if (!out_[from].insert(to).second) {
        return false;
    }
    in_[to].insert(from);
    ++arc_count_;
    return true;
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
    return from < vertex_count() && out_[from].count(to) != 0;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex v = 0; v < vertex_count(); ++v) {
        for (auto w : out_[v]) {
            result.push_back({v, w});
        }
    }
    return result;
}

bool has_cycle(const Digraph& graph) {
    const auto               n = graph.vertex_count();
    std::vector<std::size_t> in_degree(n);
    std::vector<Vertex>      ready;
    for (Vertex v = 0; v < n; ++v) {
        in_degree[v] = graph.predecessors(v).size();
        if (in_degree[v] == 0) {
            ready.push_back(v);
        }
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++removed;
        for (auto w : graph.successors(v)) {
            if (--in_degree[w] == 0) {
                ready.push_back(w);
            }
        }
    }
    return removed != n;
}

} // namespace relaxasp
