#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace upward {

struct Edge {
    std::string id;
    std::string tail;
    std::string head;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Labeled directed multigraph with string ids. Construction enforces the
// structural invariants (nonempty unique ids, existing endpoints, no
// self-loops); acyclicity is a separate question answered by check_acyclic,
// so that cycle witnesses can be produced for bad inputs.
//
// Vertices and edges are kept sorted by id; labeled equality is plain
// member equality. Parallel edges (same tail and head, distinct ids) are
// allowed. All values are immutable after construction.
class Graph {
public:
    Graph() = default;

    static Graph make(std::vector<std::string> vertices, std::vector<Edge> edges);

    const std::vector<std::string>& vertex_ids() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& id) const;
    const Edge& edge(const std::string& id) const; // throws DomainError on unknown id

    // I(v) and O(v): incident edge ids sorted ascending. Throw on unknown vertex.
    const std::vector<std::string>& in_edges(const std::string& v) const;
    const std::vector<std::string>& out_edges(const std::string& v) const;
    std::size_t degree(const std::string& v) const;

    bool empty() const { return vertices_.empty(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, std::vector<std::string>> in_, out_;
};

enum class VertexKind { Source, Sink, Processive, Isolated };

struct VertexClass {
    VertexKind kind;
    bool is_leaf; // degree exactly one
};

const char* to_string(VertexKind k);

struct CycleWitness {
    std::vector<std::string> edge_ids; // consecutive edges forming a directed cycle
};

// Topological order of all vertex ids, or an explicit directed cycle.
// Deterministic: Kahn's algorithm with the smallest available id first.
using TopoResult = std::variant<std::vector<std::string>, CycleWitness>;
TopoResult check_acyclic(const Graph& g);

VertexClass classify_vertex(const Graph& g, const std::string& v);

struct ProcessiveCheck {
    bool ok;
    std::vector<std::string> violators; // non-leaf sources/sinks, sorted
};

// True iff every source and every sink is a leaf. Throws DomainError on the
// empty graph (a processive graph is nonempty by definition).
ProcessiveCheck is_processive_graph(const Graph& g);

struct StubEntry {
    std::string vertex; // the original source or sink
    std::string leaf;   // added leaf vertex
    std::string edge;   // added stub edge

    friend bool operator==(const StubEntry&, const StubEntry&) = default;
};

struct ExtensionMapping {
    std::vector<StubEntry> input_stubs;  // one per non-leaf source, sorted by vertex
    std::vector<StubEntry> output_stubs; // one per non-leaf sink, sorted by vertex

    bool empty() const { return input_stubs.empty() && output_stubs.empty(); }
    friend bool operator==(const ExtensionMapping&, const ExtensionMapping&) = default;
};

// Adds an input stub (leaf x__in_leaf, edge x__in_stub) to every non-leaf
// source x and an output stub (x__out_leaf, x__out_stub) to every non-leaf
// sink. Sources and sinks that are already leaves need nothing: the target
// is a graph whose sources and sinks are all leaves, which they satisfy.
// The result is always processive; deleting the mapped elements recovers
// the input exactly.
//
// Throws DomainError if an isolated vertex is present (virtualize first)
// and StructuralError if a fresh id collides with an existing one.
std::pair<Graph, ExtensionMapping> np_extend(const Graph& g);

struct VirtualizedVertex {
    std::string vertex; // removed isolated vertex
    std::string top;    // fresh x__top
    std::string bottom; // fresh x__bot
    std::string edge;   // fresh x__virt, top -> bottom
};

using VirtualizationMapping = std::vector<VirtualizedVertex>; // sorted by vertex

// Replaces every isolated vertex x by the virtual edge x__top -> x__bot.
// Identity (empty mapping) on graphs without isolated vertices.
std::pair<Graph, VirtualizationMapping> virtualize_isolated(const Graph& g);

struct ComponentMap {
    std::map<std::string, std::string> component_of;            // vertex -> key
    std::map<std::string, std::vector<std::string>> members;    // key -> sorted vertices
};

// Weakly connected components; a component's key is its smallest vertex id.
ComponentMap connected_components(const Graph& g);

} // namespace upward
