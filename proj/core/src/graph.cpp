#include "upward/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "upward/errors.hpp"

namespace upward {

Graph Graph::make(std::vector<std::string> vertices, std::vector<Edge> edges) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].empty()) throw StructuralError("empty vertex id");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw StructuralError("duplicate vertex id \"" + vertices[i] + "\"");
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.id.empty()) throw StructuralError("empty edge id");
        if (i > 0 && e.id == edges[i - 1].id)
            throw StructuralError("duplicate edge id \"" + e.id + "\"");
        if (!std::binary_search(vertices.begin(), vertices.end(), e.tail))
            throw StructuralError("edge \"" + e.id + "\" references unknown tail \"" + e.tail + "\"");
        if (!std::binary_search(vertices.begin(), vertices.end(), e.head))
            throw StructuralError("edge \"" + e.id + "\" references unknown head \"" + e.head + "\"");
        if (e.tail == e.head)
            throw StructuralError("edge \"" + e.id + "\" is a self-loop at \"" + e.tail + "\"");
    }
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    for (const std::string& v : g.vertices_) {
        g.in_[v];
        g.out_[v];
    }
    for (const Edge& e : g.edges_) {
        g.out_[e.tail].push_back(e.id);
        g.in_[e.head].push_back(e.id);
    }
    return g;
}

bool Graph::has_vertex(const std::string& id) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

bool Graph::has_edge(const std::string& id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, const std::string& s) { return e.id < s; });
    return it != edges_.end() && it->id == id;
}

const Edge& Graph::edge(const std::string& id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, const std::string& s) { return e.id < s; });
    if (it == edges_.end() || it->id != id) throw DomainError("unknown edge id \"" + id + "\"");
    return *it;
}

const std::vector<std::string>& Graph::in_edges(const std::string& v) const {
    auto it = in_.find(v);
    if (it == in_.end()) throw DomainError("unknown vertex id \"" + v + "\"");
    return it->second;
}

const std::vector<std::string>& Graph::out_edges(const std::string& v) const {
    auto it = out_.find(v);
    if (it == out_.end()) throw DomainError("unknown vertex id \"" + v + "\"");
    return it->second;
}

std::size_t Graph::degree(const std::string& v) const {
    return in_edges(v).size() + out_edges(v).size();
}

const char* to_string(VertexKind k) {
    switch (k) {
    case VertexKind::Source: return "source";
    case VertexKind::Sink: return "sink";
    case VertexKind::Processive: return "processive";
    case VertexKind::Isolated: return "isolated";
    }
    return "?";
}

TopoResult check_acyclic(const Graph& g) {
    std::map<std::string, std::size_t> indegree;
    for (const std::string& v : g.vertex_ids()) indegree[v] = g.in_edges(v).size();

    std::priority_queue<std::string, std::vector<std::string>, std::greater<>> ready;
    for (const auto& [v, d] : indegree)
        if (d == 0) ready.push(v);

    std::vector<std::string> order;
    order.reserve(g.vertex_ids().size());
    while (!ready.empty()) {
        std::string v = ready.top();
        ready.pop();
        order.push_back(v);
        for (const std::string& eid : g.out_edges(v)) {
            const std::string& w = g.edge(eid).head;
            if (--indegree[w] == 0) ready.push(w);
        }
    }
    if (order.size() == g.vertex_ids().size()) return order;

    // Vertices left over are exactly those reachable from a directed cycle,
    // and each of them keeps an in-edge whose tail is also left over. So a
    // backward walk from the smallest leftover id can never dead-end and
    // must revisit a vertex; the revisited stretch, reversed, is a cycle.
    std::set<std::string> remaining;
    for (const auto& [v, d] : indegree)
        if (d > 0) remaining.insert(v);

    std::string cur = *remaining.begin();
    std::vector<std::string> walk_edges; // walk_edges[i] leads INTO the i-th visited vertex
    std::map<std::string, std::size_t> seen{{cur, 0}};
    for (;;) {
        const std::string* prev_edge = nullptr;
        for (const std::string& eid : g.in_edges(cur)) {
            if (remaining.count(g.edge(eid).tail)) {
                prev_edge = &eid;
                break;
            }
        }
        if (!prev_edge) throw StructuralError("internal: leftover vertex without leftover in-edge");
        walk_edges.push_back(*prev_edge);
        cur = g.edge(*prev_edge).tail;
        if (auto it = seen.find(cur); it != seen.end()) {
            CycleWitness w;
            w.edge_ids.assign(walk_edges.begin() + static_cast<long>(it->second), walk_edges.end());
            std::reverse(w.edge_ids.begin(), w.edge_ids.end());
            return w;
        }
        seen[cur] = walk_edges.size();
    }
}

VertexClass classify_vertex(const Graph& g, const std::string& v) {
    const auto& in = g.in_edges(v);
    const auto& out = g.out_edges(v);
    VertexClass c{};
    c.is_leaf = in.size() + out.size() == 1;
    if (in.empty() && out.empty())
        c.kind = VertexKind::Isolated;
    else if (in.empty())
        c.kind = VertexKind::Source;
    else if (out.empty())
        c.kind = VertexKind::Sink;
    else
        c.kind = VertexKind::Processive;
    return c;
}

ProcessiveCheck is_processive_graph(const Graph& g) {
    if (g.empty()) throw DomainError("processive graphs are nonempty");
    ProcessiveCheck r{true, {}};
    for (const std::string& v : g.vertex_ids()) {
        const VertexClass c = classify_vertex(g, v);
        if (c.kind != VertexKind::Processive && !c.is_leaf) {
            r.ok = false;
            r.violators.push_back(v);
        }
    }
    return r;
}

namespace {

void require_fresh_vertex(const Graph& g, const std::string& id) {
    if (g.has_vertex(id))
        throw StructuralError("fresh vertex id \"" + id + "\" collides with an existing id");
}

void require_fresh_edge(const Graph& g, const std::string& id) {
    if (g.has_edge(id))
        throw StructuralError("fresh edge id \"" + id + "\" collides with an existing id");
}

} // namespace

std::pair<Graph, ExtensionMapping> np_extend(const Graph& g) {
    std::vector<std::string> vertices = g.vertex_ids();
    std::vector<Edge> edges = g.edges();
    ExtensionMapping mapping;

    for (const std::string& v : g.vertex_ids()) {
        const VertexClass c = classify_vertex(g, v);
        if (c.kind == VertexKind::Isolated)
            throw DomainError("isolated vertex \"" + v +
                              "\" is both a source and a sink; virtualize it first");
        if (c.is_leaf) continue;
        if (c.kind == VertexKind::Source) {
            StubEntry s{v, v + "__in_leaf", v + "__in_stub"};
            require_fresh_vertex(g, s.leaf);
            require_fresh_edge(g, s.edge);
            vertices.push_back(s.leaf);
            edges.push_back({s.edge, s.leaf, v});
            mapping.input_stubs.push_back(std::move(s));
        } else if (c.kind == VertexKind::Sink) {
            StubEntry s{v, v + "__out_leaf", v + "__out_stub"};
            require_fresh_vertex(g, s.leaf);
            require_fresh_edge(g, s.edge);
            vertices.push_back(s.leaf);
            edges.push_back({s.edge, v, s.leaf});
            mapping.output_stubs.push_back(std::move(s));
        }
    }
    return {Graph::make(std::move(vertices), std::move(edges)), std::move(mapping)};
}

std::pair<Graph, VirtualizationMapping> virtualize_isolated(const Graph& g) {
    std::vector<std::string> vertices;
    std::vector<Edge> edges = g.edges();
    VirtualizationMapping mapping;

    for (const std::string& v : g.vertex_ids()) {
        if (classify_vertex(g, v).kind != VertexKind::Isolated) {
            vertices.push_back(v);
            continue;
        }
        VirtualizedVertex m{v, v + "__top", v + "__bot", v + "__virt"};
        require_fresh_vertex(g, m.top);
        require_fresh_vertex(g, m.bottom);
        require_fresh_edge(g, m.edge);
        vertices.push_back(m.top);
        vertices.push_back(m.bottom);
        edges.push_back({m.edge, m.top, m.bottom});
        mapping.push_back(std::move(m));
    }
    return {Graph::make(std::move(vertices), std::move(edges)), std::move(mapping)};
}

ComponentMap connected_components(const Graph& g) {
    // Union-find over vertex ids.
    std::map<std::string, std::string> parent;
    for (const std::string& v : g.vertex_ids()) parent[v] = v;

    auto find = [&](std::string v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const Edge& e : g.edges()) {
        std::string a = find(e.tail), b = find(e.head);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    ComponentMap cm;
    for (const std::string& v : g.vertex_ids()) {
        std::string root = find(v);
        cm.members[root].push_back(v); // vertex_ids sorted, so members stay sorted
    }
    // Re-key each component by its smallest member (the root already is,
    // since unions always keep the smaller id).
    for (auto& [key, members] : cm.members)
        for (const std::string& v : members) cm.component_of[v] = key;
    return cm;
}

} // namespace upward
