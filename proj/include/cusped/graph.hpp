#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cusped/common.hpp"

namespace cusped {

// Locally finite unit-edge graph with string vertex labels and optional
// per-vertex depth annotations (0 = Cayley part).
class MetricGraph {
public:
    int add_vertex(const std::string& label, int depth = 0);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    std::size_t num_edges() const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::string& label(int v) const { return labels_[v]; }
    int depth(int v) const { return depths_[v]; }
    std::optional<int> find_vertex(const std::string& label) const;

    // BFS distances from src; unreachable = -1.
    std::vector<int> bfs(int src) const;
    int distance(int u, int v) const;
    bool connected() const;
    int num_components() const;
    std::vector<int> component_ids() const;

    // Deterministic geodesic: the lexicographically least (by label sequence)
    // shortest path from x to y.
    std::vector<int> geodesic(int x, int y) const;

    // Induced subgraph on the given vertex set (labels and depths kept).
    MetricGraph induced(const std::vector<int>& vertices) const;

    // Sorted edge list with a vertex-label table, one record per line.
    void export_edge_list(std::ostream& os) const;
    static MetricGraph import_edge_list(std::istream& is);

private:
    std::vector<std::string> labels_;
    std::vector<int> depths_;
    std::vector<std::vector<int>> adj_;
    std::map<std::string, int> index_;
};

// All-pairs BFS distance rows for the listed sources (parallel kernel with a
// serial reference; results identical).
std::vector<std::vector<int>> bfs_rows_serial(const MetricGraph& g, const std::vector<int>& sources);
std::vector<std::vector<int>> bfs_rows_parallel(const MetricGraph& g, const std::vector<int>& sources);

}  // namespace cusped
