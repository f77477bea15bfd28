#include "cusped/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cusped {

int MetricGraph::add_vertex(const std::string& label, int depth) {
    auto it = index_.find(label);
    if (it != index_.end()) throw input_error("duplicate vertex label: " + label);
    int id = static_cast<int>(adj_.size());
    labels_.push_back(label);
    depths_.push_back(depth);
    adj_.emplace_back();
    index_.emplace(label, id);
    return id;
}

void MetricGraph::add_edge(int u, int v) {
    if (u == v) throw input_error("self loop");
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw input_error("edge endpoint out of range");
    if (has_edge(u, v)) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

bool MetricGraph::has_edge(int u, int v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), t) != a.end();
}

std::size_t MetricGraph::num_edges() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d += a.size();
    return d / 2;
}

std::optional<int> MetricGraph::find_vertex(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> MetricGraph::bfs(int src) const {
    std::vector<int> dist(adj_.size(), -1);
    std::deque<int> q;
    dist[src] = 0;
    q.push_back(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

int MetricGraph::distance(int u, int v) const { return bfs(u)[v]; }

bool MetricGraph::connected() const { return num_components() <= 1; }

std::vector<int> MetricGraph::component_ids() const {
    std::vector<int> comp(adj_.size(), -1);
    int c = 0;
    for (int s = 0; s < num_vertices(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : adj_[v])
                if (comp[w] < 0) {
                    comp[w] = c;
                    q.push_back(w);
                }
        }
        ++c;
    }
    return comp;
}

int MetricGraph::num_components() const {
    auto comp = component_ids();
    int m = 0;
    for (int c : comp) m = std::max(m, c + 1);
    return m;
}

std::vector<int> MetricGraph::geodesic(int x, int y) const {
    auto dist_y = bfs(y);
    if (dist_y[x] < 0) throw input_error("geodesic: endpoints in different components");
    std::vector<int> path{x};
    int cur = x;
    while (cur != y) {
        int best = -1;
        for (int w : adj_[cur]) {
            if (dist_y[w] != dist_y[cur] - 1) continue;
            if (best < 0 || labels_[w] < labels_[best]) best = w;
        }
        path.push_back(best);
        cur = best;
    }
    return path;
}

MetricGraph MetricGraph::induced(const std::vector<int>& vertices) const {
    MetricGraph g;
    std::vector<int> remap(adj_.size(), -1);
    for (int v : vertices)
        if (remap[v] < 0) remap[v] = g.add_vertex(labels_[v], depths_[v]);
    for (int v : vertices)
        for (int w : adj_[v])
            if (remap[w] >= 0 && v < w) g.add_edge(remap[v], remap[w]);
    return g;
}

void MetricGraph::export_edge_list(std::ostream& os) const {
    // Vertices sorted by label; edges sorted by relabeled endpoints.
    std::vector<int> order(adj_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return labels_[a] < labels_[b]; });
    std::vector<int> pos(adj_.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    for (std::size_t i = 0; i < order.size(); ++i)
        os << "V " << i << " " << (labels_[order[i]].empty() ? "." : labels_[order[i]])
           << " " << depths_[order[i]] << "\n";
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < num_vertices(); ++v)
        for (int w : adj_[v])
            if (v < w) edges.emplace_back(std::min(pos[v], pos[w]), std::max(pos[v], pos[w]));
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) os << "E " << u << " " << v << "\n";
}

MetricGraph MetricGraph::import_edge_list(std::istream& is) {
    MetricGraph g;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "V") {
            int id, depth;
            std::string label;
            ss >> id >> label >> depth;
            if (!ss) throw input_error("bad vertex record: " + line);
            if (label == ".") label.clear();
            int got = g.add_vertex(label, depth);
            if (got != id) throw input_error("vertex ids must be consecutive from 0");
        } else if (tag == "E") {
            int u, v;
            ss >> u >> v;
            if (!ss) throw input_error("bad edge record: " + line);
            g.add_edge(u, v);
        } else {
            throw input_error("unknown record: " + line);
        }
    }
    return g;
}

std::vector<std::vector<int>> bfs_rows_serial(const MetricGraph& g, const std::vector<int>& sources) {
    std::vector<std::vector<int>> rows(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) rows[i] = g.bfs(sources[i]);
    return rows;
}

std::vector<std::vector<int>> bfs_rows_parallel(const MetricGraph& g, const std::vector<int>& sources) {
    std::vector<std::vector<int>> rows(sources.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (std::size_t i = 0; i < sources.size(); ++i) rows[i] = g.bfs(sources[i]);
    return rows;
}

}  // namespace cusped
