#include "dichroma/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace dichroma {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    return out;
}

std::vector<std::pair<int, int>> read_pairs(std::istream& in, int n, int m, const char* what) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw parse_error(std::string("truncated ") + what + " list");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error(std::string(what) + " endpoint out of range: " + std::to_string(u) +
                              " " + std::to_string(v));
        if (u == v) throw parse_error(std::string("loop line: ") + std::to_string(u));
        pairs.emplace_back(u, v);
    }
    return pairs;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
    int n, m;
    if (!(in >> n >> m) || n < 0 || m < 0) throw parse_error("bad digraph header");
    auto arcs = read_pairs(in, n, m, "arc");
    std::unordered_set<long long> seen;
    for (auto [u, v] : arcs)
        if (!seen.insert(static_cast<long long>(u) * n + v).second)
            throw parse_error("duplicate arc line: " + std::to_string(u) + " " + std::to_string(v));
    return Digraph(n, arcs);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.vertex_count() << " " << d.arc_count() << "\n";
    for (auto [u, v] : d.arcs()) out << u << " " << v << "\n";
}

UndirectedGraph read_undirected(std::istream& in) {
    std::string sentinel;
    if (!(in >> sentinel) || sentinel != "u") throw parse_error("missing undirected sentinel 'u'");
    int n, m;
    if (!(in >> n >> m) || n < 0 || m < 0) throw parse_error("bad undirected header");
    auto edges = read_pairs(in, n, m, "edge");
    std::unordered_set<long long> seen;
    for (auto [u, v] : edges) {
        long long key = static_cast<long long>(std::min(u, v)) * n + std::max(u, v);
        if (!seen.insert(key).second)
            throw parse_error("duplicate edge line: " + std::to_string(u) + " " +
                              std::to_string(v));
    }
    return UndirectedGraph(n, edges);
}

void write_undirected(std::ostream& out, const UndirectedGraph& g) {
    out << "u " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Digraph read_digraph_file(const std::string& path) {
    auto in = open_in(path);
    return read_digraph(in);
}

void write_digraph_file(const std::string& path, const Digraph& d) {
    auto out = open_out(path);
    write_digraph(out, d);
}

UndirectedGraph read_undirected_file(const std::string& path) {
    auto in = open_in(path);
    return read_undirected(in);
}

void write_undirected_file(const std::string& path, const UndirectedGraph& g) {
    auto out = open_out(path);
    write_undirected(out, g);
}

bool file_is_undirected(const std::string& path) {
    auto in = open_in(path);
    std::string first;
    in >> first;
    return first == "u";
}

TreeDecomposition read_decomposition(std::istream& in) {
    std::string line;
    TreeDecomposition td;
    int bags = -1, n = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "s") {
            std::string td_tag;
            int width_plus_one;
            if (!(ls >> td_tag >> bags >> width_plus_one >> n) || td_tag != "td" || bags < 0)
                throw parse_error("bad decomposition header");
            td.bags.assign(bags, {});
        } else if (tag == "b") {
            if (bags < 0) throw parse_error("bag line before header");
            int id;
            if (!(ls >> id) || id < 1 || id > bags) throw parse_error("bad bag id");
            int v;
            while (ls >> v) {
                if (v < 0 || v >= n) throw parse_error("bag vertex out of range");
                td.bags[id - 1].push_back(v);
            }
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
        } else {
            if (bags < 0) throw parse_error("edge line before header");
            int a, b;
            try {
                a = std::stoi(tag);
            } catch (const std::exception&) {
                throw parse_error("bad tree edge line: " + line);
            }
            if (!(ls >> b) || a < 1 || b < 1 || a > bags || b > bags)
                throw parse_error("bad tree edge");
            td.tree_edges.emplace_back(a - 1, b - 1);
        }
    }
    if (bags < 0) throw parse_error("missing decomposition header");
    return td;
}

void write_decomposition(std::ostream& out, const TreeDecomposition& td, int n) {
    out << "s td " << td.node_count() << " " << td.width() + 1 << " " << n << "\n";
    for (int t = 0; t < td.node_count(); ++t) {
        out << "b " << t + 1;
        for (int v : td.bags[t]) out << " " << v;
        out << "\n";
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << " " << b + 1 << "\n";
}

TreeDecomposition read_decomposition_file(const std::string& path) {
    auto in = open_in(path);
    return read_decomposition(in);
}

void write_decomposition_file(const std::string& path, const TreeDecomposition& td, int n) {
    auto out = open_out(path);
    write_decomposition(out, td, n);
}

namespace {

NodeKind kind_from_string(const std::string& s) {
    for (NodeKind k : {NodeKind::leaf, NodeKind::introduce, NodeKind::forget, NodeKind::join})
        if (s == to_string(k)) return k;
    throw parse_error("unknown node kind: " + s);
}

}  // namespace

void write_nice_files(const std::string& td_path, const std::string& kinds_path,
                      const NiceTreeDecomposition& nd, int n) {
    TreeDecomposition td;
    td.bags.reserve(nd.node_count());
    for (const auto& node : nd.nodes) td.bags.push_back(node.bag);
    for (int t = 0; t < nd.node_count(); ++t)
        for (int c : nd.nodes[t].children) td.tree_edges.emplace_back(t, c);
    write_decomposition_file(td_path, td, n);

    nlohmann::json kinds;
    kinds["root"] = nd.root;
    auto& list = kinds["kinds"] = nlohmann::json::array();
    for (const auto& node : nd.nodes)
        list.push_back({{"kind", to_string(node.kind)}, {"vertex", node.vertex}});
    auto out = open_out(kinds_path);
    out << kinds.dump(2) << "\n";
}

NiceTreeDecomposition read_nice_files(const std::string& td_path, const std::string& kinds_path) {
    auto td = read_decomposition_file(td_path);
    auto in = open_in(kinds_path);
    nlohmann::json kinds;
    try {
        in >> kinds;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad kinds sidecar: ") + e.what());
    }
    NiceTreeDecomposition nd;
    nd.root = kinds.at("root").get<int>();
    const auto& list = kinds.at("kinds");
    if (static_cast<int>(list.size()) != td.node_count())
        throw parse_error("kinds sidecar does not match the decomposition");
    nd.nodes.resize(td.node_count());
    for (int t = 0; t < td.node_count(); ++t) {
        nd.nodes[t].kind = kind_from_string(list[t].at("kind").get<std::string>());
        nd.nodes[t].vertex = list[t].at("vertex").get<int>();
        nd.nodes[t].bag = td.bags[t];
    }
    // orient the tree away from the root
    std::vector<std::vector<int>> adj(td.node_count());
    for (auto [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> stack{nd.root};
    std::vector<char> seen(td.node_count(), 0);
    if (nd.root < 0 || nd.root >= td.node_count()) throw parse_error("bad root id");
    seen[nd.root] = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int s : adj[t])
            if (!seen[s]) {
                seen[s] = 1;
                nd.nodes[t].children.push_back(s);
                stack.push_back(s);
            }
    }
    return nd;
}

std::string certificate_to_json(const ColoringCertificate& cert) {
    nlohmann::json j;
    j["k"] = cert.coloring.k;
    j["colors"] = cert.coloring.colors;
    j["class_orders"] = cert.class_orders;
    return j.dump(2) + "\n";
}

ColoringCertificate certificate_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        ColoringCertificate cert;
        cert.coloring.k = j.at("k").get<int>();
        cert.coloring.colors = j.at("colors").get<std::vector<int>>();
        cert.class_orders = j.at("class_orders").get<std::vector<std::vector<int>>>();
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad certificate JSON: ") + e.what());
    }
}

ColoringCertificate read_certificate_file(const std::string& path) {
    auto in = open_in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return certificate_from_json(buffer.str());
}

void write_certificate_file(const std::string& path, const ColoringCertificate& cert) {
    auto out = open_out(path);
    out << certificate_to_json(cert);
}

std::string product_index_to_json(const ProductIndex& index) {
    nlohmann::json j;
    j["nG"] = index.n_left;
    j["nH"] = index.n_right;
    return j.dump() + "\n";
}

ProductIndex product_index_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        return {j.at("nG").get<int>(), j.at("nH").get<int>()};
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad product index JSON: ") + e.what());
    }
}

}  // namespace dichroma
