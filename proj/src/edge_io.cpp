#include "ricci/edge_io.hpp"

#include <fstream>
#include <sstream>

namespace ricci {

namespace {

// Strips comment and surrounding whitespace; empty result means "skip".
std::string content_of(const std::string& line) {
    std::string s = line;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        std::string body = content_of(line);
        if (body.empty()) continue;
        std::istringstream ss(body);
        if (n < 0) {
            std::string tag;
            if (!(ss >> tag >> n) || tag != "n" || n <= 0 || !(ss >> std::ws).eof())
                throw InputError("edge list: expected header 'n <vertex_count>', got '" + body + "'");
            continue;
        }
        long u, v;
        if (!(ss >> u >> v) || !(ss >> std::ws).eof())
            throw InputError("edge list: expected 'u v', got '" + body + "'");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw InputError("edge list: bad edge '" + body + "'");
        edges.emplace_back(static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v)));
    }
    if (n < 0) throw InputError("edge list: missing 'n <vertex_count>' header");
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write graph file: " + path);
    write_edge_list(out, g);
}

}  // namespace ricci
