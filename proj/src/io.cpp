#include "p5color/io.hpp"

#include <fstream>
#include <sstream>

#include "p5color/errors.hpp"

namespace p5c {

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 0)
                throw InputError("bad DIMACS header at line " + std::to_string(lineno));
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw InputError("edge before DIMACS header at line " + std::to_string(lineno));
            int u, v;
            if (!(ls >> u >> v))
                throw InputError("bad edge line at line " + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError("edge endpoint out of range at line " + std::to_string(lineno));
            if (u == v) throw InputError("self-loop at line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw InputError("unrecognized DIMACS line tag '" + tag + "' at line " + std::to_string(lineno));
    }
    if (n < 0) throw InputError("missing DIMACS header");
    Graph g(n, edges);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v + 1;
    g.set_labels(std::move(labels));
    return g;
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    // positional 1-indexed ids, matching what read_dimacs assigns as labels
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::map<int, std::vector<int>> read_lists(std::istream& in) {
    std::map<int, std::vector<int>> lists;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("missing ':' in list line " + std::to_string(lineno));
        int label;
        {
            std::istringstream head(line.substr(0, colon));
            if (!(head >> label)) throw InputError("bad vertex label in list line " + std::to_string(lineno));
            std::string rest;
            if (head >> rest) throw InputError("trailing junk before ':' in list line " + std::to_string(lineno));
        }
        std::vector<int> colors;
        std::istringstream tail(line.substr(colon + 1));
        int c;
        while (tail >> c) {
            if (c < 1) throw InputError("colors must be positive in list line " + std::to_string(lineno));
            colors.push_back(c);
        }
        if (!tail.eof())
            throw InputError("bad color token in list line " + std::to_string(lineno));
        lists[label] = std::move(colors); // later lines override earlier ones
    }
    return lists;
}

std::map<int, std::vector<int>> read_lists_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open list file: " + path);
    return read_lists(in);
}

void write_lists(std::ostream& out, const std::map<int, std::vector<int>>& lists,
                 const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    for (const auto& [label, colors] : lists) {
        out << label << ":";
        for (int c : colors) out << " " << c;
        out << "\n";
    }
}

} // namespace p5c
