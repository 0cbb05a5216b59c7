#include "chromlab/dimacs.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "chromlab/errors.hpp"

namespace chromlab {

void write_dimacs(std::ostream& os, const Graph& g) {
    os << "p edge " << g.order() << ' ' << g.num_edges() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_dimacs(std::istream& is) {
    std::string line;
    bool have_header = false;
    long long n = 0, m = 0, edges_seen = 0;
    Graph g;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw parse_error("duplicate problem line at line " + std::to_string(lineno));
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw parse_error("malformed problem line at line " + std::to_string(lineno));
            g = Graph(static_cast<int>(n));
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw parse_error("edge line before problem line at line " + std::to_string(lineno));
            long long u = 0, v = 0;
            if (!(ls >> u >> v))
                throw parse_error("malformed edge line at line " + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("edge endpoint out of range at line " + std::to_string(lineno));
            if (u == v) throw parse_error("self-loop at line " + std::to_string(lineno));
            const int a = static_cast<int>(u - 1), b = static_cast<int>(v - 1);
            if (g.adjacent(a, b)) throw parse_error("duplicate edge at line " + std::to_string(lineno));
            g.add_edge(a, b);
            ++edges_seen;
        } else {
            throw parse_error("unrecognized line tag '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    if (!have_header) throw parse_error("missing problem line");
    if (edges_seen != m)
        throw parse_error("header declares " + std::to_string(m) + " edges but " +
                          std::to_string(edges_seen) + " were read");
    return g;
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open '" + path + "' for reading");
    return read_dimacs(f);
}

void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw io_error("cannot open '" + path + "' for writing");
    write_dimacs(f, g);
    f.flush();
    if (!f) throw io_error("failed writing '" + path + "'");
}

}  // namespace chromlab
