#include "h1/io.hpp"

#include <fstream>
#include <sstream>

namespace h1 {

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;
    std::string current;

    explicit LineReader(const std::string& text) : in(text) {}

    // next non-empty, non-comment line; returns false at end of input
    bool next() {
        while (std::getline(in, current)) {
            ++line_no;
            std::size_t i = current.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (current[i] == 'c' || current[i] == '#') continue;
            return true;
        }
        return false;
    }

    std::istringstream tokens() const { return std::istringstream(current); }
};

int parse_vertex(LineReader& r, std::istringstream& t, int n, const char* what) {
    long long v;
    if (!(t >> v)) throw parse_error(r.line_no, std::string("expected ") + what);
    if (v < 1 || v > n)
        throw parse_error(r.line_no, std::string(what) + " " + std::to_string(v) +
                                         " out of range 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

} // namespace

Graph read_graph(const std::string& text) {
    LineReader r(text);
    if (!r.next()) throw parse_error(1, "missing header");
    auto t = r.tokens();
    std::string p, kind;
    long long n, m;
    if (!(t >> p >> kind >> n >> m) || p != "p" || kind != "graph" || n < 0 || m < 0)
        throw parse_error(r.line_no, "malformed header, expected 'p graph <n> <m>'");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!r.next()) throw parse_error(r.line_no + 1, "unexpected end of input, edge missing");
        auto et = r.tokens();
        std::string e;
        if (!(et >> e) || e != "e")
            throw parse_error(r.line_no, "expected edge line 'e <u> <v>'");
        int u = parse_vertex(r, et, static_cast<int>(n), "vertex");
        int v = parse_vertex(r, et, static_cast<int>(n), "vertex");
        if (g.has_edge(u, v)) throw parse_error(r.line_no, "duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p graph " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

RelStructure read_struct(const std::string& text) {
    LineReader r(text);
    if (!r.next()) throw parse_error(1, "missing header");
    auto t = r.tokens();
    std::string p, kind;
    long long domain, k;
    if (!(t >> p >> kind >> domain >> k) || p != "p" || kind != "struct" || domain < 0 || k < 0)
        throw parse_error(r.line_no, "malformed header, expected 'p struct <domain> <k>'");
    RelStructure s;
    s.domain_size = static_cast<int>(domain);
    for (long long ri = 0; ri < k; ++ri) {
        if (!r.next()) throw parse_error(r.line_no + 1, "unexpected end of input, relation missing");
        auto rt = r.tokens();
        std::string tag, name;
        long long arity, count;
        if (!(rt >> tag >> name >> arity >> count) || tag != "r" || arity < 1 || count < 0)
            throw parse_error(r.line_no, "expected relation line 'r <name> <arity> <count>'");
        std::vector<std::vector<int>> tuples;
        for (long long ti = 0; ti < count; ++ti) {
            if (!r.next()) throw parse_error(r.line_no + 1, "unexpected end of input, tuple missing");
            auto tt = r.tokens();
            std::string tag2;
            if (!(tt >> tag2) || tag2 != "t")
                throw parse_error(r.line_no, "expected tuple line 't <a1> ...'");
            std::vector<int> tup;
            for (long long i = 0; i < arity; ++i)
                tup.push_back(parse_vertex(r, tt, s.domain_size, "element"));
            tuples.push_back(std::move(tup));
        }
        s.add_relation(name, static_cast<int>(arity), std::move(tuples));
    }
    return s;
}

std::string write_struct(const RelStructure& s) {
    std::ostringstream out;
    out << "p struct " << s.domain_size << " " << s.relations.size() << "\n";
    for (const auto& rel : s.relations) {
        out << "r " << rel.name << " " << rel.arity << " " << rel.tuples.size() << "\n";
        for (const auto& t : rel.tuples) {
            out << "t";
            for (int a : t) out << " " << a + 1;
            out << "\n";
        }
    }
    return out.str();
}

RelStructure read_template(const std::string& text) {
    std::istringstream probe(text);
    std::string p, kind;
    probe >> p >> kind;
    if (kind == "graph") return graph_to_template(read_graph(text));
    return read_struct(text);
}

GadgetFile read_gadget(const std::string& text) {
    // the graph section ends where the trailer begins; split on the first
    // 'm ' line so read_graph sees only its own lines
    std::istringstream in(text);
    std::string line, graph_part, trailer;
    bool in_trailer = false;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        bool is_mark = i != std::string::npos && (line[i] == 'm' || line[i] == 'd');
        if (is_mark) in_trailer = true;
        (in_trailer ? trailer : graph_part) += line + "\n";
    }
    GadgetFile g;
    g.graph = read_graph(graph_part);

    LineReader r(trailer);
    if (!r.next()) throw parse_error(r.line_no + 1, "missing 'm' marks line");
    auto mt = r.tokens();
    std::string tag;
    if (!(mt >> tag) || tag != "m")
        throw parse_error(r.line_no, "expected marks line 'm <x> <x'> <y> <y'>'");
    const int n = g.graph.vertex_count();
    g.x = parse_vertex(r, mt, n, "mark");
    g.xp = parse_vertex(r, mt, n, "mark");
    g.y = parse_vertex(r, mt, n, "mark");
    g.yp = parse_vertex(r, mt, n, "mark");
    if (!r.next()) throw parse_error(r.line_no + 1, "missing 'd' edge line");
    auto dt = r.tokens();
    if (!(dt >> tag) || tag != "d")
        throw parse_error(r.line_no, "expected marked edge line 'd <u> <v>'");
    g.d.first = parse_vertex(r, dt, n, "vertex");
    g.d.second = parse_vertex(r, dt, n, "vertex");
    if (!g.graph.has_edge(g.d.first, g.d.second))
        throw parse_error(r.line_no, "marked edge d is not an edge of the graph");
    return g;
}

std::string write_gadget(const GadgetFile& g) {
    std::ostringstream out;
    out << write_graph(g.graph);
    out << "m " << g.x + 1 << " " << g.xp + 1 << " " << g.y + 1 << " " << g.yp + 1 << "\n";
    out << "d " << g.d.first + 1 << " " << g.d.second + 1 << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace h1
