#include "turan/io.hpp"

#include <fstream>
#include <sstream>

namespace turan {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string s;
    int n = 0;
    while (std::getline(in, s)) {
        ++n;
        if (!s.empty() && s.back() == '\r') s.pop_back();
        out.push_back({n, s});
    }
    return out;
}

bool parse_int(std::istringstream& in, long long& v) {
    return static_cast<bool>(in >> v);
}

std::vector<int> parse_body_comment(const Line& ln) {
    // "c body: 0 1 2"
    std::istringstream in(ln.text);
    std::string c, tag;
    in >> c >> tag;
    std::vector<int> body;
    long long v;
    while (parse_int(in, v)) body.push_back(static_cast<int>(v));
    return body;
}

} // namespace

MarkedGraph parse_bipartite(const std::string& text) {
    MarkedGraph out;
    bool have_header = false;
    long long n_a = 0, n_b = 0, m = 0, seen = 0;
    for (const Line& ln : split_lines(text)) {
        if (ln.text.empty()) continue;
        std::istringstream in(ln.text);
        std::string kind;
        in >> kind;
        if (kind == "c") {
            std::istringstream probe(ln.text);
            std::string c, tag;
            probe >> c >> tag;
            if (tag == "body:") out.body = parse_body_comment(ln);
            continue;
        }
        if (kind == "p") {
            if (have_header) throw ParseError(ln.number, "duplicate header");
            std::string fmt;
            if (!(in >> fmt) || fmt != "bip") throw ParseError(ln.number, "expected 'p bip <n_a> <n_b> <m>'");
            if (!parse_int(in, n_a) || !parse_int(in, n_b) || !parse_int(in, m) || n_a < 0 || n_b < 0 || m < 0)
                throw ParseError(ln.number, "malformed header");
            out.graph = BipartiteGraph(static_cast<int>(n_a), static_cast<int>(n_b));
            have_header = true;
            continue;
        }
        if (kind == "e") {
            if (!have_header) throw ParseError(ln.number, "edge before header");
            long long a, b;
            if (!parse_int(in, a) || !parse_int(in, b)) throw ParseError(ln.number, "malformed edge");
            if (a < 0 || a >= n_a || b < 0 || b >= n_b)
                throw ParseError(ln.number, "edge endpoint out of range");
            if (out.graph.has_edge(static_cast<int>(a), static_cast<int>(b)))
                throw ParseError(ln.number, "duplicate edge");
            out.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
            ++seen;
            continue;
        }
        throw ParseError(ln.number, "unknown line kind '" + kind + "'");
    }
    if (!have_header) throw ParseError(0, "missing header");
    if (seen != m) throw ParseError(0, "edge count mismatch: header says " + std::to_string(m) +
                                           ", found " + std::to_string(seen));
    out.validate();
    return out;
}

GeneralGraph parse_general(const std::string& text) {
    GeneralGraph g;
    bool have_header = false;
    long long n = 0, m = 0, seen = 0;
    for (const Line& ln : split_lines(text)) {
        if (ln.text.empty()) continue;
        std::istringstream in(ln.text);
        std::string kind;
        in >> kind;
        if (kind == "c") continue;
        if (kind == "p") {
            if (have_header) throw ParseError(ln.number, "duplicate header");
            std::string fmt;
            if (!(in >> fmt) || fmt != "gen") throw ParseError(ln.number, "expected 'p gen <n> <m>'");
            if (!parse_int(in, n) || !parse_int(in, m) || n < 0 || m < 0)
                throw ParseError(ln.number, "malformed header");
            g = GeneralGraph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        if (kind == "e") {
            if (!have_header) throw ParseError(ln.number, "edge before header");
            long long u, v;
            if (!parse_int(in, u) || !parse_int(in, v)) throw ParseError(ln.number, "malformed edge");
            if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(ln.number, "edge endpoint out of range");
            if (u == v) throw ParseError(ln.number, "self-loop");
            if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
                throw ParseError(ln.number, "duplicate edge");
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
            ++seen;
            continue;
        }
        throw ParseError(ln.number, "unknown line kind '" + kind + "'");
    }
    if (!have_header) throw ParseError(0, "missing header");
    if (seen != m) throw ParseError(0, "edge count mismatch");
    return g;
}

std::string serialize(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "p bip " << g.n_a() << ' ' << g.n_b() << ' ' << g.edge_count() << '\n';
    for (int a = 0; a < g.n_a(); ++a)
        g.row_a(a).for_each([&](int b) { out << "e " << a << ' ' << b << '\n'; });
    return out.str();
}

std::string serialize(const MarkedGraph& g) {
    std::ostringstream out;
    if (!g.body.empty()) {
        out << "c body:";
        for (int v : g.body) out << ' ' << v;
        out << '\n';
    }
    out << serialize(g.graph);
    return out.str();
}

std::string serialize(const GeneralGraph& g) {
    std::ostringstream out;
    out << "p gen " << g.n() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n(); ++u)
        g.row(u).for_each([&](int v) {
            if (u < v) out << "e " << u << ' ' << v << '\n';
        });
    return out.str();
}

std::string to_dot(const BipartiteGraph& g, const std::vector<int>& body) {
    Bitset marked(g.n_a() > 0 ? g.n_a() : 1);
    for (int v : body) marked.set(v);
    std::ostringstream out;
    out << "graph G {\n  rankdir=LR;\n";
    for (int a = 0; a < g.n_a(); ++a) {
        out << "  a" << a << " [shape=circle";
        if (a < g.n_a() && !body.empty() && marked.test(a)) out << ",style=filled,fillcolor=lightblue";
        out << "];\n";
    }
    for (int b = 0; b < g.n_b(); ++b) out << "  b" << b << " [shape=square];\n";
    for (int a = 0; a < g.n_a(); ++a)
        g.row_a(a).for_each([&](int b) { out << "  a" << a << " -- b" << b << ";\n"; });
    out << "}\n";
    return out.str();
}

std::string to_dot(const GeneralGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int u = 0; u < g.n(); ++u) out << "  v" << u << ";\n";
    for (int u = 0; u < g.n(); ++u)
        g.row(u).for_each([&](int v) {
            if (u < v) out << "  v" << u << " -- v" << v << ";\n";
        });
    out << "}\n";
    return out.str();
}

MarkedGraph load_bipartite(const std::string& path) {
    return parse_bipartite(slurp(path));
}

void save(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

} // namespace turan
