#include "subdiv/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

namespace subdiv {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
    size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (...) {
        throw ParseError(line, std::string("expected ") + what + ", got \"" + tok + "\"");
    }
    if (used != tok.size() || value < -1'000'000'000 || value > 1'000'000'000)
        throw ParseError(line, std::string("expected ") + what + ", got \"" + tok + "\"");
    return static_cast<int>(value);
}

// 1-based external id -> internal vertex.
Vertex parse_vertex(const std::string& tok, int n, int line) {
    int value = parse_int(tok, line, "a vertex id");
    if (value < 1 || value > n)
        throw ParseError(line, "vertex " + tok + " out of range 1.." + std::to_string(n));
    return value - 1;
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, declared_arcs = 0, seen_arcs = 0;
    Digraph d;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) throw ParseError(lineno, "second header line");
            if (tok.size() != 4 || tok[1] != "digraph")
                throw ParseError(lineno, "malformed header, expected: p digraph <n> <m>");
            n = parse_int(tok[2], lineno, "a vertex count");
            declared_arcs = parse_int(tok[3], lineno, "an arc count");
            if (n < 0 || declared_arcs < 0) throw ParseError(lineno, "negative counts in header");
            d = Digraph(n);
            have_header = true;
        } else if (tok[0] == "a") {
            if (!have_header) throw ParseError(lineno, "arc before header");
            if (tok.size() != 3) throw ParseError(lineno, "malformed arc, expected: a <u> <v>");
            Vertex u = parse_vertex(tok[1], n, lineno);
            Vertex v = parse_vertex(tok[2], n, lineno);
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + tok[1]);
            if (d.has_arc(u, v))
                throw ParseError(lineno, "duplicate arc " + tok[1] + " -> " + tok[2]);
            d.add_arc(u, v);
            ++seen_arcs;
        } else {
            throw ParseError(lineno, "unknown record \"" + tok[0] + "\"");
        }
    }
    if (!have_header) throw ParseError(lineno + 1, "missing header");
    if (seen_arcs != declared_arcs)
        throw ParseError(lineno + 1, "header declares " + std::to_string(declared_arcs) +
                                         " arcs, file has " + std::to_string(seen_arcs));
    return d;
}

Digraph parse_digraph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "p digraph " << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) out << "a " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Enumeration parse_enumeration_text(const std::string& text) {
    auto tok = tokens(text);
    if (tok.empty() || tok[0] != "enum") throw ParseError(1, "expected: enum <v1> <v2> ...");
    std::vector<Vertex> order;
    for (size_t i = 1; i < tok.size(); ++i) {
        int value = parse_int(tok[i], 1, "a vertex id");
        if (value < 1) throw ParseError(1, "vertex ids are 1-based");
        order.push_back(value - 1);
    }
    try {
        return Enumeration(std::move(order));
    } catch (const PreconditionError& e) {
        throw ParseError(1, e.what());
    }
}

std::string serialize_enumeration(const Enumeration& n) {
    std::ostringstream out;
    out << "enum";
    for (Vertex v : n.order()) out << ' ' << v + 1;
    out << '\n';
    return out.str();
}

HamiltonianWitness parse_hamiltonian_text(const std::string& text) {
    auto tok = tokens(text);
    if (tok.size() < 2 || tok[0] != "hamiltonian" || (tok[1] != "path" && tok[1] != "circuit"))
        throw ParseError(1, "expected: hamiltonian path|circuit <v1> <v2> ...");
    HamiltonianWitness w;
    w.kind = tok[1] == "path" ? WalkKind::path : WalkKind::circuit;
    for (size_t i = 2; i < tok.size(); ++i) {
        int value = parse_int(tok[i], 1, "a vertex id");
        if (value < 1) throw ParseError(1, "vertex ids are 1-based");
        w.order.push_back(value - 1);
    }
    return w;
}

std::string serialize_hamiltonian(const HamiltonianWitness& w) {
    std::ostringstream out;
    out << "hamiltonian " << (w.kind == WalkKind::path ? "path" : "circuit");
    for (Vertex v : w.order) out << ' ' << v + 1;
    out << '\n';
    return out.str();
}

Coloring parse_coloring_text(const std::string& text, int vertex_count) {
    Coloring c;
    c.colors.assign(vertex_count, 0);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok.size() != 3 || tok[0] != "v")
            throw ParseError(lineno, "expected: v <vertex> <color>");
        Vertex v = parse_vertex(tok[1], vertex_count, lineno);
        int color = parse_int(tok[2], lineno, "a color");
        if (color < 1) throw ParseError(lineno, "colors are 1-based");
        if (c.colors[v] != 0) throw ParseError(lineno, "vertex " + tok[1] + " colored twice");
        c.colors[v] = color;
        c.palette = std::max(c.palette, color);
    }
    return c;
}

std::string serialize_coloring(const Coloring& c) {
    std::ostringstream out;
    for (size_t v = 0; v < c.colors.size(); ++v)
        out << "v " << v + 1 << ' ' << c.colors[v] << '\n';
    return out.str();
}

SubdivisionWitness parse_subdivision_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<CyclePattern> pattern;
    std::vector<Vertex> branch;
    std::vector<BlockPath> blocks;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "pattern") {
            if (tok.size() != 2) throw ParseError(lineno, "expected: pattern <C+(...)>");
            try {
                pattern = CyclePattern::parse(tok[1]);
            } catch (const ParseError& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (tok[0] == "branch") {
            for (size_t i = 1; i < tok.size(); ++i) {
                int value = parse_int(tok[i], lineno, "a vertex id");
                if (value < 1) throw ParseError(lineno, "vertex ids are 1-based");
                branch.push_back(value - 1);
            }
        } else if (tok[0] == "block") {
            if (tok.size() < 4) throw ParseError(lineno, "expected: block <i> forward|backward <v...>");
            int index = parse_int(tok[1], lineno, "a block index");
            if (index != static_cast<int>(blocks.size()) + 1)
                throw ParseError(lineno, "block indices must count up from 1");
            BlockPath b;
            if (tok[2] == "forward")
                b.forward = true;
            else if (tok[2] == "backward")
                b.forward = false;
            else
                throw ParseError(lineno, "block direction must be forward or backward");
            for (size_t i = 3; i < tok.size(); ++i) {
                int value = parse_int(tok[i], lineno, "a vertex id");
                if (value < 1) throw ParseError(lineno, "vertex ids are 1-based");
                b.vertices.push_back(value - 1);
            }
            blocks.push_back(std::move(b));
        } else {
            throw ParseError(lineno, "unknown record \"" + tok[0] + "\"");
        }
    }
    if (!pattern) throw ParseError(lineno + 1, "missing pattern line");
    if (blocks.empty()) throw ParseError(lineno + 1, "missing block stanzas");
    if (branch.size() != blocks.size())
        throw ParseError(lineno + 1, "branch line must list one vertex per block");
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].vertices.empty() || blocks[i].vertices.front() != branch[i])
            throw ParseError(lineno + 1, "branch vertices disagree with block openings");
    return SubdivisionWitness{*pattern, std::move(blocks)};
}

std::string serialize_subdivision(const SubdivisionWitness& w) {
    std::ostringstream out;
    out << "pattern " << w.pattern.str() << '\n';
    out << "branch";
    for (const BlockPath& b : w.blocks) out << ' ' << b.vertices.front() + 1;
    out << '\n';
    for (size_t i = 0; i < w.blocks.size(); ++i) {
        const BlockPath& b = w.blocks[i];
        out << "block " << i + 1 << ' ' << (b.forward ? "forward" : "backward");
        for (Vertex v : b.vertices) out << ' ' << v + 1;
        out << '\n';
    }
    return out.str();
}

SecantPair parse_secant_text(const std::string& text) {
    auto tok = tokens(text);
    if (tok.size() != 5 || tok[0] != "secant")
        throw ParseError(1, "expected: secant k=<k> e1=<u>,<v> e2=<u>,<v> pos=<i>,<r>,<j>,<l>");
    auto field = [&](const std::string& t, const std::string& key, size_t parts) {
        if (t.rfind(key + "=", 0) != 0) throw ParseError(1, "expected field " + key + "=...");
        std::vector<int> values;
        std::string body = t.substr(key.size() + 1);
        std::istringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(parse_int(item, 1, key.c_str()));
        if (values.size() != parts) throw ParseError(1, "field " + key + " needs " +
                                                            std::to_string(parts) + " values");
        return values;
    };
    SecantPair p;
    p.k = field(tok[1], "k", 1)[0];
    auto e1 = field(tok[2], "e1", 2);
    auto e2 = field(tok[3], "e2", 2);
    auto pos = field(tok[4], "pos", 4);
    p.first_edge = {e1[0] - 1, e1[1] - 1};
    p.second_edge = {e2[0] - 1, e2[1] - 1};
    p.i = pos[0];
    p.r = pos[1];
    p.j = pos[2];
    p.l = pos[3];
    return p;
}

std::string serialize_secant(const SecantPair& p) {
    std::ostringstream out;
    out << "secant k=" << p.k << " e1=" << p.first_edge.first + 1 << ',' << p.first_edge.second + 1
        << " e2=" << p.second_edge.first + 1 << ',' << p.second_edge.second + 1 << " pos=" << p.i
        << ',' << p.r << ',' << p.j << ',' << p.l << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

}  // namespace subdiv
