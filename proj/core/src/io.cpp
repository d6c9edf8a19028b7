#include "linkroots/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "linkroots/errors.hpp"

namespace linkroots {

std::vector<std::string> tokenize_line(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

long long parse_count(const std::string& token, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
        throw ParseError("expected a non-negative integer, got '" + token + "'", line);
    }
    return value;
}

Multigraph read_multigraph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    int stage = 0;  // 0: expect magic, 1: expect n, 2: edges
    Multigraph g;
    long long n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize_line(line);
        if (tokens.empty()) {
            continue;
        }
        if (stage == 0) {
            if (tokens.size() != 2 || tokens[0] != "mg") {
                throw ParseError("expected header 'mg 1'", lineno);
            }
            if (tokens[1] != "1") {
                throw ParseError("unsupported format version '" + tokens[1] + "'", lineno);
            }
            stage = 1;
        } else if (stage == 1) {
            if (tokens.size() != 2 || tokens[0] != "n") {
                throw ParseError("expected 'n <vertex_count>'", lineno);
            }
            n = parse_count(tokens[1], lineno);
            if (n > 0xffffff) {
                throw ParseError("vertex count too large", lineno);
            }
            g = Multigraph(static_cast<std::size_t>(n));
            stage = 2;
        } else {
            if (tokens.size() != 3 || tokens[0] != "e") {
                throw ParseError("expected 'e <u> <v>'", lineno);
            }
            long long u = parse_count(tokens[1], lineno);
            long long v = parse_count(tokens[2], lineno);
            if (u >= n || v >= n) {
                throw ParseError("vertex id out of range", lineno);
            }
            if (u == v) {
                throw ParseError("loop at vertex " + tokens[1], lineno);
            }
            g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        }
    }
    if (stage == 0) {
        throw ParseError("missing header 'mg 1'", lineno);
    }
    if (stage == 1) {
        throw ParseError("missing 'n <vertex_count>' line", lineno);
    }
    return g;
}

Multigraph read_multigraph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string(), 0);
    }
    return read_multigraph(in);
}

Multigraph parse_multigraph(const std::string& text) {
    std::istringstream in(text);
    return read_multigraph(in);
}

void write_multigraph(std::ostream& out, const Multigraph& g) {
    out << "mg 1\n" << "n " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << "e " << e.u << ' ' << e.v << '\n';
    }
}

void write_multigraph_file(const std::filesystem::path& path, const Multigraph& g) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    write_multigraph(out, g);
}

std::string format_multigraph(const Multigraph& g) {
    std::ostringstream out;
    write_multigraph(out, g);
    return out.str();
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace

void write_dot(std::ostream& out, const Multigraph& g,
               const std::vector<std::string>& vertex_labels) {
    out << "graph G {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (v < vertex_labels.size()) {
            out << " [label=\"" << dot_escape(vertex_labels[v]) << "\"]";
        }
        out << ";\n";
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        out << "  " << ed.u << " -- " << ed.v << " [id=\"e" << e << "\"];\n";
    }
    out << "}\n";
}

}  // namespace linkroots
