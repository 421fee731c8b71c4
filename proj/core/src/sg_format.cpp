#include "sgi/sg_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sgi {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

int parse_count(const Token& tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size() || value < 0)
        throw ParseError(line, tok.column, std::string("expected nonnegative integer for ") + what);
    return value;
}

}  // namespace

SignedGraph parse_sg(std::string_view text) {
    int n = -1, m = -1;
    std::vector<SignedEdge> edges;
    std::vector<std::vector<char>> seen;  // duplicate detection on (u, v)

    int line_no = 0;
    int last_line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        last_line = line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line[0] == '#') continue;
        auto toks = tokenize(line);
        if (toks.empty()) continue;

        if (n < 0) {
            if (toks.size() != 2)
                throw ParseError(line_no, toks.size() > 2 ? toks[2].column : toks[0].column,
                                 "header must be exactly `n m`");
            n = parse_count(toks[0], line_no, "vertex count");
            m = parse_count(toks[1], line_no, "edge count");
            seen.assign(n, {});
            continue;
        }
        if (static_cast<int>(edges.size()) == m)
            throw ParseError(line_no, toks[0].column,
                             "unexpected extra line; header declared " + std::to_string(m) + " edges");
        if (toks.size() != 3)
            throw ParseError(line_no, toks.size() > 3 ? toks[3].column : toks[0].column,
                             "edge line must be exactly `u v s`");
        int u = parse_count(toks[0], line_no, "edge endpoint");
        int v = parse_count(toks[1], line_no, "edge endpoint");
        if (u == v) throw ParseError(line_no, toks[0].column, "self-loop is not allowed");
        if (u > v)
            throw ParseError(line_no, toks[0].column, "endpoints must satisfy u < v (reversed pair)");
        if (v >= n)
            throw ParseError(line_no, toks[1].column,
                             "endpoint " + std::to_string(v) + " out of range for order " + std::to_string(n));
        int sign;
        if (toks[2].text == "+")
            sign = 1;
        else if (toks[2].text == "-")
            sign = -1;
        else
            throw ParseError(line_no, toks[2].column, "sign must be `+` or `-`");
        if (seen[u].empty()) seen[u].assign(n, 0);
        if (seen[u][v])
            throw ParseError(line_no, toks[0].column,
                             "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        seen[u][v] = 1;
        edges.push_back({u, v, sign});
    }
    if (n < 0) throw ParseError(last_line, 1, "missing `n m` header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(last_line, 1,
                         "header declared " + std::to_string(m) + " edges but " +
                             std::to_string(edges.size()) + " were given");
    return SignedGraph(n, std::move(edges));
}

SignedGraph load_sg(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sg(buf.str());
}

std::string to_sg(const SignedGraph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
    return out.str();
}

std::string to_sg_record(const SignedGraph& g) {
    std::ostringstream out;
    out << g.order() << ',' << g.edge_count();
    for (const auto& e : g.edges()) out << ';' << e.u << ',' << e.v << ',' << (e.sign > 0 ? '+' : '-');
    return out.str();
}

SignedGraph parse_sg_record(std::string_view record) {
    std::string text(record);
    for (char& c : text) {
        if (c == ';') c = '\n';
        if (c == ',') c = ' ';
    }
    return parse_sg(text);
}

}  // namespace sgi
