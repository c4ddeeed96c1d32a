#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgh/core.hpp"

namespace cgh {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

struct Token {
    std::uint64_t value;
    std::size_t column;
};

inline std::vector<Token> tokenize_line(const std::string& text, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        std::uint64_t value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            if (value > (std::numeric_limits<std::uint32_t>::max() - 9) / 10)
                throw ParseError(line_no, start + 1, "number too large");
            value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
            ++i;
        }
        if (i == start) throw ParseError(line_no, start + 1, std::string("unexpected character '") + text[i] + "'");
        if (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r')
            throw ParseError(line_no, i + 1, std::string("unexpected character '") + text[i] + "'");
        out.push_back({value, start + 1});
    }
    return out;
}

}  // namespace detail

/// Reads the text format: a header line "n r m" followed by m lines of r vertex
/// indices. Blank lines and lines starting with '#' are ignored anywhere.
inline Cgh read_cgh(std::istream& in) {
    std::string text;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0, r = 0, m = 0;
    std::vector<Edge> edges;
    std::map<Edge, std::size_t> edge_lines;

    while (std::getline(in, text)) {
        ++line_no;
        auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#') continue;
        auto tokens = detail::tokenize_line(text, line_no);
        if (!have_header) {
            if (tokens.size() != 3)
                throw ParseError(line_no, tokens.size() > 3 ? tokens[3].column : text.size() + 1,
                                 "header must be \"n r m\"");
            n = tokens[0].value;
            r = tokens[1].value;
            m = tokens[2].value;
            if (n == 0) throw ParseError(line_no, tokens[0].column, "n must be positive");
            if (r == 0) throw ParseError(line_no, tokens[1].column, "r must be positive");
            have_header = true;
            continue;
        }
        if (edges.size() == m) throw ParseError(line_no, tokens[0].column, "more edge lines than declared");
        if (tokens.size() != r)
            throw ParseError(line_no, tokens.size() > r ? tokens[r].column : text.size() + 1,
                             "expected " + std::to_string(r) + " vertices, found " + std::to_string(tokens.size()));
        Edge e;
        for (const auto& t : tokens) {
            if (t.value >= n) throw ParseError(line_no, t.column, "vertex " + std::to_string(t.value) + " out of range");
            if (std::find(e.begin(), e.end(), static_cast<Vertex>(t.value)) != e.end())
                throw ParseError(line_no, t.column, "vertex repeated within edge");
            e.push_back(static_cast<Vertex>(t.value));
        }
        std::sort(e.begin(), e.end());
        auto [it, fresh] = edge_lines.emplace(e, line_no);
        if (!fresh) throw ParseError(line_no, 1, "duplicate of edge on line " + std::to_string(it->second));
        edges.push_back(std::move(e));
    }
    if (!have_header) throw ParseError(line_no + 1, 1, "missing header line");
    if (edges.size() != m)
        throw ParseError(line_no + 1, 1,
                         "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Cgh(CyclicGround(n), r, std::move(edges));
}

inline Cgh parse_cgh(const std::string& text) {
    std::istringstream in(text);
    return read_cgh(in);
}

/// Canonical serialization: edges in lexicographic order, vertices ascending.
inline void write_cgh(std::ostream& out, const Cgh& h) {
    out << h.n() << ' ' << h.r() << ' ' << h.size() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

inline std::string to_string(const Cgh& h) {
    std::ostringstream out;
    write_cgh(out, h);
    return out.str();
}

}  // namespace cgh
