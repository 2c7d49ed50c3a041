#include "amoeba/formats.hpp"

#include <cctype>
#include <sstream>

namespace amoeba {

namespace {

const std::string kHeader = ">>graph6<<";

std::string strip_line(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

int data_value(const std::string& s, std::size_t i) {
    if (i >= s.size()) throw ParseError("graph6 input truncated", i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", i);
    return c - 63;
}

} // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = strip_line(text);
    std::size_t off = 0;
    if (s.rfind(kHeader, 0) == 0) off = kHeader.size();
    if (off >= s.size()) throw ParseError("empty graph6 input", off);

    // order
    long long n = 0;
    if (s[off] == '~') {
        if (off + 1 < s.size() && s[off + 1] == '~') {
            off += 2;
            for (int k = 0; k < 6; ++k) n = (n << 6) | data_value(s, off + static_cast<std::size_t>(k));
            off += 6;
        } else {
            off += 1;
            for (int k = 0; k < 3; ++k) n = (n << 6) | data_value(s, off + static_cast<std::size_t>(k));
            off += 3;
        }
    } else {
        n = data_value(s, off);
        off += 1;
    }
    if (n > 100000) throw ParseError("graph6 order too large for this tool", off);

    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - off < need) throw ParseError("graph6 input truncated", s.size());
    if (s.size() - off > need) throw ParseError("trailing bytes after graph6 data", off + need);

    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i, ++bit) {
            int v = data_value(s, off + static_cast<std::size_t>(bit / 6));
            if ((v >> (5 - bit % 6)) & 1) edges.push_back({i, j});
        }
    }
    // padding bits must be zero
    for (long long b = bits; b < static_cast<long long>(need) * 6; ++b) {
        int v = data_value(s, off + static_cast<std::size_t>(b / 6));
        if ((v >> (5 - b % 6)) & 1) throw ParseError("nonzero padding bit", off + static_cast<std::size_t>(b / 6));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        for (int k = 2; k >= 0; --k) out += static_cast<char>(((n >> (6 * k)) & 63) + 63);
    } else {
        throw Error("graph6 output limited to 258047 vertices");
    }
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> groups(static_cast<std::size_t>((bits + 5) / 6), 0);
    long long bit = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i, ++bit) {
            if (g.has_edge(i, j))
                groups[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
        }
    }
    for (int v : groups) out += static_cast<char>(v + 63);
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list must start with \"n m\"", 0);
    if (n < 0 || m < 0) throw ParseError("negative counts in edge list", 0);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        long long a = 0, b = 0;
        if (!(in >> a >> b))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(k),
                             static_cast<std::size_t>(k));
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError("edge endpoint out of range", static_cast<std::size_t>(k));
        edges.push_back(make_edge(static_cast<int>(a), static_cast<int>(b)));
    }
    long long extra;
    if (in >> extra) throw ParseError("trailing data after edge list", 0);
    return Graph(static_cast<int>(n), std::move(edges)); // rejects loops/duplicates
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.first << ' ' << e.second << '\n';
    return out.str();
}

Graph parse_graph_auto(const std::string& text) {
    std::istringstream probe(text);
    long long a, b;
    if (probe >> a >> b) return parse_edge_list(text);
    return parse_graph6(text);
}

} // namespace amoeba
