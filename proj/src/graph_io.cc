#include <kconpath/graph_io.hh>

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace kconpath
{
    namespace
    {
        constexpr int bias = 63;
        constexpr std::string_view header = ">>graph6<<";

        auto sextet(char c) -> int
        {
            int v = static_cast<unsigned char>(c) - bias;
            if (v < 0 || v > 63)
                throw ParseError("graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) + " outside 63..126");
            return v;
        }

        auto compact_edges(const Graph & g) -> std::vector<Edge>
        {
            std::unordered_map<Vertex, Vertex> index;
            for (std::size_t i = 0; i < g.vertices().size(); ++i)
                index.emplace(g.vertices()[i], static_cast<Vertex>(i));
            std::vector<Edge> result;
            for (auto [u, v] : g.edges())
                result.emplace_back(index.at(u), index.at(v));
            return result;
        }
    }

    auto read_graph6(std::string_view line) -> Graph
    {
        if (line.starts_with(header))
            line.remove_prefix(header.size());
        while (! line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        if (line.empty())
            throw ParseError("graph6: empty record");
        if (line.front() == ':' || line.front() == '&')
            throw ParseError("graph6: sparse6/digraph6 records are not supported");

        std::size_t pos = 0;
        long long n = 0;
        if (line[0] != '~') {
            n = sextet(line[0]);
            pos = 1;
        }
        else if (line.size() >= 2 && line[1] != '~') {
            if (line.size() < 4)
                throw ParseError("graph6: truncated size field");
            for (std::size_t i = 1; i <= 3; ++i)
                n = (n << 6) | sextet(line[i]);
            pos = 4;
        }
        else {
            if (line.size() < 8)
                throw ParseError("graph6: truncated size field");
            for (std::size_t i = 2; i <= 7; ++i)
                n = (n << 6) | sextet(line[i]);
            pos = 8;
        }
        if (n > (1 << 20))
            throw ParseError("graph6: graph too large (" + std::to_string(n) + " vertices)");

        long long bits = n * (n - 1) / 2;
        std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
        if (line.size() - pos != need)
            throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " + std::to_string(line.size() - pos));

        std::vector<Edge> edges;
        long long bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) {
                int byte = sextet(line[pos + bit / 6]);
                if (byte & (1 << (5 - bit % 6)))
                    edges.emplace_back(i, j);
            }
        // padding bits must be zero
        if (bits % 6 != 0) {
            int last = sextet(line.back());
            if (last & ((1 << (6 - bits % 6)) - 1))
                throw ParseError("graph6: nonzero padding bits");
        }
        return build_graph(static_cast<int>(n), edges);
    }

    auto write_graph6(const Graph & g) -> std::string
    {
        long long n = g.order();
        std::string out;
        if (n <= 62)
            out.push_back(static_cast<char>(n + bias));
        else if (n <= 258047) {
            out.push_back('~');
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
        }
        else {
            out += "~~";
            for (int shift = 30; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
        }

        long long bits = n * (n - 1) / 2;
        std::vector<unsigned char> data(static_cast<std::size_t>((bits + 5) / 6), 0);
        for (auto [u, v] : compact_edges(g)) {
            // column-major upper triangle: (i, j) with i < j sits at j(j-1)/2 + i
            long long k = static_cast<long long>(v) * (v - 1) / 2 + u;
            data[k / 6] |= static_cast<unsigned char>(1 << (5 - k % 6));
        }
        for (auto d : data)
            out.push_back(static_cast<char>(d + bias));
        return out;
    }

    auto read_edge_list(std::istream & in) -> Graph
    {
        std::string line;
        std::optional<int> n;
        std::vector<Edge> edges;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            std::istringstream fields(line);
            if (! n) {
                int value;
                std::string rest;
                if (! (fields >> value) || (fields >> rest) || value < 0)
                    throw ParseError("edge list line " + std::to_string(lineno) + ": expected a vertex count");
                n = value;
                continue;
            }
            int u, v;
            std::string rest;
            if (! (fields >> u >> v) || (fields >> rest))
                throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
            edges.emplace_back(u, v);
        }
        if (! n)
            throw ParseError("edge list: missing vertex count");
        try {
            return build_graph(*n, edges);
        }
        catch (const GraphError & e) {
            throw ParseError(std::string("edge list: ") + e.what());
        }
    }

    auto read_edge_list(std::string_view text) -> Graph
    {
        std::istringstream in{std::string(text)};
        return read_edge_list(in);
    }

    auto write_edge_list(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << g.order() << '\n';
        for (auto [u, v] : compact_edges(g))
            out << u << ' ' << v << '\n';
        return out.str();
    }
}
