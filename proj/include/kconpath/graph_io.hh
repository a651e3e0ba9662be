#ifndef KCONPATH_GRAPH_IO_HH
#define KCONPATH_GRAPH_IO_HH

#include <kconpath/graph.hh>

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kconpath
{
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Parses one graph6 record. A leading ">>graph6<<" header and trailing
    /// whitespace are accepted. Vertices are numbered 0..n-1.
    auto read_graph6(std::string_view line) -> Graph;

    /// Encodes g in graph6. Vertices are relabelled 0..n-1 in increasing id
    /// order, so graphs with gaps in their ids are compacted.
    auto write_graph6(const Graph & g) -> std::string;

    /// Plain edge list: a line holding n, then one "u v" pair per line
    /// (0-based). Blank lines and lines starting with '#' are ignored.
    auto read_edge_list(std::istream & in) -> Graph;
    auto read_edge_list(std::string_view text) -> Graph;

    /// Emits the same layout read_edge_list accepts, compacting ids the
    /// same way write_graph6 does.
    auto write_edge_list(const Graph & g) -> std::string;
}

#endif
