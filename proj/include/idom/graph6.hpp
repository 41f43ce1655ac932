#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "idom/graph.hpp"

namespace idom {

enum class Graph6ErrorKind {
    empty_input,
    bad_length_byte,
    order_too_large,
    out_of_range_char,
    truncated,
    trailing_bits,
};

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Graph6ErrorKind kind() const { return kind_; }

private:
    Graph6ErrorKind kind_;
};

// Header-less graph6, one graph per line. Only orders up to 64 are accepted.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace idom
