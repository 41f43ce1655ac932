#include "idom/graph6.hpp"

#include <cstdint>

namespace idom {

namespace {

int body_length(int n) {
    return (n * (n - 1) / 2 + 5) / 6;
}

int decode_char(char c) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw Graph6Error(Graph6ErrorKind::out_of_range_char,
                          "graph6 character out of range: byte " + std::to_string(b));
    return b - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error(Graph6ErrorKind::empty_input, "empty graph6 input");

    std::size_t pos = 0;
    long long n;
    int first = decode_char(text[pos++]);
    if (first < 63) {
        n = first;
    } else {
        // Extended length: '~' followed by three 6-bit digits (values 63..258047).
        if (text.size() < 4)
            throw Graph6Error(Graph6ErrorKind::bad_length_byte, "extended graph6 length is truncated");
        if (text[1] == '~')
            throw Graph6Error(Graph6ErrorKind::order_too_large, "graph6 order exceeds 64");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | decode_char(text[pos++]);
        if (n < 63)
            throw Graph6Error(Graph6ErrorKind::bad_length_byte, "non-canonical extended graph6 length");
    }
    if (n > Graph::kMaxOrder)
        throw Graph6Error(Graph6ErrorKind::order_too_large,
                          "graph6 order " + std::to_string(n) + " exceeds 64");

    const int order = static_cast<int>(n);
    const int need = body_length(order);
    if (static_cast<int>(text.size() - pos) != need)
        throw Graph6Error(Graph6ErrorKind::truncated,
                          "graph6 body has " + std::to_string(text.size() - pos) + " characters, expected " +
                              std::to_string(need));

    std::vector<std::uint64_t> rows(order, 0);
    int bit_index = 0;
    const int total_bits = order * (order - 1) / 2;
    for (int k = 0; k < need; ++k) {
        int value = decode_char(text[pos + k]);
        for (int b = 5; b >= 0; --b, ++bit_index) {
            int bit = (value >> b) & 1;
            if (bit_index >= total_bits) {
                if (bit)
                    throw Graph6Error(Graph6ErrorKind::trailing_bits, "padding bits must be zero");
                continue;
            }
            if (bit) {
                // Column-major upper triangle: bit order (0,1),(0,2),(1,2),(0,3),...
                int j = 1;
                int idx = bit_index;
                while (idx >= j) idx -= j, ++j;
                int i = idx;
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    }
    return Graph::from_rows(order, std::move(rows));
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

}  // namespace idom
