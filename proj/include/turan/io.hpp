#ifndef TURAN_IO_HPP
#define TURAN_IO_HPP

#include <stdexcept>
#include <string>

#include "turan/graph.hpp"

namespace turan {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Text format:
//   c <comment>
//   p bip <n_a> <n_b> <m>
//   e <a-index> <b-index>          (m lines, 0-based)
// A body, when present, rides in a "c body: i0 i1 ..." comment line.
// General graphs use "p gen <n> <m>" with "e <u> <v>".

MarkedGraph parse_bipartite(const std::string& text);
GeneralGraph parse_general(const std::string& text);

std::string serialize(const BipartiteGraph& g);
std::string serialize(const MarkedGraph& g);
std::string serialize(const GeneralGraph& g);

std::string to_dot(const BipartiteGraph& g, const std::vector<int>& body = {});
std::string to_dot(const GeneralGraph& g);

// File helpers; throw std::runtime_error on I/O failure.
MarkedGraph load_bipartite(const std::string& path);
void save(const std::string& path, const std::string& content);
std::string slurp(const std::string& path);

} // namespace turan

#endif
