#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "krongraph/skg.hpp"

namespace krongraph {

struct ParsedEdgeList {
  EdgeList edges;
  VertexId vertex_count = 0;  // 1 + max id seen, 0 when empty
};

// Whitespace-separated integer pairs, one per line; lines starting with '#'
// are comments. Throws MalformedLineError (with the 1-based line number) on
// anything else, EmptyInputError when no data line exists.
ParsedEdgeList parse_edge_list(std::istream& in);
ParsedEdgeList parse_edge_list_file(const std::filesystem::path& path);

// "source<TAB>sink" lines preceded by '#' provenance comments. Byte-stable:
// the same header and edges always serialize identically.
void write_edge_list_file(const std::filesystem::path& path,
                          const std::vector<std::string>& header_lines, const EdgeList& edges);

// Locale-independent shortest-exact formatting used in headers and CSVs.
std::string format_double(double value);

}  // namespace krongraph
