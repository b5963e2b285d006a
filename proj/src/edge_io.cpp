#include "krongraph/edge_io.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "krongraph/errors.hpp"

namespace krongraph {

namespace {

bool blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ParsedEdgeList parse_edge_list(std::istream& in) {
  ParsedEdgeList parsed;
  VertexId max_id = 0;
  bool any_edge = false;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || blank(line)) continue;

    std::istringstream fields(line);
    std::uint64_t source = 0, sink = 0;
    std::string extra;
    if (!(fields >> source >> sink) || (fields >> extra) || line.find('-') != std::string::npos) {
      throw MalformedLineError("malformed edge at line " + std::to_string(line_number) + ": \"" +
                                   line + "\"",
                               line_number);
    }
    parsed.edges.push_back(Edge{source, sink});
    max_id = std::max({max_id, source, sink});
    any_edge = true;
  }
  if (!any_edge) {
    throw EmptyInputError("edge list holds no data lines");
  }
  parsed.vertex_count = max_id + 1;
  return parsed;
}

ParsedEdgeList parse_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  return parse_edge_list(in);
}

void write_edge_list_file(const std::filesystem::path& path,
                          const std::vector<std::string>& header_lines, const EdgeList& edges) {
  std::FILE* out = std::fopen(path.string().c_str(), "wb");
  if (out == nullptr) {
    throw IoError("cannot write " + path.string());
  }
  for (const std::string& line : header_lines) {
    std::fprintf(out, "# %s\n", line.c_str());
  }
  for (const Edge& e : edges) {
    std::fprintf(out, "%" PRIu64 "\t%" PRIu64 "\n", e.source, e.sink);
  }
  if (std::fclose(out) != 0) {
    throw IoError("failed to flush " + path.string());
  }
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace krongraph
