#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddcolor/edge_coloring.hpp"

namespace oddcolor {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format, UTF-8:
//   oddcolor v1
//   graph complete n=<n>      (or: graph bipartite n=<n>)
//   colors t=<t>
//   e <u> <v> <c>             one line per assigned edge, canonical sorted
//                             order; bipartite uses global vertex ids
//                             (X = 0..n-1, Y = n..2n-1)
// Lines starting with '#' are comments and are ignored on read. Partial
// colorings simply omit edges. Writing is deterministic: equal colorings
// produce identical bytes.
void write_coloring(const EdgeColoring& coloring, std::ostream& out,
                    const std::vector<std::string>& trailing_comments = {});
void write_coloring_file(const EdgeColoring& coloring,
                         const std::filesystem::path& path,
                         const std::vector<std::string>& trailing_comments = {});

EdgeColoring read_coloring(std::istream& in);
EdgeColoring read_coloring_file(const std::filesystem::path& path);

}  // namespace oddcolor
