#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "coarse_menger/graph.hpp"

namespace coarse_menger {

/// A graph together with the S and T terminal sets.
struct Instance {
  Graph graph;
  VertexSet s;
  VertexSet t;
};

class InputFormatError : public std::runtime_error {
 public:
  InputFormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   p <n> <m>      header, exactly once, before anything else
//   e <u> <v>      m edge lines, 0-based
//   s <v> / t <v>  optional terminal markers
//   # ...          comment to end of line
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

/// Canonical form: header, edges in ascending (u,v) with u<v, then s lines,
/// then t lines, each ascending. Reading and re-writing it is byte-identical.
void write_instance(std::ostream& out, const Instance& inst);
std::string to_text(const Instance& inst);

}  // namespace coarse_menger
