#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genus/graph.hpp"
#include "genus/rotation.hpp"

namespace genus {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// One graph6 record.  A leading ">>graph6<<" header is stripped if present.
// Throws ParseError on bad length, bytes outside 63..126, or a vertex count
// outside 1..kMaxVertices.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Edge-list record: first line "n m", then m lines "u v".  Loops, duplicate
// edges and out-of-range endpoints are rejected.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

struct InputRecord {
  std::uint64_t index = 0;  // 1-based position in the stream
  std::string raw;          // exact record bytes, without trailing newline
  Graph graph;
};

// Pulls records off a text stream one at a time.  next() returns false at
// end of input and throws ParseError (message names the record index) on
// malformed records.
class GraphReader {
 public:
  virtual ~GraphReader() = default;
  virtual bool next(InputRecord& rec) = 0;
};

// One graph6 record per line; blank lines are skipped, an initial
// ">>graph6<<" header line or prefix is tolerated.
class Graph6Reader final : public GraphReader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(&in) {}
  bool next(InputRecord& rec) override;

 private:
  std::istream* in_;
  std::uint64_t count_ = 0;
  bool at_start_ = true;
};

// Edge-list records back to back; blank lines between records and lines
// starting with '#' are skipped.
class EdgeListReader final : public GraphReader {
 public:
  explicit EdgeListReader(std::istream& in) : in_(&in) {}
  bool next(InputRecord& rec) override;

 private:
  std::istream* in_;
  std::uint64_t count_ = 0;
};

// Embedding record:
//   #graph I genus G
//   v: w1 w2 ... wk     (one line per vertex, clockwise neighbors starting
//                        from the smallest-labeled one)
//   <blank line>
void write_embedding(std::ostream& out, const Graph& g,
                     const RotationSystem& rot, std::uint64_t index, int genus);

struct EmbeddingRecord {
  std::uint64_t index = 0;
  int genus = 0;
  std::vector<std::vector<int>> orders;
};

// Reads one embedding record; false at end of input.
bool read_embedding(std::istream& in, EmbeddingRecord& rec);

}  // namespace genus
