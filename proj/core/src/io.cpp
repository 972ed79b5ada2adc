#include "genus/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace genus {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int payload_bytes(int n) {
  return (n * (n - 1) / 2 + 5) / 6;
}

int byte_value(std::string_view line, size_t i) {
  unsigned char b = static_cast<unsigned char>(line[i]);
  if (b < 63 || b > 126)
    throw ParseError("graph6 byte " + std::to_string(i) + " has value " +
                     std::to_string(b) + ", outside 63..126");
  return b - 63;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  if (line.empty()) throw ParseError("empty graph6 record");

  size_t pos = 0;
  int n;
  if (byte_value(line, 0) != 63) {
    n = byte_value(line, 0);
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    throw ParseError("graph6 vertex count uses the 36-bit form, beyond the "
                     "compiled limit of " + std::to_string(kMaxVertices));
  } else {
    if (line.size() < 4) throw ParseError("graph6 record truncated");
    n = (byte_value(line, 1) << 12) | (byte_value(line, 2) << 6) |
        byte_value(line, 3);
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6 record encodes the empty graph");
  if (n > kMaxVertices)
    throw ParseError("vertex count " + std::to_string(n) +
                     " exceeds the compiled limit of " +
                     std::to_string(kMaxVertices));

  size_t need = payload_bytes(n);
  if (line.size() - pos != need)
    throw ParseError("graph6 record for " + std::to_string(n) +
                     " vertices needs " + std::to_string(need) +
                     " payload bytes, got " + std::to_string(line.size() - pos));

  std::vector<std::pair<int, int>> edges;
  int t = 0;
  int word = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (t % 6 == 0) word = byte_value(line, pos + t / 6);
      if ((word >> (5 - t % 6)) & 1) edges.emplace_back(i, j);
      ++t;
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out.push_back(static_cast<char>(g.n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((g.n & 63) + 63));
  }
  int t = 0;
  int word = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) word |= 1 << (5 - t % 6);
      if (++t % 6 == 0) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
      }
    }
  }
  if (t % 6 != 0) out.push_back(static_cast<char>(word + 63));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n, m;
  if (!(in >> n >> m)) throw ParseError("edge list needs a leading \"n m\" line");
  if (n < 1 || n > kMaxVertices)
    throw ParseError("edge list vertex count " + std::to_string(n) +
                     " outside 1.." + std::to_string(kMaxVertices));
  if (m < 0 || m > static_cast<long long>(n) * (n - 1) / 2)
    throw ParseError("edge list edge count " + std::to_string(m) +
                     " impossible for " + std::to_string(n) + " vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long long k = 0; k < m; ++k) {
    long long u, v;
    if (!(in >> u >> v))
      throw ParseError("edge list ends after " + std::to_string(k) + " of " +
                       std::to_string(m) + " edges");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge endpoint out of range: " + std::to_string(u) +
                       " " + std::to_string(v));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string tail;
  if (in >> tail) throw ParseError("trailing data in edge list: " + tail);
  try {
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.m) + "\n";
  for (auto [u, v] : g.edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

bool Graph6Reader::next(InputRecord& rec) {
  std::string line;
  while (std::getline(*in_, line)) {
    strip_cr(line);
    if (at_start_) {
      at_start_ = false;
      if (line.substr(0, kHeader.size()) == kHeader)
        line.erase(0, kHeader.size());
    }
    if (line.empty()) continue;
    rec.index = ++count_;
    rec.raw = line;
    try {
      rec.graph = parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError("record " + std::to_string(rec.index) + ": " + e.what());
    }
    return true;
  }
  return false;
}

bool EdgeListReader::next(InputRecord& rec) {
  auto next_line = [&](std::string& line) {
    while (std::getline(*in_, line)) {
      strip_cr(line);
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) return false;
  rec.index = ++count_;
  rec.raw = header;
  try {
    long long n = 0, m = 0;
    {
      std::istringstream hs(header);
      if (!(hs >> n >> m) || m < 0)
        throw ParseError("edge list needs a leading \"n m\" line");
    }
    std::string line;
    for (long long k = 0; k < m; ++k) {
      if (!next_line(line))
        throw ParseError("edge list ends after " + std::to_string(k) + " of " +
                         std::to_string(m) + " edges");
      rec.raw += "\n" + line;
    }
    rec.graph = parse_edge_list(rec.raw);
  } catch (const ParseError& e) {
    throw ParseError("record " + std::to_string(rec.index) + ": " + e.what());
  }
  return true;
}

void write_embedding(std::ostream& out, const Graph& g,
                     const RotationSystem& rot, std::uint64_t index,
                     int genus) {
  auto orders = neighbor_orders(g, rot);
  out << "#graph " << index << " genus " << genus << "\n";
  for (int v = 0; v < g.n; ++v) {
    out << v << ":";
    for (int w : orders[v]) out << " " << w;
    out << "\n";
  }
  out << "\n";
}

bool read_embedding(std::istream& in, EmbeddingRecord& rec) {
  std::string line;
  for (;;) {
    if (!std::getline(in, line)) return false;
    strip_cr(line);
    if (!line.empty()) break;
  }
  std::istringstream hs(line);
  std::string tag, genus_word;
  if (!(hs >> tag >> rec.index >> genus_word >> rec.genus) ||
      tag != "#graph" || genus_word != "genus")
    throw ParseError("malformed embedding header: " + line);

  rec.orders.clear();
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) break;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("malformed embedding line: " + line);
    std::istringstream vs(line.substr(0, colon));
    int v;
    if (!(vs >> v) || v != static_cast<int>(rec.orders.size()))
      throw ParseError("embedding lines out of order: " + line);
    std::vector<int> row;
    std::istringstream ws(line.substr(colon + 1));
    int w;
    while (ws >> w) row.push_back(w);
    rec.orders.push_back(std::move(row));
  }
  return true;
}

}  // namespace genus
