#include "sylvan/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

#include "sylvan/errors.hpp"

namespace sylvan {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view strip_header(std::string_view s, std::string_view header) {
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  return s;
}

int decode_order(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw ParseError("missing size header");
  unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c == 126) throw ParseError("graphs with more than 62 vertices are not supported");
  if (c < 63 || c > 125) throw ParseError("invalid size byte");
  ++pos;
  return c - 63;
}

// Bit reader over 6-bit groups, most significant bit first.
class SixBitReader {
 public:
  SixBitReader(std::string_view data, std::size_t pos) : data_(data), pos_(pos) {}

  std::size_t remaining() const { return (data_.size() - pos_) * 6 - used_; }

  int bit() {
    if (remaining() == 0) throw ParseError("unexpected end of data");
    int value = byte_value(pos_);
    int b = (value >> (5 - used_)) & 1;
    if (++used_ == 6) {
      used_ = 0;
      ++pos_;
    }
    return b;
  }

  std::uint32_t bits(int k) {
    std::uint32_t x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | static_cast<std::uint32_t>(bit());
    return x;
  }

 private:
  int byte_value(std::size_t i) const {
    unsigned char c = static_cast<unsigned char>(data_[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside the printable 63..126 range");
    return c - 63;
  }

  std::string_view data_;
  std::size_t pos_;
  int used_ = 0;
};

class SixBitWriter {
 public:
  void put(int b) {
    acc_ = (acc_ << 1) | (b & 1);
    if (++fill_ == 6) flush_byte();
  }
  void put_bits(std::uint32_t x, int k) {
    for (int i = k - 1; i >= 0; --i) put(static_cast<int>((x >> i) & 1U));
  }
  int pending() const { return fill_; }
  std::string finish() {
    while (fill_ != 0) put(0);
    return out_;
  }
  std::string& text() { return out_; }

 private:
  void flush_byte() {
    out_.push_back(static_cast<char>(acc_ + 63));
    acc_ = 0;
    fill_ = 0;
  }
  std::string out_;
  int acc_ = 0;
  int fill_ = 0;
};

int bits_for(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

void require_codec_size(const PseudoGraph& g) {
  if (g.vertex_count() > kMaxCodecVertices) {
    throw PreconditionError("graph6/sparse6 writers support at most 62 vertices");
  }
}

int parse_int(std::string_view tok) {
  tok = trim(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError("expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

PseudoGraph parse_graph6(std::string_view line) {
  std::string_view s = strip_header(trim(line), ">>graph6<<");
  if (!s.empty() && s.front() == ':') throw ParseError("sparse6 data passed to graph6 parser");
  std::size_t pos = 0;
  int n = decode_order(s, pos);
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes) {
    throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                     std::to_string(nbytes));
  }
  SixBitReader reader(s, pos);
  PseudoGraph g(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (reader.bit()) g.add_edge(i, j);
    }
  }
  while (reader.remaining() > 0) {
    if (reader.bit()) throw ParseError("nonzero padding bits in graph6");
  }
  return g;
}

std::string write_graph6(const PseudoGraph& g) {
  require_codec_size(g);
  if (!g.is_simple()) throw PreconditionError("graph6 encodes simple graphs only");
  const int n = g.vertex_count();
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (const EdgeRecord& e : g.edges()) adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
  SixBitWriter w;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) w.put(adj[i * n + j]);
  }
  std::string out(1, static_cast<char>(n + 63));
  out += w.finish();
  return out;
}

PseudoGraph parse_sparse6(std::string_view line) {
  std::string_view s = strip_header(trim(line), ">>sparse6<<");
  if (s.empty() || s.front() != ':') throw ParseError("sparse6 line must start with ':'");
  std::size_t pos = 1;
  int n = decode_order(s, pos);
  const int k = bits_for(n);
  SixBitReader reader(s, pos);
  PseudoGraph g(n);
  int v = 0;
  while (reader.remaining() >= static_cast<std::size_t>(k) + 1) {
    int b = reader.bit();
    int x = static_cast<int>(reader.bits(k));
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      g.add_edge(x, v);
    }
    if (v >= n) break;
  }
  return g;
}

std::string write_sparse6(const PseudoGraph& g) {
  require_codec_size(g);
  if (g.loop_count() > 0) throw PreconditionError("sparse6 writer does not accept loops");
  const int n = g.vertex_count();
  const int k = bits_for(n);
  std::vector<std::pair<VertexId, VertexId>> es;  // (larger, smaller)
  for (const EdgeRecord& e : g.edges()) es.emplace_back(e.v, e.u);
  std::sort(es.begin(), es.end());

  SixBitWriter w;
  int cur = 0;
  for (auto [v, u] : es) {
    if (v == cur) {
      w.put(0);
      w.put_bits(static_cast<std::uint32_t>(u), k);
    } else if (v == cur + 1) {
      cur = v;
      w.put(1);
      w.put_bits(static_cast<std::uint32_t>(u), k);
    } else {
      cur = v;
      w.put(1);
      w.put_bits(static_cast<std::uint32_t>(v), k);
      w.put(0);
      w.put_bits(static_cast<std::uint32_t>(u), k);
    }
  }
  int pad = (6 - w.pending()) % 6;
  if (pad > 0) {
    // A run of 1-bits could decode as an extra edge (n-1, n-1) when n is a
    // power of two and the last vertex seen is n-2; lead with a 0 bit then.
    bool special = k < 6 && n == (1 << k) && cur == n - 2 && pad >= k + 1;
    if (special) {
      w.put(0);
      --pad;
    }
    for (int i = 0; i < pad; ++i) w.put(1);
  }
  std::string out = ":";
  out.push_back(static_cast<char>(n + 63));
  out += w.finish();
  return out;
}

PseudoGraph parse_pgf(std::string_view line) {
  std::string_view s = trim(line);
  auto semi = s.find(';');
  if (semi == std::string_view::npos) throw ParseError("pgf line needs 'n;' header");
  int n = parse_int(s.substr(0, semi));
  if (n < 0) throw ParseError("negative vertex count");
  PseudoGraph g(n);
  std::string_view rest = trim(s.substr(semi + 1));
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto space = item.find_first_of(" \t");
    if (space == std::string_view::npos) throw ParseError("pgf edge needs two endpoints: '" + std::string(item) + "'");
    int u = parse_int(item.substr(0, space));
    int v = parse_int(item.substr(space + 1));
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("pgf endpoint out of range");
    g.add_edge(u, v);
    if (comma != std::string_view::npos && trim(rest).empty()) throw ParseError("trailing comma in pgf line");
  }
  return g;
}

std::string write_pgf(const PseudoGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + ";";
  for (const EdgeRecord& e : g.edges()) {
    out += e.id == 0 ? " " : ", ";
    out += std::to_string(e.u) + " " + std::to_string(e.v);
  }
  return out;
}

const char* to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::kGraph6:
      return "g6";
    case GraphFormat::kSparse6:
      return "s6";
    case GraphFormat::kPgf:
      return "pgf";
  }
  return "?";
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "g6" || name == "graph6") return GraphFormat::kGraph6;
  if (name == "s6" || name == "sparse6") return GraphFormat::kSparse6;
  if (name == "pgf") return GraphFormat::kPgf;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

GraphFormat format_from_path(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) throw ParseError("cannot infer format of '" + std::string(path) + "'");
  return parse_format_name(path.substr(dot + 1));
}

PseudoGraph parse_graph(std::string_view line, GraphFormat format) {
  std::string_view s = trim(line);
  switch (format) {
    case GraphFormat::kPgf:
      return parse_pgf(s);
    case GraphFormat::kSparse6:
      return parse_sparse6(s);
    case GraphFormat::kGraph6:
      if (!s.empty() && s.front() == ':') return parse_sparse6(s);
      return parse_graph6(s);
  }
  throw ParseError("unknown format");
}

std::string write_graph(const PseudoGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6:
      return write_graph6(g);
    case GraphFormat::kSparse6:
      return write_sparse6(g);
    case GraphFormat::kPgf:
      return write_pgf(g);
  }
  throw ParseError("unknown format");
}

std::vector<PseudoGraph> read_graphs(std::istream& in, GraphFormat format) {
  std::vector<PseudoGraph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (s == ">>graph6<<" || s == ">>sparse6<<") continue;
    try {
      out.push_back(parse_graph(s, format));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<PseudoGraph> read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_graphs(in, format);
}

}  // namespace sylvan
