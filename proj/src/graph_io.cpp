#include "hamclosure/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>

#include "hamclosure/errors.hpp"

namespace hamclosure {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

int sixbits(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 input truncated", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6 byte out of range 63..126", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_right(text);
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("empty graph6 input", pos);

  std::int64_t n = 0;
  if (text[pos] != '~') {
    n = sixbits(text, pos++);
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | sixbits(text, pos++);
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sixbits(text, pos++);
  }
  if (n > (1 << 20)) throw ParseError("graph6 order too large", pos);

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  const std::size_t body = pos;
  if (text.size() - body < need) throw ParseError("graph6 bit vector truncated", text.size());
  if (text.size() - body > need) throw ParseError("trailing bytes after graph6 bit vector", body + need);

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = body + static_cast<std::size_t>(k / 6);
      const int word = sixbits(text, at);
      if ((word >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (k % 6 != 0) {
    const std::size_t at = body + static_cast<std::size_t>(k / 6);
    if ((sixbits(text, at) & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", at);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

namespace {

// Whitespace tokenizer that remembers byte offsets for error messages.
class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

  long long next_int(const char* what) {
    skip();
    if (pos_ >= text_.size()) throw ParseError(std::string("expected ") + what, pos_);
    long long value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || (ptr != end && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw ParseError(std::string("expected integer ") + what, pos_);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::size_t pos() const { return pos_; }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Tokens tok(text);
  const long long n = tok.next_int("vertex count");
  if (n < 0) throw ParseError("negative vertex count", 0);
  const long long m = tok.next_int("edge count");
  if (m < 0) throw ParseError("negative edge count", tok.pos());
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    const std::size_t at = tok.pos();
    const long long u = tok.next_int("edge endpoint");
    const long long v = tok.next_int("edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range", at);
    if (u == v) throw ParseError("loop edge", at);
    edges.push_back(Edge::of(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  if (!tok.done()) throw ParseError("trailing data after edge list", tok.pos());
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string emit_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

Graph parse_graph_auto(std::string_view text) {
  const std::string_view t = trim_right(text);
  const bool looks_numeric = !t.empty() && (std::isdigit(static_cast<unsigned char>(t.front())) || t.front() == '#');
  if (looks_numeric && t.find_first_of(" \t\n") != std::string_view::npos) return parse_edge_list(t);
  return parse_graph6(t);
}

}  // namespace hamclosure
