#include "imlab/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "imlab/error.hpp"

namespace imlab {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  append_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", base);
  if (text.front() == ':') throw ParseError("graph6: sparse6 input is not supported", base);
  if (text.front() == '&') throw ParseError("graph6: digraph6 input is not supported", base);

  std::size_t pos = 0;
  auto next = [&](const char* what) -> int {
    if (pos >= text.size()) throw ParseError(std::string("graph6: truncated ") + what, base + pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw ParseError("graph6: byte outside 63..126", base + pos);
    ++pos;
    return c - kBias;
  };

  std::uint64_t n = 0;
  int first = next("size header");
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
  } else {
    int second = next("size header");
    int digits = 3;
    if (second == 63) {
      digits = 6;
      second = next("size header");
    }
    n = static_cast<std::uint64_t>(second);
    for (int i = 1; i < digits; ++i) n = (n << 6) | static_cast<std::uint64_t>(next("size header"));
  }
  if (n > 1u << 20) throw ParseError("graph6: vertex count too large", base);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("graph6: truncated adjacency bitmap", base + text.size());
  if (text.size() - pos > bytes) throw ParseError("graph6: trailing bytes after bitmap", base + pos + bytes);

  GraphBuilder b(static_cast<int>(n));
  int chunk = 0;
  int left = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        chunk = next("adjacency bitmap");
        left = 6;
      }
      --left;
      if ((chunk >> left) & 1) b.add_edge(i, j);
    }
  }
  return b.build();
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  long long n = 0;

  auto parse_int = [&](std::string_view tok, std::size_t at) -> long long {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("edge list: expected integer, got '" + std::string(tok) + "'", at);
    }
    return value;
  };

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::pair<std::string_view, std::size_t>> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) {
        toks.emplace_back(line.substr(i, j - i), static_cast<std::size_t>(line.data() - text.data()) + i);
      }
      i = j;
    }

    if (!have_header) {
      if (toks.size() != 2 || toks[0].first != "n") {
        throw ParseError("edge list: first line must be 'n <count>'", toks.front().second);
      }
      n = parse_int(toks[1].first, toks[1].second);
      if (n < 0 || n > (1 << 20)) throw ParseError("edge list: bad vertex count", toks[1].second);
      have_header = true;
      continue;
    }
    if (toks.size() != 2) throw ParseError("edge list: expected 'u v'", toks.front().second);
    long long u = parse_int(toks[0].first, toks[0].second);
    long long v = parse_int(toks[1].first, toks[1].second);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: vertex id out of range", toks[0].second);
    if (u == v) throw ParseError("edge list: loop at vertex " + std::to_string(u), toks[0].second);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw ParseError("edge list: missing 'n <count>' header", 0);
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::vector<Graph> parse_graphs(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) return {};
  if (body.size() >= 2 && body[0] == 'n' && (body[1] == ' ' || body[1] == '\t')) {
    return {parse_edge_list(text)};
  }
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    const std::size_t start = pos;
    pos = eol + 1;
    line = trim(line);
    if (line.empty() || line == kHeader) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), start + e.offset());
    }
  }
  return out;
}

std::vector<Graph> read_graphs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graphs(buf.str());
}

Graph read_graph(const std::filesystem::path& path) {
  auto graphs = read_graphs(path);
  if (graphs.empty()) throw InvalidInput(path.string() + " contains no graph");
  return std::move(graphs.front());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
}

}  // namespace imlab
