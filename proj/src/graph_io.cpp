#include "pcg/graph_io.hpp"

#include "pcg/error.hpp"

#include <cstdint>
#include <sstream>

namespace pcg {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw ParseError("graph6 byte out of range");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph read_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("empty graph6 string");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("truncated graph6 size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated graph6 size field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  }
  if (n > 100000) throw ParseError("graph6 vertex count too large for this toolkit");

  std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 length mismatch: expected " + std::to_string(bytes) +
                     " data bytes, found " + std::to_string(text.size() - pos));
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = sextet(text[pos + k / 6]);
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    if (sextet(text[pos + k / 6]) & (1 << (5 - k % 6))) throw ParseError("graph6 padding bits set");
  }
  return Graph::from_indices(families::default_labels(n), edges);
}

std::string write_graph6(const Graph& g) {
  std::uint64_t n = g.size();
  std::string out;
  auto put = [&out](std::uint64_t v) { out.push_back(static_cast<char>(v + kBias)); };
  if (n <= 62) {
    put(n);
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) put((n >> s) & 63);
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) put((n >> s) & 63);
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        put(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) put(acc << (6 - filled));
  return out;
}

Graph read_edge_list(std::string_view text) {
  std::vector<Label> labels;
  std::unordered_map<Label, std::size_t> seen;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> declared;
  bool first_content = true;

  auto intern = [&](std::string_view l) {
    auto [it, inserted] = seen.emplace(Label(l), labels.size());
    if (inserted) labels.emplace_back(l);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;

    auto tokens = split_ws(line);
    if (first_content && tokens[0].starts_with("n=")) {
      first_content = false;
      for (auto tok : tokens) {
        if (tok.starts_with("n=")) {
          try {
            declared = std::stoul(std::string(tok.substr(2)));
          } catch (const std::exception&) {
            throw ParseError("bad vertex count in header: " + std::string(tok));
          }
        } else if (tok.starts_with("labels=")) {
          auto list = tok.substr(7);
          std::size_t p = 0;
          while (p <= list.size() && !list.empty()) {
            auto c = list.find(',', p);
            if (c == std::string_view::npos) c = list.size();
            auto l = list.substr(p, c - p);
            if (l.empty()) throw ParseError("empty label in header");
            if (seen.contains(Label(l))) throw ParseError("duplicate label in header: " + std::string(l));
            intern(l);
            p = c + 1;
          }
        } else {
          throw ParseError("unknown header field: " + std::string(tok));
        }
      }
      continue;
    }
    first_content = false;
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two labels");
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError("line " + std::to_string(line_no) + ": self-loop at '" + std::string(tokens[0]) + "'");
    }
    auto u = intern(tokens[0]);
    auto v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  if (declared && *declared != labels.size()) {
    throw ParseError("header declares n=" + std::to_string(*declared) + " but the file has " +
                     std::to_string(labels.size()) + " vertices");
  }
  return Graph::from_indices(std::move(labels), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.size() << " labels=";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& l = g.label(i);
    if (l.find_first_of(", \t\r\n#") != std::string::npos) {
      throw PreconditionError("label '" + l + "' cannot be written to an edge list");
    }
    out << (i ? "," : "") << l;
  }
  out << '\n';
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? read_graph6(text) : read_edge_list(text);
}

GraphFormat sniff_format(std::string_view path, std::string_view content) {
  if (path.ends_with(".g6") || trim(content).starts_with(kGraph6Header)) return GraphFormat::Graph6;
  return GraphFormat::EdgeList;
}

}  // namespace pcg
