#ifndef SHORTLINKS_TEXT_FORMAT_HPP
#define SHORTLINKS_TEXT_FORMAT_HPP

// Plain-text file formats. '#' starts a comment running to the end of the
// line; blank lines are ignored.
//
//   simplicial <n>        graph <vertices>       quad <vertices>
//   1 2 6 7               1 2                    1 2 3 4
//   ...                   ...                    ...
//
// Complex facets use the complex's own vertex ids. Graph and quadrillage ids
// are 1-based.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "shortlinks/common.hpp"
#include "shortlinks/graph.hpp"
#include "shortlinks/quadrillage.hpp"
#include "shortlinks/simplicial_complex.hpp"

namespace shortlinks {

enum class FileKind { simplicial, graph, quadrillage };

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  if (out.empty()) throw InputError("empty input");
  return out;
}

inline long parse_positive(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v <= 0)
    throw InputError("line " + std::to_string(line) + ": expected a positive integer, got '" + tok + "'");
  return v;
}

inline long parse_header(const std::vector<Line>& lines, const char* keyword) {
  const auto& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != keyword)
    throw InputError("line " + std::to_string(h.number) + ": expected header '" + keyword + " <count>'");
  return parse_positive(h.tokens[1], h.number);
}

}  // namespace detail

/// Kind named by the first non-comment line.
inline FileKind detect_kind(std::string_view text) {
  auto lines = detail::tokenize(text);
  const auto& word = lines.front().tokens.front();
  if (word == "simplicial") return FileKind::simplicial;
  if (word == "graph") return FileKind::graph;
  if (word == "quad") return FileKind::quadrillage;
  throw InputError("line " + std::to_string(lines.front().number) + ": unknown file kind '" + word + "'");
}

inline SimplicialComplex parse_complex(std::string_view text) {
  auto lines = detail::tokenize(text);
  auto n = detail::parse_header(lines, "simplicial");
  std::vector<Face> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<VertexId> vs;
    for (const auto& t : lines[i].tokens) vs.push_back(static_cast<VertexId>(detail::parse_positive(t, lines[i].number)));
    if (static_cast<long>(vs.size()) != n + 1)
      throw InputError("line " + std::to_string(lines[i].number) + ": facet needs " + std::to_string(n + 1) +
                       " vertices");
    try {
      facets.emplace_back(std::move(vs));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lines[i].number) + ": " + e.what());
    }
  }
  return SimplicialComplex(static_cast<int>(n), std::move(facets));
}

inline std::string serialize(const SimplicialComplex& k_complex) {
  std::ostringstream os;
  os << "simplicial " << k_complex.dimension() << '\n';
  for (const auto& f : k_complex.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f.vertices()[i];
    os << '\n';
  }
  return os.str();
}

inline Graph parse_graph(std::string_view text) {
  auto lines = detail::tokenize(text);
  auto n = static_cast<std::size_t>(detail::parse_header(lines, "graph"));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) throw InputError("line " + std::to_string(l.number) + ": expected 'u v'");
    auto u = static_cast<std::size_t>(detail::parse_positive(l.tokens[0], l.number));
    auto v = static_cast<std::size_t>(detail::parse_positive(l.tokens[1], l.number));
    if (u > n || v > n) throw InputError("line " + std::to_string(l.number) + ": vertex id above " + std::to_string(n));
    edges.emplace_back(u - 1, v - 1);
  }
  return Graph(n, std::move(edges));
}

inline std::string serialize(const Graph& g) {
  std::ostringstream os;
  os << "graph " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

inline Quadrillage parse_quadrillage(std::string_view text) {
  auto lines = detail::tokenize(text);
  auto n = static_cast<std::size_t>(detail::parse_header(lines, "quad"));
  std::vector<QuadFace> faces;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 4) throw InputError("line " + std::to_string(l.number) + ": a face needs 4 vertices");
    QuadFace f{};
    for (std::size_t k = 0; k < 4; ++k) {
      auto v = static_cast<std::size_t>(detail::parse_positive(l.tokens[k], l.number));
      if (v > n) throw InputError("line " + std::to_string(l.number) + ": vertex id above " + std::to_string(n));
      f[k] = v - 1;
    }
    faces.push_back(f);
  }
  return Quadrillage(n, std::move(faces));
}

inline std::string serialize(const Quadrillage& q) {
  std::ostringstream os;
  os << "quad " << q.vertex_count() << '\n';
  for (const auto& f : q.faces()) os << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' ' << f[3] + 1 << '\n';
  return os.str();
}

}  // namespace shortlinks

#endif  // SHORTLINKS_TEXT_FORMAT_HPP
