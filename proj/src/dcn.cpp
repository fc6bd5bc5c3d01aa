#include "dcnet/dcn.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace dcnet {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) toks.emplace_back(line.substr(start, i - start));
  }
  return toks;
}

}  // namespace

Network parse_network(std::string_view text) {
  std::vector<std::string> taxa_names;
  std::vector<Vertex> vertices;
  std::unordered_map<std::string, VertexId> id_of;
  std::vector<Arc> arcs;
  bool saw_taxa = false;

  auto intern = [&](const std::string& label) -> VertexId {
    auto it = id_of.find(label);
    if (it != id_of.end()) return it->second;
    VertexId v = static_cast<VertexId>(vertices.size());
    vertices.push_back(Vertex{label, std::nullopt});
    id_of.emplace(label, v);
    return v;
  };

  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "taxa") {
      if (saw_taxa)
        fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": second taxa line",
             lineno);
      if (toks.size() < 2)
        fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": taxa line needs names",
             lineno);
      taxa_names.assign(toks.begin() + 1, toks.end());
      for (size_t t = 0; t < taxa_names.size(); ++t) {
        VertexId v = intern(taxa_names[t]);
        if (vertices[static_cast<size_t>(v)].taxon)
          fail(Errc::DuplicateTaxon, "duplicate taxon '" + taxa_names[t] + "'");
        vertices[static_cast<size_t>(v)].taxon = static_cast<int>(t);
      }
      saw_taxa = true;
      continue;
    }
    if (!saw_taxa)
      fail(Errc::SyntaxError,
           "line " + std::to_string(lineno) + ": expected taxa line before '" + toks[0] + "'",
           lineno);
    if (toks[0] == "arc") {
      if (toks.size() != 3)
        fail(Errc::SyntaxError,
             "line " + std::to_string(lineno) + ": arc needs exactly two labels", lineno);
      VertexId p = intern(toks[1]);
      VertexId c = intern(toks[2]);
      arcs.push_back(Arc{p, c});
      continue;
    }
    fail(Errc::SyntaxError,
         "line " + std::to_string(lineno) + ": unknown directive '" + toks[0] + "'", lineno);
  }
  if (!saw_taxa) fail(Errc::SyntaxError, "missing taxa line");

  return Network::build(TaxonSet(std::move(taxa_names)), std::move(vertices), std::move(arcs));
}

std::string serialize_network(const Network& net) {
  std::ostringstream out;
  out << "taxa";
  for (const auto& name : net.taxa().names()) out << ' ' << name;
  out << '\n';

  std::vector<std::pair<std::string, std::string>> lines;
  lines.reserve(net.arcs().size());
  for (const Arc& a : net.arcs())
    lines.emplace_back(net.vertex(a.parent).label, net.vertex(a.child).label);
  std::sort(lines.begin(), lines.end());
  for (const auto& [p, c] : lines) out << "arc " << p << ' ' << c << '\n';
  return out.str();
}

}  // namespace dcnet
