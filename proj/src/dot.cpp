#include "dcnet/dot.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dcnet {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Network& net) {
  std::ostringstream out;
  out << "digraph network {\n";
  out << "  rankdir=TB;\n";
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    const std::string& label = net.vertex(v).label;
    out << "  " << quoted(label) << " [label="
        << quoted(label + " " + net.cluster_of(v).to_string(net.taxa()))
        << (net.is_leaf(v) ? ", shape=box" : "") << "];\n";
  }
  std::set<std::pair<VertexId, VertexId>> dashed;
  for (const Arc& a : redundant_arcs(net)) dashed.emplace(a.parent, a.child);
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<bool> styles;
  std::vector<size_t> order;
  for (const Arc& a : net.arcs()) {
    lines.emplace_back(net.vertex(a.parent).label, net.vertex(a.child).label);
    styles.push_back(dashed.count({a.parent, a.child}) != 0);
    order.push_back(order.size());
  }
  std::sort(order.begin(), order.end(),
            [&](size_t i, size_t j) { return lines[i] < lines[j]; });
  for (size_t i : order) {
    out << "  " << quoted(lines[i].first) << " -> " << quoted(lines[i].second);
    if (styles[i]) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dcnet
