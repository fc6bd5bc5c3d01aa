#include "dcnet/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dcnet/dcn.hpp"
#include "dcnet/dot.hpp"
#include "dcnet/hybrid_o1.hpp"
#include "dcnet/matrix.hpp"
#include "dcnet/metric.hpp"
#include "dcnet/network.hpp"
#include "dcnet/oracle.hpp"
#include "dcnet/search.hpp"
#include "dcnet/simplify.hpp"

namespace dcnet {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Network load(const std::string& path) { return parse_network(read_file(path)); }

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
  f << text;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    if (comma > pos) parts.push_back(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return parts;
}

void print_matrix(std::ostream& out, const Network& net, bool adjacency, char sep) {
  // File vertex order, matching how the network was written down.
  std::optional<InheritanceMatrix> h;
  if (!adjacency) h = inheritance_matrix(net);
  for (VertexId v = 0; v < net.vertex_count(); ++v) out << sep << net.vertex(v).label;
  out << '\n';
  for (VertexId u = 0; u < net.vertex_count(); ++u) {
    out << net.vertex(u).label;
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
      if (adjacency)
        out << sep << (net.has_arc(u, v) ? 1 : 0);
      else
        out << sep << h->paths(u, v);
    }
    out << '\n';
  }
}

std::string cluster_label(const Network& net, Cluster c) {
  auto v = net.vertex_with_cluster(c);
  return v ? net.vertex(*v).label : c.to_string(net.taxa());
}

std::string candidate_name(const Network& base, const std::vector<Cluster>& keep) {
  std::string name = "N(";
  for (size_t i = 0; i < keep.size(); ++i) {
    if (i) name += ',';
    name += cluster_label(base, keep[i]);
  }
  name += ')';
  return name;
}

const char* class_annotation(NetworkClass cls) {
  switch (cls) {
    case NetworkClass::Tree: return "not a tree";
    case NetworkClass::TreeChild: return "not tree-child";
    case NetworkClass::Normal: return "not normal";
    case NetworkClass::Any: return "excluded";
  }
  return "excluded";
}

Cluster cluster_of_label(const Network& net, const std::string& label) {
  auto v = net.find_label(label);
  if (!v)
    fail(Errc::KeepNotSubsetOfVertices, "label '" + label + "' names no vertex");
  return net.cluster_of(*v);
}

Cluster cluster_from_taxa_line(const Network& net, const std::vector<std::string>& names,
                               int lineno) {
  Cluster c;
  for (const auto& name : names) {
    auto t = net.taxa().index_of(name);
    if (!t)
      fail(Errc::SyntaxError,
           "line " + std::to_string(lineno) + ": unknown taxon '" + name + "'", lineno);
    c.add(*t);
  }
  return c;
}

int run_checked(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(args, out, err);
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

namespace {

int run_checked(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"distinct-cluster phylogenetic network toolkit"};
  app.require_subcommand(1);

  // validate
  std::string v_file;
  bool v_classes = false;
  auto* validate = app.add_subcommand("validate", "parse a network and report its shape");
  validate->add_option("file", v_file, ".dcn input")->required();
  validate->add_flag("--classes", v_classes, "also print class membership flags");

  // clusters
  std::string cl_file;
  auto* clusters = app.add_subcommand("clusters", "print the cluster of every vertex");
  clusters->add_option("file", cl_file, ".dcn input")->required();

  // matrix
  std::string m_file, m_which = "h", m_format = "tsv";
  auto* matrix = app.add_subcommand("matrix", "print the adjacency or inheritance matrix");
  matrix->add_option("file", m_file, ".dcn input")->required();
  matrix->add_option("--which", m_which, "a (adjacency) or h (inheritance)")
      ->check(CLI::IsMember({"a", "h"}));
  matrix->add_option("--format", m_format, "tsv or csv")->check(CLI::IsMember({"tsv", "csv"}));

  // dist
  std::string d_a, d_b, d_clusters_file, d_format = "text";
  int d_p = 1;
  bool d_o1_flag = false;
  auto* dist = app.add_subcommand("dist", "inheritance distance between two networks");
  dist->add_option("a", d_a, "first .dcn input")->required();
  dist->add_option("b", d_b, "second .dcn input")->required();
  dist->add_option("--p", d_p, "p-norm exponent (default 1)");
  dist->add_option("--clusters", d_clusters_file, "file fixing the shared cluster index");
  dist->add_flag("--o1", d_o1_flag, "contract out-degree-1 hybrids first");
  dist->add_option("--format", d_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // refdist
  int r_n = 0, r_explore = 0, r_max_internal = 6;
  uint64_t r_seed = 0;
  double r_density = 0.4;
  auto* refdist = app.add_subcommand("refdist", "closed-form powerset-to-trivial-tree distance");
  refdist->add_option("--n", r_n, "number of taxa (>= 2)")->required();
  refdist->add_option("--explore", r_explore, "sample random pairs and report the max distance");
  refdist->add_option("--seed", r_seed, "sampler seed");
  refdist->add_option("--density", r_density, "sampler arc density");
  refdist->add_option("--max-internal", r_max_internal, "sampler internal-vertex cap");

  // gen
  std::string g_kind, g_out;
  int g_n = 0;
  auto* gen = app.add_subcommand("gen", "generate a reference network");
  gen->add_option("kind", g_kind, "trivial or powerset")
      ->required()
      ->check(CLI::IsMember({"trivial", "powerset"}));
  gen->add_option("--n", g_n, "number of taxa")->required();
  gen->add_option("--out", g_out, "output path (default stdout)");

  // reduce
  std::string red_file, red_out;
  auto* reduce = app.add_subcommand("reduce", "delete redundant arcs until none remain");
  reduce->add_option("file", red_file, ".dcn input")->required();
  reduce->add_option("--out", red_out, "output path (default stdout)");

  // simplify
  std::string s_file, s_keep, s_out;
  auto* simplify = app.add_subcommand("simplify", "canonical simplification keeping given vertices");
  simplify->add_option("file", s_file, ".dcn input")->required();
  simplify->add_option("--keep", s_keep, "comma-separated vertex labels to keep")->required();
  simplify->add_option("--out", s_out, "output path (default stdout)");

  // is-cps
  std::string ic_base, ic_cand;
  auto* iscps = app.add_subcommand("is-cps", "decide cluster-preserving simplification");
  iscps->add_option("base", ic_base, "base .dcn input")->required();
  iscps->add_option("candidate", ic_cand, "candidate .dcn input")->required();

  // best-tree
  std::string bt_file, bt_class = "tree", bt_format = "text";
  std::optional<int> bt_max;
  bool bt_table = false, bt_force = false;
  auto* besttree = app.add_subcommand("best-tree", "closest simplification in a class");
  besttree->add_option("file", bt_file, ".dcn input")->required();
  besttree->add_option("--class", bt_class, "tree, tree-child, normal, or any")
      ->check(CLI::IsMember({"tree", "tree-child", "normal", "any"}));
  besttree->add_option("--max-nontrivial", bt_max, "cap on retained nontrivial clusters");
  besttree->add_flag("--table", bt_table, "print every candidate, not only the winners");
  besttree->add_flag("--force", bt_force, "search even when the candidate set is huge");
  besttree->add_option("--format", bt_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // contract-o1 / expand-o1
  std::string co_file, co_out, eo_file, eo_out;
  auto* contract = app.add_subcommand("contract-o1", "splice out out-degree-1 hybrids");
  contract->add_option("file", co_file, ".dcn input")->required();
  contract->add_option("--out", co_out, "output path (default stdout)");
  auto* expand = app.add_subcommand("expand-o1", "insert a parent above every hybrid");
  expand->add_option("file", eo_file, ".dcn input")->required();
  expand->add_option("--out", eo_out, "output path (default stdout)");

  // dot
  std::string dot_file, dot_out;
  auto* dotcmd = app.add_subcommand("dot", "Graphviz export, redundant arcs dashed");
  dotcmd->add_option("file", dot_file, ".dcn input")->required();
  dotcmd->add_option("--out", dot_out, "output path (default stdout)");

  // debug (hidden)
  auto* debug = app.add_subcommand("debug", "internal oracles");
  debug->group("");
  debug->require_subcommand(1);
  int dg_n = 4, dg_max_internal = 4, dg_count = 1;
  double dg_density = 0.3;
  uint64_t dg_seed = 0;
  auto* dgen = debug->add_subcommand("gen-random", "rejection-sampled random DC network");
  dgen->add_option("--n", dg_n, "taxa (1..6)");
  dgen->add_option("--max-internal", dg_max_internal, "internal vertex cap (0..8)");
  dgen->add_option("--density", dg_density, "arc density in [0,1]");
  dgen->add_option("--seed", dg_seed, "generator seed");
  dgen->add_option("--count", dg_count, "how many networks (seeds seed, seed+1, ...)");
  std::string de_file;
  auto* denum = debug->add_subcommand("enum-cps", "exhaustive simplification closure");
  denum->add_option("file", de_file, ".dcn input")->required();

  std::vector<const char*> argv;
  argv.push_back("dcnet");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  if (validate->parsed()) {
    Network net = load(v_file);
    out << "ok: " << (net.is_dc() ? "DC" : "not-DC") << ", " << net.vertex_count()
        << " vertices, " << net.arc_count() << " arcs\n";
    if (v_classes) {
      ClassFlags f = classify(net);
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      out << "classes: tree=" << yn(f.is_tree) << " tree-child=" << yn(f.is_tree_child)
          << " normal=" << yn(f.is_normal) << " regular=" << yn(f.is_regular) << '\n';
    }
    return 0;
  }

  if (clusters->parsed()) {
    Network net = load(cl_file);
    for (VertexId v = 0; v < net.vertex_count(); ++v)
      out << net.vertex(v).label << '\t' << net.cluster_of(v).to_string(net.taxa()) << '\n';
    return 0;
  }

  if (matrix->parsed()) {
    Network net = load(m_file);
    print_matrix(out, net, m_which == "a", m_format == "csv" ? ',' : '\t');
    return 0;
  }

  if (dist->parsed()) {
    Network a = load(d_a);
    Network b = load(d_b);
    if (d_o1_flag) {
      a = contract_o1(a);
      b = contract_o1(b);
      if (!a.is_dc()) fail(Errc::NotExtendedDC, "first input's contraction is not distinct-cluster");
      if (!b.is_dc()) fail(Errc::NotExtendedDC, "second input's contraction is not distinct-cluster");
    }
    Distance d;
    if (!d_clusters_file.empty()) {
      if (d_p != 1) fail(Errc::InvalidP, "--clusters only applies to the p = 1 distance");
      std::vector<Cluster> fixed;
      std::string text = read_file(d_clusters_file);
      std::istringstream lines(text);
      std::string line;
      int lineno = 0;
      while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream toks(line);
        std::vector<std::string> names;
        std::string tok;
        while (toks >> tok) names.push_back(tok);
        if (!names.empty()) fixed.push_back(cluster_from_taxa_line(a, names, lineno));
      }
      const Network* nets[] = {&a, &b};
      ClusterIndex given = cluster_index(nets);
      ClusterIndex idx = make_cluster_index(std::move(fixed));
      for (Cluster c : given.clusters)
        if (!idx.position(c))
          fail(Errc::IndexMissingCluster,
               "--clusters index is missing " + c.to_string(a.taxa()));
      d = Distance{inheritance_distance_over(a, b, idx), 1};
    } else {
      d = p_norm_distance(a, b, d_p);
    }
    if (d_format == "json") {
      json j;
      j["p"] = d.p;
      j["radicand"] = d.radicand.str();
      if (d.p == 1)
        j["value"] = d.radicand.str();
      else
        j["approx"] = d.approx();
      out << j.dump() << '\n';
    } else if (d.p == 1) {
      out << d.radicand.str() << '\n';
    } else {
      std::ostringstream approx;
      approx << d.approx();
      out << d.to_string() << " = " << approx.str() << '\n';
    }
    return 0;
  }

  if (refdist->parsed()) {
    out << reference_distance_formula(r_n).str() << '\n';
    if (r_explore > 0) {
      // Exploratory only: is the closed form ever exceeded by a random pair?
      BigInt best = 0;
      for (int i = 0; i < r_explore; ++i) {
        RandomNetSpec sa{r_n, r_max_internal, r_density, r_seed + 2 * static_cast<uint64_t>(i)};
        RandomNetSpec sb{r_n, r_max_internal, r_density,
                         r_seed + 2 * static_cast<uint64_t>(i) + 1};
        BigInt d = inheritance_distance(gen_random_dc(sa), gen_random_dc(sb));
        if (d > best) best = d;
      }
      out << "max sampled distance over " << r_explore << " random pairs: " << best.str()
          << '\n';
    }
    return 0;
  }

  if (gen->parsed()) {
    TaxonSet taxa = TaxonSet::numbered(g_n);
    Network net = g_kind == "trivial" ? gen_trivial_tree(taxa) : gen_powerset_network(taxa);
    write_output(serialize_network(net), g_out, out);
    return 0;
  }

  if (reduce->parsed()) {
    write_output(serialize_network(transitive_reduction(load(red_file))), red_out, out);
    return 0;
  }

  if (simplify->parsed()) {
    Network net = load(s_file);
    std::vector<Cluster> keep = trivial_clusters(net.taxa());
    for (const auto& label : split_commas(s_keep))
      keep.push_back(cluster_of_label(net, label));
    write_output(serialize_network(canonical_cps(net, keep)), s_out, out);
    return 0;
  }

  if (iscps->parsed()) {
    Network base = load(ic_base);
    Network cand = load(ic_cand);
    CpsResult res = is_cps(base, cand);
    if (res.yes) {
      out << "yes\n";
      for (const auto& step : res.certificate.steps)
        out << "  " << step.to_string(base.taxa()) << '\n';
    } else {
      out << "no: " << res.reason << '\n';
    }
    return 0;
  }

  if (besttree->parsed()) {
    Network net = load(bt_file);
    NetworkClass cls = bt_class == "tree"        ? NetworkClass::Tree
                       : bt_class == "tree-child" ? NetworkClass::TreeChild
                       : bt_class == "normal"     ? NetworkClass::Normal
                                                  : NetworkClass::Any;
    SearchReport report = best_fitting_in_class(net, cls, bt_max, bt_force);
    if (bt_format == "json") {
      json j;
      j["class"] = bt_class;
      j["min_distance"] = report.minimizers.empty() ? json() : json(report.min_distance.str());
      j["minimizers"] = json::array();
      for (const auto& keep : report.minimizer_keeps) {
        json labels = json::array();
        for (Cluster c : keep) labels.push_back(cluster_label(net, c));
        j["minimizers"].push_back(labels);
      }
      j["rows"] = json::array();
      for (const SearchRow& row : report.rows) {
        json r;
        r["keep"] = json::array();
        for (Cluster c : row.keep) r["keep"].push_back(cluster_label(net, c));
        r["distance"] = row.distance.str();
        r["tree"] = row.is_tree;
        r["eligible"] = row.eligible;
        j["rows"].push_back(r);
      }
      out << j.dump() << '\n';
      return 0;
    }
    if (bt_table) {
      out << "CPS\tD\n";
      for (const SearchRow& row : report.rows) {
        out << candidate_name(net, row.keep) << '\t' << row.distance.str();
        if (!row.eligible) out << '\t' << class_annotation(cls);
        out << '\n';
      }
    }
    if (report.minimizers.empty()) {
      out << "no candidate in class " << bt_class << '\n';
    } else {
      out << "best:";
      for (const auto& keep : report.minimizer_keeps) out << ' ' << candidate_name(net, keep);
      out << " (D = " << report.min_distance.str() << ")\n";
    }
    return 0;
  }

  if (contract->parsed()) {
    write_output(serialize_network(contract_o1(load(co_file))), co_out, out);
    return 0;
  }

  if (expand->parsed()) {
    write_output(serialize_network(expand_o1(load(eo_file))), eo_out, out);
    return 0;
  }

  if (dotcmd->parsed()) {
    write_output(export_dot(load(dot_file)), dot_out, out);
    return 0;
  }

  if (debug->parsed()) {
    if (dgen->parsed()) {
      for (int i = 0; i < dg_count; ++i) {
        RandomNetSpec spec{dg_n, dg_max_internal, dg_density, dg_seed + static_cast<uint64_t>(i)};
        if (i) out << '\n';
        out << serialize_network(gen_random_dc(spec));
      }
      return 0;
    }
    if (denum->parsed()) {
      std::vector<Network> closure = enumerate_all_cps(load(de_file));
      out << "count: " << closure.size() << '\n';
      for (const Network& net : closure) {
        out << '\n';
        out << serialize_network(net);
      }
      return 0;
    }
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace

}  // namespace dcnet
