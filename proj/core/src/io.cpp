#include "congest/io.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "congest/error.hpp"

namespace congest {

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long long to_int(const std::string& s, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return value;
}

bool skippable(const std::vector<std::string>& t) { return t.empty() || t[0] == "c"; }

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = tokens(line);
    if (skippable(t)) continue;
    if (n < 0) {
      if (t.size() != 4 || t[0] != "p" || t[1] != "el") {
        throw ParseError(line_no, "expected header 'p el <n> <m>'");
      }
      n = to_int(t[2], line_no);
      m = to_int(t[3], line_no);
      if (n < 0 || m < 0) throw ParseError(line_no, "negative size in header");
      continue;
    }
    if (t.size() != 3 || t[0] != "e") throw ParseError(line_no, "expected 'e <u> <v>'");
    const long long u = to_int(t[1], line_no);
    const long long v = to_int(t[2], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line_no, "vertex out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + to_string(e));
    }
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(line_no, "missing header 'p el <n> <m>'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_graph(in);
}

void emit_graph(const Graph& g, std::ostream& out) {
  out << "p el " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

void emit_graph(const Graph& g, const std::filesystem::path& path) {
  auto out = open_out(path);
  emit_graph(g, out);
}

Matching parse_matching(const Graph& g, std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = tokens(line);
    if (skippable(t)) continue;
    if (t.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
    const long long u = to_int(t[0], line_no);
    const long long v = to_int(t[1], line_no);
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices()) {
      throw ParseError(line_no, "vertex out of range");
    }
    edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  Matching m(g.num_vertices(), edges);
  if (const auto bad = validate_matching(g, m); !bad.empty()) {
    throw ParseError(line_no, "invalid matching: " + bad.front());
  }
  return m;
}

Matching parse_matching(const Graph& g, const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_matching(g, in);
}

void emit_matching(const Matching& m, std::ostream& out) {
  for (const Edge& e : m.edges()) out << e.u << ' ' << e.v << '\n';
}

void emit_matching(const Matching& m, const std::filesystem::path& path) {
  auto out = open_out(path);
  emit_matching(m, out);
}

Graph path_graph(int n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph::from_edges(n, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph blossom_chain(int k) {
  if (k < 1) throw PreconditionError("blossom chain needs k >= 1");
  static constexpr Edge kGadget[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}, {3, 5}};
  std::vector<Edge> edges;
  for (int j = 0; j < k; ++j) {
    const Vertex o = 6 * j;
    for (const Edge& e : kGadget) edges.push_back({e.u + o, e.v + o});
    if (j + 1 < k) edges.push_back({o + 5, o + 6});
  }
  return Graph::from_edges(6 * k, edges);
}

Matching blossom_chain_matching(int k) {
  if (k < 1) throw PreconditionError("blossom chain needs k >= 1");
  std::vector<Edge> edges;
  for (int j = 0; j < k; ++j) {
    const Vertex o = 6 * j;
    edges.push_back({o + 1, o + 2});
    edges.push_back({o + 3, o + 4});
    if (j + 1 < k) edges.push_back({o + 5, o + 6});
  }
  return Matching(6 * k, edges);
}

std::string knowledge_json(const AbtKnowledge& k) {
  auto id = [](Vertex v) { return v == kNoVertex ? nlohmann::ordered_json(nullptr)
                                                 : nlohmann::ordered_json(v); };
  auto level = [](const EdgeLevel& l) {
    return l.is_infinite() ? nlohmann::ordered_json("inf")
                           : nlohmann::ordered_json::array({l.sum, l.max});
  };
  nlohmann::ordered_json root;
  root["root"] = k.tree.root;
  root["height"] = k.tree.height;
  auto& vertices = root["vertices"] = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < k.tree.num_vertices(); ++v) {
    if (!k.tree.contains(v)) continue;
    nlohmann::ordered_json j;
    j["vertex"] = v;
    j["parent"] = id(k.tree.parent[v]);
    j["gamma"] = to_string(k.tree.gamma[v]);
    j["depth"] = k.tree.depth[v];
    const MoeEntry& out = k.out[v];
    if (out.is_virtual) {
      j["out"] = {{"virtual", true}, {"level", level(out.level)}};
    } else {
      j["out"] = {{"virtual", false},  {"y", out.y},
                  {"z", out.z},        {"level", level(out.level)},
                  {"rho", to_string(out.rho)}, {"lca_depth", out.lca_depth}};
    }
    auto& routing = j["routing"] = nlohmann::ordered_json::array();
    for (const auto& [depth, e] : k.routing[v]) {
      routing.push_back({{"depth", depth}, {"w", e.w}, {"y", e.y}, {"next", id(e.next)}});
    }
    vertices.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

}  // namespace congest
