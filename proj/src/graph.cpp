#include "zz/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace zz {

using nlohmann::json;

Graph::Graph(std::vector<std::string> verts, std::vector<std::pair<int, int>> edges)
    : labels_(std::move(verts)) {
  std::set<std::pair<int, int>> es;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= nverts() || b >= nverts())
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("Graph: loops are not allowed");
    if (a > b) std::swap(a, b);
    if (!es.insert({a, b}).second) throw std::invalid_argument("Graph: multiple edge");
  }
  edges_.assign(es.begin(), es.end());
  adj_.assign(nverts(), {});
  for (auto& [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& v : adj_) std::sort(v.begin(), v.end());
}

bool Graph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

bool Graph::connected() const {
  if (nverts() == 0) return false;
  std::vector<char> seen(nverts(), 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        bfs.push(w);
      }
  }
  return cnt == nverts();
}

bool Graph::bipartite(std::vector<int>* coloring) const {
  std::vector<int> color(nverts(), -1);
  for (int s = 0; s < nverts(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : adj_[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          bfs.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  if (coloring) *coloring = color;
  return true;
}

std::string Graph::to_json() const {
  json j;
  j["vertices"] = labels_;
  auto arr = json::array();
  for (auto& [a, b] : edges_) arr.push_back({labels_[a], labels_[b]});
  j["edges"] = arr;
  return j.dump();
}

Graph Graph::from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (int i = 0; i < (int)verts.size(); ++i) {
    if (!index.emplace(verts[i], i).second)
      throw std::invalid_argument("Graph: duplicate vertex label " + verts[i]);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto& e : j.at("edges")) {
    auto a = index.find(e.at(0).get<std::string>());
    auto b = index.find(e.at(1).get<std::string>());
    if (a == index.end() || b == index.end())
      throw std::invalid_argument("Graph: edge references unknown vertex");
    edges.push_back({a->second, b->second});
  }
  return Graph(std::move(verts), std::move(edges));
}

namespace {
Graph chain(int n, const std::string& prefix = "") {
  if (n < 1) throw std::invalid_argument("chain: need n >= 1");
  std::vector<std::string> v;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(v, e);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  std::vector<std::string> v;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) v.push_back(std::to_string(i + 1));
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(v, e);
}

// branch vertex "c" with legs of the given lengths (in edges)
Graph star_legs(const std::vector<int>& legs) {
  std::vector<std::string> v{"c"};
  std::vector<std::pair<int, int>> e;
  for (size_t l = 0; l < legs.size(); ++l) {
    int prev = 0;
    for (int k = 1; k <= legs[l]; ++k) {
      v.push_back("l" + std::to_string(l + 1) + "_" + std::to_string(k));
      e.push_back({prev, (int)v.size() - 1});
      prev = (int)v.size() - 1;
    }
  }
  return Graph(v, e);
}
} // namespace

Graph Graph::named(const std::string& name) {
  if (name.rfind("chain:", 0) == 0) return chain(std::stoi(name.substr(6)));
  if (name.rfind("cycle:", 0) == 0) return cycle(std::stoi(name.substr(6)));
  if (name.size() >= 2 && name[0] == 'A' && isdigit(name[1])) return chain(std::stoi(name.substr(1)));
  if (name.size() >= 2 && name[0] == 'D' && isdigit(name[1])) {
    int n = std::stoi(name.substr(1));
    if (n < 4) throw std::invalid_argument("named: D needs n >= 4");
    return star_legs({1, 1, n - 3});
  }
  if (name.size() >= 2 && name[0] == 'E' && isdigit(name[1])) {
    int n = std::stoi(name.substr(1));
    if (n < 6 || n > 8) throw std::invalid_argument("named: E needs 6 <= n <= 8");
    return star_legs({1, 2, n - 4});
  }
  if (name == "affA2") return cycle(3);
  if (name == "affD4") return star_legs({1, 1, 1, 1});
  if (name == "affE6") return star_legs({2, 2, 2});
  if (name == "affE7") return star_legs({3, 3, 1});
  if (name == "affE8") return star_legs({5, 2, 1});
  throw std::invalid_argument("named: unknown graph name '" + name + "'");
}

namespace {
// leg length from a degree-1 or degree-2 walk away from the branch vertex
int leg_length(const Graph& g, int branch, int first) {
  int len = 1, prev = branch, cur = first;
  while (g.degree(cur) == 2) {
    int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    prev = cur;
    cur = nxt;
    ++len;
    if (len > g.nverts()) return -1;
  }
  return g.degree(cur) == 1 ? len : -1; // -1 if the leg runs into another branch
}
} // namespace

DynkinClass classify(const Graph& g) {
  if (g.nverts() == 0 || !g.connected())
    throw std::invalid_argument("classify: graph must be nonempty and connected");
  const int n = g.nverts(), e = g.nedges();
  auto mk = [](DynkinKind k, int rank, std::string name) {
    return DynkinClass{k, rank, std::move(name)};
  };
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));

  if (e == n) { // exactly one cycle; affine A iff the whole graph is the cycle
    if (maxdeg == 2) return mk(DynkinKind::AffineA, n - 1, "affA" + std::to_string(n - 1));
    return mk(DynkinKind::Other, 0, "other");
  }
  if (e != n - 1) return mk(DynkinKind::Other, 0, "other"); // not a tree
  // trees from here on
  if (maxdeg <= 2) return mk(DynkinKind::FiniteA, n, "A" + std::to_string(n));
  std::vector<int> branches;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) branches.push_back(v);

  if (branches.size() == 1) {
    int c = branches[0];
    std::vector<int> legs;
    for (int w : g.neighbors(c)) {
      int l = leg_length(g, c, w);
      if (l < 0) return mk(DynkinKind::Other, 0, "other");
      legs.push_back(l);
    }
    std::sort(legs.begin(), legs.end());
    if (g.degree(c) == 4) {
      if (legs == std::vector<int>{1, 1, 1, 1}) return mk(DynkinKind::AffineD, 4, "affD4");
      return mk(DynkinKind::Other, 0, "other");
    }
    if (g.degree(c) != 3) return mk(DynkinKind::Other, 0, "other");
    if (legs[0] == 1 && legs[1] == 1) return mk(DynkinKind::FiniteD, n, "D" + std::to_string(n));
    if (legs == std::vector<int>{1, 2, 2}) return mk(DynkinKind::FiniteE, 6, "E6");
    if (legs == std::vector<int>{1, 2, 3}) return mk(DynkinKind::FiniteE, 7, "E7");
    if (legs == std::vector<int>{1, 2, 4}) return mk(DynkinKind::FiniteE, 8, "E8");
    if (legs == std::vector<int>{2, 2, 2}) return mk(DynkinKind::AffineE, 6, "affE6");
    if (legs == std::vector<int>{1, 3, 3}) return mk(DynkinKind::AffineE, 7, "affE7");
    if (legs == std::vector<int>{1, 2, 5}) return mk(DynkinKind::AffineE, 8, "affE8");
    return mk(DynkinKind::Other, 0, "other");
  }
  if (branches.size() == 2) {
    // affine D_n: two degree-3 vertices, each with two length-1 legs, joined by a path
    int b1 = branches[0], b2 = branches[1];
    if (g.degree(b1) != 3 || g.degree(b2) != 3) return mk(DynkinKind::Other, 0, "other");
    for (int b : branches) {
      int short_legs = 0;
      for (int w : g.neighbors(b))
        if (g.degree(w) == 1) ++short_legs;
      if (short_legs != 2) return mk(DynkinKind::Other, 0, "other");
    }
    return mk(DynkinKind::AffineD, n - 1, "affD" + std::to_string(n - 1));
  }
  return mk(DynkinKind::Other, 0, "other");
}

bool Orientation::is_source(int v) const {
  for (auto& [s, t] : arrows)
    if (t == v) return false;
  return true;
}

bool Orientation::is_sink(int v) const {
  for (auto& [s, t] : arrows)
    if (s == v) return false;
  return true;
}

bool Orientation::sink_source() const {
  for (int v = 0; v < base.nverts(); ++v)
    if (!is_source(v) && !is_sink(v)) return false;
  return true;
}

Orientation Orientation::reversed() const {
  Orientation o{base, arrows};
  for (auto& [s, t] : o.arrows) std::swap(s, t);
  return o;
}

std::vector<Orientation> sink_source_orientations(const Graph& g) {
  std::vector<int> color;
  if (!g.bipartite(&color)) return {};
  // color-0 vertices sources, then the reverse
  Orientation o0{g, {}};
  for (auto& [a, b] : g.edges())
    o0.arrows.push_back(color[a] == 0 ? std::make_pair(a, b) : std::make_pair(b, a));
  if (g.nedges() == 0) return {o0}; // single vertex: one empty orientation
  return {o0, o0.reversed()};
}

std::vector<Orientation> all_orientations(const Graph& g) {
  std::vector<Orientation> out;
  const int m = g.nedges();
  if (m > 20) throw std::invalid_argument("all_orientations: too many edges");
  for (long mask = 0; mask < (1L << m); ++mask) {
    Orientation o{g, {}};
    for (int i = 0; i < m; ++i) {
      auto [a, b] = g.edges()[i];
      o.arrows.push_back((mask >> i) & 1 ? std::make_pair(b, a) : std::make_pair(a, b));
    }
    out.push_back(std::move(o));
  }
  return out;
}

} // namespace zz
