#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zz {

// Simple undirected graph: no loops, no multiple edges. Vertices carry labels;
// all internal APIs use vertex indices.
class Graph {
public:
  Graph() = default;
  Graph(std::vector<std::string> verts, std::vector<std::pair<int, int>> edges);

  int nverts() const { return (int)labels_.size(); }
  int nedges() const { return (int)edges_.size(); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; } // normalized a<b, sorted
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return (int)adj_[v].size(); }
  bool adjacent(int a, int b) const;
  bool connected() const;
  // 2-coloring if bipartite (colors 0/1, color[0-th vertex of each component]=0)
  bool bipartite(std::vector<int>* coloring = nullptr) const;

  std::string to_json() const;
  static Graph from_json(const std::string& text);
  // "A1".."A8", "D4".."D8", "E6".."E8", "affA2", "affD4", "affE6".."affE8",
  // "chain:<n>", "cycle:<n>"
  static Graph named(const std::string& name);

private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

enum class DynkinKind { FiniteA, FiniteD, FiniteE, AffineA, AffineD, AffineE, Other };

struct DynkinClass {
  DynkinKind kind = DynkinKind::Other;
  int rank = 0;     // subscript of the named type (affine: the tilde subscript)
  std::string name; // "A3", "D4", "affE6", "other"
  bool finite() const {
    return kind == DynkinKind::FiniteA || kind == DynkinKind::FiniteD || kind == DynkinKind::FiniteE;
  }
  bool affine() const {
    return kind == DynkinKind::AffineA || kind == DynkinKind::AffineD || kind == DynkinKind::AffineE;
  }
};

// Structural ADE / affine-ADE recognition. Throws on disconnected input.
DynkinClass classify(const Graph& g);

// Orientation of every edge; arrows stored as (src, tgt) per edge.
struct Orientation {
  Graph base;
  std::vector<std::pair<int, int>> arrows; // parallel to base.edges()
  bool is_source(int v) const;
  bool is_sink(int v) const;
  bool sink_source() const; // every vertex a sink or a source
  Orientation reversed() const;
};

// The (exactly two, for connected bipartite) orientations making every vertex
// a sink or source; empty list for non-bipartite input.
std::vector<Orientation> sink_source_orientations(const Graph& g);
std::vector<Orientation> all_orientations(const Graph& g);

} // namespace zz
