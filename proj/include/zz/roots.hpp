#pragma once

#include "zz/graph.hpp"

#include <vector>

namespace zz {

// ADE root system: roots as integer vectors in the simple-root basis, with the
// normalized pairing (alpha,alpha)=2 given by the graph Cartan matrix.
class RootSystem {
public:
  using Root = std::vector<int>;

  const Graph& graph() const { return g_; }
  int rank() const { return g_.nverts(); }
  const std::vector<Root>& roots() const { return roots_; }
  int nroots() const { return (int)roots_.size(); }

  long pairing(const Root& a, const Root& b) const; // a^T C b
  Root reflect(const Root& mu, int alpha) const;    // s_alpha(mu)
  Root simple(int alpha) const;
  int root_index(const Root& r) const; // -1 if not a root
  Root negate(const Root& r) const;

  friend RootSystem generate_roots(const Graph& g);

private:
  Graph g_;
  std::vector<std::vector<int>> cartan_; // 2 / -1 / 0
  std::vector<Root> roots_;              // sorted
};

// Closure of the simple roots under all simple reflections.
// Requires classify(g).finite(); throws otherwise.
RootSystem generate_roots(const Graph& g);

// Lie-theoretic Cartan matrix of the graph: 2 on the diagonal, -1 on edges.
std::vector<std::vector<int>> graph_cartan_matrix(const Graph& g);

} // namespace zz
