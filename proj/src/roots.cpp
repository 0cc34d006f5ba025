#include "zz/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zz {

std::vector<std::vector<int>> graph_cartan_matrix(const Graph& g) {
  int n = g.nverts();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (auto& [a, b] : g.edges()) c[a][b] = c[b][a] = -1;
  return c;
}

long RootSystem::pairing(const Root& a, const Root& b) const {
  long s = 0;
  int n = rank();
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (b[j] != 0) s += (long)a[i] * cartan_[i][j] * b[j];
  }
  return s;
}

RootSystem::Root RootSystem::reflect(const Root& mu, int alpha) const {
  Root r = mu;
  long p = 0;
  for (int j = 0; j < rank(); ++j) p += (long)cartan_[alpha][j] * mu[j];
  r[alpha] -= (int)p;
  return r;
}

RootSystem::Root RootSystem::simple(int alpha) const {
  Root r(rank(), 0);
  r[alpha] = 1;
  return r;
}

int RootSystem::root_index(const Root& r) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
  if (it != roots_.end() && *it == r) return (int)(it - roots_.begin());
  return -1;
}

RootSystem::Root RootSystem::negate(const Root& r) const {
  Root n = r;
  for (auto& x : n) x = -x;
  return n;
}

RootSystem generate_roots(const Graph& g) {
  if (!classify(g).finite())
    throw std::invalid_argument("generate_roots: graph is not a finite Dynkin diagram");
  RootSystem rs;
  rs.g_ = g;
  rs.cartan_ = graph_cartan_matrix(g);
  std::set<RootSystem::Root> seen;
  std::vector<RootSystem::Root> queue;
  for (int a = 0; a < g.nverts(); ++a) {
    auto r = rs.simple(a);
    if (seen.insert(r).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    auto mu = queue.back();
    queue.pop_back();
    for (int a = 0; a < g.nverts(); ++a) {
      auto nu = rs.reflect(mu, a);
      if (seen.insert(nu).second) queue.push_back(nu);
    }
  }
  rs.roots_.assign(seen.begin(), seen.end());
  for (auto& r : rs.roots_)
    if (rs.pairing(r, r) != 2)
      throw std::logic_error("generate_roots: root with (mu,mu) != 2");
  return rs;
}

} // namespace zz
