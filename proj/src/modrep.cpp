#include "zz/modrep.hpp"

#include <random>
#include <stdexcept>

namespace zz {

Bimodule right_projective_bimodule(const AlgebraPtr& a_alg, int a) {
  return projective_bimodule(trivial_algebra(), 0, a_alg, a);
}

Module tensor_over_algebra(const Bimodule& x, const Module& m) {
  auto t = tensor_bimodules(x, as_bimodule(x.B, m));
  return as_left_module(x.A, t.prod);
}

Module regular_module(const AlgebraPtr& a) {
  Module m(a);
  std::map<Comp, std::vector<int>> comps;
  auto comp_of = [&](int x) { return Comp{a->b(x).src, a->b(x).deg}; };
  for (int x = 0; x < a->dim(); ++x) comps[comp_of(x)].push_back(x);
  for (auto& [c, list] : comps) m.set_dim(c.first, c.second, (int)list.size());
  auto pos_of = [&](int x) -> std::pair<Comp, int> {
    Comp c = comp_of(x);
    auto& list = comps.at(c);
    for (int i = 0; i < (int)list.size(); ++i)
      if (list[i] == x) return {c, i};
    throw std::logic_error("regular_module: missing element");
  };
  for (int p = a->nverts(); p < a->dim(); ++p) {
    for (auto& [c, list] : comps) {
      if (c.first != a->b(p).tgt) continue;
      int rows = m.dim(a->b(p).src, c.second + a->b(p).deg);
      if (!rows) continue;
      Mat mat(rows, (int)list.size());
      bool nz = false;
      for (int col = 0; col < (int)list.size(); ++col)
        for (auto& [k, coef] : a->mul_basis(p, list[col])) {
          auto [tc, row] = pos_of(k);
          mat.at(row, col) += coef;
          nz = true;
        }
      if (nz) m.set_act(p, c.second, std::move(mat));
    }
  }
  return m;
}

Module top_of(const Module& m) {
  const auto& A = *m.algebra();
  std::map<Comp, Mat> rad;
  auto [lo, hi] = m.degree_range();
  for (int x = A.nverts(); x < A.dim(); ++x)
    for (int n = lo; n <= hi; ++n) {
      Mat img = m.act(x, n);
      if (img.rows() == 0 || img.cols() == 0 || img.is_zero()) continue;
      Comp tc{A.b(x).src, n + A.b(x).deg};
      auto it = rad.find(tc);
      rad[tc] = it == rad.end() ? img : it->second.hstack(img);
    }
  return quotient_by(m, rad).quot;
}

std::vector<Module> typeA_indecomposables(int n) {
  Graph g = Graph::named("chain:" + std::to_string(n));
  return typeA_indecomposables(build_zigzag(g), g);
}

std::vector<Module> typeA_indecomposables(const AlgebraPtr& a, const Graph& g) {
  if (classify(g).kind != DynkinKind::FiniteA)
    throw std::invalid_argument("typeA_indecomposables: not a chain");
  const int n = g.nverts();
  std::vector<Module> out;
  if (n == 1) {
    out.push_back(projective(a, 0));
    out.push_back(simple(a, 0));
    return out;
  }
  auto orientations = sink_source_orientations(g);
  for (auto& o : orientations) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (i == j) {
          out.push_back(o.is_source(i) ? projective(a, i) : simple(a, i));
          continue;
        }
        // interval module on [i..j]: sinks in degree 0, sources in degree 1,
        // orientation arrows inside the interval act by 1
        Module m(a);
        auto degof = [&](int v) { return o.is_sink(v) ? 0 : 1; };
        for (int v = i; v <= j; ++v) m.set_dim(v, degof(v), 1);
        for (auto& [s, t] : o.arrows) {
          if (s < i || s > j || t < i || t > j) continue;
          Mat one(1, 1);
          one.at(0, 0) = 1;
          m.set_act(zz_arrow(*a, s, t), degof(t), std::move(one));
        }
        m.check();
        out.push_back(std::move(m));
      }
  }
  if ((int)out.size() != n * n + n)
    throw std::logic_error("typeA_indecomposables: count is not n^2+n");
  return out;
}

std::vector<Module> random_quotient_modules(const AlgebraPtr& a, int count, int maxdim,
                                            uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nproj(1, 2), vert(0, a->nverts() - 1), shift(0, 1),
      nels(1, 3), coef(-2, 2);
  std::vector<Module> out;
  int attempts = 0;
  while ((int)out.size() < count && attempts < count * 50) {
    ++attempts;
    std::vector<Module> ps;
    int k = nproj(rng);
    for (int i = 0; i < k; ++i) ps.push_back(projective(a, vert(rng)).shifted(shift(rng)));
    Module p = direct_sum(ps).sum;
    // random elements in positive internal degrees of each projective
    std::map<Comp, Mat> seedcols;
    auto [lo, hi] = p.degree_range();
    int e = nels(rng);
    for (int i = 0; i < e; ++i) {
      // pick a random nonzero component above the minimum degree
      std::vector<Comp> cands;
      for (auto& [c, d] : p.components())
        if (c.second > lo) cands.push_back(c);
      if (cands.empty()) break;
      Comp c = cands[std::uniform_int_distribution<size_t>(0, cands.size() - 1)(rng)];
      Mat v(p.dim(c), 1);
      bool nz = false;
      for (int r = 0; r < v.rows(); ++r) {
        v.at(r, 0) = coef(rng);
        nz = nz || v.at(r, 0) != 0;
      }
      if (!nz) continue;
      auto it = seedcols.find(c);
      seedcols[c] = it == seedcols.end() ? v : it->second.hstack(v);
    }
    auto span = submodule_closure(p, seedcols);
    Module q = quotient_by(p, span).quot;
    if (q.total_dim() == 0 || q.total_dim() > maxdim) continue;
    q.check();
    out.push_back(std::move(q));
  }
  if ((int)out.size() < count)
    throw std::logic_error("random_quotient_modules: could not build enough modules");
  return out;
}

bool matches_up_to_shift(const Module& m, const std::vector<Module>& list) {
  auto [mlo, mhi] = m.degree_range();
  for (auto& cand : list) {
    if (cand.total_dim() != m.total_dim()) continue;
    auto [clo, chi_] = cand.degree_range();
    int k = mlo - clo;
    if (chi_ + k != mhi) continue;
    if (is_isomorphic(m, cand.shifted(k)).isomorphic) return true;
  }
  return false;
}

} // namespace zz
