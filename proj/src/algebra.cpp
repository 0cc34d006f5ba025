#include "zz/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace zz {

Elem elem_add(const Elem& a, const Elem& b) {
  Elem r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      Rat c = a[i].second + b[j].second;
      if (c != 0) r.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

Elem elem_scale(const Rat& s, Elem a) {
  if (s == 0) return {};
  for (auto& [k, c] : a) c *= s;
  return a;
}

bool elem_eq(const Elem& a, const Elem& b) { return a == b; }

Algebra::Algebra(std::string name, std::vector<std::string> vertex_labels)
    : name_(std::move(name)), vlabels_(std::move(vertex_labels)) {
  for (int v = 0; v < nverts(); ++v)
    basis_.push_back({"e_" + vlabels_[v], v, v, 0});
}

int Algebra::vertex_index(const std::string& label) const {
  for (int v = 0; v < nverts(); ++v)
    if (vlabels_[v] == label) return v;
  throw std::invalid_argument("Algebra: unknown vertex '" + label + "'");
}

int Algebra::add_basis(const std::string& label, int src, int tgt, int deg) {
  if (finalized_) throw std::logic_error("Algebra: add_basis after finalize");
  if (deg <= 0) throw std::invalid_argument("Algebra: positive-degree basis only");
  basis_.push_back({label, src, tgt, deg});
  return dim() - 1;
}

void Algebra::set_product(int i, int j, Elem p) {
  if (finalized_) throw std::logic_error("Algebra: set_product after finalize");
  if (basis_[i].deg == 0 || basis_[j].deg == 0)
    throw std::logic_error("Algebra: idempotent products are implicit");
  if (!p.empty()) prod_[key(i, j)] = std::move(p);
}

void Algebra::set_chi(std::vector<int> m) { chi_ = std::move(m); }
void Algebra::set_trace(std::vector<Rat> t) { trace_ = std::move(t); }

Elem Algebra::mul_basis(int i, int j) const {
  const BasisElem &x = basis_[i], &y = basis_[j];
  if (x.tgt != y.src) return {};
  if (x.deg == 0) return {{j, Rat(1)}};
  if (y.deg == 0) return {{i, Rat(1)}};
  auto it = prod_.find((int64_t)i * dim() + j);
  return it == prod_.end() ? Elem{} : it->second;
}

Elem Algebra::mul(const Elem& a, const Elem& b) const {
  Elem acc;
  for (auto& [i, ci] : a)
    for (auto& [j, cj] : b) {
      Elem p = mul_basis(i, j);
      if (!p.empty()) acc = elem_add(acc, elem_scale(ci * cj, std::move(p)));
    }
  return acc;
}

Elem Algebra::unit() const {
  Elem u;
  for (int v = 0; v < nverts(); ++v) u.emplace_back(v, Rat(1));
  return u;
}

void Algebra::finalize() {
  if (finalized_) return;
  finalized_ = true;
  // generators: positive-degree elements not in the span of products of
  // lower-degree positive elements, degree by degree
  std::map<int, std::vector<int>> by_deg;
  for (int i = nverts(); i < dim(); ++i) by_deg[basis_[i].deg].push_back(i);
  for (auto& [d, elems] : by_deg) {
    SparseEchelon span;
    for (int j = nverts(); j < dim(); ++j) {
      if (basis_[j].deg >= d) continue;
      for (int k = nverts(); k < dim(); ++k) {
        if (basis_[j].deg + basis_[k].deg != d) continue;
        Elem p = mul_basis(j, k);
        if (!p.empty()) span.insert(p);
      }
    }
    for (int i : elems)
      if (!span.contains({{i, Rat(1)}})) gens_.push_back(i);
  }
  std::sort(gens_.begin(), gens_.end());
}

std::map<int, int> Algebra::graded_dims() const {
  std::map<int, int> d;
  for (auto& b : basis_) d[b.deg]++;
  return d;
}

int Algebra::top_degree() const {
  int t = 0;
  for (auto& b : basis_) t = std::max(t, b.deg);
  return t;
}

Rat Algebra::trace(const Elem& x) const {
  if (!trace_) throw std::logic_error("Algebra: no trace set");
  Rat s(0);
  for (auto& [i, c] : x) s += c * (*trace_)[i];
  return s;
}

Mat Algebra::gram_matrix() const {
  Mat g(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) g.at(i, j) = trace(mul_basis(i, j));
  return g;
}

Mat Algebra::nakayama() const {
  Mat g = gram_matrix();
  auto gi = inverse(g);
  if (!gi) throw std::logic_error("Algebra: degenerate trace form, no Nakayama automorphism");
  Mat n = *gi * g.transpose();
  // must be an algebra automorphism
  auto col = [&](int i) {
    Elem e;
    for (int r = 0; r < dim(); ++r)
      if (n.at(r, i) != 0) e.emplace_back(r, n.at(r, i));
    return e;
  };
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      Elem lhs; // nu(b_i b_j)
      for (auto& [k, c] : mul_basis(i, j)) lhs = elem_add(lhs, elem_scale(c, col(k)));
      Elem rhs = mul(col(i), col(j));
      if (!elem_eq(lhs, rhs)) throw std::logic_error("Algebra: Nakayama map is not multiplicative");
    }
  return n;
}

void Algebra::check() const {
  // endpoint discipline and degree additivity
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      Elem p = mul_basis(i, j);
      if (basis_[i].tgt != basis_[j].src && !p.empty())
        throw std::logic_error(name_ + ": nonzero product across mismatched endpoints");
      for (auto& [k, c] : p) {
        if (basis_[k].deg != basis_[i].deg + basis_[j].deg)
          throw std::logic_error(name_ + ": product not degree-additive");
        if (basis_[k].src != basis_[i].src || basis_[k].tgt != basis_[j].tgt)
          throw std::logic_error(name_ + ": product endpoints wrong");
      }
    }
  // associativity on all basis triples
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      Elem ij = mul_basis(i, j);
      for (int k = 0; k < dim(); ++k) {
        Elem l = mul(ij, {{k, Rat(1)}});
        Elem r = mul({{i, Rat(1)}}, mul_basis(j, k));
        if (!elem_eq(l, r))
          throw std::logic_error(name_ + ": associativity fails on basis triple " +
                                 basis_[i].label + "," + basis_[j].label + "," + basis_[k].label);
      }
    }
  if (chi_) {
    // chi is an antiinvolution: chi(chi(x)) = x and chi(xy) = chi(y)chi(x)
    for (int i = 0; i < dim(); ++i)
      if ((*chi_)[(*chi_)[i]] != i) throw std::logic_error(name_ + ": chi not an involution");
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        Elem l;
        for (auto& [k, c] : mul_basis(i, j)) l = elem_add(l, Elem{{(*chi_)[k], c}});
        Elem r = mul_basis((*chi_)[j], (*chi_)[i]);
        if (!elem_eq(l, r)) throw std::logic_error(name_ + ": chi not an antihomomorphism");
      }
  }
}

AlgebraPtr Algebra::opposite() const {
  auto op = std::make_shared<Algebra>(name_ + "^op", vlabels_);
  for (int i = nverts(); i < dim(); ++i)
    op->add_basis(basis_[i].label, basis_[i].tgt, basis_[i].src, basis_[i].deg);
  for (int i = nverts(); i < dim(); ++i)
    for (int j = nverts(); j < dim(); ++j) {
      Elem p = mul_basis(j, i);
      if (!p.empty()) op->set_product(i, j, p);
    }
  if (chi_) op->set_chi(*chi_);
  if (trace_) op->set_trace(*trace_);
  op->finalize();
  return op;
}

AlgebraPtr trivial_algebra() {
  static AlgebraPtr t = [] {
    auto a = std::make_shared<Algebra>("k", std::vector<std::string>{"*"});
    a->finalize();
    return a;
  }();
  return t;
}

Envelope make_envelope(const AlgebraPtr& A, const AlgebraPtr& B) {
  Envelope env;
  env.left = A;
  env.right = B;
  env.nA = A->dim();
  env.nB = B->dim();
  const int nva = A->nverts(), nvb = B->nverts();
  std::vector<std::string> verts;
  for (int a = 0; a < nva; ++a)
    for (int b = 0; b < nvb; ++b) verts.push_back(A->vlabel(a) + "|" + B->vlabel(b));
  auto E = std::make_shared<Algebra>(A->name() + "(x)" + B->name() + "^op", verts);
  env.idx.assign(env.nA, std::vector<int>(env.nB, -1));
  env.unpair.assign(nva * nvb, {-1, -1});
  for (int a = 0; a < nva; ++a)
    for (int b = 0; b < nvb; ++b) {
      env.idx[a][b] = a * nvb + b;
      env.unpair[a * nvb + b] = {a, b};
    }
  // positive-degree pairs: (x,y) with deg x + deg y > 0
  for (int x = 0; x < env.nA; ++x)
    for (int y = 0; y < env.nB; ++y) {
      const auto &bx = A->b(x), &by = B->b(y);
      if (bx.deg + by.deg == 0) continue;
      // x (x) y maps M_{(tgt x, src y)} -> M_{(src x, tgt y)}
      int src = bx.src * nvb + by.tgt;
      int tgt = bx.tgt * nvb + by.src;
      int id = E->add_basis(bx.label + "(x)" + by.label, src, tgt, bx.deg + by.deg);
      env.idx[x][y] = id;
      env.unpair.push_back({x, y});
    }
  auto pidx = [&](int x, int y) { return env.idx[x][y]; };
  for (int x = 0; x < env.nA; ++x)
    for (int y = 0; y < env.nB; ++y) {
      if (A->b(x).deg + B->b(y).deg == 0) continue;
      for (int x2 = 0; x2 < env.nA; ++x2)
        for (int y2 = 0; y2 < env.nB; ++y2) {
          if (A->b(x2).deg + B->b(y2).deg == 0) continue;
          // (x (x) y)(x2 (x) y2) = (x x2) (x) (y2 y)
          Elem px = A->mul_basis(x, x2);
          if (px.empty()) continue;
          Elem py = B->mul_basis(y2, y);
          if (py.empty()) continue;
          Elem out;
          for (auto& [k, ck] : px)
            for (auto& [l, cl] : py) out = elem_add(out, Elem{{pidx(k, l), ck * cl}});
          E->set_product(pidx(x, y), pidx(x2, y2), std::move(out));
        }
    }
  E->finalize();
  env.alg = E;
  return env;
}

} // namespace zz
