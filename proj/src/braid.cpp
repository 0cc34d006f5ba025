#include "zz/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zz {

int Complex::total_dim() const {
  int t = 0;
  for (auto& p : pos) t += p.total_dim();
  return t;
}

void Complex::check() const {
  const Algebra& E = *env->alg;
  for (auto& p : pos) p.check();
  for (int i = 0; i + 1 < npos(); ++i) {
    // differential is a degree-0 module morphism
    const Module &M = pos[i], &N = pos[i + 1];
    for (int x : E.generators()) {
      auto [lo_, hi_] = M.degree_range();
      for (int n = lo_ - 2; n <= hi_ + 2; ++n) {
        Comp src{E.b(x).tgt, n}, dst{E.b(x).src, n + E.b(x).deg};
        Mat lhs = diff[i].block(dst, N.dim(dst), M.dim(dst)) * M.act(x, n);
        Mat rhs = N.act(x, n) * diff[i].block(src, N.dim(src), M.dim(src));
        if (lhs != rhs) throw std::logic_error("Complex::check: differential not a morphism");
      }
    }
  }
  for (int i = 0; i + 2 < npos(); ++i)
    if (!bm_compose(diff[i + 1], diff[i]).is_zero())
      throw std::logic_error("Complex::check: d^2 != 0");
}

Complex Complex::shifted(int internal) const {
  Complex out = *this;
  for (auto& p : out.pos) p = p.shifted(internal);
  for (auto& d : out.diff) {
    BlockMap nd;
    nd.deg = d.deg;
    for (auto& [c, m] : d.blocks) nd.blocks[{c.first, c.second + internal}] = m;
    d = std::move(nd);
  }
  return out;
}

std::string Complex::shape() const {
  std::ostringstream os;
  for (int i = 0; i < npos(); ++i) {
    if (i) os << " -> ";
    os << "[" << (lo + i) << ": " << pos[i].describe() << "]";
  }
  return os.str();
}

Complex identity_complex(const AlgebraPtr& a) {
  Complex c;
  c.A = c.B = a;
  Bimodule reg = algebra_bimodule(a);
  c.env = reg.env;
  c.lo = 0;
  c.pos.push_back(reg.m);
  return c;
}

namespace {
// ordered bases of P_v (paths into v) and _vP (paths out of v)
std::vector<int> proj_elems(const Algebra& a, int v) {
  std::vector<int> out;
  for (int i = 0; i < a.dim(); ++i)
    if (a.b(i).tgt == v) out.push_back(i);
  return out;
}
std::vector<int> rproj_elems(const Algebra& a, int v) {
  std::vector<int> out;
  for (int i = 0; i < a.dim(); ++i)
    if (a.b(i).src == v) out.push_back(i);
  return out;
}

// component/index bookkeeping identical to projective_bimodule's enumeration
struct PairIndex {
  std::map<Comp, std::vector<std::pair<int, int>>> pairs;
  std::map<std::pair<int, int>, std::pair<Comp, int>> where;
};
PairIndex pair_index(const Algebra& a, int v, const Algebra& b, int w) {
  PairIndex pi;
  for (int x = 0; x < a.dim(); ++x) {
    if (a.b(x).tgt != v) continue;
    for (int y = 0; y < b.dim(); ++y) {
      if (b.b(y).src != w) continue;
      Comp c{a.b(x).src * b.nverts() + b.b(y).tgt, a.b(x).deg + b.b(y).deg};
      pi.where[{x, y}] = {c, (int)pi.pairs[c].size()};
      pi.pairs[c].push_back({x, y});
    }
  }
  return pi;
}

struct ElemIndex {
  std::map<Comp, std::vector<int>> elems;
  std::map<int, std::pair<Comp, int>> where;
};
ElemIndex algebra_index(const Algebra& a) {
  ElemIndex ei;
  for (int x = 0; x < a.dim(); ++x) {
    Comp c{a.b(x).src * a.nverts() + a.b(x).tgt, a.b(x).deg};
    ei.where[x] = {c, (int)ei.elems[c].size()};
    ei.elems[c].push_back(x);
  }
  return ei;
}
} // namespace

Complex twist(const AlgebraPtr& a, int v) {
  Complex c;
  c.A = c.B = a;
  Bimodule pp = projective_bimodule(a, v, a, v);
  Bimodule reg = algebra_bimodule(a);
  c.env = reg.env;
  c.lo = 0;
  // zeta: x (x) y |-> x y
  PairIndex pi = pair_index(*a, v, *a, v);
  ElemIndex ei = algebra_index(*a);
  BlockMap zeta;
  zeta.deg = 0;
  for (auto& [comp, plist] : pi.pairs) {
    Mat m(reg.m.dim(comp), (int)plist.size());
    bool nz = false;
    for (int col = 0; col < (int)plist.size(); ++col) {
      Elem prod = a->mul_basis(plist[col].first, plist[col].second);
      for (auto& [z, coef] : prod) {
        auto [zc, row] = ei.where.at(z);
        if (zc != comp) throw std::logic_error("twist: zeta lands in a wrong component");
        m.at(row, col) += coef;
        nz = true;
      }
    }
    if (nz) zeta.set(comp, std::move(m));
  }
  c.pos = {pp.m, reg.m};
  c.diff = {std::move(zeta)};
  return c;
}

Complex twist_inverse(const AlgebraPtr& a, int v) {
  Complex c;
  c.A = c.B = a;
  Mat nu = a->nakayama();
  bool symmetric = nu.is_identity();
  Bimodule pp = projective_bimodule(a, v, a, v,
                                    symmetric ? std::nullopt : std::optional<Mat>(nu));
  Bimodule reg = algebra_bimodule(a);
  c.env = reg.env;
  c.lo = -1;
  // coevaluation 1 |-> sum_i x_i (x) y_i with lambda(x_i y_j) = delta_ij
  std::vector<int> xs = proj_elems(*a, v), ys = rproj_elems(*a, v);
  const int k = (int)xs.size();
  if ((int)ys.size() != k) throw std::logic_error("twist_inverse: basis size mismatch");
  Mat gram(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram.at(i, j) = a->trace(a->mul_basis(xs[i], ys[j]));
  auto gi = inverse(gram);
  if (!gi) throw std::logic_error("twist_inverse: degenerate pairing between P and _P");
  // dual right-hand basis: y'_i = sum_j (G^-1)_{ji} y_j
  PairIndex pi = pair_index(*a, v, *a, v);
  ElemIndex ei = algebra_index(*a);
  BlockMap coev;
  coev.deg = 0;
  for (auto& [comp, elist] : ei.elems) {
    // image of the algebra basis element z: z . c = sum_i (z x_i) (x) y'_i,
    // landing in internal degree deg(z) + 2, i.e. deg(z) after the {-2} shift
    int rows = pp.m.dim(comp.first, comp.second + 2);
    if (!rows) continue;
    Mat m(rows, (int)elist.size());
    bool nz = false;
    for (int col = 0; col < (int)elist.size(); ++col) {
      int z = elist[col];
      for (int i = 0; i < k; ++i) {
        Elem zx = a->mul_basis(z, xs[i]);
        if (zx.empty()) continue;
        for (int j = 0; j < k; ++j) {
          const Rat& w = gi->at(j, i);
          if (w == 0) continue;
          for (auto& [xk, cx] : zx) {
            auto it = pi.where.find({xk, ys[j]});
            if (it == pi.where.end()) continue;
            auto [pc, row] = it->second;
            if (pc != Comp{comp.first, comp.second + 2})
              throw std::logic_error("twist_inverse: coevaluation lands wrong");
            m.at(row, col) += cx * w;
            nz = true;
          }
        }
      }
    }
    if (nz) coev.set(comp, std::move(m));
  }
  c.pos = {reg.m, pp.m.shifted(-2)};
  c.diff = {std::move(coev)};
  return c;
}

ComplexAd::Mor ComplexAd::compose(const Mor& g, const Mor& f) {
  Mor r;
  for (auto& [i, fb] : f) {
    auto it = g.find(i);
    if (it == g.end()) continue;
    BlockMap c = bm_compose(it->second, fb);
    if (!c.blocks.empty()) r[i] = std::move(c);
  }
  return r;
}

ComplexAd::Mor ComplexAd::add(const Mor& a, const Mor& b) {
  Mor r = a;
  for (auto& [i, bb] : b) {
    auto it = r.find(i);
    if (it == r.end())
      r[i] = bb;
    else {
      it->second = bm_add(it->second, bb);
      if (it->second.blocks.empty()) r.erase(it);
    }
  }
  return r;
}

ComplexAd::Mor ComplexAd::scale(const Rat& s, const Mor& a) {
  if (s == 0) return {};
  Mor r = a;
  for (auto& [i, b] : r) b = bm_scale(s, b);
  return r;
}

ComplexAd::Mor ComplexAd::identity(const Obj& x) {
  Mor r;
  for (int i = 0; i < x.npos(); ++i) {
    BlockMap b = identity_map(x.pos[i]);
    if (!b.blocks.empty()) r[x.lo + i] = std::move(b);
  }
  return r;
}

std::map<ComplexAd::Key, int> ComplexAd::comp_dims(const Obj& x) {
  std::map<Key, int> out;
  for (int i = 0; i < x.npos(); ++i)
    for (auto& [c, d] : x.pos[i].components()) out[{x.lo + i, c.first, c.second}] = d;
  return out;
}

std::map<ComplexAd::Key, Mat> ComplexAd::blocks_of(const Obj& x, const Obj& y, const Mor& f) {
  std::map<Key, Mat> out;
  for (int i = 0; i < x.npos(); ++i) {
    int p = x.lo + i;
    const Module* ym = (p >= y.lo && p <= y.hi()) ? &y.at(p) : nullptr;
    auto it = f.find(p);
    for (auto& [c, d] : x.pos[i].components()) {
      int rows = ym ? ym->dim(c) : 0;
      Mat blk = (it != f.end()) ? it->second.block(c, rows, d) : Mat(rows, d);
      out[{p, c.first, c.second}] = std::move(blk);
    }
  }
  return out;
}

ComplexAd::Mor ComplexAd::mor_from_blocks(const std::map<Key, Mat>& b) {
  Mor r;
  for (auto& [k, m] : b) {
    auto [p, v, n] = k;
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
    r[p].deg = 0;
    r[p].set({v, n}, m);
  }
  return r;
}

bool ComplexAd::invertible(const Obj& x, const Obj& y, const Mor& f) {
  auto dx = comp_dims(x), dy = comp_dims(y);
  if (dx != dy) return false;
  for (int i = 0; i < x.npos(); ++i) {
    int p = x.lo + i;
    if (p < y.lo || p > y.hi()) {
      if (x.pos[i].total_dim() != 0) return false;
      continue;
    }
    BlockMap b;
    auto it = f.find(p);
    if (it != f.end()) b = it->second;
    if (!bm_invertible(x.pos[i], y.at(p), b)) return false;
  }
  return true;
}

ComplexAd::Obj ComplexAd::restricted(const Obj& x, const std::map<Key, Mat>& cols) {
  Complex out;
  out.A = x.A;
  out.B = x.B;
  out.env = x.env;
  out.lo = x.lo;
  std::vector<std::map<Comp, Mat>> bases(x.npos());
  for (auto& [k, m] : cols) {
    auto [p, v, n] = k;
    if (m.cols() > 0) bases[p - x.lo][{v, n}] = m;
  }
  std::vector<SubModule> subs;
  for (int i = 0; i < x.npos(); ++i) subs.push_back(restrict_to(x.pos[i], bases[i]));
  for (int i = 0; i < x.npos(); ++i) out.pos.push_back(subs[i].sub);
  for (int i = 0; i + 1 < x.npos(); ++i) {
    // induced differential: solve incl_{i+1} * d' = d * incl_i componentwise
    BlockMap nd;
    nd.deg = 0;
    for (auto& [c, dsub] : subs[i].sub.components()) {
      Mat di = x.diff[i].block(c, x.pos[i + 1].dim(c), x.pos[i].dim(c));
      Mat rhs = di * subs[i].incl.block(c, x.pos[i].dim(c), dsub);
      int sub2 = subs[i + 1].sub.dim(c);
      Mat inc2 = subs[i + 1].incl.block(c, x.pos[i + 1].dim(c), sub2);
      if (rhs.is_zero()) continue;
      auto sol = solve(inc2, rhs);
      if (!sol) throw std::logic_error("Complex restrict: differential does not restrict");
      nd.set(c, std::move(*sol));
    }
    out.diff.push_back(std::move(nd));
  }
  return out;
}

std::vector<ChainMap> chain_maps(const Complex& c, const Complex& d) {
  if (c.env->alg.get() != d.env->alg.get())
    throw std::invalid_argument("chain_maps: different envelopes");
  const Algebra& E = *c.env->alg;
  // unknown blocks: per shared position, per component with both dims > 0
  struct UB {
    int posn;
    Comp comp;
    int rows, cols, offset;
  };
  std::vector<UB> ubs;
  std::map<std::pair<int, Comp>, int> index;
  int total = 0;
  for (int i = 0; i < c.npos(); ++i) {
    int p = c.lo + i;
    if (p < d.lo || p > d.hi()) continue;
    for (auto& [comp, dim] : c.pos[i].components()) {
      int rows = d.at(p).dim(comp);
      if (!rows) continue;
      index[{p, comp}] = (int)ubs.size();
      ubs.push_back({p, comp, rows, dim, total});
      total += rows * dim;
    }
  }
  std::vector<std::vector<Rat>> rows;
  // intertwiner constraints at every position
  for (int i = 0; i < c.npos(); ++i) {
    int p = c.lo + i;
    const Module& M = c.pos[i];
    const Module* N = (p >= d.lo && p <= d.hi()) ? &d.at(p) : nullptr;
    for (int x : E.generators()) {
      const auto& bx = E.b(x);
      auto [mlo, mhi] = M.degree_range();
      for (int n = mlo; n <= mhi; ++n) {
        int cM = M.dim(bx.tgt, n);
        int rN = N ? N->dim(bx.src, n + bx.deg) : 0;
        if (!cM || !rN) continue;
        Mat actM = M.act(x, n);
        Mat actN = N->act(x, n);
        auto itT = index.find({p, Comp{bx.tgt, n}});
        auto itS = index.find({p, Comp{bx.src, n + bx.deg}});
        if (itT == index.end() && itS == index.end()) continue;
        for (int r = 0; r < rN; ++r)
          for (int col = 0; col < cM; ++col) {
            std::vector<Rat> row(total);
            bool nz = false;
            if (itT != index.end()) {
              const UB& u = ubs[itT->second];
              for (int k2 = 0; k2 < u.rows; ++k2)
                if (actN.at(r, k2) != 0) {
                  row[u.offset + k2 * u.cols + col] += actN.at(r, k2);
                  nz = true;
                }
            }
            if (itS != index.end()) {
              const UB& u = ubs[itS->second];
              for (int j = 0; j < u.cols; ++j)
                if (actM.at(j, col) != 0) {
                  row[u.offset + r * u.cols + j] -= actM.at(j, col);
                  nz = true;
                }
            }
            if (nz) rows.push_back(std::move(row));
          }
      }
    }
  }
  // commuting squares: dD phi_p = phi_{p+1} dC per component
  for (int i = 0; i < c.npos(); ++i) {
    int p = c.lo + i;
    const Module& M = c.pos[i];
    for (auto& [comp, cM] : M.components()) {
      // rows indexed by the D_{p+1} component, cols by the C_p component
      int rN = (p + 1 >= d.lo && p + 1 <= d.hi()) ? d.at(p + 1).dim(comp) : 0;
      if (!rN || !cM) continue;
      auto itS = index.find({p, comp});
      auto itT = (i + 1 < c.npos()) ? index.find({p + 1, comp}) : index.end();
      bool hasS = itS != index.end() && p >= d.lo && p + 1 <= d.hi();
      bool hasT = itT != index.end();
      if (!hasS && !hasT) continue;
      Mat dD = hasS ? d.diff[p - d.lo].block(comp, rN, d.at(p).dim(comp)) : Mat();
      Mat dC = hasT ? c.diff[i].block(comp, c.pos[i + 1].dim(comp), cM) : Mat();
      for (int r = 0; r < rN; ++r)
        for (int col = 0; col < cM; ++col) {
          std::vector<Rat> row(total);
          bool nz = false;
          if (hasS) {
            const UB& u = ubs[itS->second];
            for (int k2 = 0; k2 < u.rows; ++k2)
              if (dD.at(r, k2) != 0) {
                row[u.offset + k2 * u.cols + col] += dD.at(r, k2);
                nz = true;
              }
          }
          if (hasT) {
            const UB& u = ubs[itT->second];
            for (int j = 0; j < u.cols; ++j)
              if (dC.at(j, col) != 0) {
                row[u.offset + r * u.cols + j] -= dC.at(j, col);
                nz = true;
              }
          }
          if (nz) rows.push_back(std::move(row));
        }
    }
  }
  Mat sys((int)rows.size(), total);
  for (int i = 0; i < (int)rows.size(); ++i)
    for (int j = 0; j < total; ++j) sys.at(i, j) = rows[i][j];
  Mat ns = total == 0 ? Mat(0, 0) : nullspace(sys);
  std::vector<ChainMap> out;
  for (int k = 0; k < ns.cols(); ++k) {
    ChainMap f;
    for (auto& u : ubs) {
      Mat blk(u.rows, u.cols);
      bool nz = false;
      for (int i = 0; i < u.rows; ++i)
        for (int j = 0; j < u.cols; ++j) {
          blk.at(i, j) = ns.at(u.offset + i * u.cols + j, k);
          nz = nz || blk.at(i, j) != 0;
        }
      if (nz) {
        f[u.posn].deg = 0;
        f[u.posn].set(u.comp, std::move(blk));
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

IsoCert<ComplexAd> complexes_isomorphic(const Complex& c, const Complex& d) {
  return iso_obj<ComplexAd>(c, d);
}

Complex tensor_complexes(const Complex& c, const Complex& d) {
  if (c.B.get() != d.A.get()) throw std::invalid_argument("tensor_complexes: algebra mismatch");
  // products and the functorial data per (i, j)
  std::map<std::pair<int, int>, TensorResult> cells;
  for (int i = 0; i < c.npos(); ++i)
    for (int j = 0; j < d.npos(); ++j) {
      Bimodule X{c.A, c.B, c.env, c.pos[i]};
      Bimodule Y{d.A, d.B, d.env, d.pos[j]};
      cells[{i, j}] = tensor_bimodules(X, Y);
    }
  Complex out;
  out.A = c.A;
  out.B = d.B;
  out.env = cells.begin()->second.prod.env;
  out.lo = c.lo + d.lo;
  int n = c.npos() + d.npos() - 1;
  // per total position: ordered list of contributing cells and the direct sum
  std::vector<std::vector<std::pair<int, int>>> layout(n);
  std::vector<SumDecomp> sums(n);
  for (int t = 0; t < n; ++t) {
    std::vector<Module> parts;
    for (int i = 0; i < c.npos(); ++i) {
      int j = t - i;
      if (j < 0 || j >= d.npos()) continue;
      layout[t].push_back({i, j});
      parts.push_back(cells.at({i, j}).prod.m);
    }
    sums[t] = direct_sum(parts);
    out.pos.push_back(sums[t].sum);
  }
  auto cell_pos = [&](int t, int i, int j) {
    for (int k = 0; k < (int)layout[t].size(); ++k)
      if (layout[t][k] == std::make_pair(i, j)) return k;
    return -1;
  };
  for (int t = 0; t + 1 < n; ++t) {
    BlockMap total;
    total.deg = 0;
    for (int k = 0; k < (int)layout[t].size(); ++k) {
      auto [i, j] = layout[t][k];
      const TensorResult& src = cells.at({i, j});
      Bimodule X{c.A, c.B, c.env, c.pos[i]};
      Bimodule Y{d.A, d.B, d.env, d.pos[j]};
      // dC (x) id: (i,j) -> (i+1,j)
      if (i + 1 < c.npos()) {
        const TensorResult& tgt = cells.at({i + 1, j});
        Bimodule X2{c.A, c.B, c.env, c.pos[i + 1]};
        BlockMap ind = tensor_morphism(X, Y, src, X2, Y, tgt, c.diff[i], identity_map(d.pos[j]));
        int k2 = cell_pos(t + 1, i + 1, j);
        total = bm_add(total, bm_compose(sums[t + 1].incl[k2], bm_compose(ind, sums[t].proj[k])));
      }
      // (+/-) id (x) dD: (i,j) -> (i,j+1), sign (-1)^(i + c.lo)
      if (j + 1 < d.npos()) {
        const TensorResult& tgt = cells.at({i, j + 1});
        Bimodule Y2{d.A, d.B, d.env, d.pos[j + 1]};
        BlockMap ind = tensor_morphism(X, Y, src, X, Y2, tgt, identity_map(c.pos[i]), d.diff[j]);
        Rat sign = ((i + c.lo) % 2 == 0) ? Rat(1) : Rat(-1);
        int k2 = cell_pos(t + 1, i, j + 1);
        total = bm_add(total, bm_scale(sign, bm_compose(sums[t + 1].incl[k2],
                                                        bm_compose(ind, sums[t].proj[k]))));
      }
    }
    out.diff.push_back(std::move(total));
  }
  return out;
}

Complex complex_of_word(const AlgebraPtr& a, const BraidWord& word) {
  Complex acc = identity_complex(a);
  for (auto& [v, inv] : word)
    acc = tensor_complexes(acc, inv ? twist_inverse(a, v) : twist(a, v));
  return acc;
}

BraidWord parse_braid_word(const Algebra& a, const std::string& text) {
  BraidWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    bool inv = false;
    if (!tok.empty() && tok.back() == '\'') {
      inv = true;
      tok.pop_back();
    }
    w.push_back({a.vertex_index(tok), inv});
  }
  return w;
}

Complex minimize(Complex c) {
  const int n = c.npos();
  if (n == 0) return c;
  // decompose every position into indecomposables once
  std::vector<std::vector<Module>> sums(n);
  std::vector<std::vector<char>> alive(n);
  std::vector<ModuleDecomp> dec(n);
  for (int i = 0; i < n; ++i) {
    dec[i] = decompose(c.pos[i]);
    sums[i].assign(dec[i].parts.begin(), dec[i].parts.end());
    alive[i].assign(dec[i].parts.size(), 1);
  }
  // entries of the differential between summands
  std::vector<std::vector<std::vector<BlockMap>>> entry(n > 0 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) {
    entry[i].assign(sums[i + 1].size(), std::vector<BlockMap>(sums[i].size()));
    for (size_t l = 0; l < sums[i + 1].size(); ++l)
      for (size_t k = 0; k < sums[i].size(); ++k)
        entry[i][l][k] = bm_compose(dec[i + 1].proj[l], bm_compose(c.diff[i], dec[i].incl[k]));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n && !changed; ++i)
      for (size_t l = 0; l < sums[i + 1].size() && !changed; ++l) {
        if (!alive[i + 1][l]) continue;
        for (size_t k = 0; k < sums[i].size() && !changed; ++k) {
          if (!alive[i][k]) continue;
          const BlockMap& phi = entry[i][l][k];
          if (phi.blocks.empty()) continue;
          if (!bm_invertible(sums[i][k], sums[i + 1][l], phi)) continue;
          // cancel the pair (i,k) -- (i+1,l)
          BlockMap phinv = *bm_inverse(sums[i][k], sums[i + 1][l], phi);
          for (size_t l2 = 0; l2 < sums[i + 1].size(); ++l2) {
            if (!alive[i + 1][l2] || l2 == l) continue;
            for (size_t k2 = 0; k2 < sums[i].size(); ++k2) {
              if (!alive[i][k2] || k2 == k) continue;
              // e' = e - c phi^-1 b
              BlockMap corr =
                  bm_compose(entry[i][l2][k], bm_compose(phinv, entry[i][l][k2]));
              entry[i][l2][k2] = bm_sub(entry[i][l2][k2], corr);
            }
          }
          alive[i][k] = 0;
          alive[i + 1][l] = 0;
          changed = true;
        }
      }
  }
  // rebuild
  Complex out;
  out.A = c.A;
  out.B = c.B;
  out.env = c.env;
  std::vector<std::vector<int>> keep(n);
  std::vector<SumDecomp> rebuilt(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Module> parts;
    for (size_t k = 0; k < sums[i].size(); ++k)
      if (alive[i][k]) {
        keep[i].push_back((int)k);
        parts.push_back(sums[i][k]);
      }
    if (parts.empty()) {
      rebuilt[i].sum = Module(c.env->alg);
    } else {
      rebuilt[i] = direct_sum(parts);
    }
  }
  // trim zero positions at the ends
  int first = 0, last = n - 1;
  while (first < n && rebuilt[first].sum.total_dim() == 0) ++first;
  while (last >= first && rebuilt[last].sum.total_dim() == 0) --last;
  out.lo = c.lo + first;
  if (first > last) { // contractible: keep a single zero position at 0
    out.lo = 0;
    out.pos.push_back(Module(c.env->alg));
    return out;
  }
  for (int i = first; i <= last; ++i) out.pos.push_back(rebuilt[i].sum);
  for (int i = first; i < last; ++i) {
    BlockMap d;
    d.deg = 0;
    for (size_t l2 = 0; l2 < keep[i + 1].size(); ++l2)
      for (size_t k2 = 0; k2 < keep[i].size(); ++k2) {
        const BlockMap& e = entry[i][keep[i + 1][l2]][keep[i][k2]];
        if (e.blocks.empty()) continue;
        d = bm_add(d, bm_compose(rebuilt[i + 1].incl[l2],
                                 bm_compose(e, rebuilt[i].proj[k2])));
      }
    out.diff.push_back(std::move(d));
  }
  // invariants: d^2 = 0 survived the elimination
  for (int i = 0; i + 2 < out.npos(); ++i)
    if (!bm_compose(out.diff[i + 1], out.diff[i]).is_zero())
      throw std::logic_error("minimize: d^2 != 0 after elimination");
  return out;
}

Report verify_braid_relations(const AlgebraPtr& a, const Graph& g) {
  Report rp;
  Complex id = identity_complex(a);
  for (int v = 0; v < g.nverts(); ++v) {
    Complex fwd = tensor_complexes(twist(a, v), twist_inverse(a, v));
    Complex m1 = minimize(fwd);
    auto r1 = complexes_isomorphic(m1, id);
    rp.add("sigma sigma^-1 = Id", "vertex " + g.label(v), r1.isomorphic,
           r1.isomorphic ? "" : m1.shape());
    Complex bwd = tensor_complexes(twist_inverse(a, v), twist(a, v));
    Complex m2 = minimize(bwd);
    auto r2 = complexes_isomorphic(m2, id);
    rp.add("sigma^-1 sigma = Id", "vertex " + g.label(v), r2.isomorphic,
           r2.isomorphic ? "" : m2.shape());
  }
  for (int x = 0; x < g.nverts(); ++x)
    for (int y = x + 1; y < g.nverts(); ++y) {
      if (g.adjacent(x, y)) {
        Complex lhs = minimize(complex_of_word(a, {{x, false}, {y, false}, {x, false}}));
        Complex rhs = minimize(complex_of_word(a, {{y, false}, {x, false}, {y, false}}));
        auto r = complexes_isomorphic(lhs, rhs);
        rp.add("sigma_a sigma_b sigma_a = sigma_b sigma_a sigma_b",
               g.label(x) + "," + g.label(y), r.isomorphic,
               r.isomorphic ? "" : lhs.shape() + "  vs  " + rhs.shape());
      } else {
        Complex lhs = minimize(complex_of_word(a, {{x, false}, {y, false}}));
        Complex rhs = minimize(complex_of_word(a, {{y, false}, {x, false}}));
        auto r = complexes_isomorphic(lhs, rhs);
        rp.add("sigma_a sigma_b = sigma_b sigma_a", g.label(x) + "," + g.label(y), r.isomorphic,
               r.isomorphic ? "" : lhs.shape() + "  vs  " + rhs.shape());
      }
    }
  return rp;
}

Complex apply_to_module(const Complex& c, const Module& m) {
  Complex d;
  d.A = c.B;
  d.B = trivial_algebra();
  Bimodule bm = as_bimodule(c.B, m);
  d.env = bm.env;
  d.lo = 0;
  d.pos.push_back(bm.m);
  return tensor_complexes(c, d);
}

LMat braid_sigma_h(const AdjointRep& rep, int alpha, bool inverse) {
  const int rk = rep.rank();
  const auto& rs = rep.roots();
  LMat s(rk, rk);
  for (int b = 0; b < rk; ++b) {
    // q E_a F_a h_b - h_b ; E_a F_a h_b = c_b h_a
    Laurent cb;
    if (b == alpha)
      cb = Laurent::q(1) + Laurent::q(-1);
    else if (rs.pairing(rs.simple(b), rs.simple(alpha)) == -1)
      cb = Laurent(1);
    if (!cb.is_zero()) s.at(alpha, b) += Laurent::q(1) * cb;
    s.at(b, b) += Laurent(-1);
  }
  if (!inverse) return s;
  AdjDet ad = adjugate_det(s);
  LMat inv(rk, rk);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < rk; ++j)
      if (!ad.adj.at(i, j).is_zero()) inv.at(i, j) = laurent_divexact(ad.adj.at(i, j), ad.det);
  return inv;
}

std::vector<Laurent> braid_class_action(const AdjointRep& rep, const BraidWord& word,
                                        std::vector<Laurent> h) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    LMat s = braid_sigma_h(rep, it->first, it->second);
    std::vector<Laurent> out(h.size());
    for (size_t i = 0; i < h.size(); ++i)
      for (size_t j = 0; j < h.size(); ++j)
        if (!s.at((int)i, (int)j).is_zero() && !h[j].is_zero()) out[i] += s.at((int)i, (int)j) * h[j];
    h = std::move(out);
  }
  return h;
}

GrothVec complex_euler_class(const AdjointCtx& ctx, const Complex& c) {
  GrothVec acc = groth_zero(*ctx.rep);
  for (int i = 0; i < c.npos(); ++i) {
    Module m = as_left_module(ctx.A, Bimodule{c.A, c.B, c.env, c.pos[i]});
    GrothVec cls = class_of(ctx, cobj_module(m));
    Rat sign = ((c.lo + i) % 2 == 0) ? Rat(1) : Rat(-1);
    for (size_t k = 0; k < acc.v.size(); ++k) acc.v[k] += Laurent(sign) * cls.v[k];
  }
  return acc;
}

} // namespace zz
