#include "zz/bimodule.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace zz {

std::shared_ptr<const Envelope> get_envelope(const AlgebraPtr& a, const AlgebraPtr& b) {
  static std::mutex mu;
  static std::map<std::pair<const Algebra*, const Algebra*>, std::shared_ptr<const Envelope>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(a.get(), b.get());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto env = std::make_shared<Envelope>(make_envelope(a, b));
  cache[key] = env;
  return env;
}

namespace {
// left multiplication by A-basis p on component ((a,b), n) of X; zero-row
// matrix when p cannot act there
Mat left_mul_block(const Bimodule& x, int p, int a, int b, int n) {
  const auto& bp = x.A->b(p);
  int cols = x.m.dim(a * x.B->nverts() + b, n);
  if (bp.tgt != a) return Mat(0, cols);
  if (bp.deg == 0) return Mat::identity(cols);
  return x.m.act(x.env->pair_index(p, b), n);
}
// right multiplication by B-basis w on component ((b,c), n) of Y
Mat right_mul_block(const Bimodule& y, int w, int b, int c, int n) {
  const auto& bw = y.B->b(w);
  int cols = y.m.dim(b * y.B->nverts() + c, n);
  if (bw.src != c) return Mat(0, cols);
  if (bw.deg == 0) return Mat::identity(cols);
  return y.m.act(y.env->pair_index(b, w), n);
}
} // namespace

Mat Bimodule::left_act(int p, int b, int n) const {
  return left_mul_block(*this, p, A->b(p).tgt, b, n);
}

Mat Bimodule::right_act(int a, int w, int n) const {
  return right_mul_block(*this, w, a, B->b(w).src, n);
}

Bimodule as_bimodule(const AlgebraPtr& a, const Module& m) {
  auto env = get_envelope(a, trivial_algebra());
  // env(A, k) has the same vertex and basis indexing as A itself
  Module em(env->alg);
  for (auto& [c, d] : m.components()) em.set_dim(c.first, c.second, d);
  auto [lo, hi] = m.degree_range();
  for (int x = a->nverts(); x < a->dim(); ++x)
    for (int n = lo; n <= hi; ++n) {
      Mat blk = m.act(x, n);
      if (blk.rows() && blk.cols() && !blk.is_zero()) em.set_act(x, n, blk);
    }
  return {a, trivial_algebra(), env, std::move(em)};
}

Module as_left_module(const AlgebraPtr& a, const Bimodule& x) {
  if (x.B.get() != trivial_algebra().get())
    throw std::invalid_argument("as_left_module: right algebra is not trivial");
  Module m(a);
  for (auto& [c, d] : x.m.components()) m.set_dim(c.first, c.second, d);
  auto [lo, hi] = x.m.degree_range();
  for (int i = a->nverts(); i < a->dim(); ++i)
    for (int n = lo; n <= hi; ++n) {
      Mat blk = x.m.act(i, n);
      if (blk.rows() && blk.cols() && !blk.is_zero()) m.set_act(i, n, blk);
    }
  return m;
}

Bimodule vect_bimodule(const std::map<int, int>& dims) {
  auto t = trivial_algebra();
  auto env = get_envelope(t, t);
  Module m(env->alg);
  for (auto& [n, d] : dims)
    if (d) m.set_dim(0, n, d);
  return {t, t, env, std::move(m)};
}

Bimodule projective_bimodule(const AlgebraPtr& a_alg, int a, const AlgebraPtr& b_alg, int b,
                             const std::optional<Mat>& right_twist) {
  auto env = get_envelope(a_alg, b_alg);
  Module m(env->alg);
  struct Pair {
    int x, y;
  };
  std::map<Comp, std::vector<Pair>> comps; // basis pairs (x,y): tgt x = a, src y = b
  auto comp_of = [&](int x, int y) {
    return Comp{a_alg->b(x).src * b_alg->nverts() + b_alg->b(y).tgt,
                a_alg->b(x).deg + b_alg->b(y).deg};
  };
  for (int x = 0; x < a_alg->dim(); ++x) {
    if (a_alg->b(x).tgt != a) continue;
    for (int y = 0; y < b_alg->dim(); ++y) {
      if (b_alg->b(y).src != b) continue;
      comps[comp_of(x, y)].push_back({x, y});
    }
  }
  for (auto& [c, list] : comps) m.set_dim(c.first, c.second, (int)list.size());
  auto pos_of = [&](int x, int y) -> std::pair<Comp, int> {
    Comp c = comp_of(x, y);
    auto& list = comps.at(c);
    for (int i = 0; i < (int)list.size(); ++i)
      if (list[i].x == x && list[i].y == y) return {c, i};
    throw std::logic_error("projective_bimodule: missing pair");
  };
  auto right_mul = [&](int y, int w) { // y * w, optionally through the twist
    Elem ww{{w, Rat(1)}};
    if (right_twist) {
      Elem tw;
      for (int k = 0; k < b_alg->dim(); ++k)
        if (right_twist->at(k, w) != 0) tw.emplace_back(k, right_twist->at(k, w));
      ww = std::move(tw);
    }
    return b_alg->mul({{y, Rat(1)}}, ww);
  };
  const Algebra& E = *env->alg;
  for (int e = E.nverts(); e < E.dim(); ++e) {
    auto [p, w] = env->unpair[e];
    for (auto& [c, list] : comps) {
      if (c.first != E.b(e).tgt) continue;
      int rows = m.dim(E.b(e).src, c.second + E.b(e).deg);
      if (!rows) continue;
      Mat mat(rows, (int)list.size());
      bool nz = false;
      for (int col = 0; col < (int)list.size(); ++col) {
        Elem px = a_alg->mul_basis(p, list[col].x);
        if (px.empty()) continue;
        Elem yw = right_mul(list[col].y, w);
        if (yw.empty()) continue;
        for (auto& [xk, cx] : px)
          for (auto& [yk, cy] : yw) {
            auto [tc, row] = pos_of(xk, yk);
            if (tc.first != E.b(e).src || tc.second != c.second + E.b(e).deg)
              throw std::logic_error("projective_bimodule: component mismatch");
            mat.at(row, col) += cx * cy;
            nz = true;
          }
      }
      if (nz) m.set_act(e, c.second, std::move(mat));
    }
  }
  return {a_alg, b_alg, env, std::move(m)};
}

Bimodule algebra_bimodule(const AlgebraPtr& a) {
  auto env = get_envelope(a, a);
  Module m(env->alg);
  std::map<Comp, std::vector<int>> comps;
  auto comp_of = [&](int x) {
    return Comp{a->b(x).src * a->nverts() + a->b(x).tgt, a->b(x).deg};
  };
  for (int x = 0; x < a->dim(); ++x) comps[comp_of(x)].push_back(x);
  for (auto& [c, list] : comps) m.set_dim(c.first, c.second, (int)list.size());
  auto pos_of = [&](int x) -> std::pair<Comp, int> {
    Comp c = comp_of(x);
    auto& list = comps.at(c);
    for (int i = 0; i < (int)list.size(); ++i)
      if (list[i] == x) return {c, i};
    throw std::logic_error("algebra_bimodule: missing element");
  };
  const Algebra& E = *env->alg;
  for (int e = E.nverts(); e < E.dim(); ++e) {
    auto [p, w] = env->unpair[e];
    for (auto& [c, list] : comps) {
      if (c.first != E.b(e).tgt) continue;
      int rows = m.dim(E.b(e).src, c.second + E.b(e).deg);
      if (!rows) continue;
      Mat mat(rows, (int)list.size());
      bool nz = false;
      for (int col = 0; col < (int)list.size(); ++col) {
        Elem v = a->mul(a->mul_basis(p, list[col]), {{w, Rat(1)}});
        for (auto& [k, coef] : v) {
          auto [tc, row] = pos_of(k);
          mat.at(row, col) += coef;
          nz = true;
        }
      }
      if (nz) m.set_act(e, c.second, std::move(mat));
    }
  }
  return {a, a, env, std::move(m)};
}

Bimodule bimodule_direct_sum(const std::vector<Bimodule>& parts) {
  if (parts.empty()) throw std::invalid_argument("bimodule_direct_sum: empty");
  std::vector<Module> ms;
  for (auto& p : parts) ms.push_back(p.m);
  return {parts[0].A, parts[0].B, parts[0].env, direct_sum(ms).sum};
}

TensorResult tensor_bimodules(const Bimodule& x, const Bimodule& y) {
  if (x.B.get() != y.A.get()) throw std::invalid_argument("tensor_bimodules: algebra mismatch");
  const AlgebraPtr& A = x.A;
  const AlgebraPtr& B = x.B; // tensor over this one
  const AlgebraPtr& C = y.B;
  auto env = get_envelope(A, C);
  const int nB = B->nverts(), nC = C->nverts();

  TensorResult out;
  for (auto& [cx, dx] : x.m.components()) {
    int a = cx.first / nB, b = cx.first % nB;
    for (auto& [cy, dy] : y.m.components()) {
      int b2 = cy.first / nC, c = cy.first % nC;
      if (b2 != b) continue;
      Comp rc{a * nC + c, cx.second + cy.second};
      auto& meta = out.meta[rc];
      meta.slots.push_back({b, cx.second});
      meta.slot_dims.push_back({dx, dy});
    }
  }
  for (auto& [rc, meta] : out.meta) {
    std::vector<int> order(meta.slots.size());
    for (int i = 0; i < (int)order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return meta.slots[i] < meta.slots[j]; });
    std::vector<std::pair<int, int>> slots, sdims;
    for (int i : order) {
      slots.push_back(meta.slots[i]);
      sdims.push_back(meta.slot_dims[i]);
    }
    meta.slots = std::move(slots);
    meta.slot_dims = std::move(sdims);
    int off = 0;
    for (auto& [dX, dY] : meta.slot_dims) {
      meta.offsets.push_back(off);
      off += dX * dY;
    }
  }
  auto slot_of = [](const TensorResult::CompMeta& meta, int b, int n1) {
    for (int i = 0; i < (int)meta.slots.size(); ++i)
      if (meta.slots[i] == std::make_pair(b, n1)) return i;
    return -1;
  };

  Module pm(env->alg);
  for (auto& [rc, meta] : out.meta) {
    int rawdim = meta.offsets.empty()
                     ? 0
                     : meta.offsets.back() + meta.slot_dims.back().first * meta.slot_dims.back().second;
    int a = rc.first / nC, c = rc.first % nC;
    std::vector<std::vector<Rat>> rows;
    for (int r : B->generators()) {
      const auto& br = B->b(r);
      auto [xlo, xhi] = x.m.degree_range();
      for (int n1 = xlo; n1 <= xhi; ++n1) {
        int dX = x.m.dim(a * nB + br.src, n1);
        if (!dX) continue;
        int n2 = rc.second - n1 - br.deg;
        int dYt = y.m.dim(br.tgt * nC + c, n2);
        if (!dYt) continue;
        // x (x) y |-> (x.r) (x) y - x (x) (r.y)
        Mat Xr = x.m.act(x.env->pair_index(a, r), n1);   // X_{(a,src r),n1} -> X_{(a,tgt r),n1+dr}
        Mat Ry = y.m.act(y.env->pair_index(r, c), n2);   // Y_{(tgt r,c),n2} -> Y_{(src r,c),n2+dr}
        int sxr = slot_of(meta, br.tgt, n1 + br.deg);
        int si = slot_of(meta, br.src, n1);
        for (int xi = 0; xi < dX; ++xi)
          for (int yi = 0; yi < dYt; ++yi) {
            std::vector<Rat> row(rawdim);
            bool nz = false;
            if (sxr >= 0) {
              int dy2 = meta.slot_dims[sxr].second;
              for (int k = 0; k < Xr.rows(); ++k)
                if (Xr.at(k, xi) != 0) {
                  row[meta.offsets[sxr] + k * dy2 + yi] += Xr.at(k, xi);
                  nz = true;
                }
            }
            if (si >= 0) {
              int dy1 = meta.slot_dims[si].second;
              for (int l = 0; l < Ry.rows(); ++l)
                if (Ry.at(l, yi) != 0) {
                  row[meta.offsets[si] + xi * dy1 + l] -= Ry.at(l, yi);
                  nz = true;
                }
            }
            if (nz) rows.push_back(std::move(row));
          }
      }
    }
    Mat span(rawdim, (int)rows.size());
    for (int j = 0; j < (int)rows.size(); ++j)
      for (int i = 0; i < rawdim; ++i) span.at(i, j) = rows[j][i];
    meta.split = quotient_split(span, rawdim);
    if (meta.split.qdim() > 0) pm.set_dim(rc.first, rc.second, meta.split.qdim());
  }

  const Algebra& E = *env->alg;
  for (int e = E.nverts(); e < E.dim(); ++e) {
    auto [p, w] = env->unpair[e];
    int dp = A->b(p).deg, dw = C->b(w).deg;
    for (auto& [rc, meta] : out.meta) {
      if (rc.first != E.b(e).tgt || meta.split.qdim() == 0) continue;
      Comp tc{E.b(e).src, rc.second + dp + dw};
      auto itT = out.meta.find(tc);
      if (itT == out.meta.end() || itT->second.split.qdim() == 0) continue;
      const auto& tmeta = itT->second;
      int rawS = meta.split.section.rows(), rawT = tmeta.split.section.rows();
      Mat raw(rawT, rawS);
      bool nz = false;
      int a = rc.first / nC, c = rc.first % nC;
      for (int si = 0; si < (int)meta.slots.size(); ++si) {
        auto [b, n1] = meta.slots[si];
        auto [dX, dY] = meta.slot_dims[si];
        Mat Xa = left_mul_block(x, p, a, b, n1);           // -> ((src p, b), n1+dp)
        Mat Ya = right_mul_block(y, w, b, c, rc.second - n1); // -> ((b, tgt w), ..+dw)
        if (Xa.rows() == 0 || Ya.rows() == 0) continue;
        int ti = slot_of(tmeta, b, n1 + dp);
        if (ti < 0) continue;
        int tdY = tmeta.slot_dims[ti].second;
        for (int i2 = 0; i2 < Xa.rows(); ++i2)
          for (int j2 = 0; j2 < dX; ++j2) {
            if (Xa.at(i2, j2) == 0) continue;
            for (int k2 = 0; k2 < Ya.rows(); ++k2)
              for (int l2 = 0; l2 < dY; ++l2) {
                if (Ya.at(k2, l2) == 0) continue;
                raw.at(tmeta.offsets[ti] + i2 * tdY + k2, meta.offsets[si] + j2 * dY + l2) +=
                    Xa.at(i2, j2) * Ya.at(k2, l2);
                nz = true;
              }
          }
      }
      if (!nz) continue;
      Mat blk = tmeta.split.proj * (raw * meta.split.section);
      if (!blk.is_zero()) pm.set_act(e, rc.second, std::move(blk));
    }
  }
  out.prod = {A, C, env, std::move(pm)};
  return out;
}

BlockMap tensor_morphism(const Bimodule& x, const Bimodule& y, const TensorResult& src,
                         const Bimodule& x2, const Bimodule& y2, const TensorResult& tgt,
                         const BlockMap& f, const BlockMap& g) {
  (void)x2;
  (void)y2;
  if (f.deg != 0 || g.deg != 0) throw std::invalid_argument("tensor_morphism: degree-0 maps only");
  const int nB = x.B->nverts(), nC = y.B->nverts();
  BlockMap out;
  out.deg = 0;
  for (auto& [rc, meta] : src.meta) {
    if (meta.split.qdim() == 0) continue;
    auto itT = tgt.meta.find(rc);
    if (itT == tgt.meta.end() || itT->second.split.qdim() == 0) continue;
    const auto& tmeta = itT->second;
    int rawS = meta.split.section.rows(), rawT = tmeta.split.section.rows();
    Mat raw(rawT, rawS);
    bool nz = false;
    int a = rc.first / nC, c = rc.first % nC;
    for (int si = 0; si < (int)meta.slots.size(); ++si) {
      auto [b, n1] = meta.slots[si];
      auto [dX, dY] = meta.slot_dims[si];
      int ti = -1;
      for (int k = 0; k < (int)tmeta.slots.size(); ++k)
        if (tmeta.slots[k] == std::make_pair(b, n1)) ti = k;
      if (ti < 0) continue;
      auto [dX2, dY2] = tmeta.slot_dims[ti];
      Mat fb = f.block({a * nB + b, n1}, dX2, dX);
      Mat gb = g.block({b * nC + c, rc.second - n1}, dY2, dY);
      if (fb.is_zero() || gb.is_zero()) continue;
      for (int i2 = 0; i2 < dX2; ++i2)
        for (int j2 = 0; j2 < dX; ++j2) {
          if (fb.at(i2, j2) == 0) continue;
          for (int k2 = 0; k2 < dY2; ++k2)
            for (int l2 = 0; l2 < dY; ++l2) {
              if (gb.at(k2, l2) == 0) continue;
              raw.at(tmeta.offsets[ti] + i2 * dY2 + k2, meta.offsets[si] + j2 * dY + l2) +=
                  fb.at(i2, j2) * gb.at(k2, l2);
              nz = true;
            }
        }
    }
    if (!nz) continue;
    out.set(rc, tmeta.split.proj * (raw * meta.split.section));
  }
  return out;
}

} // namespace zz
