#pragma once

#include "zz/module.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace zz {

// Deterministic exact Krull-Schmidt machinery, generic over an adapter so the
// same engine decomposes graded modules and bounded complexes.
//
// Adapter contract:
//   types   Obj, Mor, Key (ordered)
//   homs(X, Y)            basis of degree-0 morphisms X -> Y
//   compose(g, f), add, scale, identity(X)
//   comp_dims(X)          map Key -> dimension
//   blocks_of(X, Y, f)    complete per-Key matrices of f: X -> Y (zero-filled)
//   mor_from_blocks(b)
//   invertible(X, Y, f)
//   restricted(X, cols)   subobject on the given (full-rank) column spans
//   total_dim(X)

template <class Ad> struct Decomp {
  std::vector<typename Ad::Obj> parts;
  std::vector<typename Ad::Mor> incl, proj;
};

struct IsoWitness {
  bool isomorphic = false;
  std::string witness; // distinguishing invariant when not isomorphic
};

namespace detail {

// minimal polynomial of the operator f on X via its flattened powers
template <class Ad>
std::vector<Rat> min_poly(const typename Ad::Obj& x, const typename Ad::Mor& f) {
  auto dims = Ad::comp_dims(x);
  int total = 0;
  for (auto& [k, d] : dims) total += d * d;
  auto flatten = [&](const typename Ad::Mor& m) {
    auto blocks = Ad::blocks_of(x, x, m);
    Mat v(total, 1);
    int off = 0;
    for (auto& [k, d] : dims) {
      const Mat& b = blocks.at(k);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) v.at(off + i * d + j, 0) = b.at(i, j);
      off += d * d;
    }
    return v;
  };
  std::vector<typename Ad::Mor> powers{Ad::identity(x)};
  Mat stack = flatten(powers[0]);
  while (true) {
    typename Ad::Mor next = Ad::compose(f, powers.back());
    Mat fv = flatten(next);
    auto sol = solve(stack, fv);
    if (sol) {
      std::vector<Rat> mp((size_t)powers.size() + 1);
      for (int i = 0; i < (int)powers.size(); ++i) mp[i] = -sol->at(i, 0);
      mp[powers.size()] = 1;
      return mp;
    }
    powers.push_back(next);
    stack = stack.hstack(fv);
    if ((int)powers.size() > total + 1) throw std::logic_error("min_poly: no dependency found");
  }
}

inline std::vector<Rat> rational_roots(const std::vector<Rat>& poly) {
  // deterministic candidate sweep; adequate for the endomorphism spectra in
  // scope, with the radical certificate as the backstop
  std::vector<Rat> roots;
  auto eval = [&](const Rat& t) {
    Rat acc(0);
    for (int i = (int)poly.size() - 1; i >= 0; --i) acc = acc * t + poly[i];
    return acc;
  };
  std::vector<Rat> cands;
  for (int p = 0; p <= 64; ++p)
    for (int s : {1, -1}) {
      if (p == 0 && s == -1) continue;
      for (int q = 1; q <= 6; ++q) {
        Rat c(s * p, q);
        c.canonicalize();
        cands.push_back(c);
      }
    }
  for (auto& c : cands)
    if (eval(c) == 0 && std::find(roots.begin(), roots.end(), c) == roots.end()) roots.push_back(c);
  return roots;
}

} // namespace detail

// dim of End/rad: 1 means indecomposable (certificate). rad computed as the
// kernel of the trace form of the left regular representation (char 0).
template <class Ad>
int end_mod_rad_dim(const typename Ad::Obj& x, const std::vector<typename Ad::Mor>& endos) {
  const int k = (int)endos.size();
  if (k == 0) throw std::logic_error("end_mod_rad_dim: empty End");
  auto dims = Ad::comp_dims(x);
  int total = 0;
  for (auto& [key, d] : dims) total += d * d;
  Mat H(total, k);
  auto flat_into = [&](const typename Ad::Mor& m, int col, Mat& dst) {
    auto blocks = Ad::blocks_of(x, x, m);
    int off = 0;
    for (auto& [key, d] : dims) {
      const Mat& b = blocks.at(key);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) dst.at(off + i * d + j, col) = b.at(i, j);
      off += d * d;
    }
  };
  for (int i = 0; i < k; ++i) flat_into(endos[i], i, H);
  // coordinates of all products f_i f_j
  Mat rhs(total, k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto p = Ad::compose(endos[i], endos[j]);
      Mat col(total, 1);
      flat_into(p, 0, col);
      for (int r = 0; r < total; ++r) rhs.at(r, i * k + j) = col.at(r, 0);
    }
  auto coords = solve(H, rhs);
  if (!coords) throw std::logic_error("end_mod_rad_dim: product outside End span");
  // left regular matrices L_i[a][j] = coord a of f_i f_j
  std::vector<Mat> L(k, Mat(k, k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int a = 0; a < k; ++a) L[i].at(a, j) = coords->at(a, i * k + j);
  Mat T(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) T.at(i, j) = (L[i] * L[j]).trace();
  return k - (int)nullspace(T).cols();
}

template <class Ad> Decomp<Ad> decompose_obj(const typename Ad::Obj& x) {
  Decomp<Ad> out;
  if (Ad::total_dim(x) == 0) return out;
  auto endos = Ad::homs(x, x);
  auto indec = [&]() {
    out.parts.push_back(x);
    out.incl.push_back(Ad::identity(x));
    out.proj.push_back(Ad::identity(x));
    return out;
  };
  if (endos.size() <= 1) return indec();

  auto try_fitting = [&](const typename Ad::Mor& f) -> bool {
    auto mp = detail::min_poly<Ad>(x, f);
    if (mp.size() <= 2) return false; // scalar
    for (auto& lam : detail::rational_roots(mp)) {
      typename Ad::Mor g = Ad::add(f, Ad::scale(-lam, Ad::identity(x)));
      // g^N with N >= total dim
      int n = Ad::total_dim(x);
      typename Ad::Mor gp = g;
      int e = 1;
      while (e < n) {
        gp = Ad::compose(gp, gp);
        e *= 2;
      }
      auto blocks = Ad::blocks_of(x, x, gp);
      std::map<typename Ad::Key, Mat> kers, ims;
      int kdim = 0, idim = 0;
      for (auto& [key, b] : blocks) {
        Mat kb = nullspace(b);
        Mat ib = column_space(b);
        kdim += kb.cols();
        idim += ib.cols();
        kers[key] = std::move(kb);
        ims[key] = std::move(ib);
      }
      if (kdim == 0 || idim == 0) continue;
      // X = ker + im; per-component change of basis
      typename Ad::Obj xk = Ad::restricted(x, kers);
      typename Ad::Obj xi = Ad::restricted(x, ims);
      std::map<typename Ad::Key, Mat> projk, proji;
      for (auto& [key, kb] : kers) {
        Mat joint = kb.hstack(ims.at(key));
        auto inv = inverse(joint);
        if (!inv) throw std::logic_error("decompose: Fitting blocks not complementary");
        // rows 0..k-1 of inv give ker coordinates, rest give im coordinates
        Mat pk(kb.cols(), joint.rows()), pi(joint.rows() - kb.cols(), joint.rows());
        for (int r = 0; r < kb.cols(); ++r)
          for (int c = 0; c < joint.rows(); ++c) pk.at(r, c) = inv->at(r, c);
        for (int r = 0; r < joint.rows() - kb.cols(); ++r)
          for (int c = 0; c < joint.rows(); ++c) pi.at(r, c) = inv->at(kb.cols() + r, c);
        projk[key] = std::move(pk);
        proji[key] = std::move(pi);
      }
      typename Ad::Mor inck = Ad::mor_from_blocks(kers), inci = Ad::mor_from_blocks(ims);
      typename Ad::Mor prk = Ad::mor_from_blocks(projk), pri = Ad::mor_from_blocks(proji);
      for (auto* half : {&xk, &xi}) {
        auto sub = decompose_obj<Ad>(*half);
        bool first = (half == &xk);
        for (size_t t = 0; t < sub.parts.size(); ++t) {
          out.parts.push_back(sub.parts[t]);
          out.incl.push_back(Ad::compose(first ? inck : inci, sub.incl[t]));
          out.proj.push_back(Ad::compose(sub.proj[t], first ? prk : pri));
        }
      }
      return true;
    }
    return false;
  };

  for (auto& f : endos)
    if (try_fitting(f)) return out;
  for (size_t i = 0; i < endos.size(); ++i)
    for (size_t j = i + 1; j < endos.size(); ++j) {
      if (try_fitting(Ad::add(endos[i], endos[j]))) return out;
      if (try_fitting(Ad::add(endos[i], Ad::scale(Rat(-1), endos[j])))) return out;
    }
  // no split found; certify indecomposability or give up honestly
  if (end_mod_rad_dim<Ad>(x, endos) == 1) return indec();
  throw std::logic_error("decompose: cannot split object although End/rad is nontrivial "
                         "(non-split endomorphism ring?)");
}

// X, Y indecomposable: isomorphic iff some composite of hom-basis elements is
// invertible; in that case the forward map itself is an isomorphism.
template <class Ad>
std::optional<typename Ad::Mor> indec_iso(const typename Ad::Obj& x, const typename Ad::Obj& y) {
  if (Ad::comp_dims(x) != Ad::comp_dims(y)) return std::nullopt;
  auto fwd = Ad::homs(x, y);
  auto bwd = Ad::homs(y, x);
  for (auto& f : fwd)
    for (auto& g : bwd)
      if (Ad::invertible(x, x, Ad::compose(g, f))) return f;
  return std::nullopt;
}

template <class Ad> struct IsoCert {
  bool isomorphic = false;
  std::optional<typename Ad::Mor> iso;
  std::string witness;
};

template <class Ad>
IsoCert<Ad> iso_obj(const typename Ad::Obj& x, const typename Ad::Obj& y) {
  IsoCert<Ad> out;
  auto dx = Ad::comp_dims(x), dy = Ad::comp_dims(y);
  if (dx != dy) {
    out.witness = "graded dimensions differ";
    return out;
  }
  auto DX = decompose_obj<Ad>(x), DY = decompose_obj<Ad>(y);
  std::vector<char> used(DY.parts.size(), 0);
  typename Ad::Mor acc = Ad::scale(Rat(0), Ad::identity(y)); // zero morphism placeholder
  bool acc_set = false;
  for (size_t i = 0; i < DX.parts.size(); ++i) {
    bool matched = false;
    for (size_t j = 0; j < DY.parts.size(); ++j) {
      if (used[j]) continue;
      auto phi = indec_iso<Ad>(DX.parts[i], DY.parts[j]);
      if (!phi) continue;
      used[j] = 1;
      matched = true;
      auto term = Ad::compose(DY.incl[j], Ad::compose(*phi, DX.proj[i]));
      acc = acc_set ? Ad::add(acc, term) : term;
      acc_set = true;
      break;
    }
    if (!matched) {
      std::ostringstream os;
      os << "indecomposable factor multisets differ (factor " << i << " of the first object "
         << "has no partner)";
      out.witness = os.str();
      return out;
    }
  }
  out.isomorphic = true;
  if (acc_set) {
    if (!Ad::invertible(x, y, acc)) throw std::logic_error("iso_obj: assembled map not invertible");
    out.iso = acc;
  }
  return out;
}

// ---- module instantiation ----

struct ModuleAd {
  using Obj = Module;
  using Mor = BlockMap;
  using Key = Comp;
  static std::vector<Mor> homs(const Obj& x, const Obj& y) { return hom_space(x, y, 0); }
  static Mor compose(const Mor& g, const Mor& f) { return bm_compose(g, f); }
  static Mor add(const Mor& a, const Mor& b) { return bm_add(a, b); }
  static Mor scale(const Rat& s, const Mor& a) { return bm_scale(s, a); }
  static Mor identity(const Obj& x) { return identity_map(x); }
  static std::map<Key, int> comp_dims(const Obj& x) { return x.components(); }
  static std::map<Key, Mat> blocks_of(const Obj& x, const Obj& y, const Mor& f) {
    std::map<Key, Mat> out;
    for (auto& [c, d] : x.components()) out[c] = f.block(c, y.dim(c.first, c.second + f.deg), d);
    return out;
  }
  static Mor mor_from_blocks(const std::map<Key, Mat>& b) {
    Mor m;
    m.deg = 0;
    for (auto& [c, mat] : b) m.set(c, mat);
    return m;
  }
  static bool invertible(const Obj& x, const Obj& y, const Mor& f) { return bm_invertible(x, y, f); }
  static Obj restricted(const Obj& x, const std::map<Key, Mat>& cols) {
    return restrict_to(x, cols).sub;
  }
  static int total_dim(const Obj& x) { return x.total_dim(); }
};

using ModuleDecomp = Decomp<ModuleAd>;
inline ModuleDecomp decompose(const Module& m) { return decompose_obj<ModuleAd>(m); }
inline IsoCert<ModuleAd> is_isomorphic(const Module& m, const Module& n) {
  return iso_obj<ModuleAd>(m, n);
}
// proven-indecomposable test via End/rad
inline bool is_indecomposable(const Module& m) {
  if (m.total_dim() == 0) return false;
  auto e = hom_space(m, m, 0);
  if (e.size() <= 1) return true;
  return end_mod_rad_dim<ModuleAd>(m, e) == 1;
}

} // namespace zz
