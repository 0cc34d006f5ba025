#include "zz/mckay.hpp"

#include "zz/zigzag.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zz {

bool SU2Group::is_binary() const {
  for (auto& c : classes)
    if (c.order == 2) return true;
  return false;
}

Cyc SU2Group::defining_char(int cls) const {
  return Cyc::zeta_pow(field, classes[cls].eig) + Cyc::zeta_pow(field, -classes[cls].eig);
}

Cyc SU2Group::inner(const std::vector<Cyc>& f, const std::vector<Cyc>& g) const {
  Cyc acc(field);
  for (int c = 0; c < nclasses(); ++c)
    acc = acc + (f[c].conj() * g[c]).scaled(Rat(classes[c].size));
  return acc.scaled(Rat(1, order));
}

std::vector<Cyc> SU2Group::sym_power_char(int n) const {
  // eigenvalues of g on S^n(C^2): lambda^{n-2j}, j = 0..n
  std::vector<Cyc> out;
  for (auto& c : classes) {
    Cyc acc(field);
    for (int j = 0; j <= n; ++j) acc = acc + Cyc::zeta_pow(field, (long)c.eig * (n - 2 * j));
    out.push_back(acc);
  }
  return out;
}

namespace {
long ipow_mod(long a, long m) { return ((a % m) + m) % m; }

SU2Group cyclic_group(int n) {
  SU2Group g;
  g.name = "cyclic:" + std::to_string(n);
  g.order = n;
  g.m = n;
  g.field = CycloField::get(n);
  for (int j = 0; j < n; ++j) {
    SU2Group::ClassData c;
    c.name = "g^" + std::to_string(j);
    c.size = 1;
    c.order = (int)(n / std::gcd((long)j, (long)n));
    c.eig = j;
    c.inv_class = (int)ipow_mod(-j, n);
    c.sq_class = (int)ipow_mod(2 * j, n);
    g.classes.push_back(c);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Cyc> row;
    for (int j = 0; j < n; ++j) row.push_back(Cyc::zeta_pow(g.field, (long)i * j));
    g.chars.push_back(std::move(row));
    g.irrep_names.push_back("chi_" + std::to_string(i));
    g.dims.push_back(1);
  }
  g.trivial = 0;
  return g;
}

SU2Group binary_dihedral(int n) {
  // <a, x | a^{2n} = 1, x^2 = a^n, x a x^-1 = a^-1>, order 4n
  SU2Group g;
  g.name = "binary-dihedral:" + std::to_string(n);
  g.order = 4L * n;
  g.m = (int)std::lcm(2L * n, 4L);
  g.field = CycloField::get(g.m);
  const int step = g.m / (2 * n); // a has eigenvalues zeta_{2n}^{+-1}
  // classes: 1, -1=a^n, {a^j, a^-j} j=1..n-1, x-even, x-odd
  auto aclass = [&](int j) {
    SU2Group::ClassData c;
    c.name = j == 0 ? "1" : (j == n ? "-1" : "a^" + std::to_string(j));
    c.size = (j == 0 || j == n) ? 1 : 2;
    c.order = (int)(2L * n / std::gcd((long)j, 2L * n));
    if (j == 0) c.order = 1;
    c.eig = j * step;
    return c;
  };
  for (int j = 0; j <= n; ++j) g.classes.push_back(aclass(j));
  {
    SU2Group::ClassData cx;
    cx.name = "x(even)";
    cx.size = n;
    cx.order = 4;
    cx.eig = g.m / 4;
    g.classes.push_back(cx);
    SU2Group::ClassData cy = cx;
    cy.name = "x(odd)";
    g.classes.push_back(cy);
  }
  const int xe = n + 1, xo = n + 2;
  // inverses and squares
  for (int j = 0; j <= n; ++j) {
    g.classes[j].inv_class = j; // {a^j, a^-j} closed under inverses
    int sq = (2 * j) % (2 * n);
    if (sq > n) sq = 2 * n - sq;
    g.classes[j].sq_class = sq;
  }
  // (x a^j)^2 = a^n; (x a^j)^-1 = x a^{j+n}
  g.classes[xe].sq_class = n;
  g.classes[xo].sq_class = n;
  g.classes[xe].inv_class = (n % 2 == 0) ? xe : xo;
  g.classes[xo].inv_class = (n % 2 == 0) ? xo : xe;

  // 1-dim irreps: a -> eps, x -> del with del^2 = eps^n, eps = +-1
  auto onedim = [&](const Cyc& eps, const Cyc& del, const std::string& nm) {
    std::vector<Cyc> row(g.nclasses(), Cyc(g.field));
    Cyc cur = Cyc::rational(g.field, Rat(1));
    for (int j = 0; j <= n; ++j) {
      Cyc v = Cyc::rational(g.field, Rat(1));
      for (int t = 0; t < j; ++t) v = v * eps;
      row[j] = v;
    }
    row[xe] = del;
    row[xo] = del * eps;
    g.chars.push_back(row);
    g.irrep_names.push_back(nm);
    g.dims.push_back(1);
  };
  Cyc one = Cyc::rational(g.field, Rat(1));
  Cyc mone = Cyc::rational(g.field, Rat(-1));
  Cyc i_unit = Cyc::zeta_pow(g.field, g.m / 4);
  onedim(one, one, "triv");
  onedim(one, mone, "chi_x");
  if (n % 2 == 0) {
    onedim(mone, one, "chi_a+");
    onedim(mone, mone, "chi_a-");
  } else {
    onedim(mone, i_unit, "chi_a+");
    onedim(mone, -i_unit, "chi_a-");
  }
  // 2-dim irreps rho_k, k = 1..n-1
  for (int k = 1; k < n; ++k) {
    std::vector<Cyc> row(g.nclasses(), Cyc(g.field));
    for (int j = 0; j <= n; ++j)
      row[j] = Cyc::zeta_pow(g.field, (long)k * j * step) +
               Cyc::zeta_pow(g.field, -(long)k * j * step);
    g.chars.push_back(row);
    g.irrep_names.push_back("rho_" + std::to_string(k));
    g.dims.push_back(2);
  }
  g.trivial = 0;
  return g;
}

// exceptional class data; tables generated by tensor closure below
SU2Group exceptional_seed(const std::string& name) {
  SU2Group g;
  g.name = name;
  auto C = [](std::string nm, long size, int order, int eig, int inv, int sq) {
    return SU2Group::ClassData{std::move(nm), size, order, eig, inv, sq};
  };
  if (name == "2T") {
    g.order = 24;
    g.m = 12;
    g.field = CycloField::get(12);
    g.classes = {C("1", 1, 1, 0, 0, 0),   C("-1", 1, 2, 6, 1, 0),  C("4A", 6, 4, 3, 2, 1),
                 C("3A", 4, 3, 4, 4, 4),  C("3B", 4, 3, 4, 3, 3),  C("6A", 4, 6, 2, 6, 4),
                 C("6B", 4, 6, 2, 5, 3)};
    // seed: the omega one-dimensional (factors through Z/3)
    Cyc w = Cyc::zeta_pow(g.field, 4), wb = Cyc::zeta_pow(g.field, 8);
    Cyc one = Cyc::rational(g.field, Rat(1));
    g.chars.push_back({one, one, one, w, wb, w, wb});
    g.irrep_names.push_back("omega");
    g.dims.push_back(1);
  } else if (name == "2O") {
    g.order = 48;
    g.m = 24;
    g.field = CycloField::get(24);
    g.classes = {C("1", 1, 1, 0, 0, 0),   C("-1", 1, 2, 12, 1, 0), C("4A", 6, 4, 6, 2, 1),
                 C("8A", 6, 8, 3, 3, 2),  C("8B", 6, 8, 9, 4, 2),  C("6A", 8, 6, 4, 5, 6),
                 C("3A", 8, 3, 8, 6, 6),  C("4B", 12, 4, 6, 7, 1)};
    // seed: the sign character of the S4 quotient
    auto r = [&](long v) { return Cyc::rational(g.field, Rat(v)); };
    g.chars.push_back({r(1), r(1), r(1), r(-1), r(-1), r(1), r(1), r(-1)});
    g.irrep_names.push_back("sgn");
    g.dims.push_back(1);
  } else if (name == "2I") {
    g.order = 120;
    g.m = 60;
    g.field = CycloField::get(60);
    g.classes = {C("1", 1, 1, 0, 0, 0),     C("-1", 1, 2, 30, 1, 0),  C("4A", 30, 4, 15, 2, 1),
                 C("6A", 20, 6, 10, 3, 4),  C("3A", 20, 3, 20, 4, 4), C("10A", 12, 10, 6, 5, 6),
                 C("5A", 12, 5, 12, 6, 8),  C("10B", 12, 10, 18, 7, 8), C("5B", 12, 5, 24, 8, 6)};
    // seed: the Galois twist (zeta_5 -> zeta_5^2) of the defining character
    std::vector<Cyc> tw;
    for (int c = 0; c < (int)g.classes.size(); ++c) {
      Cyc d = Cyc::zeta_pow(g.field, g.classes[c].eig) +
              Cyc::zeta_pow(g.field, -g.classes[c].eig);
      tw.push_back(d.galois(7)); // 7 = 2 mod 5, 1 mod 3, 3 mod 4: fixes Q(zeta_12) values
    }
    g.chars.push_back(std::move(tw));
    g.irrep_names.push_back("2b");
    g.dims.push_back(2);
  } else {
    throw std::invalid_argument("build_group: unknown name '" + name + "'");
  }
  return g;
}

// add the trivial and defining characters, then close under tensor products
// and symmetric/alternating squares, splitting off norm-1 residues
void close_character_table(SU2Group& g) {
  const int nc = g.nclasses();
  std::vector<Cyc> triv(nc), def(nc);
  for (int c = 0; c < nc; ++c) {
    triv[c] = Cyc::rational(g.field, Rat(1));
    def[c] = g.defining_char(c);
  }
  std::vector<std::vector<Cyc>> seeds = g.chars;
  std::vector<std::string> seed_names = g.irrep_names;
  g.chars.clear();
  g.irrep_names.clear();
  g.dims.clear();
  auto dim_of = [&](const std::vector<Cyc>& f) { return f[0].rat_value(); };
  auto push_irrep = [&](const std::vector<Cyc>& f, const std::string& nm) {
    Cyc norm = g.inner(f, f);
    if (!norm.is_rational() || norm.rat_value() != 1)
      throw std::logic_error(g.name + ": candidate character has norm != 1");
    Rat d = dim_of(f);
    if (!is_integer(d) || d <= 0) throw std::logic_error(g.name + ": bad character degree");
    g.chars.push_back(f);
    g.irrep_names.push_back(nm);
    g.dims.push_back(d.get_num().get_si());
  };
  push_irrep(triv, "triv");
  g.trivial = 0;
  push_irrep(def, "def");
  for (size_t s = 0; s < seeds.size(); ++s) push_irrep(seeds[s], seed_names[s]);

  auto total = [&] {
    long t = 0;
    for (long d : g.dims) t += d * d;
    return t;
  };
  auto try_decompose = [&](std::vector<Cyc> f) -> bool {
    // subtract known constituents; add the residue if it is irreducible
    bool added = false;
    for (int i = 0; i < g.nirreps(); ++i) {
      Cyc c = g.inner(g.chars[i], f);
      if (!c.is_rational() || !is_integer(c.rat_value()) || c.rat_value() < 0)
        throw std::logic_error(g.name + ": non-integral tensor multiplicity");
      if (c.rat_value() == 0) continue;
      for (int t = 0; t < nc; ++t) f[t] = f[t] - g.chars[i][t].scaled(c.rat_value());
    }
    bool zero = true;
    for (auto& v : f) zero = zero && v.is_zero();
    if (zero) return false;
    Cyc norm = g.inner(f, f);
    if (norm.is_rational() && norm.rat_value() == 1) {
      push_irrep(f, "irr" + std::to_string(g.nirreps()));
      added = true;
    }
    return added;
  };

  bool progress = true;
  while (total() < g.order && progress) {
    progress = false;
    int n0 = g.nirreps();
    for (int i = 0; i < n0 && total() < g.order; ++i) {
      // symmetric and alternating squares
      std::vector<Cyc> s2(nc), l2(nc);
      for (int c = 0; c < nc; ++c) {
        Cyc sq = g.chars[i][c] * g.chars[i][c];
        Cyc at = g.chars[i][g.classes[c].sq_class];
        s2[c] = (sq + at).scaled(Rat(1, 2));
        l2[c] = (sq - at).scaled(Rat(1, 2));
      }
      progress = try_decompose(s2) || progress;
      progress = try_decompose(l2) || progress;
      for (int j = 0; j < n0 && total() < g.order; ++j) {
        std::vector<Cyc> p(nc);
        for (int c = 0; c < nc; ++c) p[c] = g.chars[i][c] * g.chars[j][c];
        progress = try_decompose(p) || progress;
      }
    }
  }
  if (total() != g.order)
    throw std::logic_error(g.name + ": character closure incomplete (sum of squares " +
                           std::to_string(total()) + " != " + std::to_string(g.order) + ")");
}
} // namespace

SU2Group build_group(const std::string& name) {
  SU2Group g;
  if (name.rfind("cyclic:", 0) == 0) {
    g = cyclic_group(std::stoi(name.substr(7)));
  } else if (name.rfind("binary-dihedral:", 0) == 0) {
    int n = std::stoi(name.substr(16));
    if (n < 2) throw std::invalid_argument("binary-dihedral: need n >= 2");
    g = binary_dihedral(n);
  } else {
    g = exceptional_seed(name);
    close_character_table(g);
  }
  Report v = validate_group(g);
  if (!v.all_ok()) {
    std::ostringstream os;
    os << name << ": character table validation failed:";
    for (auto& i : v.items)
      if (!i.ok) os << " [" << i.relation << " " << i.object << "]";
    throw std::logic_error(os.str());
  }
  return g;
}

Report validate_group(const SU2Group& g) {
  Report rp;
  long t = 0;
  for (long d : g.dims) t += d * d;
  rp.add("sum of squared degrees = |G|", g.name, t == g.order);
  rp.add("class sizes sum to |G|", g.name, [&] {
    long s = 0;
    for (auto& c : g.classes) s += c.size;
    return s == g.order;
  }());
  // row orthogonality
  bool rows = true;
  for (int i = 0; i < g.nirreps(); ++i)
    for (int j = 0; j < g.nirreps(); ++j) {
      Cyc v = g.inner(g.chars[i], g.chars[j]);
      rows = rows && v.is_rational() && v.rat_value() == (i == j ? 1 : 0);
    }
  rp.add("row orthogonality", g.name, rows);
  // column orthogonality
  bool cols = true;
  for (int c = 0; c < g.nclasses(); ++c)
    for (int d = 0; d < g.nclasses(); ++d) {
      Cyc acc(g.field);
      for (int i = 0; i < g.nirreps(); ++i)
        acc = acc + g.chars[i][c].conj() * g.chars[i][d];
      Rat want = (c == d) ? rat(g.order, g.classes[c].size) : Rat(0);
      cols = cols && acc.is_rational() && acc.rat_value() == want;
    }
  rp.add("column orthogonality", g.name, cols);
  // defining character is a genuine character: integral nonneg multiplicities
  bool defok = true;
  std::vector<Cyc> def(g.nclasses());
  for (int c = 0; c < g.nclasses(); ++c) def[c] = g.defining_char(c);
  Cyc selfn = g.inner(def, def);
  defok = selfn.is_rational();
  for (int i = 0; i < g.nirreps() && defok; ++i) {
    Cyc v = g.inner(g.chars[i], def);
    defok = v.is_rational() && is_integer(v.rat_value()) && v.rat_value() >= 0;
  }
  rp.add("defining character decomposes integrally", g.name, defok);
  // Lambda^2 of the defining representation is trivial (det = 1 in SU(2))
  bool l2ok = true;
  for (int c = 0; c < g.nclasses(); ++c) {
    Cyc sq = def[c] * def[c];
    Cyc at = def[g.classes[c].sq_class];
    Cyc l2 = (sq - at).scaled(Rat(1, 2));
    l2ok = l2ok && l2.is_rational() && l2.rat_value() == 1;
  }
  rp.add("Lambda^2(C^2) = triv", g.name, l2ok);
  return rp;
}

Graph mckay_graph(const SU2Group& g, std::string* affine_name) {
  const int k = g.nirreps();
  std::vector<Cyc> def(g.nclasses());
  for (int c = 0; c < g.nclasses(); ++c) def[c] = g.defining_char(c);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < k; ++a) {
    std::vector<Cyc> prod(g.nclasses());
    for (int c = 0; c < g.nclasses(); ++c) prod[c] = def[c] * g.chars[a][c];
    for (int b = 0; b < k; ++b) {
      Cyc v = g.inner(g.chars[b], prod);
      if (!v.is_rational() || !is_integer(v.rat_value()))
        throw std::logic_error("mckay_graph: non-integral multiplicity");
      long mult = v.rat_value().get_num().get_si();
      if (a == b && mult != 0) throw std::invalid_argument("mckay_graph: self-loop (degenerate)");
      if (mult > 1) throw std::invalid_argument("mckay_graph: multiple edge (degenerate)");
      if (mult == 1 && a < b) edges.push_back({a, b});
    }
  }
  std::vector<std::string> labels;
  for (int a = 0; a < k; ++a) labels.push_back(g.irrep_names[a]);
  Graph graph(labels, edges);
  DynkinClass dc = classify(graph);
  if (!dc.affine())
    throw std::logic_error("mckay_graph: the multiplicity graph is not affine Dynkin");
  if (affine_name) *affine_name = dc.name;
  return graph;
}

long sym_power_multiplicity(const SU2Group& g, int irrep, int n) {
  auto sp = g.sym_power_char(n);
  Cyc v = g.inner(g.chars[irrep], sp);
  if (!v.is_rational() || !is_integer(v.rat_value()) || v.rat_value() < 0)
    throw std::logic_error("sym_power_multiplicity: non-integral or negative result");
  return v.rat_value().get_num().get_si();
}

std::vector<std::vector<long>> inverse_cartan_table(const SU2Group& g, int maxn) {
  if (!g.is_binary())
    throw std::invalid_argument("inverse_cartan_table: identity asserted for binary groups only");
  Graph graph = mckay_graph(g);
  auto inv = cartan_inverse(graph, maxn);
  std::vector<std::vector<long>> out(g.nirreps(), std::vector<long>(maxn + 1));
  for (int a = 0; a < g.nirreps(); ++a)
    for (int n = 0; n <= maxn; ++n) {
      Rat v = inv[a][g.trivial].coeff(n);
      if (n % 2 == 1) v = -v;
      if (!is_integer(v)) throw std::logic_error("inverse_cartan_table: non-integral coefficient");
      out[a][n] = v.get_num().get_si();
    }
  return out;
}

LMat cross_product_cartan(const SU2Group& g) {
  if (!g.is_binary()) throw std::invalid_argument("cross_product_cartan: binary groups only");
  const int k = g.nirreps();
  std::vector<Cyc> def(g.nclasses());
  for (int c = 0; c < g.nclasses(); ++c) def[c] = g.defining_char(c);
  LMat out(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      // Lambda^0 = Lambda^2 = trivial, Lambda^1 = defining
      Laurent entry;
      Cyc c0 = g.inner(g.chars[a], g.chars[b]);
      std::vector<Cyc> prod(g.nclasses());
      for (int c = 0; c < g.nclasses(); ++c) prod[c] = def[c] * g.chars[b][c];
      Cyc c1 = g.inner(g.chars[a], prod);
      entry += Laurent(c0.rat_value());
      entry += Laurent::q(1, c1.rat_value());
      entry += Laurent::q(2, c0.rat_value());
      out.at(a, b) = entry;
    }
  return out;
}

} // namespace zz
