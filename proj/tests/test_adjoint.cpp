#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zz/adjoint.hpp"

using namespace zz;

namespace {
void dump_failures(const Report& rp) {
  for (auto& i : rp.items)
    if (!i.ok) MESSAGE(i.relation, " @ ", i.object, " : ", i.witness);
}
} // namespace

TEST_CASE("adjoint representation tables") {
  auto ctx = make_adjoint_ctx(Graph::named("A2"));
  const auto& rep = *ctx.rep;
  CHECK(rep.dim() == 8); // |Phi| + rank = 6 + 2
  CHECK(AdjointRep(generate_roots(Graph::named("A1"))).dim() == 3);

  const auto& rs = rep.roots();
  int a = 0;
  int xa = rs.root_index(rs.simple(a));
  int xma = rs.root_index(rs.negate(rs.simple(a)));
  // E x_{-a} = h_a
  CHECK(rep.E(a).at(rep.hindex(a), xma) == Laurent(1));
  // F h_a = (q + q^-1) x_{-a}
  CHECK(rep.F(a).at(xma, rep.hindex(a)) == Laurent::q(1) + Laurent::q(-1));
  // E x_a = 0
  for (int r = 0; r < rep.dim(); ++r) CHECK(rep.E(a).at(r, xa).is_zero());
  // K x_mu = q^{(a,mu)} x_mu
  CHECK(rep.K(a).at(xa, xa) == Laurent::q(2));
}

TEST_CASE("quantum group relations hold for A1 A2 A3 D4") {
  for (const char* name : {"A1", "A2", "A3", "D4"}) {
    auto rep = AdjointRep(generate_roots(Graph::named(name)));
    Report rp = verify_uq_relations(rep);
    dump_failures(rp);
    CHECK(rp.all_ok());
    CHECK(rp.items.size() > 0);
  }
}

TEST_CASE("semilinear form on basis") {
  auto ctx = make_adjoint_ctx(Graph::named("A2"));
  const auto& rep = *ctx.rep;
  // <h_a, h_b> via classes of projectives: [P_a] = q h_a
  CObj P0 = cobj_module(projective(ctx.A, 0));
  CObj P1 = cobj_module(projective(ctx.A, 1));
  GrothVec h0 = class_of(ctx, P0), h1 = class_of(ctx, P1);
  // <q h, q h> = <h, h>
  CHECK(semilinear_form(rep, h0, h0) == Laurent(1) + Laurent::q(2));
  CHECK(semilinear_form(rep, h0, h1) == Laurent::q(1));
  // <x_mu, x_mu> = 1, distinct weights orthogonal
  CObj c0 = cobj_simple_weight(ctx, 0), c1 = cobj_simple_weight(ctx, 1);
  CHECK(semilinear_form(rep, class_of(ctx, c0), class_of(ctx, c0)) == Laurent(1));
  CHECK(semilinear_form(rep, class_of(ctx, c0), class_of(ctx, c1)).is_zero());
  // antilinearity
  GrothVec fx = h0;
  Laurent f = Laurent::q(2) + Laurent(3);
  for (auto& t : fx.v) t = t * f;
  CHECK(semilinear_form(rep, fx, h1) == f.bar() * semilinear_form(rep, h0, h1));
}

TEST_CASE("matrix dualities") {
  for (const char* name : {"A2", "A3"}) {
    auto rep = AdjointRep(generate_roots(Graph::named(name)));
    Report rp = verify_dualities(rep);
    dump_failures(rp);
    CHECK(rp.all_ok());
  }
}

TEST_CASE("functor case analysis") {
  auto ctx = make_adjoint_ctx(Graph::named("A2"));
  const auto& rs = ctx.rep->roots();
  int a = 0;
  int ma = rs.root_index(rs.negate(rs.simple(a)));
  // E(C_{-a}) = P_a{-1}
  CObj e = apply_E(ctx, a, cobj_simple_weight(ctx, ma));
  std::string why;
  CHECK(cobj_isomorphic(ctx, e, cobj_module(projective(ctx.A, a).shifted(-1)), &why));
  // F(L_a) = C_{-a} (one dimension, degree 0)
  CObj f = apply_F(ctx, a, cobj_module(simple(ctx.A, a)));
  CHECK(cobj_isomorphic(ctx, f, cobj_simple_weight(ctx, ma), &why));
  // K(C_mu) = C_mu{(mu,a)}
  for (int i = 0; i < rs.nroots(); ++i) {
    long p = rs.pairing(rs.roots()[i], rs.simple(a));
    CHECK(cobj_isomorphic(ctx, apply_K(ctx, a, cobj_simple_weight(ctx, i)),
                          cobj_simple_weight(ctx, i, (int)p), &why));
  }
  // E annihilates weights with (mu,a) in {0, 1, 2}
  for (int i = 0; i < rs.nroots(); ++i) {
    long p = rs.pairing(rs.roots()[i], rs.simple(a));
    CObj img = apply_E(ctx, a, cobj_simple_weight(ctx, i));
    if (p >= 0 && p != -2) CHECK(cobj_is_zero(img) == (p >= 0));
  }
  // classes: [P_a] = q h_a and [L_a] = q l_a
  GrothVec cp = class_of(ctx, cobj_module(projective(ctx.A, a)));
  auto canon = to_canonical(*ctx.rep, cp);
  CHECK(canon[ctx.rep->hindex(a)] == Laurent::q(1));
  for (int i = 0; i < rs.nroots(); ++i) CHECK(canon[i].is_zero());
  GrothVec cl = class_of(ctx, cobj_module(simple(ctx.A, a).shifted(3)));
  CHECK(cl.v[ctx.rep->hindex(a)] == Laurent::q(4)); // q^4 l_a
}

TEST_CASE("functor relations on the family (A2)") {
  auto ctx = make_adjoint_ctx(Graph::named("A2"));
  Report rp = verify_functor_relations(ctx);
  dump_failures(rp);
  CHECK(rp.all_ok());
  CHECK((int)rp.items.size() > 100);
}

TEST_CASE("adjointness as hom identities (A2)") {
  auto ctx = make_adjoint_ctx(Graph::named("A2"));
  Report rp = verify_adjointness(ctx);
  dump_failures(rp);
  CHECK(rp.all_ok());
}

TEST_CASE("euler form (A2)") {
  auto ctx = make_adjoint_ctx(Graph::named("A2"));
  Report rp = verify_euler_form(ctx);
  dump_failures(rp);
  CHECK(rp.all_ok());
}

TEST_CASE("dualities on objects (A2)") {
  auto ctx = make_adjoint_ctx(Graph::named("A2"));
  Report rp = verify_dualities_on_objects(ctx);
  dump_failures(rp);
  CHECK(rp.all_ok());
}

TEST_CASE("decategorification squares commute (A2)") {
  auto ctx = make_adjoint_ctx(Graph::named("A2"));
  Report rp = verify_decategorification(ctx);
  dump_failures(rp);
  CHECK(rp.all_ok());
}
