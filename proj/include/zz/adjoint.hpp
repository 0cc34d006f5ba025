#pragma once

#include "zz/lmat.hpp"
#include "zz/modrep.hpp"
#include "zz/report.hpp"
#include "zz/roots.hpp"

#include <memory>

namespace zz {

// The adjoint representation R of U_q on the basis {x_mu} u {h_alpha}, as
// exact Laurent matrices, in both the canonical coordinates and the
// dual-canonical coordinates (x_mu, l_alpha) of the lattice I.
class AdjointRep {
public:
  explicit AdjointRep(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int nroots() const { return rs_.nroots(); }
  int rank() const { return rs_.rank(); }
  int dim() const { return nroots() + rank(); }
  int xindex(int root_idx) const { return root_idx; }
  int hindex(int alpha) const { return nroots() + alpha; }

  const LMat& E(int a) const { return E_[a]; }
  const LMat& F(int a) const { return F_[a]; }
  const LMat& K(int a) const { return K_[a]; }
  const LMat& Kinv(int a) const { return Kinv_[a]; }
  // the same operators on dual-canonical coordinates
  const LMat& Ed(int a) const { return Ed_[a]; }
  const LMat& Fd(int a) const { return Fd_[a]; }
  const LMat& Kd(int a) const { return Kd_[a]; }
  const LMat& Kdinv(int a) const { return Kdinv_[a]; }

  const LMat& cartan() const { return cartan_; } // quantum Cartan of the graph

  // weight of a basis slot: root coordinates, or zero vector for h/l slots
  std::vector<int> slot_weight(int slot) const;
  long slot_pairing(int slot, int alpha) const; // (weight, alpha)

private:
  RootSystem rs_;
  LMat cartan_;
  std::vector<LMat> E_, F_, K_, Kinv_, Ed_, Fd_, Kd_, Kdinv_;
};

using AdjointRepPtr = std::shared_ptr<const AdjointRep>;

// every relation of the quantum group presentation as an exact matrix identity
Report verify_uq_relations(const AdjointRep& rep);

// Class vector in the dual-canonical coordinates (x_mu first, then l_alpha).
struct GrothVec {
  std::vector<Laurent> v;
  bool operator==(const GrothVec& o) const { return v == o.v; }
};
GrothVec groth_zero(const AdjointRep& rep);
GrothVec apply_dual(const LMat& op, const GrothVec& x);

// canonical coordinates (x_mu, h_alpha) of x; throws if x is outside the
// canonical lattice I' (the weight-0 part must be C_q times a Laurent vector)
std::vector<Laurent> to_canonical(const AdjointRep& rep, const GrothVec& x);

// the tau-invariant semilinear form; first argument must lie in I'
Laurent semilinear_form(const AdjointRep& rep, const GrothVec& x, const GrothVec& y);

// psi_R (antilinear) and omega_R (linear) on dual-canonical coordinates
GrothVec psi_R(const AdjointRep& rep, const GrothVec& x);
GrothVec omega_R(const AdjointRep& rep, const GrothVec& x);

// matrix-level duality and adjointness identities: (psiR), (psiR-inv),
// (u-invariance), tau-invariance on generators, and tau psi tau = psi
Report verify_dualities(const AdjointRep& rep);

// ---- the category C ----

struct AdjointCtx {
  Graph g;
  AlgebraPtr A; // zigzag algebra of g
  AdjointRepPtr rep;
};
AdjointCtx make_adjoint_ctx(const Graph& g);

// object of C: formal direct sum of C_mu payloads (graded vector spaces) and
// a C_0 payload (a graded module over the zigzag algebra)
struct CTerm {
  int weight = -1;         // index into rs.roots(), -1 for weight zero
  std::map<int, int> vs;   // graded dims when weight >= 0
  Module mod;              // when weight == -1
};
struct CObj {
  std::vector<CTerm> terms;
};

CObj cobj_simple_weight(const AdjointCtx& c, int root_idx, int shift = 0); // C_mu{shift}
CObj cobj_module(const Module& m);
bool cobj_is_zero(const CObj& x);

CObj apply_E(const AdjointCtx& c, int alpha, const CObj& x);
CObj apply_F(const AdjointCtx& c, int alpha, const CObj& x);
CObj apply_K(const AdjointCtx& c, int alpha, const CObj& x, bool inverse = false);
CObj cobj_shift(const CObj& x, int k);
CObj cobj_sum(const CObj& x, const CObj& y);
CObj apply_psi(const AdjointCtx& c, const CObj& x);
CObj apply_omega(const AdjointCtx& c, const CObj& x);

GrothVec class_of(const AdjointCtx& c, const CObj& x);

// isomorphism decision in C (graded-dimension equality on C_mu parts, module
// isomorphism with certificate on the C_0 part)
bool cobj_isomorphic(const AdjointCtx& c, const CObj& x, const CObj& y, std::string* why = nullptr);

// sum_i q^i dim Hom_C(X{i}, Y)
Laurent cobj_hom_poly(const AdjointCtx& c, const CObj& x, const CObj& y);

// object-level verification of the functor lifts on the standard family
// {C_mu} u {L_b, P_b}: functor-isom relations, ef-fe-iso, adjointness as
// graded Hom-dimension identities, Euler form, dualities, decategorification
Report verify_functor_relations(const AdjointCtx& c);
Report verify_adjointness(const AdjointCtx& c);
Report verify_euler_form(const AdjointCtx& c);
Report verify_dualities_on_objects(const AdjointCtx& c);
Report verify_decategorification(const AdjointCtx& c);

std::vector<std::pair<std::string, CObj>> standard_family(const AdjointCtx& c);

} // namespace zz
