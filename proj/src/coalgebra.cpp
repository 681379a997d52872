#include "twocat/coalgebra.hpp"

#include <sstream>

#include "twocat/cells.hpp"
#include "twocat/error.hpp"

namespace twocat {

CellCoalgebra::CellCoalgebra(const BimodCat& cat, int j) : C_(&cat), j_(j) {
  const NakayamaData& nk = cat.nakayama();
  if (!nk.selfInjective) fail(Errc::unsupported, "cell coalgebra requires a self-injective algebra");
  cat.algebra().requireInterior(j, cat.margin());
  S_ = OneMor::f(j, j);
  coalg_.j = j;
  coalg_.carrier = S_;
  coalg_.carrierSq = cat.compose1(S_, S_).result;
  // counit: the image of id_S under the adjunction, phi_{e_j} : F(j,j) -> Id
  coalg_.eps = cat.phiFI(Summand::F(j, j), cat.algebra().unit(j));
  // comultiplication: the transported ([S,S] coev_S) o coev_S
  coalg_.delta = coactionFor(S_);
  if (!coalgebraAxioms())
    fail(Errc::construction_bug, "coalgebra axioms fail for the constructed comultiplication");
}

TwoMor CellCoalgebra::eta(const OneMor& t) const {
  Composition comp = C_->compose1(t, S_);
  TwoMor out = C_->zeroTwoMor(t, comp.result);
  const BoundPathAlgebra& A = C_->algebra();
  int ej = -1;
  for (int g : A.homBasis(j_, j_))
    if (A.info(g).len == 0) ej = g;
  for (const auto& e : comp.entries) {
    if (e.middleGlobal != ej) continue;
    const Summand& s = t.summands[e.leftIdx];
    if (s.id || s.j != j_)
      fail(Errc::not_in_cell_rep, "eta needs objects of add L_" + std::to_string(j_));
    out.blocks[e.leftIdx][e.flatIdx] = C_->idTwoMor(OneMor{{s}}).blocks[0][0];
  }
  return out;
}

TwoMor CellCoalgebra::counit(const OneMor& n) const {
  return C_->hcompose(C_->idTwoMor(n), coalg_.eps);
}

TwoMor CellCoalgebra::coactionFor(const OneMor& t) const {
  // transported ([S,t] coev_S) o coev_{S,t}: t -> (t o S) o S -> t o S
  TwoMor coevT = eta(t);                       // t -> t o S
  TwoMor coevS = eta(S_);                      // S -> S o S
  TwoMor mid = C_->hcompose(C_->idTwoMor(t), coevS);  // t o S -> t o (S o S)
  TwoMor composite = C_->vcompose(mid, coevT);        // t -> t o (S o S)
  TwoMor assocInv = C_->associatorInv(t, S_, S_);     // -> (t o S) o S
  TwoMor leftAssoc = C_->vcompose(assocInv, composite);
  OneMor tS = C_->compose1(t, S_).result;
  TwoMor epsTS = counit(tS);  // (t o S) o S -> t o S
  return C_->vcompose(epsTS, leftAssoc);
}

bool CellCoalgebra::transportInvertible(const OneMor& t, const OneMor& g) const {
  const HomSpace& hsC = C_->homSpace(t, g);
  OneMor gS = C_->compose1(g, S_).result;
  const HomSpace& hsQ = C_->homSpace(t, gS);
  TwoMor etaT = eta(t);
  TwoMor epsG = counit(g);
  // forward: alpha |-> (alpha (x) id_S) o eta_t ; inverse: beta |-> eps_g o beta
  std::vector<Vec> image;
  for (int a = 0; a < hsC.dim(); ++a) {
    TwoMor alpha = C_->basisTwoMor(hsC, a);
    TwoMor fwd = C_->vcompose(C_->hcompose(alpha, C_->idTwoMor(S_)), etaT);
    TwoMor back = C_->vcompose(epsG, fwd);
    if (!(back == alpha)) return false;  // eps o (alpha (x) id) o eta = alpha exactly
    image.push_back(C_->homCoords(hsQ, fwd));
  }
  // injectivity is implied by the exact retraction; the image must complement
  // the cell-representation ideal: dim image = quotient dimension
  size_t rank = span_dim(image, hsQ.dim());
  if (rank != static_cast<size_t>(hsC.dim())) return false;
  CellRepHom q = cellRepHom(*C_, j_, t, gS);
  return static_cast<int>(rank) == q.cDim;
}

bool CellCoalgebra::coalgebraAxioms() const {
  const TwoMor& d = coalg_.delta;
  // counit laws
  TwoMor leftCounit = C_->vcompose(C_->hcompose(coalg_.eps, C_->idTwoMor(S_)), d);
  TwoMor rightCounit = C_->vcompose(C_->hcompose(C_->idTwoMor(S_), coalg_.eps), d);
  TwoMor idS = C_->idTwoMor(S_);
  if (!(leftCounit == idS) || !(rightCounit == idS)) return false;
  // coassociativity, compared through the canonical associator
  TwoMor lhs = C_->vcompose(C_->associator(S_, S_, S_),
                            C_->vcompose(C_->hcompose(d, C_->idTwoMor(S_)), d));
  TwoMor rhs = C_->vcompose(C_->hcompose(C_->idTwoMor(S_), d), d);
  return lhs == rhs;
}

Comodule CellCoalgebra::comoduleFor(const OneMor& t) const {
  for (const Summand& s : t.summands)
    if (s.id || s.j != j_)
      fail(Errc::not_in_cell_rep, "object " + s.toString() + " is not in add L_" + std::to_string(j_));
  Comodule m;
  m.j = j_;
  m.carrier = t;
  m.carrierS = C_->compose1(t, S_).result;
  m.rho = coactionFor(t);
  if (!comoduleAxioms(m)) fail(Errc::construction_bug, "comodule axioms fail");
  return m;
}

bool CellCoalgebra::comoduleAxioms(const Comodule& m) const {
  // counit law: (id (x) eps) o rho = id
  TwoMor counitLaw = C_->vcompose(C_->hcompose(C_->idTwoMor(m.carrier), coalg_.eps), m.rho);
  if (!(counitLaw == C_->idTwoMor(m.carrier))) return false;
  // coassociativity: (rho (x) id) o rho = assocInv o (id (x) delta) o rho
  TwoMor lhs = C_->vcompose(C_->hcompose(m.rho, C_->idTwoMor(S_)), m.rho);
  TwoMor rhs = C_->vcompose(C_->associatorInv(m.carrier, S_, S_),
                            C_->vcompose(C_->hcompose(C_->idTwoMor(m.carrier), coalg_.delta), m.rho));
  return lhs == rhs;
}

std::vector<TwoMor> CellCoalgebra::comoduleHomBasis(const Comodule& m, const Comodule& n) const {
  if (m.j != n.j) fail(Errc::coalgebra_mismatch, "comodules over different coalgebras");
  const HomSpace& hs = C_->homSpace(m.carrier, n.carrier);
  int d = hs.dim();
  std::vector<Vec> rows;  // linear condition (g (x) id_C) o rho_m - rho_n o g = 0
  const HomSpace& target = C_->homSpace(m.carrier, n.carrierS);
  for (int t = 0; t < d; ++t) {
    TwoMor g = C_->basisTwoMor(hs, t);
    TwoMor lhs = C_->vcompose(C_->hcompose(g, C_->idTwoMor(S_)), m.rho);
    TwoMor rhs = C_->vcompose(n.rho, g);
    Vec diff = C_->homCoords(target, C_->add(lhs, C_->scale(rhs, Rat(-1))));
    rows.push_back(std::move(diff));
  }
  // solutions: kernel of the coefficient matrix (columns = basis of Hom)
  Mat sys(target.dim(), d);
  for (int t = 0; t < d; ++t)
    for (int r = 0; r < target.dim(); ++r) sys.at(r, t) = rows[t][r];
  std::vector<TwoMor> basis;
  for (const Vec& k : kernel_basis(sys)) basis.push_back(C_->fromHomCoords(hs, k));
  return basis;
}

std::vector<Vec> CellCoalgebra::idealRows(const OneMor& m, const OneMor& n) const {
  // the cell-representation ideal inside Hom(m, n): phi_{a,b} with b in rad
  const HomSpace& hs = C_->homSpace(m, n);
  const BoundPathAlgebra& A = C_->algebra();
  std::vector<Vec> rows;
  for (size_t di = 0; di < m.size(); ++di)
    for (size_t ci = 0; ci < n.size(); ++ci) {
      auto pairs = C_->pairBasis(m.summands[di].i, n.summands[ci].i, j_, j_);
      for (size_t t = 0; t < pairs.size(); ++t) {
        if (A.info(pairs[t].second).len < 1) continue;
        TwoMor gen = C_->zeroTwoMor(m, n);
        Vec raw(pairs.size());
        raw[t] = Rat(1);
        gen.blocks[di][ci] = std::move(raw);
        rows.push_back(C_->homCoords(hs, gen));
      }
    }
  return rows;
}

TwoMor CellCoalgebra::theta(const TwoMor& f) const {
  // the unique representative of [f] that commutes with the coactions
  Comodule m = comoduleFor(f.dom);
  Comodule n = comoduleFor(f.cod);
  const HomSpace& hs = C_->homSpace(f.dom, f.cod);
  const HomSpace& target = C_->homSpace(f.dom, n.carrierS);
  std::vector<Vec> ideal = idealRows(f.dom, f.cod);
  auto square = [&](const TwoMor& g) {
    TwoMor lhs = C_->vcompose(C_->hcompose(g, C_->idTwoMor(S_)), m.rho);
    TwoMor rhs = C_->vcompose(n.rho, g);
    return C_->homCoords(target, C_->add(lhs, C_->scale(rhs, Rat(-1))));
  };
  Vec f0 = square(f);
  // solve square(f + sum c_k ideal_k) = 0
  Mat sys(target.dim(), ideal.size());
  for (size_t k = 0; k < ideal.size(); ++k) {
    TwoMor gen = C_->fromHomCoords(hs, ideal[k]);
    Vec col = square(gen);
    for (int r = 0; r < target.dim(); ++r) sys.at(r, k) = col[r];
  }
  Vec rhs(target.dim());
  for (int r = 0; r < target.dim(); ++r) rhs[r] = -f0[r];
  auto sol = solve_linear(sys, rhs);
  if (!sol) fail(Errc::construction_bug, "theta: no coaction-compatible representative");
  TwoMor out = f;
  for (size_t k = 0; k < ideal.size(); ++k) {
    if (sol->particular[k].isZero()) continue;
    out = C_->add(out, C_->scale(C_->fromHomCoords(hs, ideal[k]), sol->particular[k]));
  }
  return out;
}

bool CellCoalgebra::thetaFunctorial(const TwoMor& f, const TwoMor& g) const {
  TwoMor lhs = theta(C_->vcompose(f, g));
  TwoMor rhs = C_->vcompose(theta(f), theta(g));
  // both commute with the coactions and agree modulo the ideal, so they agree
  // exactly when theta is well defined; verify directly
  if (lhs == rhs) return true;
  // rhs commutes as a composite of comodule morphisms; subtract and re-solve
  return false;
}

EquivalenceReport CellCoalgebra::verifyEquivalence(const std::vector<int>& iRange) const {
  EquivalenceReport rep;
  rep.pass = true;
  const NakayamaData& nk = C_->nakayama();
  for (int i1 : iRange)
    for (int i2 : iRange) {
      OneMor t1 = OneMor::f(i1, j_), t2 = OneMor::f(i2, j_);
      Comodule m1 = comoduleFor(t1), m2 = comoduleFor(t2);
      auto basis = comoduleHomBasis(m1, m2);
      CellRepHom q = cellRepHom(*C_, j_, t1, t2);
      std::ostringstream os;
      os << "dim Hom_comod(Theta F(" << i1 << "," << j_ << "), Theta F(" << i2 << "," << j_
         << ")) = " << basis.size() << " ; dim Hom_{C_" << j_ << "} = " << q.cDim;
      bool ok = static_cast<int>(basis.size()) == q.cDim;
      // injectivity into the quotient: comodule homs meet the ideal trivially
      std::vector<Vec> comodRows;
      const HomSpace& hs = C_->homSpace(t1, t2);
      for (const TwoMor& b : basis) comodRows.push_back(C_->homCoords(hs, b));
      std::vector<Vec> ideal = idealRows(t1, t2);
      size_t together = comodRows.size() + ideal.size();
      std::vector<Vec> all = comodRows;
      all.insert(all.end(), ideal.begin(), ideal.end());
      if (span_dim(all, hs.dim()) != together) ok = false;
      if (!ok) rep.pass = false;
      rep.lines.push_back(os.str());
    }
  // the proof's chain step: dim Hom(F o [S,S], G) = dim Hom([S,S], F* o G)
  for (int k : iRange)
    for (int l : iRange) {
      OneMor F = OneMor::f(k, l);
      OneMor G = OneMor::f(k, j_);
      int lhs = C_->homDim(C_->compose1(F, S_).result, G);
      OneMor Fdual = OneMor::f(nk.sigma.at(l), k);
      int rhs = C_->homDim(S_, C_->compose1(Fdual, G).result);
      std::ostringstream os;
      os << "dim Hom(F(" << k << "," << l << ")o[S,S], F(" << k << "," << j_ << ")) = " << lhs
         << " ; dim Hom([S,S], F*o-) = " << rhs;
      if (lhs != rhs) rep.pass = false;
      rep.lines.push_back(os.str());
    }
  return rep;
}

Comodule CellCoalgebra::cofree(const OneMor& f) const {
  Comodule m;
  m.j = j_;
  m.carrier = C_->compose1(f, S_).result;
  m.carrierS = C_->compose1(m.carrier, S_).result;
  // coaction id_f (x) delta, re-associated onto (f o S) o S
  TwoMor rho = C_->vcompose(C_->associatorInv(f, S_, S_),
                            C_->hcompose(C_->idTwoMor(f), coalg_.delta));
  m.rho = rho;
  if (!comoduleAxioms(m)) fail(Errc::construction_bug, "cofree comodule axioms fail");
  return m;
}

bool CellCoalgebra::cofreeCheck(const OneMor& f, const Comodule& x) const {
  Comodule cf = cofree(f);
  auto basis = comoduleHomBasis(x, cf);
  int rhs = C_->homDim(x.carrier, f);
  if (static_cast<int>(basis.size()) != rhs) return false;
  // unit and counit of the Forg -| (- o [S,S]) adjunction on components:
  // eta_{(X,rho)} = rho_X (a comodule morphism X -> cofree(X-carrier)) and
  // sigma_F = id_F (x) eps_S with the triangle identities
  TwoMor sigmaF = C_->hcompose(C_->idTwoMor(f), coalg_.eps);  // f o S -> f
  // right triangle: (sigma_F (x) id_S) o rho_cofree = id_{f o S}
  TwoMor tri = C_->vcompose(C_->hcompose(sigmaF, C_->idTwoMor(S_)), cf.rho);
  if (!(tri == C_->idTwoMor(cf.carrier))) return false;
  // left triangle for x: (sigma at x-carrier...) o eta_x = counit law of x
  TwoMor lt = C_->vcompose(C_->hcompose(C_->idTwoMor(x.carrier), coalg_.eps), x.rho);
  return lt == C_->idTwoMor(x.carrier);
}

}  // namespace twocat
