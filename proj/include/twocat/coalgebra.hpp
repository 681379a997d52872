#pragma once

#include <string>
#include <vector>

#include "twocat/bimod.hpp"

namespace twocat {

// The coalgebra 1-morphism of a cell 2-representation: carrier F(j,j) with
// comultiplication into the flattened F(j,j) o F(j,j) and counit into Id.
struct Coalgebra {
  int j = 0;
  OneMor carrier;
  OneMor carrierSq;  // flattened carrier o carrier
  TwoMor delta;
  TwoMor eps;
};

struct Comodule {
  int j = 0;
  OneMor carrier;
  OneMor carrierS;  // flattened carrier o F(j,j)
  TwoMor rho;
};

struct EquivalenceReport {
  bool pass = false;
  std::vector<std::string> lines;
};

// Machinery around the cell 2-representation at vertex j: the adjunction
// between restriction and - o F(j,j), the coalgebra it produces, comodules,
// and the hom-dimension comparisons of the equivalence.
class CellCoalgebra {
 public:
  CellCoalgebra(const BimodCat& cat, int j);

  const BimodCat& cat() const { return *C_; }
  int vertex() const { return j_; }
  const OneMor& S() const { return S_; }
  const Coalgebra& coalgebra() const { return coalg_; }

  // unit eta_T : T -> T o S (componentwise phi_{e_i, e_j, e_j})
  TwoMor eta(const OneMor& t) const;
  // counit eps_N : N o S -> N (componentwise id_N (x) phi_{e_j})
  TwoMor counit(const OneMor& n) const;
  // adjunction transport Hom_C(T, G) -> Hom_{C_j}(T, G o S) and its inverse;
  // true when the pair is mutually inverse (exactly one way, and onto the
  // cell-quotient dimension the other way)
  bool transportInvertible(const OneMor& t, const OneMor& g) const;

  bool coalgebraAxioms() const;  // coassociativity and both counit laws, exact

  Comodule comoduleFor(const OneMor& t) const;
  bool comoduleAxioms(const Comodule& m) const;
  std::vector<TwoMor> comoduleHomBasis(const Comodule& m, const Comodule& n) const;

  // the comodule morphism induced by a 2-morphism of the cell 2-representation:
  // the unique coaction-compatible representative of its class
  TwoMor theta(const TwoMor& f) const;
  bool thetaFunctorial(const TwoMor& f, const TwoMor& g) const;  // theta(f o g) = theta(f) o theta(g)

  EquivalenceReport verifyEquivalence(const std::vector<int>& iRange) const;

  Comodule cofree(const OneMor& f) const;
  bool cofreeCheck(const OneMor& f, const Comodule& x) const;

 private:
  const BimodCat* C_;
  int j_;
  OneMor S_;
  Coalgebra coalg_;

  TwoMor coactionFor(const OneMor& t) const;
  std::vector<Vec> idealRows(const OneMor& m, const OneMor& n) const;
};

}  // namespace twocat
