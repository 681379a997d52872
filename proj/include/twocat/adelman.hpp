#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twocat/bimod.hpp"

namespace twocat {

// A presented additive category: objects with biproducts and finite hom
// spaces carried by explicit bases. Two models ship: the hom-categories of
// BimodCat, and a plain vector-space model used by the unit tests.
struct AddCat {
  using Obj = std::vector<int>;  // formal sum of indecomposable labels

  std::function<std::vector<std::string>()> labelNames;
  // hom basis between single labels x -> y: dimension only; morphisms are
  // stored as coordinate vectors over the blockwise bases
  std::function<int(int, int)> homDimLabels;
  // composition of elementary basis morphisms: coords of (f after g)
  // g: x -> y (basis index gi), f: y -> z (basis index fi) -> vector over basis of x -> z
  std::function<Vec(int x, int y, int z, int gi, int fi)> composeBasis;
  // coordinates of id_x in the basis of Hom(x, x)
  std::function<Vec(int x)> idCoords;

  static Obj zeroObj() { return {}; }
  static Obj plus(const Obj& a, const Obj& b) {
    Obj r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
  }
  int homDim(const Obj& a, const Obj& b) const {
    int d = 0;
    for (int x : a)
      for (int y : b) d += homDimLabels(x, y);
    return d;
  }
  std::string objName(const Obj& o) const;
};

// Morphisms between formal sums: block coordinate vectors.
struct AMor {
  AddCat::Obj dom, cod;
  Vec coords;  // blockwise: dom-major over (dom label, cod label, basis index)
};

class AddCatOps {
 public:
  explicit AddCatOps(const AddCat& cat) : cat_(&cat) {}
  const AddCat& cat() const { return *cat_; }

  AMor zeroMor(const AddCat::Obj& a, const AddCat::Obj& b) const;
  AMor idMor(const AddCat::Obj& a) const;
  AMor compose(const AMor& f, const AMor& g) const;  // f after g
  AMor add(const AMor& f, const AMor& g) const;
  AMor scale(const AMor& f, const Rat& c) const;
  bool isZero(const AMor& f) const;
  // the (di, ci) block of f as a morphism between single labels
  Vec block(const AMor& f, size_t di, size_t ci) const;
  void setBlock(AMor& f, size_t di, size_t ci, const Vec& v) const;
  // composition of basis element t1 of Hom(a, b) with t2 of Hom(b, c)
  AMor basisMor(const AddCat::Obj& a, const AddCat::Obj& b, int t) const;

 private:
  const AddCat* cat_;
  std::vector<std::pair<size_t, size_t>> blockLayout(const AddCat::Obj& a, const AddCat::Obj& b,
                                                     std::vector<int>& offsets) const;
};

// ---------------------------------------------------------------------------
// fan Adelman abelianisation over an AddCat

// Object: legs alpha_i : Y_i -> X and beta_j : X -> Z_j, all but the first
// `bound` legs zero. The bound is normalized to the number of stored legs.
struct AdelObj {
  std::vector<AddCat::Obj> Y;
  AddCat::Obj X;
  std::vector<AddCat::Obj> Z;
  std::vector<AMor> alpha;  // alpha[i] : Y[i] -> X
  std::vector<AMor> beta;   // beta[j] : X -> Z[j]
  int bound() const { return static_cast<int>(std::max(Y.size(), Z.size())); }
};

// Morphism: components (s_{ij}, r, t_{mn}); equality is the homotopy test.
struct AdelMor {
  std::vector<std::vector<AMor>> s;  // s[i][j] : Y_i -> Y'_j
  AMor r;                            // X -> X'
  std::vector<std::vector<AMor>> t;  // t[m][n] : Z_m -> Z'_n
};

class Adelman {
 public:
  explicit Adelman(const AddCat& cat) : cat_(cat), ops_(cat_) {}
  const AddCatOps& ops() const { return ops_; }

  AdelObj embed(const AddCat::Obj& x) const;
  AdelObj zeroObj() const { return embed(AddCat::zeroObj()); }
  AdelMor embedMor(const AMor& f) const;
  AdelMor idMor(const AdelObj& a) const;
  AdelMor zeroMor(const AdelObj& a, const AdelObj& b) const;
  // f after g, where g : a -> b and f : b -> c
  AdelMor compose(const AdelMor& f, const AdelMor& g, const AdelObj& a, const AdelObj& b,
                  const AdelObj& c) const;
  AdelMor add(const AdelMor& f, const AdelMor& g) const;
  AdelMor scale(const AdelMor& f, const Rat& c) const;

  // morphism spaces: a basis of Hom(a, b) is carried by r-components modulo
  // the homotopy subspace alpha' o Hom(X, Y') + Hom(Z, X') o beta
  int homDim(const AdelObj& a, const AdelObj& b) const;
  std::vector<AdelMor> homBasis(const AdelObj& a, const AdelObj& b) const;
  bool isHomotopic(const AdelMor& f, const AdelMor& g, const AdelObj& a, const AdelObj& b) const;
  bool isZeroMor(const AdelMor& f, const AdelObj& a, const AdelObj& b) const;

  struct KernelData {
    AdelObj obj;
    AdelMor incl;  // obj -> domain of f
  };
  KernelData kernel(const AdelMor& f, const AdelObj& a, const AdelObj& b) const;
  struct CokernelData {
    AdelObj obj;
    AdelMor proj;  // codomain of f -> obj
  };
  CokernelData cokernel(const AdelMor& f, const AdelObj& a, const AdelObj& b) const;

  // universal property checks by linear solvability over the hom bases
  bool verifyKernel(const AdelMor& f, const AdelObj& a, const AdelObj& b, const KernelData& k,
                    const std::vector<AdelObj>& testObjects) const;
  bool verifyCokernel(const AdelMor& f, const AdelObj& a, const AdelObj& b, const CokernelData& c,
                      const std::vector<AdelObj>& testObjects) const;

  // the paper's dimension bound for hom spaces (raw morphism-triple space)
  long long homDimBound(const AdelObj& a, const AdelObj& b) const;
  bool homDimBoundCheck(const AdelObj& a, const AdelObj& b) const;

  // isomorphism testing: a mutually inverse pair up to homotopy exists
  bool isIsomorphic(const AdelObj& a, const AdelObj& b) const;

  // collapse to the classical single-leg form (cross-check of the fan shape)
  AdelObj collapseToSums(const AdelObj& a) const;

 private:
  AddCat cat_;
  AddCatOps ops_;
  // homotopy subspace of Hom(X_a, X_b) in r-coordinates
  std::vector<Vec> homotopyRows(const AdelObj& a, const AdelObj& b) const;
};

// the tensor composition of the 2-categorical construction, for the bimod model
class BimodAdelman {
 public:
  explicit BimodAdelman(const BimodCat& bimod);
  const Adelman& adel() const { return *adel_; }
  const BimodCat& bimod() const { return *C_; }
  const AddCat& cat() const { return cat_; }

  // labels of the base category are the indecomposable 1-morphisms
  AddCat::Obj objOf(const OneMor& m) const;
  OneMor oneMorOf(const AddCat::Obj& o) const;
  AMor fromTwoMor(const TwoMor& f) const;
  TwoMor toTwoMor(const AMor& f) const;

  // the four-case composition of 1-morphisms in the abelianised 2-category
  AdelObj tensorCompose(const AdelObj& a, const AdelObj& b) const;
  // evaluation at an (embedded) 1-morphism S: componentwise - o S
  AdelObj evalObj(const AdelObj& a, const OneMor& S) const;
  AdelMor evalMor(const AdelMor& f, const AdelObj& a, const AdelObj& b, const OneMor& S) const;
  // kernels evaluate to kernels: the exactness of evaluation at S
  bool evaluationExactness(const AdelMor& f, const AdelObj& a, const AdelObj& b, const OneMor& S,
                           const std::vector<AdelObj>& testObjects) const;

 private:
  const BimodCat* C_;
  std::shared_ptr<std::vector<Summand>> labels_;
  AddCat cat_;
  std::unique_ptr<Adelman> adel_;
  int labelOf(const Summand& s) const;
  AMor whiskerRight(const AMor& f, const OneMor& S) const;
};

}  // namespace twocat
