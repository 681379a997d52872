#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twocat/pathalg.hpp"

namespace twocat {

// One summand of a 1-morphism: the identity functor or F(i,j) = Ae_i (x) e_jA (x)_A -.
struct Summand {
  bool id = false;
  int i = 0, j = 0;
  static Summand Id() { return Summand{true, 0, 0}; }
  static Summand F(int i, int j) { return Summand{false, i, j}; }
  friend bool operator==(const Summand& a, const Summand& b) {
    return a.id == b.id && (a.id || (a.i == b.i && a.j == b.j));
  }
  std::string toString() const;
};

// Finite multiset of summands, in a fixed order.
struct OneMor {
  std::vector<Summand> summands;
  static OneMor zero() { return {}; }
  static OneMor identity() { return OneMor{{Summand::Id()}}; }
  static OneMor f(int i, int j) { return OneMor{{Summand::F(i, j)}}; }
  OneMor plus(const OneMor& o) const;
  bool isZero() const { return summands.empty(); }
  size_t size() const { return summands.size(); }
  friend bool operator==(const OneMor& a, const OneMor& b) { return a.summands == b.summands; }
  std::string toString() const;
};

// A 2-morphism between direct sums, stored blockwise in raw coordinates:
//   F(i,j) -> F(k,l): image of the generator over pairs (e_iAe_k) x (e_lAe_j)
//   F(i,j) -> Id    : image of the generator over e_iAe_j
//   Id -> F(k,l)    : family of components over window vertices v,
//                     each over pairs (e_vAe_k) x (e_lAe_v)
//   Id -> Id        : family over window vertices, each over e_vAe_v
// An empty vector denotes a zero block.
struct TwoMor {
  OneMor dom, cod;
  std::vector<std::vector<Vec>> blocks;  // [domIdx][codIdx]
  friend bool operator==(const TwoMor& a, const TwoMor& b);
};

struct HomSpace {
  OneMor dom, cod;
  std::vector<std::vector<std::vector<Vec>>> blockBasis;  // [di][ci] -> basis of valid maps
  int dim() const;
};

// Decomposition data for a composite of 1-morphisms: every summand pair
// (X, X') contributes copies indexed by a basis of the middle hom space
// (a single copy with middle = -1 when either factor is the identity).
struct ComposeEntry {
  size_t leftIdx, rightIdx;
  int middleGlobal;  // algebra basis index of beta, or -1
  size_t flatIdx;    // position in the flattened result
};

struct Composition {
  OneMor result;
  std::vector<ComposeEntry> entries;
};

struct ZAlgebra {
  std::vector<Vec> basis;  // non-identity basis families (raw Id->Id coordinates)
  // multiplication table over {id} + basis: products of non-identity elements
  std::vector<std::vector<Vec>> table;  // coords over basis (id never occurs in products)
  bool local = false;
  std::string witness;  // names a violation when local is false
};

struct AdjointReport {
  bool pass = false;
  int dualI = 0, dualJ = 0;  // the right adjoint of F(i,j) is F(sigma(j), i)
  std::vector<std::string> lines;
};

// The 2-category C_{A,X} on a window: one object, 1-morphisms generated by Id
// and the projective-bimodule functors F(i,j), X = Z.
class BimodCat {
 public:
  explicit BimodCat(const BoundPathAlgebra& A, int margin = -1);

  const BoundPathAlgebra& algebra() const { return *A_; }
  int margin() const { return margin_; }
  std::vector<int> interior() const { return A_->interiorVertices(margin_); }
  void requireInteriorSummand(const Summand& s) const;

  // ---- hom spaces -------------------------------------------------------
  int rawBlockDim(const Summand& x, const Summand& y) const;
  const HomSpace& homSpace(const OneMor& m, const OneMor& n) const;
  int homDim(const OneMor& m, const OneMor& n) const { return homSpace(m, n).dim(); }
  TwoMor basisTwoMor(const HomSpace& hs, int t) const;
  Vec homCoords(const HomSpace& hs, const TwoMor& f) const;
  TwoMor fromHomCoords(const HomSpace& hs, const Vec& coords) const;

  // ---- constructors for elementary 2-morphisms --------------------------
  TwoMor zeroTwoMor(const OneMor& m, const OneMor& n) const;
  TwoMor idTwoMor(const OneMor& m) const;
  // phi_{a,b}: F(i,j) -> F(k,l), generator |-> a (x) b
  TwoMor phiFF(const Summand& x, const Summand& y, const AlgElem& a, const AlgElem& b) const;
  // phi_a: F(i,j) -> Id
  TwoMor phiFI(const Summand& x, const AlgElem& a) const;
  // eta_{F(i,j)} = phi_{e_i, e_j, e_j}: F(i,j) -> F(i,j) o F(j,j)
  TwoMor unitEta(int i, int j) const;

  // ---- composition ------------------------------------------------------
  TwoMor vcompose(const TwoMor& f, const TwoMor& g) const;  // f after g
  Composition compose1(const OneMor& m, const OneMor& n) const;
  TwoMor hcompose(const TwoMor& f, const TwoMor& g) const;  // f (x) g on compose1 flats
  // canonical identification flatten(flatten(a,b),c) -> flatten(a,flatten(b,c)),
  // an identity-block permutation matching copy provenance
  TwoMor associator(const OneMor& a, const OneMor& b, const OneMor& c) const;
  TwoMor associatorInv(const OneMor& a, const OneMor& b, const OneMor& c) const;
  TwoMor scale(const TwoMor& f, const Rat& c) const;
  TwoMor add(const TwoMor& f, const TwoMor& g) const;
  bool isZero(const TwoMor& f) const;

  // ---- carrier realization (window cross-checks) ------------------------
  // Carrier coordinates of a 1-morphism: for F(i,j) the pairs
  // (e_pAe_i) x (e_jAe_q) over all window sandwiches (p,q); for Id the
  // algebra basis itself.
  int carrierDim(const OneMor& m) const;
  Mat realize(const TwoMor& f) const;
  // Triple coordinates of the unflattened composite of a summand pair, and
  // the split injections/projections of the decomposition isomorphism.
  int pairCarrierDim(const Summand& x, const Summand& y) const;
  Mat splitInjection(const Summand& x, const Summand& y, int middleGlobal) const;
  Mat splitProjection(const Summand& x, const Summand& y, int middleGlobal) const;
  // Independent realization of f (x) g on pair carriers (oracle for hcompose).
  Mat realizePairMap(const TwoMor& f, const TwoMor& g, const Summand& x, const Summand& y) const;
  bool verifySplit(const Summand& x, const Summand& y) const;

  // ---- structure --------------------------------------------------------
  const ZAlgebra& zAlgebra() const;
  const NakayamaData& nakayama() const;
  AdjointReport adjointCheck(int i, int j) const;

  // applies an elementary block map to a carrier element of x at sandwich (p,q)
  Vec applyElementary(const Summand& x, const Summand& y, const Vec& fvec, int p, int q,
                      const Vec& carrier) const;

  // raw coordinate helpers
  std::vector<std::pair<int, int>> pairBasis(int ti, int tj, int si, int sj) const;
  int pairIndex(int ti, int tj, int si, int sj, int aIdx, int bIdx) const;
  int familyOffset(const Summand& y, int v) const;  // offset of vertex v in Id->y coords

 private:
  const BoundPathAlgebra* A_;
  int margin_;
  mutable std::map<std::string, HomSpace> homCache_;
  mutable std::optional<ZAlgebra> z_;
  mutable std::optional<NakayamaData> nakayama_;

  std::vector<Vec> blockBasisFor(const Summand& x, const Summand& y) const;
  std::vector<Vec> solveIdToF(const Summand& y) const;
  std::vector<Vec> zBasisRaw() const;
  void computeZ() const;
};

}  // namespace twocat
