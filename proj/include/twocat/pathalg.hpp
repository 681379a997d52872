#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twocat/matrix.hpp"

namespace twocat {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

// Instantiated over every base vertex v of the window: an arrow named
// stem(v) from v+srcOff to v+tgtOff, kept when both endpoints stay inside.
struct ArrowTemplate {
  std::string stem;
  int srcOff = 0;
  int tgtOff = 0;
};

struct Quiver {
  int lo = 0, hi = 0;  // inclusive vertex window
  std::vector<ArrowTemplate> templates;
  std::vector<Arrow> explicitArrows;
  bool templated() const { return !templates.empty(); }
};

// Reference to an arrow inside a relation word: either stem(offset),
// instantiated over the window, or a fixed explicit arrow name.
struct ArrowRef {
  std::string stem;
  std::optional<int> offset;
};

struct RelationSpec {
  struct Term {
    Rat coeff;
    std::vector<ArrowRef> word;  // traversal order
  };
  std::vector<Term> terms;
  bool templated() const;
};

// A path stored in traversal order. Convention throughout: e_i A e_j is
// spanned by the path classes with source j and target i, and the algebra
// product x*y (x in e_iAe_j, y in e_jAe_k) traverses y first, then x.
struct Path {
  int src = 0, tgt = 0;
  std::vector<int> arrows;  // arrow indices, traversal order
  int len() const { return static_cast<int>(arrows.size()); }
  friend bool operator==(const Path& a, const Path& b) {
    return a.src == b.src && a.tgt == b.tgt && a.arrows == b.arrows;
  }
};

struct NakayamaData {
  std::map<int, int> sigma;  // defined on interior vertices where the dual is projective
  bool selfInjective = false;
};

using AlgElem = Vec;  // coordinates over the global path-class basis

class BoundPathAlgebra {
 public:
  static BoundPathAlgebra build(const Quiver& q, const std::vector<RelationSpec>& rels, int n);
  static BoundPathAlgebra zigzag(int lo, int hi);

  int lo() const { return quiver_.lo; }
  int hi() const { return quiver_.hi; }
  int nilpotency() const { return n_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // Margin inside which windowed results equal the infinite-quiver truth.
  int defaultMargin() const { return quiver_.templated() ? n_ : 0; }
  bool isInterior(int v, int margin) const { return v >= quiver_.lo + margin && v <= quiver_.hi - margin; }
  std::vector<int> interiorVertices(int margin) const;
  void requireInterior(int v, int margin) const;

  // Global path-class basis.
  int dim() const { return static_cast<int>(basis_.size()); }
  struct BasisInfo {
    int tgt, src, len;
    std::string name;
  };
  const BasisInfo& info(int g) const { return basis_[g]; }
  const Path& basisPathOf(int g) const { return basisPath_[g]; }
  const std::vector<int>& homBasis(int i, int j) const;  // e_iAe_j, global indices
  int dimHom(int i, int j) const { return static_cast<int>(homBasis(i, j).size()); }

  AlgElem zero() const { return AlgElem(dim()); }
  AlgElem unit(int v) const;       // e_v
  AlgElem basisElem(int g) const;  // indicator vector
  AlgElem mul(const AlgElem& x, const AlgElem& y) const;
  const std::vector<std::pair<int, Rat>>& mulBasis(int g1, int g2) const;
  bool isZeroElem(const AlgElem& x) const;
  std::string elemToString(const AlgElem& x) const;

  bool checkAssociativity() const;  // all basis triples, exact
  bool checkIdempotents() const;    // e_i e_j = delta_ij e_i on the window

  // Path classes of length >= k (a basis of rad^k restricted to the window).
  std::vector<int> radicalPower(int k) const;

  struct Module {
    int vertex = 0;
    std::vector<int> basis;       // global algebra indices (for projectives)
    std::vector<Mat> action;      // action of every algebra basis element
    std::vector<std::string> names;
  };
  Module indecomposableProjective(int i) const;

  struct SimpleRadical {
    int vertex;
    std::vector<int> radicalBasis;  // classes in Ae_i of length >= 1
    // The simple S_i itself is 1-dimensional: e_i acts as identity, every
    // class of positive length acts as zero.
  };
  SimpleRadical simpleAndRadical(int i) const;
  NakayamaData nakayama() const;

 private:
  Quiver quiver_;
  int n_ = 2;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> arrowByName_;

  struct Stratum {
    std::vector<Path> paths;               // ordered by (length, lex arrow sequence)
    std::map<std::vector<int>, int> index; // word -> position
    std::vector<Vec> rrefRows;             // reduced relation rows over path coordinates
    std::vector<int> pivotOfRow;
    std::vector<int> basisPaths;           // non-pivot path positions
    std::vector<int> globalOf;             // basisPaths -> global index
  };
  std::map<std::pair<int, int>, Stratum> strata_;  // (tgt, src)
  std::vector<BasisInfo> basis_;
  std::vector<Path> basisPath_;
  std::map<std::pair<int, int>, std::vector<int>> homBasis_;
  mutable std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> multTable_;

  const Stratum* stratum(int tgt, int src) const;
  // Normal form of a raw path as coordinates over the global basis.
  void reduceIntoGlobal(const Path& p, const Rat& coeff, AlgElem& acc) const;
  std::string pathName(const Path& p) const;
  void enumeratePaths(int maxLen, std::map<std::pair<int, int>, std::vector<Path>>& out) const;
  friend struct PathalgBuilder;
};

struct QuiverFile {
  Quiver quiver;
  std::vector<RelationSpec> relations;
  int n = 2;
};

QuiverFile parseQuiverFile(const std::string& content);
std::string zigzagQuiverFileText(int lo, int hi);

}  // namespace twocat
