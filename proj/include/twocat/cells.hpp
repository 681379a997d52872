#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twocat/bimod.hpp"

namespace twocat {

// Finite multisemigroup on labels; products are multisets of labels. A pair
// with no entry is boundary-flagged (the product escapes the window).
struct MultiSemigroup {
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, std::vector<int>> product;  // sorted multiset

  int indexOf(const std::string& label) const;
  bool defined(int a, int b) const { return product.count({a, b}) > 0; }
  const std::vector<int>* tryProduct(int a, int b) const;
  bool allBoundary(int a) const;  // every product involving a is flagged
};

MultiSemigroup parseMultiSemigroupFile(const std::string& content);
std::string dExampleFixtureText(int window);      // F[z], z in [-window, window]
std::string rectBandFixtureText(int lo, int hi);  // f(i,j) on a square window
MultiSemigroup fromAlgebra(const BimodCat& cat);

struct CellPartition {
  // leqX[a][b]: a <=_X b (b is reachable from a)
  std::vector<std::vector<bool>> leqL, leqR, leqJ;
  std::vector<int> lCell, rCell, jCell, hCell, dCell;  // canonical class ids
  int count(const std::vector<int>& cells) const;
  std::vector<std::vector<int>> classesOf(const std::vector<int>& cells) const;
};

CellPartition greenCells(const MultiSemigroup& ms);

struct RegularityReport {
  bool stronglyRegular = false;
  std::string witness;
};

RegularityReport stronglyRegular(const MultiSemigroup& ms, const CellPartition& p, int jClassId);

// Hom dimensions inside the additive cell 2-representation N_j and its simple
// transitive quotient C_j (the quotient by the ideal spanned by phi_{a,b} with
// b in rad e_jAe_j).
struct CellRepHom {
  int nDim = 0;
  int cDim = 0;
};

CellRepHom cellRepHom(const BimodCat& cat, int j, const OneMor& m, const OneMor& n);

// Window stabilization: the partition restricted to the smaller window's
// labels must agree with the one computed on the enlarged window.
bool cellsStableUnderEnlargement(const BimodCat& small, const BimodCat& big);

}  // namespace twocat
