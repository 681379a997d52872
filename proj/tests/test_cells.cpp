#include <doctest.h>

#include <set>

#include "twocat/cells.hpp"
#include "twocat/error.hpp"

using namespace twocat;

TEST_CASE("trivial monoid has one cell everywhere") {
  MultiSemigroup ms = parseMultiSemigroupFile("[labels]\none\n[products]\none * one = one\n");
  auto p = greenCells(ms);
  CHECK(p.count(p.lCell) == 1);
  CHECK(p.count(p.rCell) == 1);
  CHECK(p.count(p.jCell) == 1);
  CHECK(p.count(p.hCell) == 1);
}

TEST_CASE("the shifted-composition example has exactly two L-cells") {
  MultiSemigroup ms = parseMultiSemigroupFile(dExampleFixtureText(6));
  auto p = greenCells(ms);
  CHECK(p.count(p.lCell) == 2);
  CHECK(p.count(p.rCell) == 2);
  CHECK(p.count(p.jCell) == 2);
  int one = ms.indexOf("one");
  for (size_t a = 0; a < ms.labels.size(); ++a)
    if (static_cast<int>(a) != one) CHECK(p.lCell[a] != p.lCell[one]);
}

TEST_CASE("rectangular band: L-cells fix the second index, H-cells are singletons") {
  MultiSemigroup ms = parseMultiSemigroupFile(rectBandFixtureText(0, 2));
  auto p = greenCells(ms);
  CHECK(p.count(p.lCell) == 4);  // {one} + one cell per column
  CHECK(p.count(p.rCell) == 4);  // {one} + one cell per row
  CHECK(p.count(p.jCell) == 2);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k) {
        int a = ms.indexOf("f(" + std::to_string(i) + "," + std::to_string(j) + ")");
        int bL = ms.indexOf("f(" + std::to_string(k) + "," + std::to_string(j) + ")");
        int bR = ms.indexOf("f(" + std::to_string(i) + "," + std::to_string(k) + ")");
        CHECK(p.lCell[a] == p.lCell[bL]);
        CHECK(p.rCell[a] == p.rCell[bR]);
      }
  int fJ = p.jCell[ms.indexOf("f(0,0)")];
  auto rep = stronglyRegular(ms, p, fJ);
  CHECK(rep.stronglyRegular);
  std::set<int> hs;
  for (size_t a = 0; a < ms.labels.size(); ++a)
    if (p.jCell[a] == fJ) hs.insert(p.hCell[a]);
  CHECK(hs.size() == 9);  // L_i cap R_j = {f(i,j)}
}

TEST_CASE("a fused H-cell is detected as not strongly regular") {
  // every product decomposes as F (+) G, so {F, G} is a single H-cell
  std::string text =
      "[labels]\nF G\n[products]\n"
      "F * F = F, G\nF * G = F, G\nG * F = F, G\nG * G = F, G\n";
  MultiSemigroup ms = parseMultiSemigroupFile(text);
  auto p = greenCells(ms);
  int j = p.jCell[ms.indexOf("F")];
  CHECK(p.jCell[ms.indexOf("G")] == j);
  CHECK(p.hCell[ms.indexOf("F")] == p.hCell[ms.indexOf("G")]);
  auto rep = stronglyRegular(ms, p, j);
  CHECK(!rep.stronglyRegular);
}

TEST_CASE("zigzag multisemigroup has two strongly regular J-cells") {
  auto A = BoundPathAlgebra::zigzag(-4, 4);
  BimodCat C(A);
  MultiSemigroup ms = fromAlgebra(C);
  auto p = greenCells(ms);
  CHECK(p.count(p.jCell) == 2);
  CHECK(p.count(p.dCell) == 2);
  CHECK(p.jCell == p.dCell);
  int interiorCount = static_cast<int>(C.interior().size());
  CHECK(p.count(p.lCell) == interiorCount + 1);
  CHECK(p.count(p.rCell) == interiorCount + 1);
  for (int i : C.interior())
    for (int j : C.interior())
      for (int k : C.interior()) {
        int a = ms.indexOf(Summand::F(i, j).toString());
        CHECK(p.lCell[a] == p.lCell[ms.indexOf(Summand::F(k, j).toString())]);
        CHECK(p.rCell[a] == p.rCell[ms.indexOf(Summand::F(i, k).toString())]);
      }
  for (int jc : {p.jCell[ms.indexOf("Id")], p.jCell[ms.indexOf("F(0,0)")]})
    CHECK(stronglyRegular(ms, p, jc).stronglyRegular);
  CHECK(p.jCell[ms.indexOf("Id")] != p.jCell[ms.indexOf("F(0,0)")]);
}

TEST_CASE("arrowless algebra realizes the rectangular band") {
  // dim e_jAe_k = delta_{jk}, so F(i,j) o F(k,l) = delta_{jk} F(i,l): the
  // matrix-unit multisemigroup plus an isolated identity cell
  Quiver q;
  q.lo = 0;
  q.hi = 2;
  auto A = BoundPathAlgebra::build(q, {}, 2);
  BimodCat C(A, 0);
  MultiSemigroup ms = fromAlgebra(C);
  CHECK(ms.tryProduct(ms.indexOf("F(0,1)"), ms.indexOf("F(1,2)"))->size() == 1);
  CHECK(ms.tryProduct(ms.indexOf("F(0,1)"), ms.indexOf("F(2,2)"))->empty());
  auto p = greenCells(ms);
  CHECK(p.count(p.jCell) == 2);
  CHECK(p.count(p.lCell) == 4);
  CHECK(p.count(p.rCell) == 4);
  int fJ = p.jCell[ms.indexOf("F(0,0)")];
  CHECK(stronglyRegular(ms, p, fJ).stronglyRegular);
}

TEST_CASE("zigzag cell partition is stable under window enlargement") {
  auto small = BoundPathAlgebra::zigzag(-4, 4);
  auto big = BoundPathAlgebra::zigzag(-7, 7);
  BimodCat cs(small);
  BimodCat cb(big);
  CHECK(cellsStableUnderEnlargement(cs, cb));
}

TEST_CASE("cell 2-representation hom dimensions and the quotient") {
  auto A = BoundPathAlgebra::zigzag(-4, 4);
  BimodCat C(A);
  auto h = cellRepHom(C, 0, OneMor::f(1, 0), OneMor::f(0, 0));
  CHECK(h.nDim == 2);  // dim e_1Ae_0 * dim e_0Ae_0
  CHECK(h.cDim == 1);  // spanned by phi_{a, e_0}
  auto h2 = cellRepHom(C, 0, OneMor::f(0, 0), OneMor::f(0, 0));
  CHECK(h2.nDim == 4);
  CHECK(h2.cDim == 2);
  auto h3 = cellRepHom(C, 0, OneMor::zero(), OneMor::f(0, 0));
  CHECK(h3.nDim == 0);
  CHECK(h3.cDim == 0);
  CHECK_THROWS_AS(cellRepHom(C, 0, OneMor::f(0, 1), OneMor::f(0, 0)), Error);
  CHECK_THROWS_AS(cellRepHom(C, 0, OneMor::identity(), OneMor::f(0, 0)), Error);
}

TEST_CASE("all-boundary labels are rejected") {
  std::string text = "[labels]\nx y\n[products]\nx * x = x\n";
  MultiSemigroup ms = parseMultiSemigroupFile(text);
  CHECK_THROWS_AS(greenCells(ms), Error);
}
