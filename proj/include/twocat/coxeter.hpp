#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twocat/bigint.hpp"
#include "twocat/laurent.hpp"
#include "twocat/matrix.hpp"

namespace twocat {

// entry value for an infinite bond
constexpr int kInfLabel = -1;

struct CoxeterMatrix {
  std::vector<std::vector<int>> m;
  int rank() const { return static_cast<int>(m.size()); }
  void validate() const;  // symmetric, 1 on the diagonal, off-diagonal >= 2 or inf
  CoxeterMatrix submatrix(const std::vector<int>& I) const;
};

CoxeterMatrix parseCoxeterMatrixFile(const std::string& content);

struct ParabolicData {
  std::vector<int> I;
  bool finite = false;
  BigInt order;         // when finite
  long long longestLen = 0;  // l(w_I) when finite
  std::string typeName;      // e.g. "A2 x A1"
};

struct CoxElt {
  std::vector<int> word;  // ShortLex-least reduced word, global generator indices
  int length() const { return static_cast<int>(word.size()); }
};

struct GradedRankResult {
  LaurentPoly rank;           // sum of q^{2 l(w)} over minimal coset representatives
  bool factorizationOk = false;  // poincare(I) * rank(q^2 -> q) == poincare(J)
  bool palindromicOk = false;    // center 2(l(w_J) - l(w_I))
};

struct InvariantsResult {
  std::vector<int> dims;                         // per polynomial degree 0..cap
  std::vector<std::vector<std::string>> bases;   // monomial-combination strings
  LaurentPoly hilbert;                           // doubled grading: degree d -> q^{2d}
};

struct BottSamelsonResult {
  LaurentPoly unshifted;  // product of the step ranks
  LaurentPoly shifted;    // with the restriction-step shifts applied
  long long shiftExponent = 0;
};

class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterMatrix m);

  const CoxeterMatrix& matrix() const { return m_; }
  int rank() const { return m_.rank(); }
  std::vector<int> fullSet() const;

  ParabolicData finiteType(const std::vector<int>& I, long long crossCheckCap = 100000) const;
  std::vector<CoxElt> enumerate(const std::vector<int>& I, int lengthCap,
                                long long countCap = 100000) const;
  CoxElt longestElement(const std::vector<int>& I) const;
  LaurentPoly poincare(const std::vector<int>& I) const;
  std::vector<CoxElt> doubleCosetMinima(const std::vector<int>& I, const std::vector<int>& J,
                                        int lengthCap, long long countCap = 100000) const;
  GradedRankResult gradedRank(const std::vector<int>& I, const std::vector<int>& J) const;
  InvariantsResult reynoldsInvariants(const std::vector<int>& I, int degreeCap) const;
  std::vector<std::vector<int>> soergelObjects() const;
  // chain I_1 < J_1 > I_2 < J_2 > ... > I_n, passed as the alternating list
  BottSamelsonResult bottSamelson(const std::vector<std::vector<int>>& chain) const;

  // descent tests on canonical words of the full system (property suites)
  bool leftDescent(const CoxElt& w, int s) const;
  bool rightDescent(const CoxElt& w, int s) const;
  // a stable key identifying the group element of a word (matrix model only)
  std::string elementKey(const std::vector<int>& word) const;

  bool matrixModelSupported(const std::vector<int>& I) const;

 private:
  CoxeterMatrix m_;
};

}  // namespace twocat
