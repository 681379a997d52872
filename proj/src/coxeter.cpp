#include "twocat/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "twocat/error.hpp"

namespace twocat {

// ---------------------------------------------------------------------------
// matrix parsing and validation

CoxeterMatrix parseCoxeterMatrixFile(const std::string& content) {
  CoxeterMatrix cm;
  std::istringstream in(content);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok == "inf") {
        row.push_back(kInfLabel);
      } else {
        try {
          row.push_back(std::stoi(tok));
        } catch (...) {
          fail(Errc::parse_error, "bad matrix entry: " + tok);
        }
      }
    }
    if (!row.empty()) cm.m.push_back(std::move(row));
  }
  if (cm.m.empty()) fail(Errc::parse_error, "empty coxeter matrix");
  cm.validate();
  return cm;
}

void CoxeterMatrix::validate() const {
  int n = rank();
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) fail(Errc::parse_error, "coxeter matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (m[i][i] != 1) fail(Errc::parse_error, "diagonal entries must be 1");
    for (int j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) fail(Errc::parse_error, "coxeter matrix must be symmetric");
      if (i != j && m[i][j] != kInfLabel && m[i][j] < 2)
        fail(Errc::parse_error, "off-diagonal entries must be >= 2 or inf");
    }
  }
}

CoxeterMatrix CoxeterMatrix::submatrix(const std::vector<int>& I) const {
  CoxeterMatrix s;
  for (int a : I) {
    std::vector<int> row;
    for (int b : I) row.push_back(m[a][b]);
    s.m.push_back(std::move(row));
  }
  return s;
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix m) : m_(std::move(m)) { m_.validate(); }

std::vector<int> CoxeterSystem::fullSet() const {
  std::vector<int> s(rank());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

// ---------------------------------------------------------------------------
// engines

namespace {

std::optional<int> cartanProduct(int label) {
  switch (label) {
    case 2: return 0;
    case 3: return 1;
    case 4: return 2;
    case 6: return 3;
    case kInfLabel: return 4;
    default: return std::nullopt;
  }
}

struct MatrixModel {
  std::vector<int> gens;  // global generator indices
  std::vector<Mat> g;     // generator action on the subsystem's root basis

  MatrixModel(const CoxeterMatrix& full, const std::vector<int>& I) {
    gens = I;
    int n = static_cast<int>(I.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) a[i][i] = Rat(2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int label = full.m[I[i]][I[j]];
        auto prod = cartanProduct(label);
        if (!prod)
          fail(Errc::unsupported_label,
               "edge label " + std::to_string(label) + " has no rational geometric realization");
        switch (*prod) {
          case 0: break;
          case 1: a[i][j] = a[j][i] = Rat(-1); break;
          case 2:
            a[i][j] = Rat(-1);
            a[j][i] = Rat(-2);
            break;
          case 3:
            a[i][j] = Rat(-1);
            a[j][i] = Rat(-3);
            break;
          case 4: a[i][j] = a[j][i] = Rat(-2); break;
        }
      }
    for (int i = 0; i < n; ++i) {
      Mat gi = Mat::identity(n);
      for (int j = 0; j < n; ++j) gi.at(i, j) -= a[i][j];
      g.push_back(std::move(gi));
    }
  }

  static bool negative(const Vec& v) {
    bool some = false;
    for (const Rat& x : v) {
      if (x.sign() > 0) return false;
      if (x.sign() < 0) some = true;
    }
    return some;
  }

  bool rightDescent(const Mat& w, int localS) const {
    Vec col(w.rows());
    for (size_t r = 0; r < w.rows(); ++r) col[r] = w.at(r, localS);
    return negative(col);
  }

  static std::string key(const Mat& w) {
    std::string s;
    for (size_t r = 0; r < w.rows(); ++r)
      for (size_t c = 0; c < w.cols(); ++c) {
        s += w.at(r, c).toString();
        s += ',';
      }
    return s;
  }

  struct Rec {
    std::vector<int> word;  // local letters
    Mat mat, inv;
  };

  std::vector<Rec> enumerate(int lengthCap, long long countCap) const {
    int n = static_cast<int>(gens.size());
    std::vector<Rec> all;
    std::map<std::string, size_t> seen;
    Rec id{{}, Mat::identity(n), Mat::identity(n)};
    seen[key(id.mat)] = 0;
    all.push_back(std::move(id));
    std::vector<size_t> level{0};
    for (int len = 1; len <= lengthCap && !level.empty(); ++len) {
      std::vector<size_t> next;
      for (size_t idx : level) {
        for (int s = 0; s < n; ++s) {
          Rec cur = all[idx];
          if (rightDescent(cur.mat, s)) continue;
          Mat nm = cur.mat * g[s];
          std::string k = key(nm);
          if (seen.count(k)) continue;
          Rec nr;
          nr.word = cur.word;
          nr.word.push_back(s);
          nr.mat = std::move(nm);
          nr.inv = g[s] * cur.inv;
          if (static_cast<long long>(all.size()) >= countCap)
            fail(Errc::resource_limit, "enumeration cap exceeded");
          seen[k] = all.size();
          next.push_back(all.size());
          all.push_back(std::move(nr));
        }
      }
      level = std::move(next);
    }
    return all;
  }
};

// rank-2 subsystems with an arbitrary label: alternating-word normal forms
struct DihedralModel {
  int label;  // m_{st}, possibly kInfLabel

  struct NF {
    int len = 0;
    int first = 0;  // local letter starting the word
  };

  bool finite() const { return label != kInfLabel; }
  static int other(int s) { return s == 0 ? 1 : 0; }
  int lastLetter(const NF& w) const { return w.len % 2 == 1 ? w.first : other(w.first); }

  NF canonical(NF w) const {
    if (w.len == 0 || (finite() && w.len == label)) w.first = 0;
    return w;
  }
  bool rightDescent(const NF& w, int s) const {
    if (w.len == 0) return false;
    if (finite() && w.len == label) return true;
    return lastLetter(w) == s;
  }
  bool leftDescent(const NF& w, int s) const {
    if (w.len == 0) return false;
    if (finite() && w.len == label) return true;
    return w.first == s;
  }
  NF rightMul(const NF& w, int s) const {
    NF r = w;
    if (rightDescent(w, s)) {
      r.len = w.len - 1;
      // at the longest element, drop the final s from the expression ending in s
      if (finite() && w.len == label) r.first = r.len % 2 == 1 ? other(s) : s;
      return canonical(r);
    }
    r.len = w.len + 1;
    if (w.len == 0) r.first = s;
    return canonical(r);
  }
  NF leftMul(int s, const NF& w) const {
    NF r = w;
    if (leftDescent(w, s)) {
      r.len = w.len - 1;
      r.first = finite() && w.len == label ? other(s) : w.len > 1 ? other(w.first) : 0;
      return canonical(r);
    }
    r.len = w.len + 1;
    r.first = s;
    return canonical(r);
  }
  std::vector<int> wordOf(const NF& w) const {
    std::vector<int> out;
    int cur = w.first;
    for (int t = 0; t < w.len; ++t) {
      out.push_back(cur);
      cur = other(cur);
    }
    return out;
  }
  std::vector<NF> enumerate(int lengthCap) const {
    std::vector<NF> out{NF{0, 0}};
    int maxLen = finite() ? std::min(lengthCap, label) : lengthCap;
    for (int len = 1; len <= maxLen; ++len) {
      if (finite() && len == label) {
        out.push_back(NF{len, 0});
      } else {
        out.push_back(NF{len, 0});
        out.push_back(NF{len, 1});
      }
    }
    return out;
  }
};

BigInt factorial(int n) {
  BigInt f(1);
  for (int k = 2; k <= n; ++k) f *= BigInt(k);
  return f;
}

BigInt pow2(int n) {
  BigInt f(1);
  for (int k = 0; k < n; ++k) f *= BigInt(2);
  return f;
}

struct ComponentType {
  bool finite = false;
  BigInt order;
  long long longestLen = 0;
  std::string name = "infinite";
};

ComponentType classifyComponent(const CoxeterMatrix& full, const std::vector<int>& comp) {
  ComponentType t;
  int n = static_cast<int>(comp.size());
  auto label = [&](int a, int b) { return full.m[comp[a]][comp[b]]; };
  if (n == 1) return {true, BigInt(2), 1, "A1"};
  std::vector<std::pair<std::pair<int, int>, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (label(i, j) != 2) edges.push_back({{i, j}, label(i, j)});
  for (auto& e : edges)
    if (e.second == kInfLabel) return t;
  if (static_cast<int>(edges.size()) != n - 1) return t;  // contains a cycle
  std::vector<int> deg(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (auto& e : edges) {
    ++deg[e.first.first];
    ++deg[e.first.second];
    adj[e.first.first].push_back(e.first.second);
    adj[e.first.second].push_back(e.first.first);
  }
  int maxDeg = *std::max_element(deg.begin(), deg.end());
  if (maxDeg > 3) return t;
  int branches = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
  if (branches > 1) return t;
  if (branches == 1) {
    for (auto& e : edges)
      if (e.second != 3) return t;
    int bv = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    std::vector<long long> arms;
    for (int start : adj[bv]) {
      long long len = 1;
      int prev = bv, cur = start;
      while (deg[cur] == 2) {
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    long long a = arms[0], b = arms[1], c = arms[2];
    if (a == 1 && b == 1)
      return {true, pow2(n - 1) * factorial(n), static_cast<long long>(n) * (n - 1),
              "D" + std::to_string(n)};
    if (a == 1 && b == 2 && c == 2) return {true, BigInt(51840), 36, "E6"};
    if (a == 1 && b == 2 && c == 3) return {true, BigInt(2903040), 63, "E7"};
    if (a == 1 && b == 2 && c == 4) return {true, BigInt::fromString("696729600"), 120, "E8"};
    return t;
  }
  // a path
  int end = -1;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 1) end = i;
  std::vector<int> path{end};
  int prev = -1, cur = end;
  while (static_cast<int>(path.size()) < n) {
    int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    path.push_back(cur);
  }
  std::vector<int> labels;
  for (int k = 0; k + 1 < n; ++k) labels.push_back(label(path[k], path[k + 1]));
  if (n == 2) {
    long long mll = labels[0];
    std::string nm = mll == 3   ? "A2"
                     : mll == 4 ? "B2"
                     : mll == 6 ? "G2"
                                : "I2(" + std::to_string(mll) + ")";
    return {true, BigInt(2 * mll), mll, nm};
  }
  int big = 0;
  for (int l : labels)
    if (l != 3) ++big;
  if (big == 0)
    return {true, factorial(n + 1), static_cast<long long>(n) * (n + 1) / 2, "A" + std::to_string(n)};
  if (big == 1) {
    int pos = 0, val = 0;
    for (size_t k = 0; k < labels.size(); ++k)
      if (labels[k] != 3) {
        pos = static_cast<int>(k);
        val = labels[k];
      }
    bool atEnd = pos == 0 || pos == static_cast<int>(labels.size()) - 1;
    if (val == 4 && atEnd)
      return {true, pow2(n) * factorial(n), static_cast<long long>(n) * n, "B" + std::to_string(n)};
    if (val == 4 && n == 4 && pos == 1) return {true, BigInt(1152), 24, "F4"};
    if (val == 5 && atEnd && n == 3) return {true, BigInt(120), 15, "H3"};
    if (val == 5 && atEnd && n == 4) return {true, BigInt(14400), 60, "H4"};
  }
  return t;
}

std::vector<std::vector<int>> componentsOf(const CoxeterMatrix& full, const std::vector<int>& I) {
  std::vector<std::vector<int>> comps;
  std::set<int> left(I.begin(), I.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t k = 0; k < comp.size(); ++k) {
      for (auto it = left.begin(); it != left.end();) {
        if (full.m[comp[k]][*it] != 2) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

void sortElts(std::vector<CoxElt>& v) {
  std::sort(v.begin(), v.end(), [](const CoxElt& a, const CoxElt& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
}

}  // namespace

bool CoxeterSystem::matrixModelSupported(const std::vector<int>& I) const {
  for (size_t a = 0; a < I.size(); ++a)
    for (size_t b = a + 1; b < I.size(); ++b)
      if (!cartanProduct(m_.m[I[a]][I[b]])) return false;
  return true;
}

ParabolicData CoxeterSystem::finiteType(const std::vector<int>& I, long long crossCheckCap) const {
  ParabolicData pd;
  pd.I = I;
  pd.finite = true;
  pd.order = BigInt(1);
  pd.longestLen = 0;
  std::vector<std::string> names;
  for (const auto& comp : componentsOf(m_, I)) {
    ComponentType t = classifyComponent(m_, comp);
    if (!t.finite) {
      pd.finite = false;
      pd.typeName = "infinite";
      return pd;
    }
    pd.order *= t.order;
    pd.longestLen += t.longestLen;
    names.push_back(t.name);
  }
  std::sort(names.begin(), names.end());
  for (size_t k = 0; k < names.size(); ++k) pd.typeName += (k ? " x " : "") + names[k];
  if (pd.typeName.empty()) pd.typeName = "trivial";
  bool enumerable = matrixModelSupported(I) || I.size() <= 2;
  if (pd.finite && enumerable && pd.order <= BigInt(crossCheckCap)) {
    auto all = enumerate(I, static_cast<int>(pd.longestLen) + 1, crossCheckCap + 1);
    if (BigInt(static_cast<long long>(all.size())) != pd.order)
      fail(Errc::construction_bug, "classification order disagrees with enumeration");
    long long maxLen = 0;
    for (const auto& w : all) maxLen = std::max<long long>(maxLen, w.length());
    if (maxLen != pd.longestLen)
      fail(Errc::construction_bug, "classification longest length disagrees with enumeration");
  }
  return pd;
}

std::vector<CoxElt> CoxeterSystem::enumerate(const std::vector<int>& I, int lengthCap,
                                             long long countCap) const {
  std::vector<CoxElt> out;
  if (matrixModelSupported(I)) {
    MatrixModel model(m_, I);
    for (const auto& rec : model.enumerate(lengthCap, countCap)) {
      CoxElt e;
      for (int s : rec.word) e.word.push_back(I[s]);
      out.push_back(std::move(e));
    }
    sortElts(out);
    return out;
  }
  if (I.size() == 2) {
    DihedralModel dm{m_.m[I[0]][I[1]]};
    for (const auto& nf : dm.enumerate(lengthCap)) {
      CoxElt e;
      for (int s : dm.wordOf(nf)) e.word.push_back(I[s]);
      out.push_back(std::move(e));
      if (static_cast<long long>(out.size()) > countCap)
        fail(Errc::resource_limit, "enumeration cap exceeded");
    }
    sortElts(out);
    return out;
  }
  fail(Errc::unsupported_label, "no geometric realization and not a dihedral subsystem");
}

CoxElt CoxeterSystem::longestElement(const std::vector<int>& I) const {
  ParabolicData pd = finiteType(I);
  if (!pd.finite) fail(Errc::infinite_parabolic, "longest element of an infinite parabolic");
  if (!matrixModelSupported(I)) {
    DihedralModel dm{m_.m[I[0]][I[1]]};
    DihedralModel::NF w{dm.label, 0};
    CoxElt e;
    for (int s : dm.wordOf(w)) e.word.push_back(I[s]);
    return e;
  }
  MatrixModel model(m_, I);
  Mat w = Mat::identity(I.size());
  std::vector<int> word;
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t s = 0; s < I.size(); ++s) {
      if (!model.rightDescent(w, static_cast<int>(s))) {
        w = w * model.g[s];
        word.push_back(static_cast<int>(s));
        grew = true;
        break;
      }
    }
  }
  if (static_cast<long long>(word.size()) != pd.longestLen)
    fail(Errc::construction_bug, "greedy ascent missed the longest element");
  if (pd.order <= BigInt(100000)) {
    auto all = model.enumerate(static_cast<int>(pd.longestLen), 100001);
    std::string k = MatrixModel::key(w);
    for (const auto& rec : all)
      if (MatrixModel::key(rec.mat) == k) {
        CoxElt e;
        for (int s : rec.word) e.word.push_back(I[s]);
        return e;
      }
  }
  CoxElt e;
  for (int s : word) e.word.push_back(I[s]);
  return e;
}

LaurentPoly CoxeterSystem::poincare(const std::vector<int>& I) const {
  ParabolicData pd = finiteType(I);
  if (!pd.finite) fail(Errc::infinite_parabolic, "poincare polynomial of an infinite parabolic");
  LaurentPoly p;
  for (const auto& w : enumerate(I, static_cast<int>(pd.longestLen), 1000000))
    p.set(w.length(), p.coeff(w.length()) + 1);
  return p;
}

std::vector<CoxElt> CoxeterSystem::doubleCosetMinima(const std::vector<int>& I,
                                                     const std::vector<int>& J, int lengthCap,
                                                     long long countCap) const {
  auto full = fullSet();
  std::vector<CoxElt> reps;
  if (matrixModelSupported(full)) {
    MatrixModel model(m_, full);
    auto all = model.enumerate(lengthCap, countCap);
    std::map<std::string, size_t> index;
    for (size_t k = 0; k < all.size(); ++k) index[MatrixModel::key(all[k].mat)] = k;
    auto leftDesc = [&](const MatrixModel::Rec& r, int s) {
      Vec col(r.inv.rows());
      for (size_t x = 0; x < r.inv.rows(); ++x) col[x] = r.inv.at(x, s);
      return MatrixModel::negative(col);
    };
    std::set<std::string> seen;
    for (size_t k = 0; k < all.size(); ++k) {
      size_t cur = k;
      bool changed = true;
      while (changed) {
        changed = false;
        for (int s : I)
          if (leftDesc(all[cur], s)) {
            cur = index.at(MatrixModel::key(model.g[s] * all[cur].mat));
            changed = true;
            break;
          }
        if (changed) continue;
        for (int s : J)
          if (model.rightDescent(all[cur].mat, s)) {
            cur = index.at(MatrixModel::key(all[cur].mat * model.g[s]));
            changed = true;
            break;
          }
      }
      if (seen.insert(MatrixModel::key(all[cur].mat)).second) {
        CoxElt e = {all[cur].word};
        reps.push_back(std::move(e));
      }
    }
  } else if (rank() == 2) {
    DihedralModel dm{m_.m[0][1]};
    auto inSet = [](const std::vector<int>& v, int s) {
      return std::find(v.begin(), v.end(), s) != v.end();
    };
    std::set<std::pair<int, int>> seen;
    for (const auto& nf0 : dm.enumerate(lengthCap)) {
      DihedralModel::NF cur = nf0;
      bool changed = true;
      while (changed) {
        changed = false;
        for (int s = 0; s < 2; ++s) {
          if (inSet(I, s) && dm.leftDescent(cur, s)) {
            cur = dm.leftMul(s, cur);
            changed = true;
          }
          if (inSet(J, s) && dm.rightDescent(cur, s)) {
            cur = dm.rightMul(cur, s);
            changed = true;
          }
        }
      }
      if (seen.insert({cur.len, cur.first}).second) reps.push_back(CoxElt{dm.wordOf(cur)});
    }
  } else {
    fail(Errc::unsupported_label, "no geometric realization for double cosets");
  }
  sortElts(reps);
  return reps;
}

GradedRankResult CoxeterSystem::gradedRank(const std::vector<int>& I,
                                           const std::vector<int>& J) const {
  for (int s : I)
    if (std::find(J.begin(), J.end(), s) == J.end())
      fail(Errc::bad_inclusion, "graded rank needs I contained in J");
  ParabolicData pi = finiteType(I), pj = finiteType(J);
  if (!pi.finite || !pj.finite) fail(Errc::infinite_parabolic, "graded rank needs finite parabolics");
  GradedRankResult out;
  if (matrixModelSupported(J)) {
    MatrixModel model(m_, J);
    auto all = model.enumerate(static_cast<int>(pj.longestLen), 1000000);
    std::map<std::string, size_t> index;
    for (size_t k = 0; k < all.size(); ++k) index[MatrixModel::key(all[k].mat)] = k;
    std::map<int, int> localOf;
    for (size_t k = 0; k < J.size(); ++k) localOf[J[k]] = static_cast<int>(k);
    auto leftDesc = [&](const MatrixModel::Rec& r, int sLocal) {
      Vec col(r.inv.rows());
      for (size_t x = 0; x < r.inv.rows(); ++x) col[x] = r.inv.at(x, sLocal);
      return MatrixModel::negative(col);
    };
    std::set<std::string> seen;
    for (size_t k = 0; k < all.size(); ++k) {
      size_t cur = k;
      bool changed = true;
      while (changed) {
        changed = false;
        for (int s : I) {
          int sl = localOf.at(s);
          if (leftDesc(all[cur], sl)) {
            cur = index.at(MatrixModel::key(model.g[sl] * all[cur].mat));
            changed = true;
            break;
          }
        }
      }
      if (seen.insert(MatrixModel::key(all[cur].mat)).second) {
        int len = static_cast<int>(all[cur].word.size());
        out.rank.set(2 * len, out.rank.coeff(2 * len) + 1);
      }
    }
  } else if (J.size() == 2) {
    DihedralModel dm{m_.m[J[0]][J[1]]};
    auto inI = [&](int sLocal) {
      return std::find(I.begin(), I.end(), J[sLocal]) != I.end();
    };
    std::set<std::pair<int, int>> seen;
    for (const auto& nf0 : dm.enumerate(static_cast<int>(pj.longestLen))) {
      DihedralModel::NF cur = nf0;
      bool changed = true;
      while (changed) {
        changed = false;
        for (int s = 0; s < 2; ++s)
          if (inI(s) && dm.leftDescent(cur, s)) {
            cur = dm.leftMul(s, cur);
            changed = true;
          }
      }
      if (seen.insert({cur.len, cur.first}).second)
        out.rank.set(2 * cur.len, out.rank.coeff(2 * cur.len) + 1);
    }
  } else {
    fail(Errc::unsupported_label, "graded rank needs an enumerable parabolic");
  }
  LaurentPoly half;
  for (auto& [e, c] : out.rank.terms()) half.set(e / 2, c);
  out.factorizationOk = poincare(I) * half == poincare(J);
  out.palindromicOk =
      out.rank.palindromicWithCenter(static_cast<int>(2 * (pj.longestLen - pi.longestLen)));
  return out;
}

InvariantsResult CoxeterSystem::reynoldsInvariants(const std::vector<int>& I, int degreeCap) const {
  if (rank() > 3) fail(Errc::unsupported, "invariant rings are computed for realizations of rank <= 3");
  if (degreeCap > 40) fail(Errc::resource_limit, "degree cap too large");
  if (!matrixModelSupported(fullSet())) fail(Errc::unsupported_label, "no rational realization");
  ParabolicData pd = finiteType(I);
  if (!pd.finite) fail(Errc::infinite_parabolic, "reynolds operator needs a finite parabolic");
  MatrixModel model(m_, fullSet());
  auto group = model.enumerate(static_cast<int>(pd.longestLen) + 1, 1000000);
  std::vector<MatrixModel::Rec> sub;
  for (const auto& rec : group) {
    bool ok = true;
    for (int s : rec.word)
      if (std::find(I.begin(), I.end(), s) == I.end()) ok = false;
    if (ok && static_cast<long long>(rec.word.size()) <= pd.longestLen) sub.push_back(rec);
  }
  int r = rank();
  InvariantsResult out;
  for (int d = 0; d <= degreeCap; ++d) {
    std::vector<std::vector<int>> mons;
    std::vector<int> cur(r, 0);
    std::function<void(int, int)> genMon = [&](int pos, int left) {
      if (pos == r - 1) {
        cur[pos] = left;
        mons.push_back(cur);
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        genMon(pos + 1, left - e);
      }
    };
    genMon(0, d);
    std::map<std::vector<int>, int> monIdx;
    for (size_t k = 0; k < mons.size(); ++k) monIdx[mons[k]] = static_cast<int>(k);
    Mat avg(mons.size(), mons.size());
    for (const auto& rec : sub) {
      for (size_t c = 0; c < mons.size(); ++c) {
        std::map<std::vector<int>, Rat> poly{{std::vector<int>(r, 0), Rat(1)}};
        for (int var = 0; var < r; ++var) {
          for (int e = 0; e < mons[c][var]; ++e) {
            std::map<std::vector<int>, Rat> next;
            for (auto& [mon, coef] : poly) {
              for (int k = 0; k < r; ++k) {
                const Rat& lk = rec.inv.at(var, k);
                if (lk.isZero()) continue;
                std::vector<int> nm = mon;
                ++nm[k];
                next[nm] += coef * lk;
              }
            }
            poly = std::move(next);
          }
        }
        for (auto& [mon, coef] : poly) avg.at(monIdx.at(mon), c) += coef;
      }
    }
    Rat inv(BigInt(1), BigInt(static_cast<long long>(sub.size())));
    for (size_t x = 0; x < mons.size(); ++x)
      for (size_t y = 0; y < mons.size(); ++y) avg.at(x, y) *= inv;
    std::vector<Vec> cols;
    for (size_t c = 0; c < mons.size(); ++c) {
      Vec col(mons.size());
      for (size_t x = 0; x < mons.size(); ++x) col[x] = avg.at(x, c);
      cols.push_back(std::move(col));
    }
    auto basis = span_basis(cols, mons.size());
    out.dims.push_back(static_cast<int>(basis.size()));
    std::vector<std::string> names;
    for (const Vec& b : basis) {
      std::string s;
      for (size_t k = 0; k < mons.size(); ++k) {
        if (b[k].isZero()) continue;
        if (!s.empty()) s += " + ";
        if (b[k] != Rat(1)) s += b[k].toString() + "*";
        bool constant = true;
        std::string monStr;
        for (int var = 0; var < r; ++var) {
          if (mons[k][var] == 0) continue;
          constant = false;
          if (!monStr.empty()) monStr += "*";
          monStr += "x" + std::to_string(var);
          if (mons[k][var] > 1) monStr += "^" + std::to_string(mons[k][var]);
        }
        s += constant ? "1" : monStr;
      }
      names.push_back(std::move(s));
    }
    out.bases.push_back(std::move(names));
    if (out.dims.back() > 0) out.hilbert.set(2 * d, out.dims.back());
  }
  return out;
}

std::vector<std::vector<int>> CoxeterSystem::soergelObjects() const {
  if (rank() > 20) fail(Errc::resource_limit, "too many subsets");
  std::vector<std::vector<int>> objs;
  for (int mask = 0; mask < (1 << rank()); ++mask) {
    std::vector<int> I;
    for (int s = 0; s < rank(); ++s)
      if (mask & (1 << s)) I.push_back(s);
    if (finiteType(I).finite) objs.push_back(I);
  }
  return objs;
}

BottSamelsonResult CoxeterSystem::bottSamelson(const std::vector<std::vector<int>>& chain) const {
  if (chain.empty() || chain.size() % 2 == 0)
    fail(Errc::invalid_chain, "chain must alternate I_1 < J_1 > I_2 ... > I_n");
  BottSamelsonResult out;
  out.unshifted = LaurentPoly::one();
  auto contained = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (int s : a)
      if (std::find(b.begin(), b.end(), s) == b.end()) return false;
    return true;
  };
  for (const auto& sub : chain)
    if (!finiteType(sub).finite)
      fail(Errc::infinite_parabolic, "chain subsets must be subgroup-finite");
  for (size_t t = 0; t + 2 < chain.size(); t += 2) {
    const auto& It = chain[t];
    const auto& Jt = chain[t + 1];
    const auto& It1 = chain[t + 2];
    if (!contained(It, Jt) || !contained(It1, Jt)) fail(Errc::invalid_chain, "chain inclusions fail");
    ParabolicData pi = finiteType(It), pj = finiteType(Jt);
    out.unshifted = out.unshifted * gradedRank(It, Jt).rank;
    out.shiftExponent += pj.longestLen - pi.longestLen;
  }
  out.shifted = out.unshifted.shiftExp(static_cast<int>(out.shiftExponent));
  return out;
}

bool CoxeterSystem::leftDescent(const CoxElt& w, int s) const {
  if (!matrixModelSupported(fullSet())) fail(Errc::unsupported_label, "descents need a realization");
  MatrixModel model(m_, fullSet());
  Mat inv = Mat::identity(rank());
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) inv = inv * model.g[*it];
  Vec col(inv.rows());
  for (size_t x = 0; x < inv.rows(); ++x) col[x] = inv.at(x, s);
  return MatrixModel::negative(col);
}

bool CoxeterSystem::rightDescent(const CoxElt& w, int s) const {
  if (!matrixModelSupported(fullSet())) fail(Errc::unsupported_label, "descents need a realization");
  MatrixModel model(m_, fullSet());
  Mat mat = Mat::identity(rank());
  for (int g : w.word) mat = mat * model.g[g];
  return model.rightDescent(mat, s);
}

std::string CoxeterSystem::elementKey(const std::vector<int>& word) const {
  if (!matrixModelSupported(fullSet())) fail(Errc::unsupported_label, "keys need a realization");
  MatrixModel model(m_, fullSet());
  Mat mat = Mat::identity(rank());
  for (int g : word) mat = mat * model.g[g];
  return MatrixModel::key(mat);
}

}  // namespace twocat
