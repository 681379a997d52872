#include "twocat/pathalg.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "twocat/error.hpp"

namespace twocat {

bool RelationSpec::templated() const {
  for (const auto& t : terms)
    for (const auto& r : t.word)
      if (r.offset) return true;
  return false;
}

namespace {

std::vector<int> visitedVertices(const Path& p, const std::vector<Arrow>& arrows) {
  std::vector<int> vs{p.src};
  int cur = p.src;
  for (int a : p.arrows) {
    cur = arrows[a].tgt;
    vs.push_back(cur);
  }
  return vs;
}

bool pathLess(const Path& a, const Path& b) {
  if (a.len() != b.len()) return a.len() < b.len();
  return a.arrows < b.arrows;
}

struct RelationInstance {
  int src = 0, tgt = 0;
  std::vector<std::pair<Rat, Path>> terms;
};

}  // namespace

struct PathalgBuilder {
  BoundPathAlgebra& A;
  const std::vector<RelationSpec>& specs;

  std::map<std::pair<int, int>, std::vector<Path>> allPaths;  // length <= n
  std::vector<RelationInstance> instances;

  void instantiateArrows() {
    const Quiver& q = A.quiver_;
    if (q.lo > q.hi) fail(Errc::invalid_window, "window is empty");
    auto addArrow = [&](const Arrow& a) {
      if (a.src < q.lo || a.src > q.hi || a.tgt < q.lo || a.tgt > q.hi)
        fail(Errc::invalid_quiver, "arrow endpoint outside window: " + a.name);
      if (A.arrowByName_.count(a.name)) fail(Errc::invalid_quiver, "duplicate arrow name: " + a.name);
      A.arrowByName_[a.name] = static_cast<int>(A.arrows_.size());
      A.arrows_.push_back(a);
    };
    for (const auto& t : q.templates)
      for (int v = q.lo; v <= q.hi; ++v) {
        int s = v + t.srcOff, e = v + t.tgtOff;
        if (s < q.lo || s > q.hi || e < q.lo || e > q.hi) continue;
        addArrow(Arrow{t.stem + "(" + std::to_string(v) + ")", s, e});
      }
    for (const auto& a : q.explicitArrows) addArrow(a);
    std::map<int, int> degree;
    for (const auto& a : A.arrows_) {
      ++degree[a.src];
      ++degree[a.tgt];
    }
    for (auto& [v, d] : degree)
      if (d > 10000) fail(Errc::invalid_quiver, "vertex degree too large at " + std::to_string(v));
  }

  void enumerateAllPaths() {
    for (int v = A.quiver_.lo; v <= A.quiver_.hi; ++v)
      allPaths[{v, v}].push_back(Path{v, v, {}});
    std::map<int, std::vector<int>> bySrc;
    for (size_t i = 0; i < A.arrows_.size(); ++i) bySrc[A.arrows_[i].src].push_back(static_cast<int>(i));
    // grow by length
    std::vector<Path> frontier;
    for (int v = A.quiver_.lo; v <= A.quiver_.hi; ++v) frontier.push_back(Path{v, v, {}});
    for (int len = 1; len <= A.n_; ++len) {
      std::vector<Path> next;
      for (const Path& p : frontier) {
        auto it = bySrc.find(p.tgt);
        if (it == bySrc.end()) continue;
        for (int a : it->second) {
          Path np{p.src, A.arrows_[a].tgt, p.arrows};
          np.arrows.push_back(a);
          allPaths[{np.tgt, np.src}].push_back(np);
          next.push_back(np);
        }
      }
      frontier = std::move(next);
    }
    for (auto& [k, v] : allPaths) std::sort(v.begin(), v.end(), pathLess);
  }

  std::optional<Path> wordToPath(const std::vector<int>& arrowIds) const {
    if (arrowIds.empty()) return std::nullopt;
    Path p{A.arrows_[arrowIds.front()].src, A.arrows_[arrowIds.front()].tgt, {arrowIds.front()}};
    for (size_t i = 1; i < arrowIds.size(); ++i) {
      const Arrow& a = A.arrows_[arrowIds[i]];
      if (a.src != p.tgt) return std::nullopt;
      p.arrows.push_back(arrowIds[i]);
      p.tgt = a.tgt;
    }
    return p;
  }

  void instantiateRelations() {
    for (const auto& spec : specs) {
      if (spec.terms.empty()) continue;
      std::vector<int> bases;
      if (spec.templated())
        for (int v = A.quiver_.lo; v <= A.quiver_.hi; ++v) bases.push_back(v);
      else
        bases.push_back(0);
      for (int v : bases) {
        RelationInstance inst;
        bool missing = false;
        for (const auto& term : spec.terms) {
          std::vector<int> ids;
          for (const auto& ref : term.word) {
            std::string name = ref.offset ? ref.stem + "(" + std::to_string(v + *ref.offset) + ")" : ref.stem;
            auto it = A.arrowByName_.find(name);
            if (it == A.arrowByName_.end()) {
              if (ref.offset) {
                missing = true;  // window truncation: skip this instance
                break;
              }
              fail(Errc::invalid_relation, "unknown arrow in relation: " + name);
            }
            ids.push_back(it->second);
          }
          if (missing) break;
          if (ids.size() < 2) fail(Errc::invalid_relation, "relation term of length < 2");
          auto p = wordToPath(ids);
          if (!p) fail(Errc::invalid_relation, "relation term is not a composable path");
          inst.terms.emplace_back(term.coeff, *p);
        }
        if (missing || inst.terms.empty()) continue;
        inst.src = inst.terms.front().second.src;
        inst.tgt = inst.terms.front().second.tgt;
        for (auto& [c, p] : inst.terms)
          if (p.src != inst.src || p.tgt != inst.tgt)
            fail(Errc::invalid_relation, "relation terms are not parallel");
        instances.push_back(std::move(inst));
      }
    }
  }

  // Padded relation rows x*r*y restricted to a maximum total length, grouped
  // by stratum. Column space is the path list of the stratum, truncated to
  // paths of length < lenCap (terms at length >= lenCap are dropped: they lie
  // in the vanishing tail of the filtration).
  std::map<std::pair<int, int>, std::vector<Vec>> paddedRows(
      int lenCap, const std::map<std::pair<int, int>, std::map<std::vector<int>, int>>& index,
      const std::map<std::pair<int, int>, int>& colCount) const {
    std::map<std::pair<int, int>, std::vector<Vec>> rows;
    for (const auto& inst : instances) {
      int minTermLen = inst.terms.front().second.len();
      for (auto& [c, p] : inst.terms) minTermLen = std::min(minTermLen, p.len());
      for (const auto& [keyY, ys] : allPaths) {
        if (keyY.first != inst.src) continue;  // y : ? -> src(r), i.e. tgt(y) = src(r)
        for (const Path& y : ys) {
          for (const auto& [keyX, xs] : allPaths) {
            if (keyX.second != inst.tgt) continue;  // x : tgt(r) -> ?
            for (const Path& x : xs) {
              if (y.len() + minTermLen + x.len() > lenCap) continue;
              auto key = std::make_pair(x.tgt, y.src);
              auto idxIt = index.find(key);
              if (idxIt == index.end()) continue;
              Vec row(colCount.at(key));
              bool nonzero = false;
              for (auto& [coeff, p] : inst.terms) {
                if (y.len() + p.len() + x.len() > lenCap) continue;
                std::vector<int> word = y.arrows;
                word.insert(word.end(), p.arrows.begin(), p.arrows.end());
                word.insert(word.end(), x.arrows.begin(), x.arrows.end());
                auto pos = idxIt->second.find(word);
                assert(pos != idxIt->second.end());
                row[pos->second] += coeff;
                nonzero = true;
              }
              if (nonzero) rows[key].push_back(std::move(row));
            }
          }
        }
      }
    }
    return rows;
  }

  void buildStrata() {
    // Algebra strata: paths of length < n.
    std::map<std::pair<int, int>, std::map<std::vector<int>, int>> index;
    std::map<std::pair<int, int>, int> colCount;
    for (const auto& [key, paths] : allPaths) {
      BoundPathAlgebra::Stratum st;
      for (const Path& p : paths) {
        if (p.len() >= A.n_) break;
        st.index[p.arrows] = static_cast<int>(st.paths.size());
        st.paths.push_back(p);
      }
      index[key] = st.index;
      colCount[key] = static_cast<int>(st.paths.size());
      A.strata_[key] = std::move(st);
    }
    auto rows = paddedRows(A.n_ - 1, index, colCount);
    for (auto& [key, rs] : rows) {
      auto& st = A.strata_[key];
      auto basisRows = span_basis(rs, st.paths.size());
      st.rrefRows = basisRows;
      for (const Vec& r : st.rrefRows) {
        int piv = -1;
        for (size_t c = 0; c < r.size(); ++c)
          if (!r[c].isZero()) {
            piv = static_cast<int>(c);
            break;
          }
        st.pivotOfRow.push_back(piv);
      }
    }
    // Global basis: non-pivot columns, strata in key order, columns in (len, lex) order.
    for (auto& [key, st] : A.strata_) {
      std::set<int> pivots(st.pivotOfRow.begin(), st.pivotOfRow.end());
      for (size_t c = 0; c < st.paths.size(); ++c) {
        if (pivots.count(static_cast<int>(c))) continue;
        st.basisPaths.push_back(static_cast<int>(c));
        st.globalOf.push_back(static_cast<int>(A.basis_.size()));
        const Path& p = st.paths[c];
        A.basis_.push_back({p.tgt, p.src, p.len(), A.pathName(p)});
        A.basisPath_.push_back(p);
        A.homBasis_[key].push_back(static_cast<int>(A.basis_.size()) - 1);
      }
    }
  }

  // kGamma_n containment: every window-safe path of length n must reduce to
  // zero modulo the padded relation rows of length <= n.
  void verifyNilpotency() const {
    std::map<std::pair<int, int>, std::map<std::vector<int>, int>> index;
    std::map<std::pair<int, int>, int> colCount;
    for (const auto& [key, paths] : allPaths) {
      auto& idx = index[key];
      for (const Path& p : paths) idx[p.arrows] = static_cast<int>(idx.size());
      colCount[key] = static_cast<int>(paths.size());
    }
    auto rows = paddedRows(A.n_, index, colCount);
    std::map<std::pair<int, int>, std::vector<Vec>> reduced;
    for (auto& [key, rs] : rows) reduced[key] = span_basis(rs, colCount[key]);
    int pad = A.quiver_.templated() ? std::max(0, A.n_ - 2) : 0;
    for (const auto& [key, paths] : allPaths) {
      for (const Path& p : paths) {
        if (p.len() != A.n_) continue;
        bool safe = true;
        for (int v : visitedVertices(p, A.arrows_))
          if (v < A.quiver_.lo + pad || v > A.quiver_.hi - pad) safe = false;
        if (!safe) continue;
        Vec v(colCount.at(key));
        v[index.at(key).at(p.arrows)] = Rat(1);
        auto it = reduced.find(key);
        bool zero = it != reduced.end() && in_span(it->second, v);
        if (!zero)
          fail(Errc::contract_violation,
               "kGamma_n is not contained in the relation ideal: path " + A.pathName(p) +
                   " of length " + std::to_string(A.n_) + " does not vanish");
      }
    }
  }
};

BoundPathAlgebra BoundPathAlgebra::build(const Quiver& q, const std::vector<RelationSpec>& rels, int n) {
  if (n < 2) fail(Errc::contract_violation, "nilpotency bound must be >= 2");
  BoundPathAlgebra A;
  A.quiver_ = q;
  A.n_ = n;
  PathalgBuilder b{A, rels};
  b.instantiateArrows();
  b.enumerateAllPaths();
  b.instantiateRelations();
  b.buildStrata();
  b.verifyNilpotency();
  return A;
}

BoundPathAlgebra BoundPathAlgebra::zigzag(int lo, int hi) {
  if (hi - lo + 1 < 3) fail(Errc::invalid_window, "zigzag window must contain at least 3 vertices");
  QuiverFile qf = parseQuiverFile(zigzagQuiverFileText(lo, hi));
  return build(qf.quiver, qf.relations, qf.n);
}

std::vector<int> BoundPathAlgebra::interiorVertices(int margin) const {
  std::vector<int> vs;
  for (int v = quiver_.lo + margin; v <= quiver_.hi - margin; ++v) vs.push_back(v);
  return vs;
}

void BoundPathAlgebra::requireInterior(int v, int margin) const {
  if (!isInterior(v, margin))
    fail(Errc::margin_violation, "vertex " + std::to_string(v) + " lies in the window margin");
}

const BoundPathAlgebra::Stratum* BoundPathAlgebra::stratum(int tgt, int src) const {
  auto it = strata_.find({tgt, src});
  return it == strata_.end() ? nullptr : &it->second;
}

const std::vector<int>& BoundPathAlgebra::homBasis(int i, int j) const {
  static const std::vector<int> empty;
  auto it = homBasis_.find({i, j});
  return it == homBasis_.end() ? empty : it->second;
}

std::string BoundPathAlgebra::pathName(const Path& p) const {
  if (p.arrows.empty()) return "e(" + std::to_string(p.src) + ")";
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += arrows_[p.arrows[i]].name;
  }
  return s;
}

AlgElem BoundPathAlgebra::unit(int v) const {
  if (v < quiver_.lo || v > quiver_.hi) fail(Errc::out_of_window, "vertex outside window");
  AlgElem e = zero();
  for (int g : homBasis(v, v))
    if (basis_[g].len == 0) e[g] = Rat(1);
  return e;
}

AlgElem BoundPathAlgebra::basisElem(int g) const {
  AlgElem e = zero();
  e[g] = Rat(1);
  return e;
}

void BoundPathAlgebra::reduceIntoGlobal(const Path& p, const Rat& coeff, AlgElem& acc) const {
  if (p.len() >= n_) return;
  const Stratum* st = stratum(p.tgt, p.src);
  assert(st != nullptr);
  auto pos = st->index.find(p.arrows);
  assert(pos != st->index.end());
  Vec v(st->paths.size());
  v[pos->second] = coeff;
  for (size_t r = 0; r < st->rrefRows.size(); ++r) {
    int piv = st->pivotOfRow[r];
    if (piv < 0 || v[piv].isZero()) continue;
    Rat f = v[piv];
    for (size_t c = 0; c < v.size(); ++c)
      if (!st->rrefRows[r][c].isZero()) v[c] -= f * st->rrefRows[r][c];
  }
  for (size_t bi = 0; bi < st->basisPaths.size(); ++bi) {
    const Rat& x = v[st->basisPaths[bi]];
    if (!x.isZero()) acc[st->globalOf[bi]] += x;
  }
}

const std::vector<std::pair<int, Rat>>& BoundPathAlgebra::mulBasis(int g1, int g2) const {
  auto key = std::make_pair(g1, g2);
  auto it = multTable_.find(key);
  if (it != multTable_.end()) return it->second;
  std::vector<std::pair<int, Rat>> out;
  const Path& p1 = basisPath_[g1];
  const Path& p2 = basisPath_[g2];
  if (p2.tgt == p1.src) {
    Path prod{p2.src, p1.tgt, p2.arrows};
    prod.arrows.insert(prod.arrows.end(), p1.arrows.begin(), p1.arrows.end());
    AlgElem acc = zero();
    reduceIntoGlobal(prod, Rat(1), acc);
    for (int g = 0; g < dim(); ++g)
      if (!acc[g].isZero()) out.emplace_back(g, acc[g]);
  }
  return multTable_.emplace(key, std::move(out)).first->second;
}

AlgElem BoundPathAlgebra::mul(const AlgElem& x, const AlgElem& y) const {
  AlgElem r = zero();
  for (int g1 = 0; g1 < dim(); ++g1) {
    if (x[g1].isZero()) continue;
    for (int g2 = 0; g2 < dim(); ++g2) {
      if (y[g2].isZero()) continue;
      for (auto& [g, c] : mulBasis(g1, g2)) r[g] += x[g1] * y[g2] * c;
    }
  }
  return r;
}

bool BoundPathAlgebra::isZeroElem(const AlgElem& x) const {
  for (const Rat& c : x)
    if (!c.isZero()) return false;
  return true;
}

std::string BoundPathAlgebra::elemToString(const AlgElem& x) const {
  std::string s;
  for (int g = 0; g < dim(); ++g) {
    if (x[g].isZero()) continue;
    if (!s.empty()) s += " + ";
    if (x[g] != Rat(1)) s += x[g].toString() + "*";
    s += basis_[g].name;
  }
  return s.empty() ? "0" : s;
}

bool BoundPathAlgebra::checkAssociativity() const {
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) {
      if (basisPath_[b].tgt != basisPath_[a].src) continue;
      auto ab = mulBasis(a, b);
      for (int c = 0; c < dim(); ++c) {
        if (basisPath_[c].tgt != basisPath_[b].src) continue;
        AlgElem lhs = zero(), rhs = zero();
        for (auto& [g, k] : ab)
          for (auto& [g2, k2] : mulBasis(g, c)) lhs[g2] += k * k2;
        for (auto& [g, k] : mulBasis(b, c))
          for (auto& [g2, k2] : mulBasis(a, g)) rhs[g2] += k * k2;
        if (lhs != rhs) return false;
      }
    }
  return true;
}

bool BoundPathAlgebra::checkIdempotents() const {
  for (int v = quiver_.lo; v <= quiver_.hi; ++v) {
    for (int w = quiver_.lo; w <= quiver_.hi; ++w) {
      AlgElem p = mul(unit(v), unit(w));
      AlgElem expect = v == w ? unit(v) : zero();
      if (p != expect) return false;
    }
  }
  return true;
}

std::vector<int> BoundPathAlgebra::radicalPower(int k) const {
  if (k < 0) fail(Errc::contract_violation, "radical power must be >= 0");
  std::vector<int> out;
  for (int g = 0; g < dim(); ++g)
    if (basis_[g].len >= k) out.push_back(g);
  return out;
}

BoundPathAlgebra::Module BoundPathAlgebra::indecomposableProjective(int i) const {
  if (i < quiver_.lo || i > quiver_.hi) fail(Errc::out_of_window, "vertex outside window");
  Module m;
  m.vertex = i;
  for (int g = 0; g < dim(); ++g)
    if (basis_[g].src == i) m.basis.push_back(g);
  std::map<int, int> pos;
  for (size_t k = 0; k < m.basis.size(); ++k) pos[m.basis[k]] = static_cast<int>(k);
  for (int g = 0; g < dim(); ++g) {
    Mat act(m.basis.size(), m.basis.size());
    for (size_t c = 0; c < m.basis.size(); ++c) {
      if (basisPath_[m.basis[c]].tgt != basisPath_[g].src) continue;
      for (auto& [h, coef] : mulBasis(g, m.basis[c])) act.at(pos.at(h), c) = coef;
    }
    m.action.push_back(std::move(act));
  }
  for (int g : m.basis) m.names.push_back(basis_[g].name);
  return m;
}

BoundPathAlgebra::SimpleRadical BoundPathAlgebra::simpleAndRadical(int i) const {
  if (i < quiver_.lo || i > quiver_.hi) fail(Errc::out_of_window, "vertex outside window");
  SimpleRadical sr;
  sr.vertex = i;
  for (int g = 0; g < dim(); ++g)
    if (basis_[g].src == i && basis_[g].len >= 1) sr.radicalBasis.push_back(g);
  return sr;
}

NakayamaData BoundPathAlgebra::nakayama() const {
  NakayamaData nd;
  int margin = defaultMargin();
  std::vector<int> interior = interiorVertices(margin);
  nd.selfInjective = !interior.empty() || !quiver_.templated();
  if (!quiver_.templated()) interior = interiorVertices(0);

  for (int j : interior) {
    // dual of e_jA: dual basis indexed by classes with target j
    std::vector<int> duals;
    for (int g = 0; g < dim(); ++g)
      if (basis_[g].tgt == j) duals.push_back(g);
    std::map<int, int> dpos;
    for (size_t k = 0; k < duals.size(); ++k) dpos[duals[k]] = static_cast<int>(k);
    // action matrix of algebra basis element g on the dual module
    auto dualAction = [&](int g) {
      Mat act(duals.size(), duals.size());
      for (size_t uc = 0; uc < duals.size(); ++uc) {
        for (size_t mr = 0; mr < duals.size(); ++mr) {
          int m = duals[mr];
          if (basisPath_[m].src != basisPath_[g].tgt) continue;
          for (auto& [h, coef] : mulBasis(m, g))
            if (h == duals[uc]) act.at(mr, uc) += coef;
        }
      }
      return act;
    };
    bool found = false;
    for (int i = quiver_.lo; i <= quiver_.hi && !found; ++i) {
      std::vector<int> proj;
      for (int g = 0; g < dim(); ++g)
        if (basis_[g].src == i) proj.push_back(g);
      if (proj.size() != duals.size() || proj.empty()) continue;
      std::vector<Vec> candidates;
      Vec all(duals.size());
      for (size_t k = 0; k < duals.size(); ++k) {
        if (basis_[duals[k]].src != i) continue;
        Vec w(duals.size());
        w[k] = Rat(1);
        candidates.push_back(w);
        all[k] = Rat(1);
      }
      candidates.push_back(all);
      std::vector<Mat> acts;
      for (int b : proj) acts.push_back(dualAction(b));
      for (const Vec& w : candidates) {
        Mat m(duals.size(), proj.size());
        for (size_t c = 0; c < proj.size(); ++c) {
          Vec img = acts[c].apply(w);
          for (size_t r = 0; r < duals.size(); ++r) m.at(r, c) = img[r];
        }
        if (rank(m) == proj.size()) {
          nd.sigma[j] = i;
          found = true;
          break;
        }
      }
    }
    if (!found) nd.selfInjective = false;
  }
  if (interior.empty()) nd.selfInjective = false;
  return nd;
}

// ---------------------------------------------------------------------------
// quiver file parsing

namespace {

std::string trimWs(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int parseInt(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    fail(Errc::parse_error, std::string("expected integer for ") + what + ": '" + s + "'");
  }
}

ArrowRef parseArrowRef(const std::string& tok) {
  auto open = tok.find('(');
  if (open == std::string::npos) return ArrowRef{tok, std::nullopt};
  if (tok.back() != ')') fail(Errc::parse_error, "bad arrow reference: " + tok);
  std::string stem = tok.substr(0, open);
  std::string off = tok.substr(open + 1, tok.size() - open - 2);
  return ArrowRef{stem, parseInt(off, "arrow offset")};
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trimWs(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trimWs(cur));
  return out;
}

RelationSpec parseRelationLine(std::string line) {
  auto eq = line.find('=');
  if (eq != std::string::npos) {
    std::string rhs = trimWs(line.substr(eq + 1));
    if (rhs != "0") fail(Errc::parse_error, "relation right-hand side must be 0");
    line = line.substr(0, eq);
  }
  RelationSpec spec;
  std::string cur;
  int sign = 1;
  auto flush = [&](int nextSign) {
    cur = trimWs(cur);
    if (cur.empty()) {
      if (!spec.terms.empty() || nextSign < 0) fail(Errc::parse_error, "empty relation term");
      sign = nextSign;
      return;
    }
    RelationSpec::Term term;
    term.coeff = Rat(sign);
    // optional leading rational coefficient separated by whitespace
    auto sp = cur.find_first_of(" \t");
    if (sp != std::string::npos) {
      std::string head = cur.substr(0, sp);
      if (head.find_first_not_of("0123456789/") == std::string::npos) {
        term.coeff = Rat(sign) * Rat::fromString(head);
        cur = trimWs(cur.substr(sp + 1));
      }
    }
    for (const std::string& tok : splitOn(cur, '*')) {
      if (tok.empty()) fail(Errc::parse_error, "empty arrow token in relation");
      term.word.push_back(parseArrowRef(tok));
    }
    spec.terms.push_back(std::move(term));
    cur.clear();
    sign = nextSign;
  };
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if ((c == '+' || c == '-') && trimWs(cur).find('(') != std::string::npos) {
      // signs inside parentheses belong to offsets; a sign after a complete
      // token separates terms
      int depth = 0;
      for (char d : cur)
        depth += (d == '(') - (d == ')');
      if (depth == 0) {
        flush(c == '-' ? -1 : 1);
        continue;
      }
      cur.push_back(c);
    } else if ((c == '+' || c == '-') && !trimWs(cur).empty()) {
      flush(c == '-' ? -1 : 1);
    } else if ((c == '+' || c == '-') && trimWs(cur).empty()) {
      sign = c == '-' ? -sign : sign;
    } else {
      cur.push_back(c);
    }
  }
  flush(1);
  if (spec.terms.empty()) fail(Errc::parse_error, "empty relation");
  return spec;
}

}  // namespace

QuiverFile parseQuiverFile(const std::string& content) {
  QuiverFile qf;
  bool haveLo = false, haveHi = false;
  std::string section;
  std::istringstream in(content);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trimWs(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(Errc::parse_error, "bad section header: " + line);
      section = line.substr(1, line.size() - 2);
      continue;
    }
    if (section == "window") {
      auto kv = splitOn(line, '=');
      if (kv.size() != 2) fail(Errc::parse_error, "bad window line: " + line);
      if (kv[0] == "lo") {
        qf.quiver.lo = parseInt(kv[1], "window lo");
        haveLo = true;
      } else if (kv[0] == "hi") {
        qf.quiver.hi = parseInt(kv[1], "window hi");
        haveHi = true;
      } else {
        fail(Errc::parse_error, "unknown window key: " + kv[0]);
      }
    } else if (section == "arrows") {
      auto at = line.find('@');
      auto colon = line.find(':');
      auto arrowPos = line.find("->");
      if (arrowPos == std::string::npos) fail(Errc::parse_error, "arrow line needs '->': " + line);
      if (at != std::string::npos && (colon == std::string::npos || at < colon)) {
        std::string name = trimWs(line.substr(0, at));
        std::string src = trimWs(line.substr(at + 1, arrowPos - at - 1));
        std::string tgt = trimWs(line.substr(arrowPos + 2));
        qf.quiver.explicitArrows.push_back(
            Arrow{name, parseInt(src, "arrow source"), parseInt(tgt, "arrow target")});
      } else {
        if (colon == std::string::npos) fail(Errc::parse_error, "arrow line needs ':' or '@': " + line);
        std::string stem = trimWs(line.substr(0, colon));
        std::string src = trimWs(line.substr(colon + 1, arrowPos - colon - 1));
        std::string tgt = trimWs(line.substr(arrowPos + 2));
        qf.quiver.templates.push_back(
            ArrowTemplate{stem, parseInt(src, "source offset"), parseInt(tgt, "target offset")});
      }
    } else if (section == "relations") {
      qf.relations.push_back(parseRelationLine(line));
    } else if (section == "nilpotency") {
      auto kv = splitOn(line, '=');
      if (kv.size() != 2 || kv[0] != "n") fail(Errc::parse_error, "bad nilpotency line: " + line);
      qf.n = parseInt(kv[1], "nilpotency bound");
    } else {
      fail(Errc::parse_error, "line outside of any known section: " + line);
    }
  }
  if (!haveLo || !haveHi) fail(Errc::parse_error, "missing [window] lo/hi");
  return qf;
}

std::string zigzagQuiverFileText(int lo, int hi) {
  std::ostringstream os;
  os << "# infinite zigzag quiver, windowed\n";
  os << "[window]\n";
  os << "lo = " << lo << "\n";
  os << "hi = " << hi << "\n";
  os << "[arrows]\n";
  os << "a : +0 -> +1\n";
  os << "b : +1 -> +0\n";
  os << "[relations]\n";
  os << "a(0)*a(1) = 0\n";
  os << "b(1)*b(0) = 0\n";
  os << "a(0)*b(0) - b(-1)*a(-1) = 0\n";
  os << "[nilpotency]\n";
  os << "n = 3\n";
  return os.str();
}

}  // namespace twocat
