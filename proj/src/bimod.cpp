#include "twocat/bimod.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <tuple>

#include "twocat/error.hpp"

namespace twocat {

std::string Summand::toString() const {
  if (id) return "Id";
  return "F(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

OneMor OneMor::plus(const OneMor& o) const {
  OneMor r = *this;
  r.summands.insert(r.summands.end(), o.summands.begin(), o.summands.end());
  return r;
}

std::string OneMor::toString() const {
  if (summands.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < summands.size(); ++k) {
    if (k) s += " + ";
    s += summands[k].toString();
  }
  return s;
}

static bool vecIsZero(const Vec& v) {
  for (const Rat& x : v)
    if (!x.isZero()) return false;
  return true;
}

bool operator==(const TwoMor& a, const TwoMor& b) {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) return false;
  for (size_t di = 0; di < a.dom.size(); ++di)
    for (size_t ci = 0; ci < a.cod.size(); ++ci) {
      const Vec& va = a.blocks[di][ci];
      const Vec& vb = b.blocks[di][ci];
      if (va.empty() && vb.empty()) continue;
      if (va.empty()) {
        if (!vecIsZero(vb)) return false;
      } else if (vb.empty()) {
        if (!vecIsZero(va)) return false;
      } else if (va != vb) {
        return false;
      }
    }
  return true;
}

int HomSpace::dim() const {
  int d = 0;
  for (const auto& row : blockBasis)
    for (const auto& cell : row) d += static_cast<int>(cell.size());
  return d;
}

BimodCat::BimodCat(const BoundPathAlgebra& A, int margin) : A_(&A) {
  margin_ = margin < 0 ? A.defaultMargin() : margin;
}

void BimodCat::requireInteriorSummand(const Summand& s) const {
  if (s.id) return;
  A_->requireInterior(s.i, margin_);
  A_->requireInterior(s.j, margin_);
}

std::vector<std::pair<int, int>> BimodCat::pairBasis(int ti, int tj, int si, int sj) const {
  std::vector<std::pair<int, int>> out;
  for (int ga : A_->homBasis(ti, tj))
    for (int gb : A_->homBasis(si, sj)) out.emplace_back(ga, gb);
  return out;
}

int BimodCat::rawBlockDim(const Summand& x, const Summand& y) const {
  if (!x.id && !y.id) return A_->dimHom(x.i, y.i) * A_->dimHom(y.j, x.j);
  if (!x.id && y.id) return A_->dimHom(x.i, x.j);
  if (x.id && !y.id) {
    int d = 0;
    for (int v = A_->lo(); v <= A_->hi(); ++v) d += A_->dimHom(v, y.i) * A_->dimHom(y.j, v);
    return d;
  }
  int d = 0;
  for (int v = A_->lo(); v <= A_->hi(); ++v) d += A_->dimHom(v, v);
  return d;
}

int BimodCat::familyOffset(const Summand& y, int v) const {
  int off = 0;
  for (int w = A_->lo(); w < v; ++w)
    off += y.id ? A_->dimHom(w, w) : A_->dimHom(w, y.i) * A_->dimHom(y.j, w);
  return off;
}

// ---------------------------------------------------------------------------
// elementary map application

Vec BimodCat::applyElementary(const Summand& x, const Summand& y, const Vec& fvec, int p, int q,
                              const Vec& carrier) const {
  const BoundPathAlgebra& A = *A_;
  if (!x.id) {
    if (!y.id) {
      auto cps = pairBasis(p, x.i, x.j, q);
      auto fps = pairBasis(x.i, y.i, y.j, x.j);
      auto ops = pairBasis(p, y.i, y.j, q);
      std::map<std::pair<int, int>, int> opos;
      for (size_t t = 0; t < ops.size(); ++t) opos[ops[t]] = static_cast<int>(t);
      Vec out(ops.size());
      for (size_t ct = 0; ct < cps.size(); ++ct) {
        if (carrier[ct].isZero()) continue;
        auto [u, w] = cps[ct];
        for (size_t ft = 0; ft < fps.size(); ++ft) {
          if (fvec[ft].isZero()) continue;
          auto [a, b] = fps[ft];
          Rat c = carrier[ct] * fvec[ft];
          for (auto& [ua, cua] : A.mulBasis(u, a))
            for (auto& [bw, cbw] : A.mulBasis(b, w)) out[opos.at({ua, bw})] += c * cua * cbw;
        }
      }
      return out;
    }
    auto cps = pairBasis(p, x.i, x.j, q);
    const auto& outBasis = A.homBasis(p, q);
    std::map<int, int> opos;
    for (size_t t = 0; t < outBasis.size(); ++t) opos[outBasis[t]] = static_cast<int>(t);
    const auto& fBasis = A.homBasis(x.i, x.j);
    Vec out(outBasis.size());
    for (size_t ct = 0; ct < cps.size(); ++ct) {
      if (carrier[ct].isZero()) continue;
      auto [u, w] = cps[ct];
      for (size_t ft = 0; ft < fBasis.size(); ++ft) {
        if (fvec[ft].isZero()) continue;
        Rat c = carrier[ct] * fvec[ft];
        for (auto& [uc, cuc] : A.mulBasis(u, fBasis[ft]))
          for (auto& [ucw, cucw] : A.mulBasis(uc, w)) out[opos.at(ucw)] += c * cuc * cucw;
      }
    }
    return out;
  }
  const auto& cBasis = A.homBasis(p, q);
  if (!y.id) {
    auto fq = pairBasis(q, y.i, y.j, q);
    int off = familyOffset(y, q);
    auto ops = pairBasis(p, y.i, y.j, q);
    std::map<std::pair<int, int>, int> opos;
    for (size_t t = 0; t < ops.size(); ++t) opos[ops[t]] = static_cast<int>(t);
    Vec out(ops.size());
    for (size_t ct = 0; ct < cBasis.size(); ++ct) {
      if (carrier[ct].isZero()) continue;
      for (size_t ft = 0; ft < fq.size(); ++ft) {
        const Rat& fc = fvec[off + ft];
        if (fc.isZero()) continue;
        auto [u2, w2] = fq[ft];
        Rat c = carrier[ct] * fc;
        for (auto& [xu, cxu] : A.mulBasis(cBasis[ct], u2)) out[opos.at({xu, w2})] += c * cxu;
      }
    }
    return out;
  }
  const auto& fq = A.homBasis(q, q);
  int off = familyOffset(y, q);
  const auto& outBasis = A.homBasis(p, q);
  std::map<int, int> opos;
  for (size_t t = 0; t < outBasis.size(); ++t) opos[outBasis[t]] = static_cast<int>(t);
  Vec out(outBasis.size());
  for (size_t ct = 0; ct < cBasis.size(); ++ct) {
    if (carrier[ct].isZero()) continue;
    for (size_t ft = 0; ft < fq.size(); ++ft) {
      const Rat& fc = fvec[off + ft];
      if (fc.isZero()) continue;
      for (auto& [xz, cxz] : A.mulBasis(cBasis[ct], fq[ft])) out[opos.at(xz)] += carrier[ct] * fc * cxz;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// hom spaces

std::vector<Vec> BimodCat::solveIdToF(const Summand& y) const {
  const BoundPathAlgebra& A = *A_;
  std::vector<int> support;
  for (int v = A.lo(); v <= A.hi(); ++v)
    if (A.dimHom(v, y.i) > 0 && A.dimHom(y.j, v) > 0) support.push_back(v);
  std::vector<int> varOffset(support.size() + 1, 0);
  for (size_t s = 0; s < support.size(); ++s)
    varOffset[s + 1] = varOffset[s] + A.dimHom(support[s], y.i) * A.dimHom(y.j, support[s]);
  int nVars = varOffset.back();
  if (nVars == 0) return {};
  std::map<int, int> supIdx;
  for (size_t s = 0; s < support.size(); ++s) supIdx[support[s]] = static_cast<int>(s);

  // bimodule compatibility: for every arrow x, x . phi(e_src) = phi(e_tgt) . x
  std::vector<Vec> rows;
  for (size_t aIdx = 0; aIdx < A.arrows().size(); ++aIdx) {
    const Arrow& arr = A.arrows()[aIdx];
    int xg = -1;
    for (int g : A.homBasis(arr.tgt, arr.src))
      if (A.basisPathOf(g).arrows == std::vector<int>{static_cast<int>(aIdx)}) xg = g;
    if (xg < 0) continue;
    auto eqPairs = pairBasis(arr.tgt, y.i, y.j, arr.src);
    if (eqPairs.empty()) continue;
    std::map<std::pair<int, int>, int> eqPos;
    for (size_t t = 0; t < eqPairs.size(); ++t) eqPos[eqPairs[t]] = static_cast<int>(t);
    std::vector<Vec> block(eqPairs.size(), Vec(nVars));
    bool touched = false;
    if (auto it = supIdx.find(arr.src); it != supIdx.end()) {
      auto vars = pairBasis(arr.src, y.i, y.j, arr.src);
      for (size_t t = 0; t < vars.size(); ++t) {
        auto [u, w] = vars[t];
        for (auto& [xu, c] : A.mulBasis(xg, u)) {
          block[eqPos.at({xu, w})][varOffset[it->second] + t] += c;
          touched = true;
        }
      }
    }
    if (auto it = supIdx.find(arr.tgt); it != supIdx.end()) {
      auto vars = pairBasis(arr.tgt, y.i, y.j, arr.tgt);
      for (size_t t = 0; t < vars.size(); ++t) {
        auto [u, w] = vars[t];
        for (auto& [wx, c] : A.mulBasis(w, xg)) {
          block[eqPos.at({u, wx})][varOffset[it->second] + t] -= c;
          touched = true;
        }
      }
    }
    if (touched)
      for (auto& r : block) rows.push_back(std::move(r));
  }

  Mat sys(rows.size(), nVars);
  for (size_t r = 0; r < rows.size(); ++r) sys.setRow(r, rows[r]);
  auto ker = kernel_basis(sys);
  std::vector<Vec> out;
  for (const Vec& k : ker) {
    Vec full(rawBlockDim(Summand::Id(), y));
    for (size_t s = 0; s < support.size(); ++s) {
      int off = familyOffset(y, support[s]);
      int len = varOffset[s + 1] - varOffset[s];
      for (int t = 0; t < len; ++t) full[off + t] = k[varOffset[s] + t];
    }
    out.push_back(std::move(full));
  }
  return out;
}

std::vector<Vec> BimodCat::blockBasisFor(const Summand& x, const Summand& y) const {
  if (x.id && y.id) return zBasisRaw();
  if (x.id) return solveIdToF(y);
  int d = rawBlockDim(x, y);
  std::vector<Vec> basis;
  for (int t = 0; t < d; ++t) {
    Vec v(d);
    v[t] = Rat(1);
    basis.push_back(std::move(v));
  }
  return basis;
}

const HomSpace& BimodCat::homSpace(const OneMor& m, const OneMor& n) const {
  std::string key = m.toString() + "|" + n.toString();
  auto it = homCache_.find(key);
  if (it != homCache_.end()) return it->second;
  for (const Summand& s : m.summands) requireInteriorSummand(s);
  for (const Summand& s : n.summands) requireInteriorSummand(s);
  HomSpace hs;
  hs.dom = m;
  hs.cod = n;
  hs.blockBasis.resize(m.size());
  for (size_t di = 0; di < m.size(); ++di) {
    hs.blockBasis[di].resize(n.size());
    for (size_t ci = 0; ci < n.size(); ++ci)
      hs.blockBasis[di][ci] = blockBasisFor(m.summands[di], n.summands[ci]);
  }
  return homCache_.emplace(key, std::move(hs)).first->second;
}

TwoMor BimodCat::zeroTwoMor(const OneMor& m, const OneMor& n) const {
  TwoMor f;
  f.dom = m;
  f.cod = n;
  f.blocks.assign(m.size(), std::vector<Vec>(n.size()));
  return f;
}

TwoMor BimodCat::basisTwoMor(const HomSpace& hs, int t) const {
  TwoMor f = zeroTwoMor(hs.dom, hs.cod);
  int seen = 0;
  for (size_t di = 0; di < hs.dom.size(); ++di)
    for (size_t ci = 0; ci < hs.cod.size(); ++ci) {
      int k = static_cast<int>(hs.blockBasis[di][ci].size());
      if (t < seen + k) {
        f.blocks[di][ci] = hs.blockBasis[di][ci][t - seen];
        return f;
      }
      seen += k;
    }
  fail(Errc::contract_violation, "hom basis index out of range");
}

Vec BimodCat::homCoords(const HomSpace& hs, const TwoMor& f) const {
  if (!(f.dom == hs.dom) || !(f.cod == hs.cod))
    fail(Errc::contract_violation, "homCoords: shape mismatch");
  Vec coords;
  for (size_t di = 0; di < hs.dom.size(); ++di)
    for (size_t ci = 0; ci < hs.cod.size(); ++ci) {
      const auto& basis = hs.blockBasis[di][ci];
      const Vec& raw = f.blocks[di][ci];
      if (basis.empty()) {
        if (!raw.empty() && !vecIsZero(raw))
          fail(Errc::construction_bug, "2-morphism does not lie in the computed hom space");
        continue;
      }
      Vec target = raw.empty() ? Vec(rawBlockDim(hs.dom.summands[di], hs.cod.summands[ci])) : raw;
      auto c = coords_in(basis, target);
      if (!c) fail(Errc::construction_bug, "2-morphism does not lie in the computed hom space");
      coords.insert(coords.end(), c->begin(), c->end());
    }
  return coords;
}

TwoMor BimodCat::fromHomCoords(const HomSpace& hs, const Vec& coords) const {
  TwoMor f = zeroTwoMor(hs.dom, hs.cod);
  size_t t = 0;
  for (size_t di = 0; di < hs.dom.size(); ++di)
    for (size_t ci = 0; ci < hs.cod.size(); ++ci) {
      const auto& basis = hs.blockBasis[di][ci];
      if (basis.empty()) continue;
      Vec raw(basis[0].size());
      for (const auto& bvec : basis) {
        if (!coords[t].isZero())
          for (size_t k = 0; k < raw.size(); ++k) raw[k] += coords[t] * bvec[k];
        ++t;
      }
      f.blocks[di][ci] = std::move(raw);
    }
  return f;
}

TwoMor BimodCat::idTwoMor(const OneMor& m) const {
  TwoMor f = zeroTwoMor(m, m);
  for (size_t k = 0; k < m.size(); ++k) {
    const Summand& s = m.summands[k];
    Vec v(rawBlockDim(s, s));
    if (s.id) {
      for (int w = A_->lo(); w <= A_->hi(); ++w) {
        int off = familyOffset(s, w);
        const auto& hb = A_->homBasis(w, w);
        for (size_t t = 0; t < hb.size(); ++t)
          if (A_->info(hb[t]).len == 0) v[off + t] = Rat(1);
      }
    } else {
      auto ps = pairBasis(s.i, s.i, s.j, s.j);
      for (size_t t = 0; t < ps.size(); ++t)
        if (A_->info(ps[t].first).len == 0 && A_->info(ps[t].second).len == 0) v[t] = Rat(1);
    }
    f.blocks[k][k] = std::move(v);
  }
  return f;
}

TwoMor BimodCat::phiFF(const Summand& x, const Summand& y, const AlgElem& a, const AlgElem& b) const {
  TwoMor f = zeroTwoMor(OneMor{{x}}, OneMor{{y}});
  auto ps = pairBasis(x.i, y.i, y.j, x.j);
  Vec v(ps.size());
  for (size_t t = 0; t < ps.size(); ++t) v[t] = a[ps[t].first] * b[ps[t].second];
  f.blocks[0][0] = std::move(v);
  return f;
}

TwoMor BimodCat::phiFI(const Summand& x, const AlgElem& a) const {
  TwoMor f = zeroTwoMor(OneMor{{x}}, OneMor::identity());
  const auto& hb = A_->homBasis(x.i, x.j);
  Vec v(hb.size());
  for (size_t t = 0; t < hb.size(); ++t) v[t] = a[hb[t]];
  f.blocks[0][0] = std::move(v);
  return f;
}

// ---------------------------------------------------------------------------
// composition

TwoMor BimodCat::vcompose(const TwoMor& f, const TwoMor& g) const {
  if (!(g.cod == f.dom)) fail(Errc::contract_violation, "vcompose: shape mismatch");
  TwoMor r = zeroTwoMor(g.dom, f.cod);
  for (size_t di = 0; di < g.dom.size(); ++di) {
    const Summand& X = g.dom.summands[di];
    for (size_t ci = 0; ci < f.cod.size(); ++ci) {
      const Summand& Z = f.cod.summands[ci];
      Vec acc(rawBlockDim(X, Z));
      bool any = false;
      for (size_t mi = 0; mi < g.cod.size(); ++mi) {
        const Vec& gb = g.blocks[di][mi];
        const Vec& fb = f.blocks[mi][ci];
        if (gb.empty() || fb.empty() || vecIsZero(gb) || vecIsZero(fb)) continue;
        const Summand& Y = g.cod.summands[mi];
        any = true;
        if (!X.id) {
          Vec out = applyElementary(Y, Z, fb, X.i, X.j, gb);
          for (size_t t = 0; t < out.size(); ++t) acc[t] += out[t];
        } else {
          for (int v = A_->lo(); v <= A_->hi(); ++v) {
            int gOff = familyOffset(Y, v);
            int gLen = Y.id ? A_->dimHom(v, v) : A_->dimHom(v, Y.i) * A_->dimHom(Y.j, v);
            if (gLen == 0) continue;
            Vec comp(gb.begin() + gOff, gb.begin() + gOff + gLen);
            if (vecIsZero(comp)) continue;
            Vec out = applyElementary(Y, Z, fb, v, v, comp);
            int oOff = familyOffset(Z, v);
            for (size_t t = 0; t < out.size(); ++t) acc[oOff + t] += out[t];
          }
        }
      }
      if (any) r.blocks[di][ci] = std::move(acc);
    }
  }
  return r;
}

Composition BimodCat::compose1(const OneMor& m, const OneMor& n) const {
  for (const Summand& s : m.summands) requireInteriorSummand(s);
  for (const Summand& s : n.summands) requireInteriorSummand(s);
  Composition c;
  for (size_t li = 0; li < m.size(); ++li) {
    for (size_t ri = 0; ri < n.size(); ++ri) {
      const Summand& X = m.summands[li];
      const Summand& Y = n.summands[ri];
      if (X.id && Y.id) {
        c.entries.push_back({li, ri, -1, c.result.size()});
        c.result.summands.push_back(Summand::Id());
      } else if (X.id) {
        c.entries.push_back({li, ri, -1, c.result.size()});
        c.result.summands.push_back(Y);
      } else if (Y.id) {
        c.entries.push_back({li, ri, -1, c.result.size()});
        c.result.summands.push_back(X);
      } else {
        for (int beta : A_->homBasis(X.j, Y.i)) {
          c.entries.push_back({li, ri, beta, c.result.size()});
          c.result.summands.push_back(Summand::F(X.i, Y.j));
        }
      }
    }
  }
  return c;
}

TwoMor BimodCat::unitEta(int i, int j) const {
  OneMor dom = OneMor::f(i, j);
  Composition comp = compose1(dom, OneMor::f(j, j));
  TwoMor f = zeroTwoMor(dom, comp.result);
  int ej = -1;
  for (int g : A_->homBasis(j, j))
    if (A_->info(g).len == 0) ej = g;
  for (const auto& e : comp.entries) {
    if (e.middleGlobal != ej) continue;
    auto ps = pairBasis(i, i, j, j);
    Vec v(ps.size());
    for (size_t t = 0; t < ps.size(); ++t)
      if (A_->info(ps[t].first).len == 0 && A_->info(ps[t].second).len == 0) v[t] = Rat(1);
    f.blocks[0][e.flatIdx] = std::move(v);
  }
  return f;
}

// Collapse f(...) (x)_A g(...) into component coordinates. fOut is a carrier
// element of Y at (p, mid); gOut of Y' at (mid, q). Keyed by the middle basis
// element of the target pair (or -1 when a leg is the identity).
static std::map<int, Vec> collapsePair(const BimodCat& C, const BoundPathAlgebra& A, const Summand& Y,
                                       const Summand& Yp, const Vec& fOut, const Vec& gOut, int p,
                                       int mid, int q) {
  std::map<int, Vec> out;
  if (!Y.id && !Yp.id) {
    auto fps = C.pairBasis(p, Y.i, Y.j, mid);
    auto gps = C.pairBasis(mid, Yp.i, Yp.j, q);
    auto ops = C.pairBasis(p, Y.i, Yp.j, q);
    std::map<std::pair<int, int>, int> opos;
    for (size_t t = 0; t < ops.size(); ++t) opos[ops[t]] = static_cast<int>(t);
    for (size_t ft = 0; ft < fps.size(); ++ft) {
      if (fOut[ft].isZero()) continue;
      auto [u1, w1] = fps[ft];
      for (size_t gt = 0; gt < gps.size(); ++gt) {
        if (gOut[gt].isZero()) continue;
        auto [u2, w2] = gps[gt];
        Rat c = fOut[ft] * gOut[gt];
        for (auto& [m, cm] : A.mulBasis(w1, u2)) {
          auto& vec = out[m];
          if (vec.empty()) vec.assign(ops.size(), Rat(0));
          vec[opos.at({u1, w2})] += c * cm;
        }
      }
    }
    return out;
  }
  if (Y.id && !Yp.id) {
    const auto& fb = A.homBasis(p, mid);
    auto gps = C.pairBasis(mid, Yp.i, Yp.j, q);
    auto ops = C.pairBasis(p, Yp.i, Yp.j, q);
    std::map<std::pair<int, int>, int> opos;
    for (size_t t = 0; t < ops.size(); ++t) opos[ops[t]] = static_cast<int>(t);
    Vec vec(ops.size());
    bool any = false;
    for (size_t ft = 0; ft < fb.size(); ++ft) {
      if (fOut[ft].isZero()) continue;
      for (size_t gt = 0; gt < gps.size(); ++gt) {
        if (gOut[gt].isZero()) continue;
        auto [u2, w2] = gps[gt];
        for (auto& [xu, c] : A.mulBasis(fb[ft], u2)) {
          vec[opos.at({xu, w2})] += fOut[ft] * gOut[gt] * c;
          any = true;
        }
      }
    }
    if (any) out[-1] = std::move(vec);
    return out;
  }
  if (!Y.id && Yp.id) {
    auto fps = C.pairBasis(p, Y.i, Y.j, mid);
    const auto& gb = A.homBasis(mid, q);
    auto ops = C.pairBasis(p, Y.i, Y.j, q);
    std::map<std::pair<int, int>, int> opos;
    for (size_t t = 0; t < ops.size(); ++t) opos[ops[t]] = static_cast<int>(t);
    Vec vec(ops.size());
    bool any = false;
    for (size_t ft = 0; ft < fps.size(); ++ft) {
      if (fOut[ft].isZero()) continue;
      auto [u1, w1] = fps[ft];
      for (size_t gt = 0; gt < gb.size(); ++gt) {
        if (gOut[gt].isZero()) continue;
        for (auto& [wx, c] : A.mulBasis(w1, gb[gt])) {
          vec[opos.at({u1, wx})] += fOut[ft] * gOut[gt] * c;
          any = true;
        }
      }
    }
    if (any) out[-1] = std::move(vec);
    return out;
  }
  const auto& fb = A.homBasis(p, mid);
  const auto& gb = A.homBasis(mid, q);
  const auto& ob = A.homBasis(p, q);
  std::map<int, int> opos;
  for (size_t t = 0; t < ob.size(); ++t) opos[ob[t]] = static_cast<int>(t);
  Vec vec(ob.size());
  bool any = false;
  for (size_t ft = 0; ft < fb.size(); ++ft) {
    if (fOut[ft].isZero()) continue;
    for (size_t gt = 0; gt < gb.size(); ++gt) {
      if (gOut[gt].isZero()) continue;
      for (auto& [xy, c] : A.mulBasis(fb[ft], gb[gt])) {
        vec[opos.at(xy)] += fOut[ft] * gOut[gt] * c;
        any = true;
      }
    }
  }
  if (any) out[-1] = std::move(vec);
  return out;
}

TwoMor BimodCat::hcompose(const TwoMor& f, const TwoMor& g) const {
  Composition domC = compose1(f.dom, g.dom);
  Composition codC = compose1(f.cod, g.cod);
  TwoMor r = zeroTwoMor(domC.result, codC.result);
  const BoundPathAlgebra& A = *A_;
  auto unitCarrier = [&](int v) {
    const auto& hb = A.homBasis(v, v);
    Vec e(hb.size());
    for (size_t t = 0; t < hb.size(); ++t)
      if (A.info(hb[t]).len == 0) e[t] = Rat(1);
    return e;
  };
  for (const auto& de : domC.entries) {
    const Summand& X = f.dom.summands[de.leftIdx];
    const Summand& Xp = g.dom.summands[de.rightIdx];
    for (size_t ci = 0; ci < f.cod.size(); ++ci) {
      const Vec& fb = f.blocks[de.leftIdx][ci];
      if (fb.empty() || vecIsZero(fb)) continue;
      const Summand& Y = f.cod.summands[ci];
      for (size_t cj = 0; cj < g.cod.size(); ++cj) {
        const Vec& gb = g.blocks[de.rightIdx][cj];
        if (gb.empty() || vecIsZero(gb)) continue;
        const Summand& Yp = g.cod.summands[cj];
        std::map<int, Vec> comps;
        if (!X.id && !Xp.id) {
          // f(gen) at (X.i, X.j); g applied to alpha (x) e at (X.j, Xp.j)
          auto cps = pairBasis(X.j, Xp.i, Xp.j, Xp.j);
          Vec carrier(cps.size());
          for (size_t t = 0; t < cps.size(); ++t)
            if (cps[t].first == de.middleGlobal && A.info(cps[t].second).len == 0) carrier[t] = Rat(1);
          Vec gOut = applyElementary(Xp, Yp, gb, X.j, Xp.j, carrier);
          comps = collapsePair(*this, A, Y, Yp, fb, gOut, X.i, X.j, Xp.j);
        } else if (X.id && !Xp.id) {
          Vec fOut = applyElementary(X, Y, fb, Xp.i, Xp.i, unitCarrier(Xp.i));
          comps = collapsePair(*this, A, Y, Yp, fOut, gb, Xp.i, Xp.i, Xp.j);
        } else if (!X.id && Xp.id) {
          Vec gOut = applyElementary(Xp, Yp, gb, X.j, X.j, unitCarrier(X.j));
          comps = collapsePair(*this, A, Y, Yp, fb, gOut, X.i, X.j, X.j);
        } else {
          // Id o Id source: assemble families vertex by vertex
          for (int v = A.lo(); v <= A.hi(); ++v) {
            int fOffY = familyOffset(Y, v);
            int fLenY = Y.id ? A.dimHom(v, v) : A.dimHom(v, Y.i) * A.dimHom(Y.j, v);
            int gOffY = familyOffset(Yp, v);
            int gLenY = Yp.id ? A.dimHom(v, v) : A.dimHom(v, Yp.i) * A.dimHom(Yp.j, v);
            if (fLenY == 0 || gLenY == 0) continue;
            Vec fC(fb.begin() + fOffY, fb.begin() + fOffY + fLenY);
            Vec gC(gb.begin() + gOffY, gb.begin() + gOffY + gLenY);
            if (vecIsZero(fC) || vecIsZero(gC)) continue;
            auto part = collapsePair(*this, A, Y, Yp, fC, gC, v, v, v);
            const Summand tgt = (!Y.id && !Yp.id) ? Summand::F(Y.i, Yp.j)
                                : (!Y.id)         ? Y
                                : (!Yp.id)        ? Yp
                                                  : Summand::Id();
            for (auto& [midG, vec] : part) {
              auto& acc = comps[midG];
              if (acc.empty()) acc.assign(rawBlockDim(Summand::Id(), tgt), Rat(0));
              int off = familyOffset(tgt, v);
              for (size_t t = 0; t < vec.size(); ++t) acc[off + t] += vec[t];
            }
          }
        }
        for (const auto& ce : codC.entries) {
          if (ce.leftIdx != ci || ce.rightIdx != cj) continue;
          auto itc = comps.find(ce.middleGlobal);
          if (itc == comps.end() || vecIsZero(itc->second)) continue;
          Vec& slot = r.blocks[de.flatIdx][ce.flatIdx];
          if (slot.empty()) slot = itc->second;
          else
            for (size_t t = 0; t < slot.size(); ++t) slot[t] += itc->second[t];
        }
      }
    }
  }
  return r;
}

TwoMor BimodCat::associator(const OneMor& a, const OneMor& b, const OneMor& c) const {
  Composition ab = compose1(a, b);
  Composition left = compose1(ab.result, c);
  Composition bc = compose1(b, c);
  Composition right = compose1(a, bc.result);
  // provenance tuple (aIdx, bIdx, cIdx, beta1, beta2) identifies a copy
  using Prov = std::tuple<size_t, size_t, size_t, int, int>;
  std::map<Prov, size_t> rightAt;
  for (const auto& eR : right.entries) {
    const auto& eBC = bc.entries[eR.rightIdx];
    rightAt[{eR.leftIdx, eBC.leftIdx, eBC.rightIdx, eR.middleGlobal, eBC.middleGlobal}] = eR.flatIdx;
  }
  TwoMor m = zeroTwoMor(left.result, right.result);
  for (const auto& eL : left.entries) {
    const auto& eAB = ab.entries[eL.leftIdx];
    Prov p{eAB.leftIdx, eAB.rightIdx, eL.rightIdx, eAB.middleGlobal, eL.middleGlobal};
    auto it = rightAt.find(p);
    if (it == rightAt.end()) fail(Errc::construction_bug, "associator: copy provenance mismatch");
    const Summand& s = left.result.summands[eL.flatIdx];
    m.blocks[eL.flatIdx][it->second] = idTwoMor(OneMor{{s}}).blocks[0][0];
  }
  return m;
}

TwoMor BimodCat::associatorInv(const OneMor& a, const OneMor& b, const OneMor& c) const {
  TwoMor fwd = associator(a, b, c);
  TwoMor inv = zeroTwoMor(fwd.cod, fwd.dom);
  for (size_t di = 0; di < fwd.dom.size(); ++di)
    for (size_t ci = 0; ci < fwd.cod.size(); ++ci)
      if (!fwd.blocks[di][ci].empty()) inv.blocks[ci][di] = fwd.blocks[di][ci];
  return inv;
}

TwoMor BimodCat::scale(const TwoMor& f, const Rat& c) const {
  TwoMor r = f;
  for (auto& row : r.blocks)
    for (auto& v : row)
      for (Rat& x : v) x *= c;
  return r;
}

TwoMor BimodCat::add(const TwoMor& f, const TwoMor& g) const {
  if (!(f.dom == g.dom) || !(f.cod == g.cod)) fail(Errc::contract_violation, "add: shape mismatch");
  TwoMor r = f;
  for (size_t di = 0; di < r.blocks.size(); ++di)
    for (size_t ci = 0; ci < r.blocks[di].size(); ++ci) {
      const Vec& gv = g.blocks[di][ci];
      if (gv.empty()) continue;
      Vec& rv = r.blocks[di][ci];
      if (rv.empty()) rv = gv;
      else
        for (size_t t = 0; t < rv.size(); ++t) rv[t] += gv[t];
    }
  return r;
}

bool BimodCat::isZero(const TwoMor& f) const {
  for (const auto& row : f.blocks)
    for (const auto& v : row)
      if (!v.empty() && !vecIsZero(v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// carrier realization

int BimodCat::carrierDim(const OneMor& m) const {
  int d = 0;
  for (const Summand& s : m.summands) {
    if (s.id) {
      d += A_->dim();
    } else {
      for (int p = A_->lo(); p <= A_->hi(); ++p)
        for (int q = A_->lo(); q <= A_->hi(); ++q) d += A_->dimHom(p, s.i) * A_->dimHom(s.j, q);
    }
  }
  return d;
}

Mat BimodCat::realize(const TwoMor& f) const {
  int dc = carrierDim(f.dom), cc = carrierDim(f.cod);
  Mat m(cc, dc);
  auto layout = [&](const OneMor& om) {
    std::vector<std::map<std::pair<int, int>, int>> offs(om.size());
    int off = 0;
    for (size_t k = 0; k < om.size(); ++k) {
      const Summand& s = om.summands[k];
      for (int p = A_->lo(); p <= A_->hi(); ++p)
        for (int q = A_->lo(); q <= A_->hi(); ++q) {
          int len = s.id ? A_->dimHom(p, q) : A_->dimHom(p, s.i) * A_->dimHom(s.j, q);
          if (len == 0) continue;
          offs[k][{p, q}] = off;
          off += len;
        }
    }
    return offs;
  };
  auto domL = layout(f.dom), codL = layout(f.cod);
  for (size_t di = 0; di < f.dom.size(); ++di) {
    const Summand& X = f.dom.summands[di];
    for (auto& [pq, off] : domL[di]) {
      auto [p, q] = pq;
      int len = X.id ? A_->dimHom(p, q) : A_->dimHom(p, X.i) * A_->dimHom(X.j, q);
      for (int t = 0; t < len; ++t) {
        Vec carrier(len);
        carrier[t] = Rat(1);
        for (size_t ci = 0; ci < f.cod.size(); ++ci) {
          const Vec& blk = f.blocks[di][ci];
          if (blk.empty() || vecIsZero(blk)) continue;
          const Summand& Y = f.cod.summands[ci];
          Vec out = applyElementary(X, Y, blk, p, q, carrier);
          auto it = codL[ci].find({p, q});
          if (it == codL[ci].end()) continue;
          for (size_t s = 0; s < out.size(); ++s) m.at(it->second + s, off + t) += out[s];
        }
      }
    }
  }
  return m;
}

int BimodCat::pairCarrierDim(const Summand& x, const Summand& y) const {
  if (x.id || y.id) return carrierDim(OneMor{{x.id ? y : x}});
  int d = 0;
  for (int p = A_->lo(); p <= A_->hi(); ++p)
    for (int q = A_->lo(); q <= A_->hi(); ++q)
      d += A_->dimHom(p, x.i) * A_->dimHom(x.j, y.i) * A_->dimHom(y.j, q);
  return d;
}

Mat BimodCat::splitInjection(const Summand& x, const Summand& y, int middleGlobal) const {
  if (x.id || y.id) fail(Errc::contract_violation, "splitInjection needs F summands");
  Summand piece = Summand::F(x.i, y.j);
  Mat m(pairCarrierDim(x, y), carrierDim(OneMor{{piece}}));
  int colOff = 0, rowOff = 0;
  for (int p = A_->lo(); p <= A_->hi(); ++p)
    for (int q = A_->lo(); q <= A_->hi(); ++q) {
      int prs = A_->dimHom(p, x.i);
      int mids = A_->dimHom(x.j, y.i);
      int sf = A_->dimHom(y.j, q);
      int bPos = -1;
      const auto& midB = A_->homBasis(x.j, y.i);
      for (size_t t = 0; t < midB.size(); ++t)
        if (midB[t] == middleGlobal) bPos = static_cast<int>(t);
      for (int u = 0; u < prs; ++u)
        for (int w = 0; w < sf; ++w) {
          int col = colOff + u * sf + w;
          if (bPos >= 0) m.at(rowOff + (u * mids + bPos) * sf + w, col) = Rat(1);
        }
      colOff += prs * sf;
      rowOff += prs * mids * sf;
    }
  return m;
}

Mat BimodCat::splitProjection(const Summand& x, const Summand& y, int middleGlobal) const {
  if (x.id || y.id) fail(Errc::contract_violation, "splitProjection needs F summands");
  Summand piece = Summand::F(x.i, y.j);
  Mat m(carrierDim(OneMor{{piece}}), pairCarrierDim(x, y));
  int colOff = 0, rowOff = 0;
  for (int p = A_->lo(); p <= A_->hi(); ++p)
    for (int q = A_->lo(); q <= A_->hi(); ++q) {
      int prs = A_->dimHom(p, x.i);
      int mids = A_->dimHom(x.j, y.i);
      int sf = A_->dimHom(y.j, q);
      int bPos = -1;
      const auto& midB = A_->homBasis(x.j, y.i);
      for (size_t t = 0; t < midB.size(); ++t)
        if (midB[t] == middleGlobal) bPos = static_cast<int>(t);
      for (int u = 0; u < prs; ++u)
        for (int w = 0; w < sf; ++w)
          if (bPos >= 0) m.at(rowOff + u * sf + w, colOff + (u * mids + bPos) * sf + w) = Rat(1);
      colOff += prs * mids * sf;
      rowOff += prs * sf;
    }
  return m;
}

Mat BimodCat::realizePairMap(const TwoMor& f, const TwoMor& g, const Summand& x,
                             const Summand& y) const {
  const Summand& Y = f.cod.summands[0];
  const Summand& Yp = g.cod.summands[0];
  if (x.id || y.id || Y.id || Yp.id) fail(Errc::contract_violation, "realizePairMap needs F corners");
  Mat m(pairCarrierDim(Y, Yp), pairCarrierDim(x, y));
  std::map<std::pair<int, int>, int> rowOff;
  {
    int off = 0;
    for (int p = A_->lo(); p <= A_->hi(); ++p)
      for (int q = A_->lo(); q <= A_->hi(); ++q) {
        rowOff[{p, q}] = off;
        off += A_->dimHom(p, Y.i) * A_->dimHom(Y.j, Yp.i) * A_->dimHom(Yp.j, q);
      }
  }
  int colOff = 0;
  for (int p = A_->lo(); p <= A_->hi(); ++p)
    for (int q = A_->lo(); q <= A_->hi(); ++q) {
      const auto& uB = A_->homBasis(p, x.i);
      const auto& mB = A_->homBasis(x.j, y.i);
      const auto& wB = A_->homBasis(y.j, q);
      const auto& tMid = A_->homBasis(Y.j, Yp.i);
      const auto& tU = A_->homBasis(p, Y.i);
      const auto& tW = A_->homBasis(Yp.j, q);
      std::map<int, int> tMidPos, tUpos, tWpos;
      for (size_t t = 0; t < tMid.size(); ++t) tMidPos[tMid[t]] = static_cast<int>(t);
      for (size_t t = 0; t < tU.size(); ++t) tUpos[tU[t]] = static_cast<int>(t);
      for (size_t t = 0; t < tW.size(); ++t) tWpos[tW[t]] = static_cast<int>(t);
      for (size_t ui = 0; ui < uB.size(); ++ui)
        for (size_t mi = 0; mi < mB.size(); ++mi)
          for (size_t wi = 0; wi < wB.size(); ++wi) {
            int col = colOff + static_cast<int>((ui * mB.size() + mi) * wB.size() + wi);
            auto fc = pairBasis(p, x.i, x.j, x.j);
            Vec fCar(fc.size());
            for (size_t t = 0; t < fc.size(); ++t)
              if (fc[t].first == uB[ui] && A_->info(fc[t].second).len == 0) fCar[t] = Rat(1);
            Vec fOut = applyElementary(x, Y, f.blocks[0][0], p, x.j, fCar);
            auto gc = pairBasis(x.j, y.i, y.j, q);
            Vec gCar(gc.size());
            for (size_t t = 0; t < gc.size(); ++t)
              if (gc[t].first == mB[mi] && gc[t].second == wB[wi]) gCar[t] = Rat(1);
            Vec gOut = applyElementary(y, Yp, g.blocks[0][0], x.j, q, gCar);
            auto fps = pairBasis(p, Y.i, Y.j, x.j);
            auto gps = pairBasis(x.j, Yp.i, Yp.j, q);
            for (size_t ft = 0; ft < fps.size(); ++ft) {
              if (fOut[ft].isZero()) continue;
              auto [u1, w1] = fps[ft];
              for (size_t gt = 0; gt < gps.size(); ++gt) {
                if (gOut[gt].isZero()) continue;
                auto [u2, w2] = gps[gt];
                for (auto& [mm, cm] : A_->mulBasis(w1, u2)) {
                  int row = rowOff.at({p, q}) +
                            (tUpos.at(u1) * static_cast<int>(tMid.size()) + tMidPos.at(mm)) *
                                static_cast<int>(tW.size()) +
                            tWpos.at(w2);
                  m.at(row, col) += fOut[ft] * gOut[gt] * cm;
                }
              }
            }
          }
      colOff += static_cast<int>(uB.size() * mB.size() * wB.size());
    }
  return m;
}

bool BimodCat::verifySplit(const Summand& x, const Summand& y) const {
  if (x.id || y.id) return true;
  const auto& mid = A_->homBasis(x.j, y.i);
  Summand piece = Summand::F(x.i, y.j);
  int pieceDim = carrierDim(OneMor{{piece}});
  int total = pairCarrierDim(x, y);
  Mat sum(total, total);
  for (int b : mid) {
    Mat inj = splitInjection(x, y, b);
    for (int b2 : mid) {
      Mat comp = splitProjection(x, y, b2) * inj;
      Mat expect = b2 == b ? Mat::identity(pieceDim) : Mat(pieceDim, pieceDim);
      if (!(comp == expect)) return false;
    }
    Mat back = inj * splitProjection(x, y, b);
    for (size_t r = 0; r < sum.rows(); ++r)
      for (size_t c = 0; c < sum.cols(); ++c) sum.at(r, c) += back.at(r, c);
  }
  return sum == Mat::identity(total);
}

// ---------------------------------------------------------------------------
// Z subalgebra and adjunction

std::vector<Vec> BimodCat::zBasisRaw() const {
  std::vector<Vec> rows;
  rows.push_back(idTwoMor(OneMor::identity()).blocks[0][0]);
  for (const Vec& b : zAlgebra().basis) rows.push_back(b);
  return rows;
}

void BimodCat::computeZ() const {
  ZAlgebra Z;
  int iiDim = rawBlockDim(Summand::Id(), Summand::Id());
  std::vector<Vec> composites;
  for (int i : interior())
    for (int j : interior()) {
      Summand F = Summand::F(i, j);
      auto sigmas = solveIdToF(F);
      if (sigmas.empty()) continue;
      const auto& taus = A_->homBasis(i, j);
      for (const Vec& sg : sigmas) {
        TwoMor sigma = zeroTwoMor(OneMor::identity(), OneMor{{F}});
        sigma.blocks[0][0] = sg;
        for (size_t tt = 0; tt < taus.size(); ++tt) {
          TwoMor tau = phiFI(F, A_->basisElem(taus[tt]));
          TwoMor comp = vcompose(tau, sigma);
          const Vec& fam = comp.blocks[0][0];
          if (!fam.empty() && !vecIsZero(fam)) composites.push_back(fam);
        }
      }
    }
  Vec idFam = idTwoMor(OneMor::identity()).blocks[0][0];
  std::vector<Vec> span = span_basis(composites, iiDim);
  auto famMul = [&](const Vec& a, const Vec& b) {
    Vec out(iiDim);
    for (int v = A_->lo(); v <= A_->hi(); ++v) {
      int off = familyOffset(Summand::Id(), v);
      const auto& hb = A_->homBasis(v, v);
      std::map<int, int> pos;
      for (size_t u = 0; u < hb.size(); ++u) pos[hb[u]] = static_cast<int>(u);
      for (size_t s = 0; s < hb.size(); ++s) {
        if (a[off + s].isZero()) continue;
        for (size_t t = 0; t < hb.size(); ++t) {
          if (b[off + t].isZero()) continue;
          for (auto& [g, c] : A_->mulBasis(hb[s], hb[t])) out[off + pos.at(g)] += a[off + s] * b[off + t] * c;
        }
      }
    }
    return out;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> prods;
    for (const Vec& a : span)
      for (const Vec& b : span) {
        Vec p = famMul(a, b);
        if (!vecIsZero(p) && !in_span(span, p)) prods.push_back(p);
      }
    if (!prods.empty()) {
      std::vector<Vec> all = span;
      all.insert(all.end(), prods.begin(), prods.end());
      span = span_basis(all, iiDim);
      grew = true;
    }
  }
  // Keep the non-identity part: basis elements that are scalar multiples of
  // the identity family are absorbed into the identity generator.
  auto isScalarOfId = [&](const Vec& v) {
    Rat lambda;
    bool seen = false;
    for (size_t t = 0; t < v.size(); ++t) {
      if (idFam[t].isZero()) {
        if (!v[t].isZero()) return false;
      } else {
        Rat q = v[t] / idFam[t];
        if (!seen) {
          lambda = q;
          seen = true;
        } else if (q != lambda) {
          return false;
        }
      }
    }
    return true;
  };
  auto hasRadImage = [&](const Vec& v) {
    for (int w = A_->lo(); w <= A_->hi(); ++w) {
      int off = familyOffset(Summand::Id(), w);
      const auto& hb = A_->homBasis(w, w);
      for (size_t t = 0; t < hb.size(); ++t)
        if (A_->info(hb[t]).len == 0 && !v[off + t].isZero()) return false;
    }
    return true;
  };
  Z.basis.clear();
  Z.local = true;
  for (size_t k = 0; k < span.size(); ++k) {
    if (isScalarOfId(span[k])) continue;
    Z.basis.push_back(span[k]);
    if (!hasRadImage(span[k])) {
      Z.local = false;
      Z.witness = "a factored endomorphism has a unit component outside the span of the identity";
    }
  }
  for (size_t a = 0; a < Z.basis.size() && Z.local; ++a) {
    Vec pw = Z.basis[a];
    for (int e = 1; e <= A_->nilpotency() && !vecIsZero(pw); ++e) pw = famMul(pw, Z.basis[a]);
    if (!vecIsZero(pw)) {
      Z.local = false;
      Z.witness = "basis element " + std::to_string(a) + " is not nilpotent";
    }
  }
  if (Z.local) {
    Z.table.assign(Z.basis.size(), std::vector<Vec>(Z.basis.size()));
    for (size_t a = 0; a < Z.basis.size(); ++a)
      for (size_t b = 0; b < Z.basis.size(); ++b) {
        Vec p = famMul(Z.basis[a], Z.basis[b]);
        if (vecIsZero(p)) {
          Z.table[a][b] = Vec(Z.basis.size());
          continue;
        }
        auto coords = coords_in(Z.basis, p);
        if (!coords) fail(Errc::construction_bug, "Z is not closed under multiplication");
        Z.table[a][b] = *coords;
      }
  }
  z_ = std::move(Z);
}

const ZAlgebra& BimodCat::zAlgebra() const {
  if (!z_) computeZ();
  return *z_;
}

const NakayamaData& BimodCat::nakayama() const {
  if (!nakayama_) nakayama_ = A_->nakayama();
  return *nakayama_;
}

AdjointReport BimodCat::adjointCheck(int i, int j) const {
  const NakayamaData& nk = nakayama();
  if (!nk.selfInjective) fail(Errc::unsupported, "adjoint check requires a self-injective algebra");
  A_->requireInterior(i, margin_);
  A_->requireInterior(j, margin_);
  if (!nk.sigma.count(j)) fail(Errc::unsupported, "nakayama permutation undefined at " + std::to_string(j));
  AdjointReport rep;
  rep.dualI = nk.sigma.at(j);
  rep.dualJ = i;
  OneMor F = OneMor::f(i, j);
  OneMor Fdual = OneMor::f(rep.dualI, rep.dualJ);
  std::vector<OneMor> objs{OneMor::identity()};
  for (int k : interior())
    for (int l : interior()) objs.push_back(OneMor::f(k, l));
  rep.pass = true;
  for (const OneMor& M : objs)
    for (const OneMor& N : objs) {
      int lhs = homDim(compose1(F, M).result, N);
      int rhs = homDim(M, compose1(Fdual, N).result);
      std::ostringstream os;
      os << "dim Hom(F(" << i << "," << j << ")o" << M.toString() << ", " << N.toString()
         << ") = " << lhs << " ; dim Hom(" << M.toString() << ", F(" << rep.dualI << ","
         << rep.dualJ << ")o" << N.toString() << ") = " << rhs;
      rep.lines.push_back(os.str());
      if (lhs != rhs) rep.pass = false;
    }
  return rep;
}

}  // namespace twocat
