#include "twocat/adelman.hpp"

#include <algorithm>
#include <sstream>

#include "twocat/error.hpp"

namespace twocat {

std::string AddCat::objName(const Obj& o) const {
  if (o.empty()) return "0";
  auto names = labelNames();
  std::string s;
  for (size_t k = 0; k < o.size(); ++k) {
    if (k) s += "+";
    s += names[o[k]];
  }
  return s;
}

std::vector<std::pair<size_t, size_t>> AddCatOps::blockLayout(const AddCat::Obj& a,
                                                              const AddCat::Obj& b,
                                                              std::vector<int>& offsets) const {
  std::vector<std::pair<size_t, size_t>> blocks;
  offsets.clear();
  int off = 0;
  for (size_t da = 0; da < a.size(); ++da)
    for (size_t cb = 0; cb < b.size(); ++cb) {
      blocks.emplace_back(da, cb);
      offsets.push_back(off);
      off += cat_->homDimLabels(a[da], b[cb]);
    }
  offsets.push_back(off);
  return blocks;
}

AMor AddCatOps::zeroMor(const AddCat::Obj& a, const AddCat::Obj& b) const {
  AMor f;
  f.dom = a;
  f.cod = b;
  f.coords.assign(cat_->homDim(a, b), Rat(0));
  return f;
}

Vec AddCatOps::block(const AMor& f, size_t di, size_t ci) const {
  std::vector<int> offsets;
  auto blocks = blockLayout(f.dom, f.cod, offsets);
  for (size_t t = 0; t < blocks.size(); ++t)
    if (blocks[t] == std::make_pair(di, ci))
      return Vec(f.coords.begin() + offsets[t], f.coords.begin() + offsets[t + 1]);
  fail(Errc::contract_violation, "block out of range");
}

void AddCatOps::setBlock(AMor& f, size_t di, size_t ci, const Vec& v) const {
  std::vector<int> offsets;
  auto blocks = blockLayout(f.dom, f.cod, offsets);
  for (size_t t = 0; t < blocks.size(); ++t)
    if (blocks[t] == std::make_pair(di, ci)) {
      for (size_t k = 0; k < v.size(); ++k) f.coords[offsets[t] + k] = v[k];
      return;
    }
  fail(Errc::contract_violation, "block out of range");
}

AMor AddCatOps::idMor(const AddCat::Obj& a) const {
  AMor f = zeroMor(a, a);
  for (size_t d = 0; d < a.size(); ++d) setBlock(f, d, d, cat_->idCoords(a[d]));
  return f;
}

AMor AddCatOps::compose(const AMor& f, const AMor& g) const {
  if (!(g.cod == f.dom)) fail(Errc::contract_violation, "AddCat compose: shape mismatch");
  AMor r = zeroMor(g.dom, f.cod);
  for (size_t da = 0; da < g.dom.size(); ++da)
    for (size_t cc = 0; cc < f.cod.size(); ++cc) {
      Vec acc(cat_->homDimLabels(g.dom[da], f.cod[cc]));
      for (size_t mb = 0; mb < g.cod.size(); ++mb) {
        Vec gb = block(g, da, mb);
        Vec fb = block(f, mb, cc);
        for (size_t gi = 0; gi < gb.size(); ++gi) {
          if (gb[gi].isZero()) continue;
          for (size_t fi = 0; fi < fb.size(); ++fi) {
            if (fb[fi].isZero()) continue;
            Vec c = cat_->composeBasis(g.dom[da], g.cod[mb], f.cod[cc], static_cast<int>(gi),
                                       static_cast<int>(fi));
            for (size_t k = 0; k < acc.size(); ++k) acc[k] += gb[gi] * fb[fi] * c[k];
          }
        }
      }
      setBlock(r, da, cc, acc);
    }
  return r;
}

AMor AddCatOps::add(const AMor& f, const AMor& g) const {
  AMor r = f;
  for (size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += g.coords[k];
  return r;
}

AMor AddCatOps::scale(const AMor& f, const Rat& c) const {
  AMor r = f;
  for (Rat& x : r.coords) x *= c;
  return r;
}

bool AddCatOps::isZero(const AMor& f) const {
  for (const Rat& x : f.coords)
    if (!x.isZero()) return false;
  return true;
}

AMor AddCatOps::basisMor(const AddCat::Obj& a, const AddCat::Obj& b, int t) const {
  AMor f = zeroMor(a, b);
  f.coords[t] = Rat(1);
  return f;
}

// ---------------------------------------------------------------------------
// fan Adelman abelianisation

AdelObj Adelman::embed(const AddCat::Obj& x) const {
  AdelObj a;
  a.X = x;
  return a;
}

AdelMor Adelman::embedMor(const AMor& f) const {
  AdelMor m;
  m.r = f;
  return m;
}

AdelMor Adelman::zeroMor(const AdelObj& a, const AdelObj& b) const {
  AdelMor m;
  m.s.assign(a.Y.size(), std::vector<AMor>(b.Y.size()));
  for (size_t i = 0; i < a.Y.size(); ++i)
    for (size_t j = 0; j < b.Y.size(); ++j) m.s[i][j] = ops_.zeroMor(a.Y[i], b.Y[j]);
  m.r = ops_.zeroMor(a.X, b.X);
  m.t.assign(a.Z.size(), std::vector<AMor>(b.Z.size()));
  for (size_t i = 0; i < a.Z.size(); ++i)
    for (size_t j = 0; j < b.Z.size(); ++j) m.t[i][j] = ops_.zeroMor(a.Z[i], b.Z[j]);
  return m;
}

AdelMor Adelman::idMor(const AdelObj& a) const {
  AdelMor m = zeroMor(a, a);
  for (size_t i = 0; i < a.Y.size(); ++i) m.s[i][i] = ops_.idMor(a.Y[i]);
  m.r = ops_.idMor(a.X);
  for (size_t i = 0; i < a.Z.size(); ++i) m.t[i][i] = ops_.idMor(a.Z[i]);
  return m;
}

AdelMor Adelman::compose(const AdelMor& f, const AdelMor& g, const AdelObj& a, const AdelObj& b,
                         const AdelObj& c) const {
  AdelMor m;
  m.s.assign(a.Y.size(), std::vector<AMor>(c.Y.size()));
  for (size_t i = 0; i < a.Y.size(); ++i)
    for (size_t j = 0; j < c.Y.size(); ++j) {
      AMor acc = ops_.zeroMor(a.Y[i], c.Y[j]);
      for (size_t l = 0; l < b.Y.size(); ++l) acc = ops_.add(acc, ops_.compose(f.s[l][j], g.s[i][l]));
      m.s[i][j] = std::move(acc);
    }
  m.r = ops_.compose(f.r, g.r);
  m.t.assign(a.Z.size(), std::vector<AMor>(c.Z.size()));
  for (size_t i = 0; i < a.Z.size(); ++i)
    for (size_t j = 0; j < c.Z.size(); ++j) {
      AMor acc = ops_.zeroMor(a.Z[i], c.Z[j]);
      for (size_t z = 0; z < b.Z.size(); ++z) acc = ops_.add(acc, ops_.compose(f.t[z][j], g.t[i][z]));
      m.t[i][j] = std::move(acc);
    }
  return m;
}

AdelMor Adelman::add(const AdelMor& f, const AdelMor& g) const {
  AdelMor m = f;
  for (size_t i = 0; i < m.s.size(); ++i)
    for (size_t j = 0; j < m.s[i].size(); ++j) m.s[i][j] = ops_.add(m.s[i][j], g.s[i][j]);
  m.r = ops_.add(m.r, g.r);
  for (size_t i = 0; i < m.t.size(); ++i)
    for (size_t j = 0; j < m.t[i].size(); ++j) m.t[i][j] = ops_.add(m.t[i][j], g.t[i][j]);
  return m;
}

AdelMor Adelman::scale(const AdelMor& f, const Rat& c) const {
  AdelMor m = f;
  for (auto& row : m.s)
    for (auto& x : row) x = ops_.scale(x, c);
  m.r = ops_.scale(m.r, c);
  for (auto& row : m.t)
    for (auto& x : row) x = ops_.scale(x, c);
  return m;
}

std::vector<Vec> Adelman::homotopyRows(const AdelObj& a, const AdelObj& b) const {
  std::vector<Vec> rows;
  // alpha'_m o p for p in Hom(X_a, Y'_m)
  for (size_t mIdx = 0; mIdx < b.Y.size(); ++mIdx) {
    int d = cat_.homDim(a.X, b.Y[mIdx]);
    for (int t = 0; t < d; ++t) {
      AMor p = ops_.basisMor(a.X, b.Y[mIdx], t);
      rows.push_back(ops_.compose(b.alpha[mIdx], p).coords);
    }
  }
  // q o beta_j for q in Hom(Z_j, X_b)
  for (size_t jIdx = 0; jIdx < a.Z.size(); ++jIdx) {
    int d = cat_.homDim(a.Z[jIdx], b.X);
    for (int t = 0; t < d; ++t) {
      AMor q = ops_.basisMor(a.Z[jIdx], b.X, t);
      rows.push_back(ops_.compose(q, a.beta[jIdx]).coords);
    }
  }
  return rows;
}

int Adelman::homDim(const AdelObj& a, const AdelObj& b) const {
  int full = cat_.homDim(a.X, b.X);
  return full - static_cast<int>(span_dim(homotopyRows(a, b), full));
}

std::vector<AdelMor> Adelman::homBasis(const AdelObj& a, const AdelObj& b) const {
  int full = cat_.homDim(a.X, b.X);
  std::vector<Vec> span = span_basis(homotopyRows(a, b), full);
  std::vector<AdelMor> basis;
  for (int t = 0; t < full; ++t) {
    Vec unit(full);
    unit[t] = Rat(1);
    if (in_span(span, unit)) continue;
    span.push_back(unit);
    span = span_basis(span, full);
    AdelMor m = zeroMor(a, b);
    m.r.coords = unit;
    basis.push_back(std::move(m));
  }
  return basis;
}

bool Adelman::isHomotopic(const AdelMor& f, const AdelMor& g, const AdelObj& a,
                          const AdelObj& b) const {
  Vec diff = f.r.coords;
  for (size_t k = 0; k < diff.size(); ++k) diff[k] -= g.r.coords[k];
  return in_span(span_basis(homotopyRows(a, b), diff.size()), diff);
}

bool Adelman::isZeroMor(const AdelMor& f, const AdelObj& a, const AdelObj& b) const {
  return isHomotopic(f, zeroMor(a, b), a, b);
}

// kernel of f : a -> b, built from the fan block matrices
Adelman::KernelData Adelman::kernel(const AdelMor& f, const AdelObj& a, const AdelObj& b) const {
  size_t k = a.Y.size(), kp = b.Y.size();
  KernelData out;
  AdelObj& K = out.obj;
  // middle: X (+) (+)_m Y'_m
  K.X = a.X;
  for (size_t m = 0; m < kp; ++m) K.X = AddCat::plus(K.X, b.Y[m]);
  // Y-legs: the Y_i followed by the Y'_m
  for (size_t i = 0; i < k; ++i) {
    K.Y.push_back(a.Y[i]);
    AMor al = ops_.zeroMor(a.Y[i], K.X);
    // components (alpha_i ; s_{i,1..k'})
    size_t xParts = a.X.size();
    for (size_t d = 0; d < a.Y[i].size(); ++d) {
      for (size_t c = 0; c < xParts; ++c) ops_.setBlock(al, d, c, ops_.block(a.alpha[i], d, c));
      size_t off = xParts;
      for (size_t m = 0; m < kp; ++m) {
        for (size_t c = 0; c < b.Y[m].size(); ++c)
          ops_.setBlock(al, d, off + c, ops_.block(f.s[i][m], d, c));
        off += b.Y[m].size();
      }
    }
    K.alpha.push_back(std::move(al));
  }
  for (size_t m = 0; m < kp; ++m) {
    K.Y.push_back(b.Y[m]);
    AMor al = ops_.zeroMor(b.Y[m], K.X);
    size_t off = a.X.size();
    for (size_t mm = 0; mm < m; ++mm) off += b.Y[mm].size();
    AMor negId = ops_.scale(ops_.idMor(b.Y[m]), Rat(-1));
    for (size_t d = 0; d < b.Y[m].size(); ++d)
      for (size_t c = 0; c < b.Y[m].size(); ++c) ops_.setBlock(al, d, off + c, ops_.block(negId, d, c));
    K.alpha.push_back(std::move(al));
  }
  // Z-legs: X' followed by the Z_j
  {
    K.Z.push_back(b.X);
    AMor be = ops_.zeroMor(K.X, b.X);
    for (size_t c = 0; c < b.X.size(); ++c) {
      for (size_t d = 0; d < a.X.size(); ++d) ops_.setBlock(be, d, c, ops_.block(f.r, d, c));
      size_t off = a.X.size();
      for (size_t m = 0; m < kp; ++m) {
        AMor negAl = ops_.scale(b.alpha[m], Rat(-1));
        for (size_t d = 0; d < b.Y[m].size(); ++d)
          ops_.setBlock(be, off + d, c, ops_.block(negAl, d, c));
        off += b.Y[m].size();
      }
    }
    K.beta.push_back(std::move(be));
  }
  for (size_t j = 0; j < a.Z.size(); ++j) {
    K.Z.push_back(a.Z[j]);
    AMor be = ops_.zeroMor(K.X, a.Z[j]);
    for (size_t d = 0; d < a.X.size(); ++d)
      for (size_t c = 0; c < a.Z[j].size(); ++c) ops_.setBlock(be, d, c, ops_.block(a.beta[j], d, c));
    K.beta.push_back(std::move(be));
  }
  // inclusion K -> a
  out.incl = zeroMor(K, a);
  for (size_t i = 0; i < k; ++i) out.incl.s[i][i] = ops_.idMor(a.Y[i]);
  // r: project X (+) (+)Y' -> X
  for (size_t d = 0; d < a.X.size(); ++d)
    ops_.setBlock(out.incl.r, d, d, cat_.idCoords(a.X[d]));
  for (size_t j = 0; j < a.Z.size(); ++j) out.incl.t[1 + j][j] = ops_.idMor(a.Z[j]);
  return out;
}

// cokernel by the dual block matrices
Adelman::CokernelData Adelman::cokernel(const AdelMor& f, const AdelObj& a, const AdelObj& b) const {
  size_t k = a.Z.size(), kp = b.Y.size();
  (void)kp;
  CokernelData out;
  AdelObj& C = out.obj;
  // middle: X' (+) (+)_j Z_j
  C.X = b.X;
  for (size_t j = 0; j < k; ++j) C.X = AddCat::plus(C.X, a.Z[j]);
  // Y-legs: X followed by the Y'_m
  {
    C.Y.push_back(a.X);
    AMor al = ops_.zeroMor(a.X, C.X);
    for (size_t d = 0; d < a.X.size(); ++d) {
      for (size_t c = 0; c < b.X.size(); ++c) ops_.setBlock(al, d, c, ops_.block(f.r, d, c));
      size_t off = b.X.size();
      for (size_t j = 0; j < k; ++j) {
        for (size_t c = 0; c < a.Z[j].size(); ++c)
          ops_.setBlock(al, d, off + c, ops_.block(a.beta[j], d, c));
        off += a.Z[j].size();
      }
    }
    C.alpha.push_back(std::move(al));
  }
  for (size_t m = 0; m < b.Y.size(); ++m) {
    C.Y.push_back(b.Y[m]);
    AMor al = ops_.zeroMor(b.Y[m], C.X);
    for (size_t d = 0; d < b.Y[m].size(); ++d)
      for (size_t c = 0; c < b.X.size(); ++c) ops_.setBlock(al, d, c, ops_.block(b.alpha[m], d, c));
    C.alpha.push_back(std::move(al));
  }
  // Z-legs: the Z'_n followed by the Z_j
  for (size_t n = 0; n < b.Z.size(); ++n) {
    C.Z.push_back(b.Z[n]);
    AMor be = ops_.zeroMor(C.X, b.Z[n]);
    for (size_t d = 0; d < b.X.size(); ++d)
      for (size_t c = 0; c < b.Z[n].size(); ++c) ops_.setBlock(be, d, c, ops_.block(b.beta[n], d, c));
    size_t off = b.X.size();
    for (size_t j = 0; j < k; ++j) {
      AMor negT = ops_.scale(f.t[j][n], Rat(-1));
      for (size_t d = 0; d < a.Z[j].size(); ++d)
        for (size_t c = 0; c < b.Z[n].size(); ++c)
          ops_.setBlock(be, off + d, c, ops_.block(negT, d, c));
      off += a.Z[j].size();
    }
    C.beta.push_back(std::move(be));
  }
  for (size_t j = 0; j < k; ++j) {
    C.Z.push_back(a.Z[j]);
    AMor be = ops_.zeroMor(C.X, a.Z[j]);
    size_t off = b.X.size();
    for (size_t jj = 0; jj < j; ++jj) off += a.Z[jj].size();
    AMor negId = ops_.scale(ops_.idMor(a.Z[j]), Rat(-1));
    for (size_t d = 0; d < a.Z[j].size(); ++d)
      for (size_t c = 0; c < a.Z[j].size(); ++c)
        ops_.setBlock(be, off + d, c, ops_.block(negId, d, c));
    C.beta.push_back(std::move(be));
  }
  // projection b -> C
  out.proj = zeroMor(b, C);
  for (size_t m = 0; m < b.Y.size(); ++m) out.proj.s[m][1 + m] = ops_.idMor(b.Y[m]);
  for (size_t d = 0; d < b.X.size(); ++d)
    ops_.setBlock(out.proj.r, d, d, cat_.idCoords(b.X[d]));
  for (size_t n = 0; n < b.Z.size(); ++n) out.proj.t[n][n] = ops_.idMor(b.Z[n]);
  return out;
}

namespace {

// span of { compose . } images inside coordinate space, plus a给定 subspace
std::vector<Vec> imageSpan(const std::vector<Vec>& generators, size_t dim) {
  return span_basis(generators, dim);
}

}  // namespace

bool Adelman::verifyKernel(const AdelMor& f, const AdelObj& a, const AdelObj& b,
                           const KernelData& k, const std::vector<AdelObj>& testObjects) const {
  // f o incl is homotopic to zero
  if (!isZeroMor(compose(f, k.incl, k.obj, a, b), k.obj, b)) return false;
  for (const AdelObj& T : testObjects) {
    int dTA = cat_.homDim(T.X, a.X);
    // the subspace { h.r : f o h ~ 0 } of Hom(X_T, X_a)
    std::vector<Vec> homotB = span_basis(homotopyRows(T, b), cat_.homDim(T.X, b.X));
    std::vector<Vec> goodH;
    {
      // kernel of h |-> class of f.r o h in Hom(T, b)/homotopy
      std::vector<Vec> rows;  // equations: coords of f.r o h modulo homotopy span
      // Build matrix M: columns = h basis, rows = full Hom(T,b) coords; then
      // require M h in span(homotB): solve via stacking [M | homotB columns].
      Mat M(cat_.homDim(T.X, b.X), dTA);
      for (int t = 0; t < dTA; ++t) {
        AMor h = ops_.basisMor(T.X, a.X, t);
        Vec img = ops_.compose(f.r, h).coords;
        for (size_t rIdx = 0; rIdx < img.size(); ++rIdx) M.at(rIdx, t) = img[rIdx];
      }
      Mat aug(cat_.homDim(T.X, b.X), dTA + homotB.size());
      for (size_t rIdx = 0; rIdx < aug.rows(); ++rIdx) {
        for (int c = 0; c < dTA; ++c) aug.at(rIdx, c) = M.at(rIdx, c);
        for (size_t c = 0; c < homotB.size(); ++c) aug.at(rIdx, dTA + c) = homotB[c][rIdx];
      }
      for (const Vec& kv : kernel_basis(aug)) goodH.push_back(Vec(kv.begin(), kv.begin() + dTA));
      goodH = span_basis(goodH, dTA);
    }
    // the factoring image { k.r o u } + homotopy(T, a)
    std::vector<Vec> reach;
    int dTK = cat_.homDim(T.X, k.obj.X);
    for (int t = 0; t < dTK; ++t) {
      AMor u = ops_.basisMor(T.X, k.obj.X, t);
      reach.push_back(ops_.compose(k.incl.r, u).coords);
    }
    for (const Vec& hrow : homotopyRows(T, a)) reach.push_back(hrow);
    std::vector<Vec> reachSpan = imageSpan(reach, dTA);
    for (const Vec& h : goodH)
      if (!in_span(reachSpan, h)) return false;
    // monomorphism: k o u ~ 0 implies u ~ 0
    std::vector<Vec> homotA = span_basis(homotopyRows(T, a), dTA);
    Mat M2(dTA + 0, dTK);
    {
      Mat m2(cat_.homDim(T.X, a.X), dTK);
      for (int t = 0; t < dTK; ++t) {
        AMor u = ops_.basisMor(T.X, k.obj.X, t);
        Vec img = ops_.compose(k.incl.r, u).coords;
        for (size_t rIdx = 0; rIdx < img.size(); ++rIdx) m2.at(rIdx, t) = img[rIdx];
      }
      Mat aug(cat_.homDim(T.X, a.X), dTK + homotA.size());
      for (size_t rIdx = 0; rIdx < aug.rows(); ++rIdx) {
        for (int c = 0; c < dTK; ++c) aug.at(rIdx, c) = m2.at(rIdx, c);
        for (size_t c = 0; c < homotA.size(); ++c) aug.at(rIdx, dTK + c) = homotA[c][rIdx];
      }
      std::vector<Vec> homotK = span_basis(homotopyRows(T, k.obj), dTK);
      for (const Vec& kv : kernel_basis(aug)) {
        Vec u(kv.begin(), kv.begin() + dTK);
        if (!in_span(homotK, u)) return false;
      }
    }
  }
  return true;
}

bool Adelman::verifyCokernel(const AdelMor& f, const AdelObj& a, const AdelObj& b,
                             const CokernelData& c, const std::vector<AdelObj>& testObjects) const {
  if (!isZeroMor(compose(c.proj, f, a, b, c.obj), a, c.obj)) return false;
  for (const AdelObj& T : testObjects) {
    int dBT = cat_.homDim(b.X, T.X);
    std::vector<Vec> homotAT = span_basis(homotopyRows(a, T), cat_.homDim(a.X, T.X));
    std::vector<Vec> goodH;
    {
      Mat M(cat_.homDim(a.X, T.X), dBT);
      for (int t = 0; t < dBT; ++t) {
        AMor h = ops_.basisMor(b.X, T.X, t);
        Vec img = ops_.compose(h, f.r).coords;
        for (size_t rIdx = 0; rIdx < img.size(); ++rIdx) M.at(rIdx, t) = img[rIdx];
      }
      Mat aug(cat_.homDim(a.X, T.X), dBT + homotAT.size());
      for (size_t rIdx = 0; rIdx < aug.rows(); ++rIdx) {
        for (int cc = 0; cc < dBT; ++cc) aug.at(rIdx, cc) = M.at(rIdx, cc);
        for (size_t cc = 0; cc < homotAT.size(); ++cc) aug.at(rIdx, dBT + cc) = homotAT[cc][rIdx];
      }
      for (const Vec& kv : kernel_basis(aug)) goodH.push_back(Vec(kv.begin(), kv.begin() + dBT));
      goodH = span_basis(goodH, dBT);
    }
    std::vector<Vec> reach;
    int dCT = cat_.homDim(c.obj.X, T.X);
    for (int t = 0; t < dCT; ++t) {
      AMor u = ops_.basisMor(c.obj.X, T.X, t);
      reach.push_back(ops_.compose(u, c.proj.r).coords);
    }
    for (const Vec& hrow : homotopyRows(b, T)) reach.push_back(hrow);
    std::vector<Vec> reachSpan = imageSpan(reach, dBT);
    for (const Vec& h : goodH)
      if (!in_span(reachSpan, h)) return false;
    // epimorphism dual: u o proj ~ 0 implies u ~ 0
    std::vector<Vec> homotBT = span_basis(homotopyRows(b, T), dBT);
    Mat m2(cat_.homDim(b.X, T.X), dCT);
    for (int t = 0; t < dCT; ++t) {
      AMor u = ops_.basisMor(c.obj.X, T.X, t);
      Vec img = ops_.compose(u, c.proj.r).coords;
      for (size_t rIdx = 0; rIdx < img.size(); ++rIdx) m2.at(rIdx, t) = img[rIdx];
    }
    Mat aug(cat_.homDim(b.X, T.X), dCT + homotBT.size());
    for (size_t rIdx = 0; rIdx < aug.rows(); ++rIdx) {
      for (int cc = 0; cc < dCT; ++cc) aug.at(rIdx, cc) = m2.at(rIdx, cc);
      for (size_t cc = 0; cc < homotBT.size(); ++cc) aug.at(rIdx, dCT + cc) = homotBT[cc][rIdx];
    }
    std::vector<Vec> homotCT = span_basis(homotopyRows(c.obj, T), dCT);
    for (const Vec& kv : kernel_basis(aug)) {
      Vec u(kv.begin(), kv.begin() + dCT);
      if (!in_span(homotCT, u)) return false;
    }
  }
  return true;
}

long long Adelman::homDimBound(const AdelObj& a, const AdelObj& b) const {
  // dimension of the raw morphism-triple space; the hom space is a quotient
  // of a subspace of it
  long long bound = cat_.homDim(a.X, b.X);
  for (const auto& yi : a.Y)
    for (const auto& ym : b.Y) bound += cat_.homDim(yi, ym);
  for (const auto& zj : a.Z)
    for (const auto& zn : b.Z) bound += cat_.homDim(zj, zn);
  return bound;
}

bool Adelman::homDimBoundCheck(const AdelObj& a, const AdelObj& b) const {
  return homDim(a, b) <= homDimBound(a, b);
}

bool Adelman::isIsomorphic(const AdelObj& a, const AdelObj& b) const {
  // search for f: a -> b with a left and a right inverse up to homotopy
  std::vector<AdelMor> basis = homBasis(a, b);
  if (homDim(a, a) == 0 && homDim(b, b) == 0) return true;  // both zero objects
  std::vector<AdelMor> candidates = basis;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) candidates.push_back(add(basis[i], basis[j]));
  // small deterministic extra combinations
  if (basis.size() >= 2) {
    AdelMor all = basis[0];
    for (size_t i = 1; i < basis.size(); ++i) all = add(all, basis[i]);
    candidates.push_back(all);
  }
  AdelMor idA = idMor(a), idB = idMor(b);
  int dBA = cat_.homDim(b.X, a.X);
  std::vector<Vec> homotA = span_basis(homotopyRows(a, a), cat_.homDim(a.X, a.X));
  std::vector<Vec> homotB = span_basis(homotopyRows(b, b), cat_.homDim(b.X, b.X));
  for (const AdelMor& f : candidates) {
    // solve g.r with g o f ~ id_a
    auto solveSide = [&](bool left) -> bool {
      // g : b -> a in both cases; left: g o f ~ id_a, right: f o g ~ id_b
      int dG = dBA;
      int dTgt = left ? cat_.homDim(a.X, a.X) : cat_.homDim(b.X, b.X);
      const std::vector<Vec>& homot = left ? homotA : homotB;
      Mat aug(dTgt, dG + homot.size());
      for (int t = 0; t < dG; ++t) {
        AMor g = ops_.basisMor(b.X, a.X, t);
        Vec img = left ? ops_.compose(g, f.r).coords : ops_.compose(f.r, g).coords;
        for (size_t rIdx = 0; rIdx < img.size(); ++rIdx) aug.at(rIdx, t) = img[rIdx];
      }
      for (size_t c = 0; c < homot.size(); ++c)
        for (int rIdx = 0; rIdx < dTgt; ++rIdx) aug.at(rIdx, dG + c) = homot[c][rIdx];
      Vec rhs = left ? idA.r.coords : idB.r.coords;
      return solve_linear(aug, rhs).has_value();
    };
    if (solveSide(true) && solveSide(false)) return true;
  }
  return false;
}

AdelObj Adelman::collapseToSums(const AdelObj& a) const {
  AdelObj c;
  c.X = a.X;
  AddCat::Obj ySum, zSum;
  for (const auto& y : a.Y) ySum = AddCat::plus(ySum, y);
  for (const auto& z : a.Z) zSum = AddCat::plus(zSum, z);
  if (!ySum.empty()) {
    c.Y.push_back(ySum);
    AMor al = ops_.zeroMor(ySum, a.X);
    size_t off = 0;
    for (size_t i = 0; i < a.Y.size(); ++i) {
      for (size_t d = 0; d < a.Y[i].size(); ++d)
        for (size_t cc = 0; cc < a.X.size(); ++cc)
          ops_.setBlock(al, off + d, cc, ops_.block(a.alpha[i], d, cc));
      off += a.Y[i].size();
    }
    c.alpha.push_back(std::move(al));
  }
  if (!zSum.empty()) {
    c.Z.push_back(zSum);
    AMor be = ops_.zeroMor(a.X, zSum);
    size_t off = 0;
    for (size_t j = 0; j < a.Z.size(); ++j) {
      for (size_t d = 0; d < a.X.size(); ++d)
        for (size_t cc = 0; cc < a.Z[j].size(); ++cc)
          ops_.setBlock(be, d, off + cc, ops_.block(a.beta[j], d, cc));
      off += a.Z[j].size();
    }
    c.beta.push_back(std::move(be));
  }
  return c;
}

// ---------------------------------------------------------------------------
// bimod model

BimodAdelman::BimodAdelman(const BimodCat& bimod) : C_(&bimod) {
  labels_ = std::make_shared<std::vector<Summand>>();
  labels_->push_back(Summand::Id());
  for (int i : bimod.interior())
    for (int j : bimod.interior()) labels_->push_back(Summand::F(i, j));
  auto labels = labels_;
  const BimodCat* C = C_;
  auto composeCache =
      std::make_shared<std::map<std::tuple<int, int, int, int, int>, Vec>>();
  cat_.labelNames = [labels]() {
    std::vector<std::string> names;
    for (const Summand& s : *labels) names.push_back(s.toString());
    return names;
  };
  cat_.homDimLabels = [labels, C](int x, int y) {
    return C->homDim(OneMor{{(*labels)[x]}}, OneMor{{(*labels)[y]}});
  };
  cat_.composeBasis = [labels, C, composeCache](int x, int y, int z, int gi, int fi) {
    auto key = std::make_tuple(x, y, z, gi, fi);
    auto it = composeCache->find(key);
    if (it != composeCache->end()) return it->second;
    OneMor ox{{(*labels)[x]}}, oy{{(*labels)[y]}}, oz{{(*labels)[z]}};
    TwoMor g = C->basisTwoMor(C->homSpace(ox, oy), gi);
    TwoMor f = C->basisTwoMor(C->homSpace(oy, oz), fi);
    Vec coords = C->homCoords(C->homSpace(ox, oz), C->vcompose(f, g));
    return composeCache->emplace(key, std::move(coords)).first->second;
  };
  cat_.idCoords = [labels, C](int x) {
    OneMor ox{{(*labels)[x]}};
    return C->homCoords(C->homSpace(ox, ox), C->idTwoMor(ox));
  };
  adel_ = std::make_unique<Adelman>(cat_);
}

int BimodAdelman::labelOf(const Summand& s) const {
  for (size_t k = 0; k < labels_->size(); ++k)
    if ((*labels_)[k] == s) return static_cast<int>(k);
  fail(Errc::margin_violation, "1-morphism summand outside the interior label set: " + s.toString());
}

AddCat::Obj BimodAdelman::objOf(const OneMor& m) const {
  AddCat::Obj o;
  for (const Summand& s : m.summands) o.push_back(labelOf(s));
  return o;
}

OneMor BimodAdelman::oneMorOf(const AddCat::Obj& o) const {
  OneMor m;
  for (int x : o) m.summands.push_back((*labels_)[x]);
  return m;
}

AMor BimodAdelman::fromTwoMor(const TwoMor& f) const {
  AMor out;
  out.dom = objOf(f.dom);
  out.cod = objOf(f.cod);
  AddCatOps ops(cat_);
  out = ops.zeroMor(out.dom, out.cod);
  for (size_t di = 0; di < f.dom.size(); ++di)
    for (size_t ci = 0; ci < f.cod.size(); ++ci) {
      if (f.blocks[di][ci].empty()) continue;
      OneMor sd{{f.dom.summands[di]}}, sc{{f.cod.summands[ci]}};
      TwoMor single = C_->zeroTwoMor(sd, sc);
      single.blocks[0][0] = f.blocks[di][ci];
      ops.setBlock(out, di, ci, C_->homCoords(C_->homSpace(sd, sc), single));
    }
  return out;
}

TwoMor BimodAdelman::toTwoMor(const AMor& f) const {
  OneMor dom = oneMorOf(f.dom), cod = oneMorOf(f.cod);
  TwoMor out = C_->zeroTwoMor(dom, cod);
  AddCatOps ops(cat_);
  for (size_t di = 0; di < dom.size(); ++di)
    for (size_t ci = 0; ci < cod.size(); ++ci) {
      OneMor sd{{dom.summands[di]}}, sc{{cod.summands[ci]}};
      TwoMor single = C_->fromHomCoords(C_->homSpace(sd, sc), ops.block(f, di, ci));
      out.blocks[di][ci] = single.blocks[0][0];
    }
  return out;
}

AMor BimodAdelman::whiskerRight(const AMor& f, const OneMor& S) const {
  TwoMor t = toTwoMor(f);
  TwoMor w = C_->hcompose(t, C_->idTwoMor(S));
  return fromTwoMor(w);
}

AdelObj BimodAdelman::tensorCompose(const AdelObj& a, const AdelObj& b) const {
  // a = (Y_i, X, Z_j, alpha, beta, k), b = (Y'_i, X', Z'_j, alpha', beta', k')
  AdelObj r;
  OneMor X = oneMorOf(a.X), Xp = oneMorOf(b.X);
  OneMor XXp = C_->compose1(X, Xp).result;
  r.X = objOf(XXp);
  size_t k = a.Y.size(), kp = b.Y.size();
  // V_i = Y_i o X' for i <= k; X o Y'_{i-k} after that
  for (size_t i = 0; i < k; ++i) {
    OneMor Yi = oneMorOf(a.Y[i]);
    r.Y.push_back(objOf(C_->compose1(Yi, Xp).result));
    TwoMor gamma = C_->hcompose(toTwoMor(a.alpha[i]), C_->idTwoMor(Xp));
    r.alpha.push_back(fromTwoMor(gamma));
  }
  for (size_t i = 0; i < kp; ++i) {
    OneMor Ypi = oneMorOf(b.Y[i]);
    r.Y.push_back(objOf(C_->compose1(X, Ypi).result));
    TwoMor gamma = C_->hcompose(C_->idTwoMor(X), toTwoMor(b.alpha[i]));
    r.alpha.push_back(fromTwoMor(gamma));
  }
  // W_j = X o Z'_j for j <= k'; Z_{j-k'} o X' after that
  size_t kz = a.Z.size(), kzp = b.Z.size();
  for (size_t j = 0; j < kzp; ++j) {
    OneMor Zpj = oneMorOf(b.Z[j]);
    r.Z.push_back(objOf(C_->compose1(X, Zpj).result));
    TwoMor delta = C_->hcompose(C_->idTwoMor(X), toTwoMor(b.beta[j]));
    r.beta.push_back(fromTwoMor(delta));
  }
  for (size_t j = 0; j < kz; ++j) {
    OneMor Zj = oneMorOf(a.Z[j]);
    r.Z.push_back(objOf(C_->compose1(Zj, Xp).result));
    TwoMor delta = C_->hcompose(toTwoMor(a.beta[j]), C_->idTwoMor(Xp));
    r.beta.push_back(fromTwoMor(delta));
  }
  return r;
}

AdelObj BimodAdelman::evalObj(const AdelObj& a, const OneMor& S) const {
  AdelObj r;
  r.X = objOf(C_->compose1(oneMorOf(a.X), S).result);
  for (size_t i = 0; i < a.Y.size(); ++i) {
    r.Y.push_back(objOf(C_->compose1(oneMorOf(a.Y[i]), S).result));
    r.alpha.push_back(whiskerRight(a.alpha[i], S));
  }
  for (size_t j = 0; j < a.Z.size(); ++j) {
    r.Z.push_back(objOf(C_->compose1(oneMorOf(a.Z[j]), S).result));
    r.beta.push_back(whiskerRight(a.beta[j], S));
  }
  return r;
}

AdelMor BimodAdelman::evalMor(const AdelMor& f, const AdelObj& a, const AdelObj& b,
                              const OneMor& S) const {
  AdelMor r;
  r.s.assign(a.Y.size(), std::vector<AMor>(b.Y.size()));
  for (size_t i = 0; i < a.Y.size(); ++i)
    for (size_t j = 0; j < b.Y.size(); ++j) r.s[i][j] = whiskerRight(f.s[i][j], S);
  r.r = whiskerRight(f.r, S);
  r.t.assign(a.Z.size(), std::vector<AMor>(b.Z.size()));
  for (size_t i = 0; i < a.Z.size(); ++i)
    for (size_t j = 0; j < b.Z.size(); ++j) r.t[i][j] = whiskerRight(f.t[i][j], S);
  return r;
}

bool BimodAdelman::evaluationExactness(const AdelMor& f, const AdelObj& a, const AdelObj& b,
                                       const OneMor& S,
                                       const std::vector<AdelObj>& testObjects) const {
  Adelman::KernelData k = adel_->kernel(f, a, b);
  AdelObj aS = evalObj(a, S), bS = evalObj(b, S), kS = evalObj(k.obj, S);
  AdelMor fS = evalMor(f, a, b, S);
  AdelMor inclS = evalMor(k.incl, k.obj, a, S);
  std::vector<AdelObj> testS;
  for (const AdelObj& t : testObjects) testS.push_back(evalObj(t, S));
  testS.push_back(kS);
  Adelman::KernelData evaluated{kS, inclS};
  return adel_->verifyKernel(fS, aS, bS, evaluated, testS);
}

}  // namespace twocat
