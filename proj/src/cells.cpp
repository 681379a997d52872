#include "twocat/cells.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "twocat/error.hpp"

namespace twocat {

int MultiSemigroup::indexOf(const std::string& label) const {
  for (size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return static_cast<int>(k);
  fail(Errc::parse_error, "unknown label: " + label);
}

const std::vector<int>* MultiSemigroup::tryProduct(int a, int b) const {
  auto it = product.find({a, b});
  return it == product.end() ? nullptr : &it->second;
}

bool MultiSemigroup::allBoundary(int a) const {
  for (size_t b = 0; b < labels.size(); ++b)
    if (defined(a, static_cast<int>(b)) || defined(static_cast<int>(b), a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// fixtures and parsing

namespace {

std::string trimWs(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

MultiSemigroup parseMultiSemigroupFile(const std::string& content) {
  MultiSemigroup ms;
  std::map<std::string, int> index;
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
    if (section == "labels") {
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) {
        if (index.count(tok)) fail(Errc::parse_error, "duplicate label: " + tok);
        index[tok] = static_cast<int>(ms.labels.size());
        ms.labels.push_back(tok);
      }
    } else if (section == "products") {
      auto star = line.find('*');
      auto eq = line.find('=');
      if (star == std::string::npos || eq == std::string::npos || eq < star)
        fail(Errc::parse_error, "bad product line: " + line);
      std::string a = trimWs(line.substr(0, star));
      std::string b = trimWs(line.substr(star + 1, eq - star - 1));
      std::string rhs = trimWs(line.substr(eq + 1));
      if (!index.count(a)) fail(Errc::parse_error, "unknown label: " + a);
      if (!index.count(b)) fail(Errc::parse_error, "unknown label: " + b);
      std::vector<int> members;
      if (!rhs.empty()) {
        // commas inside parentheses belong to the label
        std::vector<std::string> toks;
        std::string cur;
        int depth = 0;
        for (char c : rhs) {
          if (c == '(') ++depth;
          if (c == ')') --depth;
          if (c == ',' && depth == 0) {
            toks.push_back(trimWs(cur));
            cur.clear();
          } else {
            cur.push_back(c);
          }
        }
        toks.push_back(trimWs(cur));
        for (const std::string& tok : toks) {
          if (tok.empty()) fail(Errc::parse_error, "empty member in product line: " + line);
          if (!index.count(tok)) fail(Errc::parse_error, "unknown label: " + tok);
          members.push_back(index[tok]);
        }
      }
      std::sort(members.begin(), members.end());
      auto key = std::make_pair(index[a], index[b]);
      if (ms.product.count(key)) fail(Errc::parse_error, "duplicate product line: " + line);
      ms.product[key] = std::move(members);
    } else {
      fail(Errc::parse_error, "line outside of any known section: " + line);
    }
  }
  if (ms.labels.empty()) fail(Errc::parse_error, "missing [labels]");
  return ms;
}

std::string dExampleFixtureText(int window) {
  std::ostringstream os;
  os << "# one object; F[z] o F[y] = F[z+y] (+) F[z+y+1], windowed at |z| <= " << window << "\n";
  os << "[labels]\n";
  os << "one";
  for (int z = -window; z <= window; ++z) os << " F[" << z << "]";
  os << "\n[products]\n";
  os << "one * one = one\n";
  for (int z = -window; z <= window; ++z) {
    os << "one * F[" << z << "] = F[" << z << "]\n";
    os << "F[" << z << "] * one = F[" << z << "]\n";
  }
  for (int z = -window; z <= window; ++z)
    for (int y = -window; y <= window; ++y) {
      if (z + y < -window || z + y + 1 > window) continue;  // escapes the window
      os << "F[" << z << "] * F[" << y << "] = F[" << z + y << "], F[" << z + y + 1 << "]\n";
    }
  return os.str();
}

std::string rectBandFixtureText(int lo, int hi) {
  std::ostringstream os;
  os << "# one object; f(i,j) o f(k,l) = f(i,l): the rectangular band\n";
  os << "[labels]\n";
  os << "one";
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) os << " f(" << i << "," << j << ")";
  os << "\n[products]\n";
  os << "one * one = one\n";
  auto f = [](int i, int j) {
    return "f(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) {
      os << "one * " << f(i, j) << " = " << f(i, j) << "\n";
      os << f(i, j) << " * one = " << f(i, j) << "\n";
    }
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      for (int k = lo; k <= hi; ++k)
        for (int l = lo; l <= hi; ++l)
          os << f(i, j) << " * " << f(k, l) << " = " << f(i, l) << "\n";
  return os.str();
}

MultiSemigroup fromAlgebra(const BimodCat& cat) {
  const BoundPathAlgebra& A = cat.algebra();
  MultiSemigroup ms;
  ms.labels.push_back("Id");
  std::map<std::pair<int, int>, int> fIdx;
  for (int i : cat.interior())
    for (int j : cat.interior()) {
      fIdx[{i, j}] = static_cast<int>(ms.labels.size());
      ms.labels.push_back(Summand::F(i, j).toString());
    }
  int n = static_cast<int>(ms.labels.size());
  ms.product[{0, 0}] = {0};
  for (int t = 1; t < n; ++t) {
    ms.product[{0, t}] = {t};
    ms.product[{t, 0}] = {t};
  }
  for (int i : cat.interior())
    for (int j : cat.interior())
      for (int k : cat.interior())
        for (int l : cat.interior()) {
          int mult = A.dimHom(j, k);
          std::vector<int> members(mult, fIdx.at({i, l}));
          ms.product[{fIdx.at({i, j}), fIdx.at({k, l})}] = std::move(members);
        }
  return ms;
}

// ---------------------------------------------------------------------------
// Green's relations

namespace {

void transitiveClosure(std::vector<std::vector<bool>>& m) {
  size_t n = m.size();
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) {
      if (!m[i][k]) continue;
      for (size_t j = 0; j < n; ++j)
        if (m[k][j]) m[i][j] = true;
    }
}

std::vector<int> cellsFromPreorder(const std::vector<std::vector<bool>>& leq) {
  size_t n = leq.size();
  std::vector<int> cell(n);
  for (size_t a = 0; a < n; ++a) {
    size_t rep = a;
    for (size_t b = 0; b < a; ++b)
      if (leq[a][b] && leq[b][a]) {
        rep = b;
        break;
      }
    cell[a] = static_cast<int>(rep);
  }
  return cell;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CellPartition greenCells(const MultiSemigroup& ms) {
  size_t n = ms.labels.size();
  for (size_t a = 0; a < n; ++a)
    if (ms.allBoundary(static_cast<int>(a)))
      fail(Errc::indeterminate_cell, "label " + ms.labels[a] + " has only boundary products");
  CellPartition p;
  auto init = [&] {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (size_t a = 0; a < n; ++a) m[a][a] = true;
    return m;
  };
  p.leqL = init();
  p.leqR = init();
  p.leqJ = init();
  for (auto& [key, members] : ms.product) {
    auto [h, f] = key;
    for (int g : members) {
      p.leqL[f][g] = true;  // g is a summand of h * f
      p.leqR[h][g] = true;  // g is a summand of h * f seen from the left factor
      p.leqJ[f][g] = true;
      p.leqJ[h][g] = true;
    }
  }
  // two-sided single steps m * f * n via defined intermediate products
  for (auto& [key, members] : ms.product) {
    auto [m, f] = key;
    (void)m;
    for (int u : members)
      for (size_t nn = 0; nn < n; ++nn) {
        const auto* two = ms.tryProduct(u, static_cast<int>(nn));
        if (!two) continue;
        for (int g : *two) p.leqJ[f][g] = true;
      }
  }
  transitiveClosure(p.leqL);
  transitiveClosure(p.leqR);
  transitiveClosure(p.leqJ);
  p.lCell = cellsFromPreorder(p.leqL);
  p.rCell = cellsFromPreorder(p.leqR);
  p.jCell = cellsFromPreorder(p.leqJ);
  // H = L intersect R
  p.hCell.resize(n);
  {
    std::map<std::pair<int, int>, int> rep;
    for (size_t a = 0; a < n; ++a) {
      auto key = std::make_pair(p.lCell[a], p.rCell[a]);
      auto it = rep.find(key);
      if (it == rep.end()) {
        rep[key] = static_cast<int>(a);
        p.hCell[a] = static_cast<int>(a);
      } else {
        p.hCell[a] = it->second;
      }
    }
  }
  // D = join of L and R
  {
    UnionFind uf(n);
    for (size_t a = 0; a < n; ++a) {
      uf.unite(static_cast<int>(a), p.lCell[a]);
      uf.unite(static_cast<int>(a), p.rCell[a]);
    }
    p.dCell.resize(n);
    std::map<int, int> canon;
    for (size_t a = 0; a < n; ++a) {
      int root = uf.find(static_cast<int>(a));
      auto it = canon.find(root);
      if (it == canon.end()) {
        canon[root] = static_cast<int>(a);
        p.dCell[a] = static_cast<int>(a);
      } else {
        p.dCell[a] = it->second;
      }
    }
  }
  return p;
}

int CellPartition::count(const std::vector<int>& cells) const {
  std::vector<int> uniq = cells;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  return static_cast<int>(uniq.size());
}

std::vector<std::vector<int>> CellPartition::classesOf(const std::vector<int>& cells) const {
  std::map<int, std::vector<int>> by;
  for (size_t a = 0; a < cells.size(); ++a) by[cells[a]].push_back(static_cast<int>(a));
  std::vector<std::vector<int>> out;
  for (auto& [rep, members] : by) out.push_back(members);
  return out;
}

RegularityReport stronglyRegular(const MultiSemigroup& ms, const CellPartition& p, int jClassId) {
  RegularityReport rep;
  std::vector<int> members;
  for (size_t a = 0; a < ms.labels.size(); ++a)
    if (p.jCell[a] == jClassId) members.push_back(static_cast<int>(a));
  if (members.empty()) fail(Errc::contract_violation, "empty J-cell id");
  // (a) the L-cells of the J-cell are incomparable under <=_L
  for (int a : members)
    for (int b : members) {
      if (p.lCell[a] == p.lCell[b]) continue;
      if (p.leqL[a][b] || p.leqL[b][a]) {
        rep.stronglyRegular = false;
        rep.witness = "L-cells of " + ms.labels[a] + " and " + ms.labels[b] + " are comparable";
        return rep;
      }
    }
  // (b) every H-cell is a singleton
  std::map<int, int> hCount;
  for (int a : members) ++hCount[p.hCell[a]];
  for (auto& [h, c] : hCount)
    if (c > 1) {
      rep.stronglyRegular = false;
      rep.witness = "H-cell of " + ms.labels[h] + " contains " + std::to_string(c) + " classes";
      return rep;
    }
  rep.stronglyRegular = true;
  return rep;
}

// ---------------------------------------------------------------------------
// cell 2-representation hom spaces

CellRepHom cellRepHom(const BimodCat& cat, int j, const OneMor& m, const OneMor& n) {
  const BoundPathAlgebra& A = cat.algebra();
  for (const OneMor* om : {&m, &n})
    for (const Summand& s : om->summands)
      if (s.id || s.j != j)
        fail(Errc::not_in_cell_rep, "object " + s.toString() + " is not in add L_" + std::to_string(j));
  CellRepHom out;
  const HomSpace& hs = cat.homSpace(m, n);
  out.nDim = hs.dim();
  // ideal generators: phi_{a,b} with b in rad e_jAe_j, per block
  int radDim = 0;
  for (size_t di = 0; di < m.size(); ++di)
    for (size_t ci = 0; ci < n.size(); ++ci) {
      auto pairs = cat.pairBasis(m.summands[di].i, n.summands[ci].i, j, j);
      std::vector<Vec> gens;
      for (size_t t = 0; t < pairs.size(); ++t) {
        if (A.info(pairs[t].second).len < 1) continue;
        Vec v(pairs.size());
        v[t] = Rat(1);
        gens.push_back(std::move(v));
      }
      radDim += static_cast<int>(span_dim(gens, pairs.size()));
    }
  out.cDim = out.nDim - radDim;
  return out;
}

bool cellsStableUnderEnlargement(const BimodCat& small, const BimodCat& big) {
  MultiSemigroup a = fromAlgebra(small);
  MultiSemigroup b = fromAlgebra(big);
  CellPartition pa = greenCells(a);
  CellPartition pb = greenCells(b);
  // compare the partition restricted to the smaller label set, via names
  std::map<std::string, int> bIndex;
  for (size_t t = 0; t < b.labels.size(); ++t) bIndex[b.labels[t]] = static_cast<int>(t);
  auto sameBlocks = [&](const std::vector<int>& ca, const std::vector<int>& cb) {
    for (size_t x = 0; x < a.labels.size(); ++x)
      for (size_t y = 0; y < a.labels.size(); ++y) {
        bool ea = ca[x] == ca[y];
        bool eb = cb[bIndex.at(a.labels[x])] == cb[bIndex.at(a.labels[y])];
        if (ea != eb) return false;
      }
    return true;
  };
  return sameBlocks(pa.lCell, pb.lCell) && sameBlocks(pa.rCell, pb.rCell) &&
         sameBlocks(pa.jCell, pb.jCell) && sameBlocks(pa.hCell, pb.hCell);
}

}  // namespace twocat
