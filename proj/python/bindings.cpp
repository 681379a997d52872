#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twocat/adelman.hpp"
#include "twocat/bimod.hpp"
#include "twocat/cells.hpp"
#include "twocat/coalgebra.hpp"
#include "twocat/coxeter.hpp"
#include "twocat/pathalg.hpp"

namespace py = pybind11;
using namespace twocat;

namespace {

// Owns the algebra and its derived structures; python sees plain data.
struct ZigzagWorkbench {
  BoundPathAlgebra algebra;
  BimodCat cat;

  ZigzagWorkbench(int lo, int hi) : algebra(BoundPathAlgebra::zigzag(lo, hi)), cat(algebra) {}

  std::vector<int> interior() const { return cat.interior(); }

  int homDimFF(int i, int j, int m, int n) const {
    return cat.homDim(OneMor::f(i, j), OneMor::f(m, n));
  }
  int homDimIdF(int i, int j) const { return cat.homDim(OneMor::identity(), OneMor::f(i, j)); }
  int homDimFId(int i, int j) const { return cat.homDim(OneMor::f(i, j), OneMor::identity()); }
  int composeMultiplicity(int i, int j, int k, int l) const {
    return static_cast<int>(cat.compose1(OneMor::f(i, j), OneMor::f(k, l)).result.size());
  }
  bool selfInjective() const { return cat.nakayama().selfInjective; }
  bool adjointCheck(int i, int j) const { return cat.adjointCheck(i, j).pass; }
  py::dict cells() const {
    MultiSemigroup ms = fromAlgebra(cat);
    CellPartition p = greenCells(ms);
    py::dict d;
    d["labels"] = ms.labels.size();
    d["l_cells"] = p.count(p.lCell);
    d["r_cells"] = p.count(p.rCell);
    d["j_cells"] = p.count(p.jCell);
    bool reg = true;
    for (const auto& cls : p.classesOf(p.jCell))
      reg = reg && stronglyRegular(ms, p, p.jCell[cls[0]]).stronglyRegular;
    d["strongly_regular"] = reg;
    return d;
  }
  py::dict zAlgebra() const {
    const ZAlgebra& z = cat.zAlgebra();
    py::dict d;
    d["local"] = z.local;
    d["basis_size"] = z.basis.size();
    bool prodsVanish = true;
    for (const auto& row : z.table)
      for (const Vec& v : row)
        for (const Rat& c : v)
          if (!c.isZero()) prodsVanish = false;
    d["generator_products_vanish"] = prodsVanish;
    return d;
  }
  py::dict coalgebra(int j) const {
    CellCoalgebra cc(cat, j);
    py::dict d;
    d["axioms"] = cc.coalgebraAxioms();
    auto eq = cc.verifyEquivalence(cat.interior());
    d["equivalence"] = eq.pass;
    d["regular_comodule_end_dim"] =
        cc.comoduleHomBasis(cc.comoduleFor(OneMor::f(j, j)), cc.comoduleFor(OneMor::f(j, j))).size();
    return d;
  }
  py::dict adelmanSelftest() const {
    BimodAdelman BA(cat);
    const Adelman& adel = BA.adel();
    py::dict d;
    OneMor F = OneMor::f(0, 0);
    d["embedded_end_dim"] = adel.homDim(adel.embed(BA.objOf(F)), adel.embed(BA.objOf(F)));
    const HomSpace& hs = cat.homSpace(F, OneMor::f(1, 0));
    TwoMor f = cat.basisTwoMor(hs, 0);
    AdelObj ea = adel.embed(BA.objOf(F)), eb = adel.embed(BA.objOf(OneMor::f(1, 0)));
    AdelMor af = adel.embedMor(BA.fromTwoMor(f));
    auto k = adel.kernel(af, ea, eb);
    std::vector<AdelObj> tests{ea, eb};
    d["kernel_universal"] = adel.verifyKernel(af, ea, eb, k, tests);
    d["bound_holds"] = adel.homDimBoundCheck(k.obj, ea);
    return d;
  }
};

}  // namespace

PYBIND11_MODULE(twocat_py, m) {
  m.doc() = "exact 2-category computations: bound path algebras, cells, coalgebras, coxeter data";

  py::class_<ZigzagWorkbench>(m, "Zigzag")
      .def(py::init<int, int>(), py::arg("lo"), py::arg("hi"))
      .def("interior", &ZigzagWorkbench::interior)
      .def("hom_dim_ff", &ZigzagWorkbench::homDimFF)
      .def("hom_dim_id_f", &ZigzagWorkbench::homDimIdF)
      .def("hom_dim_f_id", &ZigzagWorkbench::homDimFId)
      .def("compose_multiplicity", &ZigzagWorkbench::composeMultiplicity)
      .def("self_injective", &ZigzagWorkbench::selfInjective)
      .def("adjoint_check", &ZigzagWorkbench::adjointCheck)
      .def("cells", &ZigzagWorkbench::cells)
      .def("z_algebra", &ZigzagWorkbench::zAlgebra)
      .def("coalgebra", &ZigzagWorkbench::coalgebra)
      .def("adelman_selftest", &ZigzagWorkbench::adelmanSelftest);

  py::class_<CoxeterSystem>(m, "CoxeterSystem")
      .def(py::init([](const std::vector<std::vector<int>>& rows) {
             return CoxeterSystem(CoxeterMatrix{rows});
           }),
           py::arg("matrix"))
      .def("rank", &CoxeterSystem::rank)
      .def("is_finite",
           [](const CoxeterSystem& s, const std::vector<int>& I) { return s.finiteType(I).finite; })
      .def("order",
           [](const CoxeterSystem& s, const std::vector<int>& I) {
             auto pd = s.finiteType(I);
             if (!pd.finite) throw std::runtime_error("infinite parabolic");
             return pd.order.toString();
           })
      .def("longest_length",
           [](const CoxeterSystem& s, const std::vector<int>& I) { return s.finiteType(I).longestLen; })
      .def("type_name",
           [](const CoxeterSystem& s, const std::vector<int>& I) { return s.finiteType(I).typeName; })
      .def("poincare",
           [](const CoxeterSystem& s, const std::vector<int>& I) { return s.poincare(I).toString(); })
      .def("graded_rank",
           [](const CoxeterSystem& s, const std::vector<int>& I, const std::vector<int>& J) {
             return s.gradedRank(I, J).rank.toString();
           })
      .def("soergel_objects", [](const CoxeterSystem& s) { return s.soergelObjects(); })
      .def("invariant_dims", [](const CoxeterSystem& s, const std::vector<int>& I, int cap) {
        return s.reynoldsInvariants(I, cap).dims;
      });

  m.attr("INF") = kInfLabel;
}
