#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weilmod/schwartz.hpp"
#include "weilmod/selfcheck.hpp"
#include "weilmod/theta.hpp"
#include "weilmod/weilfactor.hpp"

namespace py = pybind11;
using namespace weilmod;

namespace {

std::string rat_str(const Rational& r) { return to_string(r); }

py::dict cyc(const CycInt& x0) {
  auto x = x0.descend();
  py::list c;
  for (auto& n : x.num()) c.append(rat_str(Rational(n, x.den())));
  py::dict d;
  d["order"] = x.p() ? x.order() : 1;
  d["coeffs"] = c;
  return d;
}

template <class K>
typename K::Elem to_elem(const K& F, const py::handle& v) {
  if (py::isinstance<py::int_>(v)) return F.from_int(v.cast<long long>());
  return F.parse(py::str(v).cast<std::string>());
}

template <class K>
Mat<typename K::Elem> to_mat(const K& F, const std::vector<std::vector<py::object>>& rows) {
  int n = int(rows.size());
  Mat<typename K::Elem> m(n, n, F.zero());
  for (int i = 0; i < n; ++i) {
    if (int(rows[size_t(i)].size()) != n) fail(ErrorKind::InvalidInput, "matrix must be square");
    for (int j = 0; j < n; ++j) m(i, j) = to_elem(F, rows[size_t(i)][size_t(j)]);
  }
  return m;
}

template <class Fn>
auto with_field(const std::string& desc, Fn&& fn) {
  auto fs = parse_field(desc);
  if (fs.finite) return fn(FqBase(fs.p, fs.f));
  return fn(QpBase(fs.p));
}

template <class K>
QuadraticForm<K> diag_form(const K& F, const std::vector<py::object>& diag) {
  std::vector<typename K::Elem> a;
  for (auto& x : diag) a.push_back(to_elem(F, x));
  return QuadraticForm<K>::diagonal(F, a);
}

FqBase finite(const std::string& desc) {
  auto fs = parse_field(desc);
  if (!fs.finite) fail(ErrorKind::Unsupported, "needs a finite field");
  return FqBase(fs.p, fs.f);
}

using PyMat = std::vector<std::vector<py::object>>;

}  // namespace

PYBIND11_MODULE(_weilmod, m) {
  m.doc() = "exact Weil representations, metaplectic cocycles and finite theta lifts";

  static py::exception<Error> exc(m, "WeilmodError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def("hilbert", [](const std::string& field, py::object a, py::object b) {
    return with_field(field, [&](const auto& F) { return hilbert(F, to_elem(F, a), to_elem(F, b)); });
  }, py::arg("field"), py::arg("a"), py::arg("b"));

  m.def("omega", [](const std::string& field, const std::vector<py::object>& diag) {
    return with_field(field, [&](const auto& F) { return cyc(omega(diag_form(F, diag))); });
  }, py::arg("field"), py::arg("diag"));

  m.def("hasse", [](const std::string& field, const std::vector<py::object>& diag) {
    return with_field(field, [&](const auto& F) { return diag_form(F, diag).hasse(); });
  }, py::arg("field"), py::arg("diag"));

  m.def("hasse_product_holds", [](const std::string& field, const std::vector<py::object>& diag) {
    return with_field(field, [&](const auto& F) { return omega_diag_product(diag_form(F, diag)).equal(); });
  }, py::arg("field"), py::arg("diag"));

  m.def("epsilon", [](const std::string& field, int m_) {
    return with_field(field, [&](const auto& F) { return cyc(epsilon(F, identity(F, m_))); });
  }, py::arg("field"), py::arg("m") = 1);

  m.def("cocycle_formula", [](const std::string& field, const PyMat& g1, const PyMat& g2, bool rao) {
    return with_field(field, [&](const auto& F) {
      auto a = to_mat(F, g1), b = to_mat(F, g2);
      if (!is_symplectic(F, a) || !is_symplectic(F, b)) fail(ErrorKind::InvalidInput, "not symplectic");
      return cocycle_formula(F, a, b, rao);
    });
  }, py::arg("field"), py::arg("g1"), py::arg("g2"), py::arg("rao") = false);

  m.def("cocycle_operator", [](const std::string& field, const PyMat& g1, const PyMat& g2) {
    return with_field(field, [&](const auto& F) {
      using K = std::decay_t<decltype(F)>;
      auto a = to_mat(F, g1), b = to_mat(F, g2);
      if (!is_symplectic(F, a) || !is_symplectic(F, b)) fail(ErrorKind::InvalidInput, "not symplectic");
      if constexpr (K::finite)
        return cyc(cocycle_operator(CycloRing(F.p()), F, a, b));
      else
        return cyc(cocycle_operator_padic(F, a, b));
    });
  }, py::arg("field"), py::arg("g1"), py::arg("g2"));

  m.def("bruhat_cell", [](const std::string& field, const PyMat& g) {
    return with_field(field, [&](const auto& F) {
      auto x = to_mat(F, g);
      if (!is_symplectic(F, x)) fail(ErrorKind::InvalidInput, "not symplectic");
      return bruhat_decompose(F, x).j;
    });
  }, py::arg("field"), py::arg("g"));

  m.def("weil_sp2_dims", [](int q) {
    auto d = weil_sp2_decomposition(finite("fq:" + std::to_string(q)));
    return d.dims;
  }, py::arg("q"));

  m.def("theta_dims", [](const std::string& field, const PyMat& gram) {
    auto F = finite(field);
    auto P = build_dual_pair(F, to_mat(F, gram), 1);
    CycloRing R(F.p());
    auto omega_ = pair_weil(R, P);
    py::dict out;
    for (auto [name, pi] : {std::pair{"trivial", trivial_character(P)}, std::pair{"det", det_character(P)}}) {
      Rep<CycloRing> lin;
      for (int v : pi) lin.push_back(Mat<CycInt>(1, 1, CycInt(v)));
      out[name] = theta_lift(R, P, omega_, lin).dim();
    }
    return out;
  }, py::arg("field"), py::arg("gram"));

  m.def("congruence_check", [](const std::string& field, const PyMat& gram, const std::string& pi1, int ell) {
    auto F = finite(field);
    auto P = build_dual_pair(F, to_mat(F, gram), 1);
    if (pi1 != "trivial" && pi1 != "det") fail(ErrorKind::InvalidInput, "pi1 must be 'trivial' or 'det'");
    auto r = congruence_check(P, pi1 == "det" ? det_character(P) : trivial_character(P), ell);
    py::dict d;
    d["dim0"] = r.dim0;
    d["dim_ell"] = r.dimell;
    d["irreducible0"] = r.irreducible0;
    d["irreducible_ell"] = r.irreducible_ell;
    d["brauer_match"] = r.brauer_match;
    d["idempotent_match"] = r.idempotent_match && r.idempotent_h1_match;
    return d;
  }, py::arg("field"), py::arg("gram"), py::arg("pi1"), py::arg("ell"));

  m.def("selfcheck_suites", [] { return selfcheck_suites(); });
  m.def("selfcheck", [](uint64_t seed, bool quick, const std::vector<std::string>& only) {
    py::list out;
    for (auto& r : run_selfcheck({seed, quick}, only)) {
      py::dict d;
      d["suite"] = r.name;
      d["pass"] = r.pass();
      d["checks"] = r.checks;
      d["failures"] = r.failures;
      if (!r.pass()) d["first_failure"] = r.first_failure;
      out.append(d);
    }
    return out;
  }, py::arg("seed") = 42, py::arg("quick") = false, py::arg("suites") = std::vector<std::string>{});
}
