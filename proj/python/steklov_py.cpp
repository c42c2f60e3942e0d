#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steklov/ledger.hpp"
#include "steklov/report.hpp"
#include "steklov/schur.hpp"

namespace py = pybind11;
using namespace steklov;

namespace {

py::tuple endpoints(const Interval& x) {
  return py::make_tuple(x.lo_str_full(), x.hi_str_full());
}

}  // namespace

PYBIND11_MODULE(_steklov, m) {
  m.doc() = "Certified Steklov eigenvalue enclosures for regular polygons";

  m.def("set_precision_dps", &set_precision_dps, py::arg("dps"));

  m.def(
      "sigma_enclosure",
      [](int n, long half_width) {
        SigmaEnclosure enc = sigma_enclosure(n, half_width);
        py::dict d;
        d["n"] = enc.n_sides;
        d["sigma"] = endpoints(enc.sigma);
        d["argmax_block"] = enc.argmax_block;
        return d;
      },
      py::arg("n"), py::arg("half_width") = 320,
      "Certified [lo, hi] decimal strings for sigma_1 of the regular n-gon");

  m.def(
      "block_lambda",
      [](int n, int r, long half_width) {
        Alpha a = Alpha::for_sides(n);
        WeightCoefficients coeffs =
            coefficient_v_recursive(2 * half_width + 2, a);
        return endpoints(block_enclosure(n, r, half_width, coeffs).lambda);
      },
      py::arg("n"), py::arg("r"), py::arg("half_width") = 320);

  m.def(
      "schur_root",
      [](int n, long half_width) {
        Alpha a = Alpha::for_sides(n);
        WeightCoefficients coeffs =
            coefficient_v_recursive(2 * half_width + 2, a);
        SchurState st = beta_and_kappa(n, half_width, coeffs);
        SchurRoot root = schur_root(st);
        py::dict d;
        d["lambda_star"] = endpoints(root.lambda_star);
        d["theta"] = endpoints(root.theta);
        d["beta"] = endpoints(st.beta);
        d["kappa_hi"] = st.kappa.hi_str_full();
        return d;
      },
      py::arg("n"), py::arg("half_width") = 320);

  m.def("euler_sum", [](const std::string& id) {
    auto [closed, brute] = euler_sum(id);
    return py::make_tuple(endpoints(closed), endpoints(brute));
  });

  m.def("constants", []() {
    const RemainderConstants& lg = constant_closure();
    py::list rows;
    for (const AuditRow& row : lg.audit) {
      py::dict d;
      d["name"] = row.name;
      d["value"] = endpoints(row.value);
      if (row.has_bound) {
        d["bound"] = row.bound;
        d["pass"] = row.pass;
      }
      rows.append(d);
    }
    py::dict out;
    out["rows"] = rows;
    out["all_bounds_hold"] = lg.all_bounds_hold;
    return out;
  });

  m.def(
      "expansion_value",
      [](int n) {
        ExpansionValue ev = expansion_value(n);
        py::dict d;
        d["center"] = endpoints(ev.center);
        d["band"] = endpoints(ev.band);
        return d;
      },
      py::arg("n"));
}
