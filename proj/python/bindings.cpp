#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "almostcyclic/finitelie.hpp"
#include "almostcyclic/theorems.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace acyc;

namespace {

Weight to_weight(const std::vector<int>& coords) { return Weight::from_vector(coords); }

py::object big_to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weight multiplicities, torus spectra and almost-cyclicity checks";

  py::register_exception<Error>(m, "AcycError", PyExc_ValueError);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int status;
        {
          py::gil_scoped_release release;
          status = cli::run(args, out, err);
        }
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Run one acyc command line; returns (status, stdout, stderr).");

  m.def(
      "weyl_dimension",
      [](const std::string& type, int rank, const std::vector<int>& weight) {
        auto rs = build_root_system(type, rank);
        return big_to_py(weyl_dimension(*rs, to_weight(weight)));
      },
      py::arg("type"), py::arg("rank"), py::arg("weight"));

  m.def(
      "weight_multiplicities",
      [](const std::string& type, int rank, const std::vector<int>& weight, int p) {
        auto rs = build_root_system(type, rank);
        const auto ms = module_weights(ModuleSpec::irreducible(rs, p, to_weight(weight)));
        py::dict out;
        for (const auto& [w, k] : ms.entries()) out[py::tuple(py::cast(w.coords()))] = k;
        return out;
      },
      py::arg("type"), py::arg("rank"), py::arg("weight"), py::arg("p") = 0);

  m.def(
      "zsigmondy",
      [](uint64_t q, int r) {
        const auto z = zsigmondy(q, r);
        py::dict d;
        d["status"] = z.status_name();
        d["ell"] = z.ell;
        d["exponent"] = z.exponent;
        d["evidence"] = z.evidence;
        return d;
      },
      py::arg("q"), py::arg("r"));

  m.def("e60_quadruples", [] { return lemma_e60_check().quadruples; });
}
