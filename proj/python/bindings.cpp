#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "regcensus/census.hpp"
#include "regcensus/cli.hpp"

namespace py = pybind11;

namespace {

py::tuple run_raw(const std::string& command, int p, int k, std::uint64_t enum_cap,
                  std::uint64_t closure_cap, const std::string& emit) {
    regcensus::RunConfig cfg;
    cfg.command = command;
    cfg.p = p;
    if (k >= 0) cfg.k = k;
    cfg.enum_cap = enum_cap;
    cfg.closure_cap = closure_cap;
    cfg.emit = emit;
    std::ostringstream out, err;
    const int rc = regcensus::run(cfg, out, err);
    return py::make_tuple(rc, out.str(), err.str());
}

std::vector<std::pair<std::string, std::string>> enumerate_params(int p, int k,
                                                                  std::uint64_t enum_cap) {
    const regcensus::Context ctx(p);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& rp : regcensus::enumerate_reg(ctx, k, enum_cap))
        out.emplace_back(rp.g.to_digits(), rp.h.to_digits());
    return out;
}

int ideal_dimension(int p, int k) {
    const regcensus::Context ctx(p);
    return regcensus::augmentation_power(ctx, k).dim();
}

}  // namespace

PYBIND11_MODULE(_regcensus, m) {
    m.doc() = "census of regular elementary abelian subgroups on p^3 points";
    py::register_exception<regcensus::CapExceeded>(m, "CapExceeded");
    m.def("run_raw", &run_raw, py::arg("command"), py::arg("p"), py::arg("k"),
          py::arg("enum_cap"), py::arg("closure_cap"), py::arg("emit"));
    m.def("enumerate_params", &enumerate_params, py::arg("p"), py::arg("k"),
          py::arg("enum_cap"));
    m.def("ideal_dimension", &ideal_dimension, py::arg("p"), py::arg("k"));
}
