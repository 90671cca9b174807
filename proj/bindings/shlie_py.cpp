// Python bindings: a thin JSON-string facade over the library pipeline.
//
// Every function accepts and returns the same JSON documents the CLI reads
// and writes, so artifacts are interchangeable between the two front ends.
// Parsing into native Python structures is done by the pure-Python wrapper
// package, keeping this layer free of data-model duplication.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "shlie/complex.hpp"
#include "shlie/errors.hpp"
#include "shlie/geo_suite.hpp"
#include "shlie/instances.hpp"
#include "shlie/json_io.hpp"
#include "shlie/structure.hpp"

namespace py = pybind11;
using namespace shlie;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string py_gen_lie_ideal(const std::string& preset) {
  return save_instance(gen_lie_ideal(preset_spec(preset)));
}

std::string py_gen_random(uint64_t seed, const std::vector<int>& dims,
                          int height) {
  GenSeed gs;
  gs.seed = seed;
  gs.dims = dims;
  gs.height = height;
  return save_instance(gen_random_acyclic(gs));
}

std::string py_check(const std::string& instance_json) {
  Instance inst = load_instance(instance_json);
  HomologyData h = homology(inst.cx);
  ConditionsReport rep = check_conditions(inst, h);
  bool acyclic = h.acyclic_positive();
  Json j{{"acyclic_positive", acyclic},
         {"conditions", conditions_to_json(rep)},
         {"pass", acyclic && rep.pass()}};
  return dump(j);
}

py::tuple py_build(const std::string& instance_json, int max_arity) {
  if (max_arity < 2 || max_arity > 6)
    throw SchemaError("$.max_arity", "max_arity must lie in [2, 6]");
  Instance inst = load_instance(instance_json);
  HomologyData h = homology(inst.cx);
  ContractionData k = build_contraction(inst.cx, h);
  ExtendResult er = extend(inst, k, max_arity);
  VerifyReport vr = verify_structure(er.structure);
  return py::make_tuple(save_structure(er.structure),
                        dump(build_report_to_json(er, vr)));
}

std::string py_verify(const std::string& structure_json) {
  ShLieStructure S = load_structure(structure_json);
  VerifyReport vr = verify_structure(S);
  return dump(verify_report_to_json(vr));
}

std::string py_truncate(const std::string& instance_json) {
  return save_instance(truncate(load_instance(instance_json)));
}

std::string py_example(const std::string& which, int samples, uint64_t seed,
                       int max_freq) {
  GeoReport rep = verify_example_structures(which, samples, seed, max_freq);
  return dump(geo_report_to_json(rep));
}

}  // namespace

PYBIND11_MODULE(_shlie, m) {
  m.doc() =
      "Exact-arithmetic toolkit for strongly homotopy Lie structures: "
      "JSON-string facade over the C++ core.";

  // Input/usage problems surface as ValueError; mathematical check
  // failures raised by the library surface as RuntimeError.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SchemaError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const SpecInvalid& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def("gen_lie_ideal", &py_gen_lie_ideal, py::arg("preset"),
        "Generate a named preset instance; returns instance JSON.");
  m.def("gen_random", &py_gen_random, py::arg("seed"),
        py::arg("dims") = std::vector<int>{}, py::arg("height") = 9,
        "Generate a seeded random instance with an exact tail; returns "
        "instance JSON.  Empty dims draws the shape from the seed.");
  m.def("check", &py_check, py::arg("instance_json"),
        "Check acyclicity and the degree-0 compatibility conditions; "
        "returns report JSON.");
  m.def("build", &py_build, py::arg("instance_json"), py::arg("max_arity") = 5,
        "Run the inductive construction; returns (structure JSON, report "
        "JSON).");
  m.def("verify", &py_verify, py::arg("structure_json"),
        "Re-verify a stored structure's relations and vanishing pattern; "
        "returns report JSON.");
  m.def("truncate", &py_truncate, py::arg("instance_json"),
        "Cut an instance to the three-term complex whose top degree is the "
        "kernel of the first differential; returns instance JSON.");
  m.def("example", &py_example, py::arg("which"), py::arg("samples") = 100,
        py::arg("seed") = 0, py::arg("max_freq") = 2,
        "Run one of the built-in geometric example suites (\"courant\" or "
        "\"symplectic\"); returns report JSON.");
}
