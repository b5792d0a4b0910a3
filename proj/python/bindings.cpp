#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "cyclrc/constructions.hpp"
#include "cyclrc/repair.hpp"
#include "cyclrc/serialize.hpp"

namespace py = pybind11;
using namespace cyclrc;

namespace {

LrcParams make_params(const std::string& family, std::uint64_t q, int n, int k, int r, int delta, int b,
                      bool alternate, std::optional<std::vector<long long>> offsets) {
  LrcParams p;
  p.family = parse_family(family);
  p.q = q;
  p.n = n;
  p.k = k;
  p.r = r;
  p.delta = delta;
  p.b = b;
  p.alternate = alternate;
  p.offsets = std::move(offsets);
  if (p.family == Family::MdsQPlus1) {
    p.r = k;
    p.delta = n - k + 1;
  }
  return p;
}

// Codes hold a CyclicCode with no default constructor; keep them behind a
// shared_ptr together with a cached repairer.
struct PyCode {
  LrcCode lrc;
  std::unique_ptr<LocalRepairer> repairer;

  explicit PyCode(LrcCode c) : lrc(std::move(c)), repairer(std::make_unique<LocalRepairer>(lrc)) {}
};

Word to_word(const std::vector<std::optional<Elem>>& w) { return Word(w.begin(), w.end()); }

}  // namespace

PYBIND11_MODULE(_cyclrc, m) {
  m.doc() = "Cyclic locally repairable codes over GF(q)";

  static py::exception<Error> error(m, "CyclrcError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object inst = exc(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<PyCode, std::shared_ptr<PyCode>>(m, "Code")
      .def_property_readonly("n", [](const PyCode& c) { return c.lrc.code.length(); })
      .def_property_readonly("k", [](const PyCode& c) { return c.lrc.code.dimension(); })
      .def_property_readonly("q", [](const PyCode& c) { return c.lrc.code.q(); })
      .def_property_readonly("r", [](const PyCode& c) { return c.lrc.params.r; })
      .def_property_readonly("delta", [](const PyCode& c) { return c.lrc.params.delta; })
      .def_property_readonly("target_d", [](const PyCode& c) { return c.lrc.target_d; })
      .def_property_readonly("recipe", [](const PyCode& c) { return c.lrc.plan.recipe; })
      .def_property_readonly("defining_set",
                             [](const PyCode& c) { return c.lrc.code.defining_set().exponents(); })
      .def_property_readonly("groups", [](const PyCode& c) { return c.lrc.groups.groups; })
      .def(
          "certify",
          [](const PyCode& c, bool exhaustive, std::uint64_t cap, unsigned jobs) {
            CertifyOptions o;
            o.run_exhaustive = exhaustive;
            o.cap = cap;
            o.jobs = jobs;
            return to_json(certify(c.lrc, o)).dump();
          },
          py::arg("exhaustive") = false, py::arg("cap") = kDefaultSearchCap, py::arg("jobs") = 1u,
          "certificate as a JSON string")
      .def(
          "descriptor",
          [](const PyCode& c, bool with_certificate) {
            if (!with_certificate) return lrc_descriptor(c.lrc).dump();
            const auto cert = certify(c.lrc);
            return lrc_descriptor(c.lrc, &cert).dump();
          },
          py::arg("with_certificate") = true)
      .def("encode", [](const PyCode& c, const std::vector<Elem>& msg) { return encode(c.lrc.code, msg); })
      .def("contains", [](const PyCode& c, const std::vector<Elem>& w) { return c.lrc.code.contains(w); })
      .def(
          "repair_local",
          [](const PyCode& c, const std::vector<std::optional<Elem>>& w, int target) {
            return c.repairer->repair(to_word(w), target);
          },
          py::arg("word"), py::arg("target"))
      .def("decode_global",
           [](const PyCode& c, const std::vector<std::optional<Elem>>& w) {
             return global_erasure_decode(c.lrc.code, to_word(w));
           })
      .def("repair_cost", [](const PyCode& c, const std::vector<int>& erased) {
        return to_json(repair_cost(c.lrc, erased)).dump();
      });

  m.def(
      "construct",
      [](const std::string& family, std::uint64_t q, int n, int k, int r, int delta, int b, bool alternate,
         std::optional<std::vector<long long>> offsets) {
        return std::make_shared<PyCode>(construct(make_params(family, q, n, k, r, delta, b, alternate, offsets)));
      },
      py::arg("family"), py::arg("q"), py::arg("n"), py::arg("k"), py::arg("r") = 0, py::arg("delta") = 2,
      py::arg("b") = 0, py::arg("alternate") = false, py::arg("offsets") = py::none());

  m.def("from_descriptor", [](const std::string& text) {
    return std::make_shared<PyCode>(construct(params_from_descriptor(Json::parse(text))));
  });

  m.def("feasible_parameters", [](std::uint64_t q, int max_n) {
    py::list out;
    for (const auto& p : feasible_parameters(q, max_n)) {
      py::dict d;
      d["family"] = std::string(to_string(p.family));
      d["q"] = p.q;
      d["n"] = p.n;
      d["k"] = p.k;
      d["r"] = p.r;
      d["delta"] = p.delta;
      d["b"] = p.b;
      d["alternate"] = p.alternate;
      out.append(d);
    }
    return out;
  });

  m.def("bch_bound", [](int n, const std::vector<long long>& exps) { return bch_lower_bound(DefiningSet(n, exps)); });
  m.def("conjugacy_closure", [](std::uint64_t q, int n, const std::vector<long long>& exps) {
    return conjugacy_closure(DefiningSet(n, exps), q).exponents();
  });
}
