#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "matdecomp/acceptance.hpp"
#include "matdecomp/canonical.hpp"
#include "matdecomp/error.hpp"
#include "matdecomp/ffsearch.hpp"
#include "matdecomp/fingerprint.hpp"
#include "matdecomp/io.hpp"
#include "matdecomp/rota.hpp"

namespace py = pybind11;
using namespace matdecomp;
using io::json;

// Everything crosses the boundary as JSON text; the Python package decodes it.
namespace {

CanonLabel label_arg(const std::string& s) {
  if (auto l = parse_label(s)) return *l;
  fail(ErrorCode::Parse, "unknown label '" + s + "'");
}

Field field_arg(const std::string& descriptor) { return io::field_from_json(json::parse(descriptor)); }

std::string catalog_json(const std::string& label, const std::string& field) {
  return io::to_json(catalog_entry(label_arg(label), field_arg(field))).dump();
}

std::string verify_json(const std::string& text) {
  auto [s, m] = io::halves_from_json(json::parse(text));
  return io::to_json(check_decomposition(s, m)).dump();
}

std::string canonicalize_json(const std::string& text, bool allow_extension) {
  CanonOptions opts;
  opts.allow_extension = allow_extension;
  return io::to_json(canonicalize(io::decomposition_from_json(json::parse(text)), opts)).dump();
}

std::string scramble_json(const std::string& label, std::uint64_t seed, const std::string& field) {
  json j = io::to_json(scramble(label_arg(label), seed, field_arg(field)).decomposition);
  j.erase("label");
  return j.dump();
}

std::string fingerprint_json(const std::string& text) {
  return io::to_json(fingerprint(io::decomposition_from_json(json::parse(text)).S())).dump();
}

std::string separate_json() { return io::to_json(separate_catalog(false)).dump(); }

std::string rb_json(const std::string& label, const std::string& weight, const std::string& field) {
  const Field f = field_arg(field);
  const auto r = rb_from_splitting(catalog_entry(label_arg(label), f), f.parse(weight));
  json j = io::to_json(r);
  j["verified"] = verify_rb(r) && verify_rb(complementary_rb(r));
  return j.dump();
}

std::string search_json(std::int64_t p, const std::string& m, std::uint64_t samples, std::uint64_t seed,
                        std::uint64_t budget, unsigned threads) {
  auto which = parse_standard_m(m);
  if (!which) fail(ErrorCode::Parse, "unknown M '" + m + "'");
  py::gil_scoped_release release;
  const SearchReport r = samples ? sample_search(p, *which, samples, seed) : search(p, *which, {budget, threads});
  return io::to_json(r).dump();
}

py::list selftest(const std::vector<int>& only) {
  py::list out;
  for (const auto& c : acceptance::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    acceptance::CriterionResult r;
    {
      py::gil_scoped_release release;
      r = acceptance::run(c);
    }
    py::dict d;
    d["id"] = r.id;
    d["name"] = r.name;
    d["passed"] = r.passed();
    d["seconds"] = r.seconds;
    d["limit_seconds"] = r.limit_seconds;
    d["detail"] = r.detail;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations on nonunital decompositions of 3x3 matrices";

  // Leaked on purpose: the type must outlive every translator call.
  static py::handle error_type =
      py::reinterpret_steal<py::object>(PyErr_NewException("matdecomp._core.Error", PyExc_ValueError, nullptr))
          .release();
  m.attr("Error") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](const char* what, const std::string& code) {
      py::object exc = error_type(what);
      exc.attr("code") = code;
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      raise(e.what(), std::string(error_code_name(e.code())));
    } catch (const json::exception& e) {
      raise(e.what(), "Parse");
    }
  });

  m.attr("SCHEMA") = io::kSchema;
  m.def("labels", [] {
    std::vector<std::string> out;
    for (auto l : kAllLabels) out.emplace_back(to_string(l));
    return out;
  });
  m.def("catalog_json", &catalog_json, py::arg("label"), py::arg("field"));
  m.def("verify_json", &verify_json, py::arg("text"));
  m.def("canonicalize_json", &canonicalize_json, py::arg("text"), py::arg("allow_extension") = true);
  m.def("scramble_json", &scramble_json, py::arg("label"), py::arg("seed"), py::arg("field"));
  m.def("fingerprint_json", &fingerprint_json, py::arg("text"));
  m.def("separate_json", &separate_json);
  m.def("rb_json", &rb_json, py::arg("label"), py::arg("weight"), py::arg("field"));
  m.def("search_json", &search_json, py::arg("p"), py::arg("m"), py::arg("samples") = 0, py::arg("seed") = 0,
        py::arg("budget") = SearchOptions{}.budget, py::arg("threads") = 0);
  m.def("selftest", &selftest, py::arg("only") = std::vector<int>{});
}
