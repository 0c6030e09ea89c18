// String-in, plain-data-out bindings. Structured results cross as JSON text and are
// decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "tfjhp/error.hpp"
#include "tfjhp/filt.hpp"
#include "tfjhp/permutation.hpp"
#include "tfjhp/reflect.hpp"
#include "tfjhp/semibrick.hpp"
#include "tfjhp/table.hpp"
#include "tfjhp/torsion.hpp"
#include "tfjhp/verify.hpp"

namespace py = pybind11;
using namespace tfjhp;

namespace {

DdaggerRule rule_of(const std::string& name) {
  if (name == "as-defined") return DdaggerRule::kAsDefined;
  if (name == "inversion-filtered") return DdaggerRule::kInversionFiltered;
  throw DomainError("rule must be 'as-defined' or 'inversion-filtered', got '" + name + "'");
}

std::vector<Interval> intervals_of(const std::vector<std::string>& texts, const TypeAQuiver& q) {
  std::vector<Interval> out;
  for (const auto& t : texts) {
    const Interval iv = Interval::parse(t);
    if (iv.j > q.n() + 1) throw DomainError("interval " + t + " does not fit A_" + std::to_string(q.n()));
    out.push_back(iv);
  }
  return out;
}

std::vector<std::string> strings_of(const std::vector<Interval>& ivs) {
  std::vector<std::string> out;
  for (const auto& iv : ivs) out.push_back(iv.to_string());
  return out;
}

std::vector<std::pair<int, int>> pairs_of(const std::vector<Transposition>& ts) {
  std::vector<std::pair<int, int>> out;
  for (const auto& t : ts) out.emplace_back(t.i, t.j);
  return out;
}

// Parses a permutation and checks that it lives in S_{n+1} for the quiver.
Permutation perm_for(const std::string& text, const TypeAQuiver& q) {
  const Permutation w = Permutation::parse(text);
  if (w.rank() != q.n() + 1)
    throw DomainError("permutation " + text + " has rank " + std::to_string(w.rank()) + ", quiver needs " +
                      std::to_string(q.n() + 1));
  return w;
}

py::dict check_to_dict(const CheckResult& r) {
  py::dict d;
  d["name"] = r.name;
  d["pass"] = r.pass;
  d["inconclusive"] = r.inconclusive;
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tfjhp, m) {
  m.doc() = "Native core of the tfjhp package";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<BoundError> bound_error(m, "BoundError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object err = py::reinterpret_borrow<py::object>(parse_error.ptr())(e.what());
      err.attr("position") = e.position();
      PyErr_SetObject(parse_error.ptr(), err.ptr());
    } catch (const DomainError& e) {
      PyErr_SetString(domain_error.ptr(), e.what());
    } catch (const BoundError& e) {
      PyErr_SetString(bound_error.ptr(), e.what());
    }
  });

  m.def("inversions", [](const std::string& w) { return pairs_of(inversions(Permutation::parse(w))); });
  m.def("binv", [](const std::string& w) { return pairs_of(bruhat_inversions(Permutation::parse(w))); });
  m.def("length", [](const std::string& w) { return length(Permutation::parse(w)); });
  m.def("support", [](const std::string& w) { return support(Permutation::parse(w)); });

  m.def("coxeter_word", [](const std::string& q) { return coxeter_element(TypeAQuiver::parse(q)).word; });
  m.def(
      "sorting_factors",
      [](const std::string& w, const std::string& quiver) -> std::optional<std::vector<std::vector<int>>> {
        const auto q = TypeAQuiver::parse(quiver);
        const auto cert = is_c_sortable(perm_for(w, q), q);
        if (!cert) return std::nullopt;
        return cert->factors;
      },
      py::arg("perm"), py::arg("quiver"));
  m.def("sortables", [](const std::string& quiver) {
    std::vector<std::string> out;
    for (const auto& w : enumerate_c_sortables(TypeAQuiver::parse(quiver))) out.push_back(w.to_string());
    return out;
  });

  m.def(
      "tf_class",
      [](const std::string& w, const std::string& quiver) {
        const auto q = TypeAQuiver::parse(quiver);
        return strings_of(tf_class_of(perm_for(w, q), q).intervals);
      },
      py::arg("perm"), py::arg("quiver"));
  m.def(
      "simples",
      [](const std::string& w, const std::string& quiver) {
        const auto q = TypeAQuiver::parse(quiver);
        return strings_of(simples_of(tf_class_of(perm_for(w, q), q)));
      },
      py::arg("perm"), py::arg("quiver"));
  m.def("jhp_by_count", [](const std::string& w) { return jhp_by_count(Permutation::parse(w)); });
  m.def(
      "torsion_free_verdict",
      [](const std::vector<std::string>& ivs, const std::string& quiver, int max_total_dim) {
        const auto q = TypeAQuiver::parse(quiver);
        OracleBounds bounds;
        bounds.max_total_dim = max_total_dim;
        const auto r = is_torsion_free_oracle(intervals_of(ivs, q), q, bounds);
        return std::make_pair(to_string(r.verdict), r.witness);
      },
      py::arg("intervals"), py::arg("quiver"), py::arg("max_total_dim") = 8);
  m.def("tf_class_count", [](const std::string& quiver) {
    return enumerate_tf_classes_bruteforce(TypeAQuiver::parse(quiver)).classes.size();
  });

  m.def(
      "plan_jhp_json",
      [](const std::string& w, const std::string& quiver, const std::string& rule) {
        const auto q = TypeAQuiver::parse(quiver);
        return jhp_along_plan(perm_for(w, q), q, rule_of(rule)).to_json();
      },
      py::arg("perm"), py::arg("quiver"), py::arg("rule") = "as-defined");
  m.def(
      "jhp_table_json",
      [](const std::string& quiver, const std::string& rule) {
        return render_json(jhp_table(TypeAQuiver::parse(quiver), rule_of(rule)));
      },
      py::arg("quiver"), py::arg("rule") = "as-defined");

  m.def(
      "filt_check_json",
      [](const std::vector<std::string>& ivs, const std::string& quiver, bool weak, int universe_dim, int prime) {
        const auto q = TypeAQuiver::parse(quiver);
        const auto x = GeneratorSet::of_intervals(q, intervals_of(ivs, q));
        return (weak ? check_wjhp(x, universe_dim, prime) : check_jhp(x, universe_dim, prime)).to_json();
      },
      py::arg("intervals"), py::arg("quiver"), py::arg("weak"), py::arg("universe_dim") = 8, py::arg("prime") = 2);
  m.def(
      "is_semibrick",
      [](const std::vector<std::string>& ivs, const std::string& quiver, int prime) {
        const auto q = TypeAQuiver::parse(quiver);
        return is_semibrick(GeneratorSet::of_intervals(q, intervals_of(ivs, q)), prime);
      },
      py::arg("intervals"), py::arg("quiver"), py::arg("prime") = 2);

  m.def("semibrick_count", [](int n) { return enumerate_semibricks_linear(n).size(); });
  m.def("catalan_count", &catalan_count);
  m.def("is_semibrick_linear", [](const std::vector<std::pair<int, int>>& mods) {
    std::vector<LinearModule> set;
    for (const auto& [i, j] : mods) {
      if (!(0 <= i && i < j)) throw DomainError("module (" + std::to_string(i) + "," + std::to_string(j) + ") needs 0 <= i < j");
      set.push_back(LinearModule{i, j});
    }
    return is_semibrick_linear(set);
  });
  m.def(
      "is_semibrick_shifted",
      [](const std::vector<std::string>& texts, int n) {
        std::vector<ShiftedInterval> set;
        for (const auto& t : texts) set.push_back(ShiftedInterval::parse(t));
        return is_semibrick_shifted(set, n);
      },
      py::arg("modules"), py::arg("n"));

  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, int max_n, int universe_dim, int prime, int threads, const std::string& rule,
         std::optional<std::string> quiver) {
        VerifyConfig cfg;
        cfg.max_n = max_n;
        cfg.universe_dim = universe_dim;
        cfg.prime = prime;
        cfg.threads = threads;
        cfg.rule = rule_of(rule);
        if (quiver) cfg.quiver = TypeAQuiver::parse(*quiver);
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = suite == "all" ? run_all(cfg) : run_suite(suite, cfg);
        }
        py::list out;
        for (const auto& r : results) out.append(check_to_dict(r));
        return out;
      },
      py::arg("suite") = "all", py::arg("max_n") = 4, py::arg("universe_dim") = 8, py::arg("prime") = 2,
      py::arg("threads") = 1, py::arg("rule") = "as-defined", py::arg("quiver") = py::none());
}
