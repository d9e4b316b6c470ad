#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "json.hpp"
#include "nckit/bisim.hpp"
#include "nckit/errors.hpp"
#include "nckit/formula.hpp"
#include "nckit/json_io.hpp"
#include "nckit/kripke.hpp"
#include "nckit/proof.hpp"
#include "nckit/sat.hpp"
#include "nckit/semantics.hpp"
#include "nckit/translate.hpp"

namespace py = pybind11;
using namespace nckit;

namespace {

Lang lang_of(const std::string& name) {
  auto l = lang_from_name(name);
  if (!l) throw std::invalid_argument("unknown language: " + name);
  return *l;
}

BisimKind kind_of(const std::string& name) {
  if (name == "box") return BisimKind::Box;
  if (name == "tri") return BisimKind::Tri;
  throw std::invalid_argument("kind must be 'box' or 'tri'");
}

std::set<FrameProperty> props_of_names(const std::vector<std::string>& names) {
  std::set<FrameProperty> out;
  for (const std::string& n : names) {
    auto p = frame_property_from_name(n);
    if (!p) throw std::invalid_argument("unknown frame property: " + n);
    out.insert(*p);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "model checking, translation, bisimulation, proof checking and "
            "bounded satisfiability for the modal logic of strong "
            "noncontingency";

  py::register_exception<SyntaxError>(m, "FormulaSyntaxError");
  py::register_exception<BudgetExceeded>(m, "BudgetExceededError");
  py::register_exception<UnknownWorld>(m, "UnknownWorldError");

  py::class_<Formula>(m, "Formula")
      .def_static("parse",
                  [](const std::string& text, const std::string& lang) {
                    return parse(text, lang_of(lang));
                  },
                  py::arg("text"), py::arg("lang") = "full")
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__",
           [](const Formula& f) { return "Formula('" + render(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return f.hash(); })
      .def("in_language",
           [](const Formula& f, const std::string& lang) {
             return in_language(f, lang_of(lang));
           })
      .def("modal_depth", [](const Formula& f) { return modal_depth(f); })
      .def("atoms", [](const Formula& f) {
        auto s = props_of(f);
        return std::vector<std::string>(s.begin(), s.end());
      });

  py::class_<Frame>(m, "Frame")
      .def_static("from_json",
                  [](const std::string& text) { return parse_frame(text); })
      .def("to_json",
           [](const Frame& f) { return frame_to_json(f).dump(2); })
      .def("worlds", &Frame::worlds)
      .def("has_property", [](const Frame& f, const std::string& name) {
        auto p = frame_property_from_name(name);
        if (!p) throw std::invalid_argument("unknown frame property: " + name);
        return has_property(f, *p).holds;
      });

  py::class_<Model>(m, "Model")
      .def_static("from_json",
                  [](const std::string& text) { return parse_model(text); })
      .def("to_json",
           [](const Model& m_) { return model_to_json(m_).dump(2); })
      .def("worlds", [](const Model& m_) { return m_.frame().worlds(); })
      .def("atoms", &Model::atoms)
      .def_property_readonly("frame", &Model::frame);

  m.def("parse", [](const std::string& text,
                    const std::string& lang) { return parse(text, lang_of(lang)); },
        py::arg("text"), py::arg("lang") = "full");
  m.def("render", [](const Formula& f) { return render(f); });

  m.def("satisfies",
        [](const Model& m_, const std::string& w, const Formula& f) {
          return satisfies(m_, w, f);
        });
  m.def("valid_on_model", [](const Model& m_, const Formula& f) {
    ModelValidity v = valid_on_model(m_, f);
    return py::make_tuple(v.valid, v.counterexample_world
                                       ? py::cast(*v.counterexample_world)
                                       : py::none());
  });
  m.def("valid_on_frame",
        [](const Frame& fr, const Formula& f, std::uint64_t budget) {
          FrameValidity v = valid_on_frame(fr, f, budget);
          if (v.valid) return py::make_tuple(true, py::none(), py::none());
          return py::make_tuple(false, py::cast(v.counterexample->valuation),
                                py::cast(v.counterexample->world));
        },
        py::arg("frame"), py::arg("formula"),
        py::arg("budget") = kDefaultValuationBudget);

  m.def("to_box", &to_box);
  m.def("to_blacktri", &to_blacktri);

  m.def("bisimilar",
        [](const Model& a, const std::string& s, const Model& b,
           const std::string& t, const std::string& kind) {
          return bisimilar(a, s, b, t, kind_of(kind));
        },
        py::arg("a"), py::arg("s"), py::arg("b"), py::arg("t"),
        py::arg("kind") = "tri");
  m.def("largest_bisimulation",
        [](const Model& m_, const std::string& kind) {
          return largest_bisimulation(m_, kind_of(kind)).pairs;
        },
        py::arg("model"), py::arg("kind") = "tri");
  m.def("contract", [](const Model& m_) {
    Contraction c = contract(m_);
    return py::make_tuple(c.model, c.block_of);
  });

  m.def("logically_equivalent",
        [](const Model& m_, const std::string& s, const std::string& t,
           const std::string& lang) {
          return logically_equivalent(m_, s, t, m_.atoms(), lang_of(lang));
        },
        py::arg("model"), py::arg("s"), py::arg("t"), py::arg("lang") = "tri");
  m.def("separating_formula",
        [](const Model& m_, const std::string& s, const std::string& t,
           const std::string& lang) -> py::object {
          auto f = separating_formula(m_, s, t, m_.atoms(), lang_of(lang));
          return f ? py::cast(*f) : py::none();
        },
        py::arg("model"), py::arg("s"), py::arg("t"), py::arg("lang") = "tri");

  m.def("check_proof", [](const std::string& text) {
    ProofScript script = parse_script(text);
    ProofReport rep = check_script(script);
    py::list lines;
    for (const auto& lr : rep.lines) {
      py::dict d;
      d["index"] = lr.index;
      d["ok"] = lr.ok;
      if (!lr.ok) d["reason"] = lr.reason;
      lines.append(d);
    }
    py::dict out;
    out["system"] = script.system;
    out["ok"] = rep.ok;
    out["lines"] = lines;
    return out;
  });

  m.def("satisfiable",
        [](const Formula& f, const std::vector<std::string>& frame_class,
           int max_worlds, std::uint64_t budget) {
          SatOptions opt;
          opt.frame_class = props_of_names(frame_class);
          opt.max_worlds = max_worlds;
          opt.budget = budget;
          SatResult r = satisfiable(f, opt);
          py::dict out;
          out["outcome"] = sat_outcome_name(r.outcome);
          out["explored_bound"] = r.explored_bound;
          out["certification_bound"] = r.certification_bound;
          if (r.model) {
            out["model"] = *r.model;
            out["world"] = *r.world;
          }
          return out;
        },
        py::arg("formula"),
        py::arg("frame_class") = std::vector<std::string>{},
        py::arg("max_worlds") = 4,
        py::arg("budget") = SatOptions{}.budget);
}
