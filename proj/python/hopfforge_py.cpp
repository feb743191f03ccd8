#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hopfforge/cli.hpp"
#include "hopfforge/constructions.hpp"
#include "hopfforge/errors.hpp"
#include "hopfforge/findim.hpp"
#include "hopfforge/io.hpp"
#include "hopfforge/stdlib.hpp"
#include "hopfforge/text.hpp"

namespace py = pybind11;
using namespace hopfforge;

namespace {

// pybind11 holders cannot be shared_ptr<const T>; presentations stay
// immutable because no mutating method is bound.
using PyPresentation = std::shared_ptr<HopfPresentation>;

PyPresentation wrap(PresentationPtr p) {
  return std::const_pointer_cast<HopfPresentation>(std::move(p));
}

std::vector<std::string> word_list(const std::vector<Word>& words,
                                   const Alphabet& alpha) {
  std::vector<std::string> out;
  for (const Word& w : words) {
    out.push_back(word_to_string(w, alpha));
  }
  return out;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

py::list checks_to_list(const std::vector<CheckResult>& checks) {
  py::list out;
  for (const CheckResult& c : checks) {
    out.append(py::make_tuple(c.name, status_name(c.status), c.detail));
  }
  return out;
}

std::vector<std::vector<std::string>> matrix_rows(const Matrix& M) {
  std::vector<std::vector<std::string>> rows(M.rows());
  for (std::size_t r = 0; r < M.rows(); ++r) {
    for (std::size_t c = 0; c < M.cols(); ++c) {
      rows[r].push_back(M.at(r, c).to_string());
    }
  }
  return rows;
}

PyPresentation parse(const std::string& text, std::optional<std::string> field,
                      std::optional<std::size_t> degree_bound) {
  PresentationOptions opts;
  if (field) {
    opts.field = parse_field(*field);
  }
  opts.degree_bound = degree_bound;
  return wrap(parse_presentation(text, opts));
}

HopfMap map_from_dict(const PresentationPtr& source, const PresentationPtr& target,
                      const std::map<std::string, std::string>& images) {
  std::vector<FreePoly> polys(source->alphabet()->size());
  std::vector<bool> seen(polys.size(), false);
  for (const auto& [name, image] : images) {
    auto id = source->alphabet()->find(name);
    if (!id) {
      throw PreconditionFailed("unknown source generator '" + name + "'");
    }
    polys[*id] = parse_poly(image, target->alphabet(), target->field());
    seen[*id] = true;
  }
  for (GenId g = 0; g < seen.size(); ++g) {
    if (!seen[g]) {
      throw PreconditionFailed("no image for generator '"
                               + source->alphabet()->name(g) + "'");
    }
  }
  return HopfMap(source, target, std::move(polys));
}

}  // namespace

PYBIND11_MODULE(_hopfforge, m) {
  m.doc() = "Finitely presented bialgebras and Hopf algebras";

  auto base = py::register_exception<Error>(m, "HopfforgeError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DegreeOverflow>(m, "DegreeOverflow", base.ptr());
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base.ptr());

  py::class_<HopfPresentation, PyPresentation>(m, "Presentation")
      .def_property_readonly("generators", [](const HopfPresentation& P) {
        return P.alphabet()->names();
      })
      .def_property_readonly("field", [](const HopfPresentation& P) {
        return P.field().name();
      })
      .def_property_readonly("degree_bound", &HopfPresentation::degree_bound)
      .def_property_readonly("has_antipode", &HopfPresentation::has_antipode)
      .def_property_readonly("fully_confluent", [](const HopfPresentation& P) {
        return P.rewrite().fully_confluent();
      })
      .def_property_readonly("relations", [](const HopfPresentation& P) {
        std::vector<std::string> out;
        for (const FreePoly& r : P.relations()) out.push_back(to_string(r));
        return out;
      })
      .def("nf", [](const HopfPresentation& P, const std::string& p) {
        return to_string(P.nf(parse_poly(p, P.alphabet(), P.field())));
      }, py::arg("poly"))
      .def("delta", [](const HopfPresentation& P, const std::string& p) {
        return to_string(delta_of(P, parse_poly(p, P.alphabet(), P.field())));
      }, py::arg("poly"))
      .def("counit", [](const HopfPresentation& P, const std::string& p) {
        return eps_of(P, parse_poly(p, P.alphabet(), P.field())).to_string();
      }, py::arg("poly"))
      .def("antipode", [](const HopfPresentation& P, const std::string& p) {
        return to_string(s_of(P, parse_poly(p, P.alphabet(), P.field())));
      }, py::arg("poly"))
      .def("antipode_axiom_check", [](const HopfPresentation& P, const std::string& p) {
        return antipode_axiom_check(P, parse_poly(p, P.alphabet(), P.field()));
      }, py::arg("poly"))
      .def("basis", [](const HopfPresentation& P, std::size_t d) {
        return word_list(P.rewrite().basis_up_to_degree(d), *P.alphabet());
      }, py::arg("degree"))
      .def("grouplikes", [](const HopfPresentation& P, std::size_t d) {
        return word_list(grouplikes(P, d), *P.alphabet());
      }, py::arg("degree"))
      .def("rules", [](const HopfPresentation& P) { return P.rewrite().dump(); })
      .def("validate", [](const HopfPresentation& P) {
        return checks_to_list(validate(P).checks);
      }, "List of (check, PASS|FAIL|SKIP, detail) tuples.")
      .def("to_text", [](const HopfPresentation& P) { return print_presentation(P); })
      .def("__repr__", [](const HopfPresentation& P) {
        std::ostringstream ss;
        ss << "<Presentation over " << P.field().name() << " with "
           << P.alphabet()->size() << " generators>";
        return ss.str();
      });

  m.def("parse_presentation", &parse, py::arg("text"),
        py::arg("field") = py::none(), py::arg("degree_bound") = py::none());
  m.def("example", [](const std::string& name, const std::string& field) {
    return wrap(example(name, parse_field(field)));
  }, py::arg("name"), py::arg("field") = "Q");
  m.def("example_names", &example_names);

  m.def("coproduct", [](const std::vector<PyPresentation>& factors,
                        std::optional<std::size_t> degree_bound) {
    std::vector<PresentationPtr> in(factors.begin(), factors.end());
    Coproduct c = coproduct(in, degree_bound);
    return py::make_tuple(wrap(c.presentation), print_labeling(c));
  }, py::arg("factors"), py::arg("degree_bound") = py::none(),
     "Returns (presentation, labeling text).");

  m.def("coequalizer", [](const PyPresentation& source, const PyPresentation& target,
                          const std::map<std::string, std::string>& f,
                          const std::map<std::string, std::string>& g,
                          std::optional<std::size_t> degree_bound) {
    Coequalizer q = coequalizer(map_from_dict(source, target, f),
                                map_from_dict(source, target, g), degree_bound);
    py::dict out;
    out["quotient"] = wrap(q.quotient);
    std::vector<std::string> added;
    for (const FreePoly& r : q.added_relations) added.push_back(to_string(r));
    out["added_relations"] = added;
    out["hopf_ideal_checks"] = checks_to_list(q.hopf_ideal_checks);
    return out;
  }, py::arg("source"), py::arg("target"), py::arg("f"), py::arg("g"),
     py::arg("degree_bound") = py::none(),
     "f and g map source generator names to polynomials in the target.");

  m.def("check_hopf_map", [](const PyPresentation& source, const PyPresentation& target,
                             const std::map<std::string, std::string>& images) {
    MapCheck c = check_hopf_map(map_from_dict(source, target, images));
    return py::make_tuple(c.ok, c.failure);
  }, py::arg("source"), py::arg("target"), py::arg("images"));

  py::class_<StructureTable>(m, "Table")
      .def_readonly("dim", &StructureTable::dim)
      .def_readonly("basis", &StructureTable::basis)
      .def("check", [](const StructureTable& T) {
        return checks_to_list(check_bialgebra_axioms(T));
      })
      .def("solve_antipode", [](const StructureTable& T) -> py::object {
        auto S = solve_antipode(T);
        if (!S) return py::none();
        return py::cast(matrix_rows(*S));
      }, "Antipode matrix rows as exact strings (column i is S(e_i)), or None.")
      .def("probe", [](const StructureTable& T, std::size_t max_dim) -> py::object {
        auto p = coreflection_probe(T, max_dim);
        if (!p) return py::none();
        return py::cast(p->subset);
      }, py::arg("max_dim") = 12)
      .def("to_text", [](const StructureTable& T) { return print_table(T); });

  m.def("parse_table", &parse_table, py::arg("text"));
  m.def("compile", [](const HopfPresentation& P, std::size_t d) {
    return compile(P, d);
  }, py::arg("presentation"), py::arg("degree"),
     "Structure table over normal words, or None if not finite-dimensional.");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line tool in-process: (exit, stdout, stderr).");
}
