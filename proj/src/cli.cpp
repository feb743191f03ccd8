#include "hopfforge/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hopfforge/constructions.hpp"
#include "hopfforge/errors.hpp"
#include "hopfforge/findim.hpp"
#include "hopfforge/io.hpp"
#include "hopfforge/stdlib.hpp"
#include "hopfforge/text.hpp"

namespace hopfforge::cli {

namespace {

namespace fs = std::filesystem;

enum class Format { human, machine };

struct Options {
  std::optional<std::size_t> degree_bound;
  std::optional<std::string> field;
  std::string output;
  std::string format = "human";
};

// Thrown for problems with files and references; exits 2 like parse errors.
class InputError : public Error {
 public:
  using Error::Error;
};

class Session {
 public:
  Session(const Options& opts, std::ostream& out)
      : opts_(opts), out_(out) {
    format_ = opts.format == "machine" ? Format::machine : Format::human;
    if (opts.field) {
      field_ = parse_field(*opts.field);
    }
    if (const char* env = std::getenv("HOPFFORGE_DEGREE_BOUND")) {
      std::string v(env);
      if (!v.empty()) {
        try {
          env_bound_ = std::stoul(v);
        } catch (const std::exception&) {
          throw InputError("HOPFFORGE_DEGREE_BOUND is not an integer: " + v);
        }
      }
    }
  }

  bool machine() const { return format_ == Format::machine; }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // `example:NAME` or a path relative to `base`.
  PresentationPtr load_presentation(const std::string& ref,
                                    const fs::path& base = {}) {
    if (ref.rfind("example:", 0) == 0) {
      PresentationPtr P = example(ref.substr(8), field_.value_or(Field::rationals()));
      auto bound = opts_.degree_bound ? opts_.degree_bound : env_bound_;
      if (!bound) {
        return P;
      }
      PresentationData data = P->data();
      data.degree_bound = bound;
      return make_presentation(std::move(data));
    }
    fs::path path = base.empty() ? fs::path(ref) : base / ref;
    return with_file(path.string(), read_file(path.string()), true);
  }

  StructureTable load_table(const std::string& path) {
    try {
      return parse_table(read_file(path));
    } catch (const ParseError& e) {
      throw InputError(path + ":" + e.what());
    }
  }

  // Writes an artifact to -o when given, else to stdout.
  void emit_artifact(const std::string& text) {
    if (opts_.output.empty()) {
      out_ << text;
      artifact_on_stdout_ = true;
      return;
    }
    std::ofstream f(opts_.output, std::ios::binary);
    if (!f) {
      throw InputError("cannot write '" + opts_.output + "'");
    }
    f << text;
  }

  // Report lines become comments when they follow an artifact on stdout, so
  // the stream still parses.
  void line(const std::string& text) {
    out_ << (artifact_on_stdout_ ? "# " : "") << text << '\n';
  }

  void check(const std::string& name, CheckStatus status,
             const std::string& detail = "") {
    const char* s = status == CheckStatus::pass   ? "PASS"
                    : status == CheckStatus::fail ? "FAIL"
                                                  : "SKIP";
    if (machine()) {
      line("CHECK " + name + " " + s + (detail.empty() ? "" : " " + detail));
    } else {
      std::string padded = name;
      if (padded.size() < 18) {
        padded.resize(18, ' ');
      }
      line(padded + s + (detail.empty() ? "" : "  (" + detail + ")"));
    }
    if (status == CheckStatus::fail) {
      failed_ = true;
    }
  }

  void value(const std::string& name, const std::string& v) {
    line(machine() ? "VALUE " + name + " " + v : name + ": " + v);
  }

  void fail() { failed_ = true; }

  int finish() {
    if (machine()) {
      line(std::string("RESULT ") + (failed_ ? "FAIL" : "PASS"));
    }
    return failed_ ? exit_check_failed : exit_ok;
  }

  const Options& options() const { return opts_; }
  Field field_or(Field f) const { return field_.value_or(f); }

 private:
  PresentationPtr with_file(const std::string& name, const std::string& text,
                            bool allow_field_override) {
    PresentationOptions po;
    if (allow_field_override) {
      po.field = field_;
    }
    po.degree_bound = opts_.degree_bound;
    po.default_degree_bound = env_bound_;
    try {
      return parse_presentation(text, po);
    } catch (const ParseError& e) {
      throw InputError(name + ":" + e.what());
    }
  }

  const Options& opts_;
  std::ostream& out_;
  Format format_ = Format::human;
  std::optional<Field> field_;
  std::optional<std::size_t> env_bound_;
  bool failed_ = false;
  bool artifact_on_stdout_ = false;
};

std::string confluence_text(Confluence c, std::size_t bound) {
  return c == Confluence::full ? "full"
                               : "up-to-degree " + std::to_string(bound);
}

void report_validation(Session& s, const HopfPresentation& P) {
  ValidationReport rep = validate(P);
  if (!s.machine()) {
    s.line(std::string(P.has_antipode() ? "Hopf" : "bialgebra")
           + " presentation, " + std::to_string(P.alphabet()->size())
           + (P.alphabet()->size() == 1 ? " generator" : " generators")
           + ", degree bound " + std::to_string(P.degree_bound())
           + ", confluent: " + confluence_text(rep.confluence, rep.degree_bound));
  } else {
    s.value("confluent", confluence_text(rep.confluence, rep.degree_bound));
  }
  for (const CheckResult& c : rep.checks) {
    s.check(c.name, c.status, c.detail);
  }
}

std::string words_text(const std::vector<Word>& words, const Alphabet& alpha) {
  std::string out;
  for (const Word& w : words) {
    out += (out.empty() ? "" : " ") + word_to_string(w, alpha);
  }
  return out;
}

int cmd_validate(Session& s, const std::string& file) {
  PresentationPtr P = s.load_presentation(file);
  report_validation(s, *P);
  return s.finish();
}

int cmd_nf(Session& s, const std::string& file, const std::string& poly) {
  PresentationPtr P = s.load_presentation(file);
  FreePoly p;
  try {
    p = parse_poly(poly, P->alphabet(), P->field());
  } catch (const ParseError& e) {
    throw InputError("polynomial:" + std::string(e.what()));
  }
  FreePoly n = P->nf(p);
  if (s.machine()) {
    s.value("nf", to_string(n));
    return s.finish();
  }
  s.line(to_string(n));
  return exit_ok;
}

int cmd_rules(Session& s, const std::string& file) {
  PresentationPtr P = s.load_presentation(file);
  s.emit_artifact(P->rewrite().dump());
  return exit_ok;
}

int cmd_basis(Session& s, const std::string& file, std::size_t d) {
  PresentationPtr P = s.load_presentation(file);
  auto basis = P->rewrite().basis_up_to_degree(d);
  s.value("basis", words_text(basis, *P->alphabet()));
  s.value("count", std::to_string(basis.size()));
  s.value("confluent", confluence_text(P->rewrite().status(), P->degree_bound()));
  return s.machine() ? s.finish() : exit_ok;
}

int cmd_grouplikes(Session& s, const std::string& file, std::size_t d) {
  PresentationPtr P = s.load_presentation(file);
  auto g = grouplikes(*P, d);
  s.value("grouplikes", words_text(g, *P->alphabet()));
  s.value("count", std::to_string(g.size()));
  return s.machine() ? s.finish() : exit_ok;
}

int cmd_coproduct(Session& s, const std::vector<std::string>& files) {
  std::vector<PresentationPtr> factors;
  for (const auto& f : files) {
    factors.push_back(s.load_presentation(f));
  }
  Coproduct C = coproduct(factors, s.options().degree_bound);
  s.emit_artifact(print_presentation(*C.presentation) + print_labeling(C));
  for (std::size_t l = 0; l < C.labeling.injections.size(); ++l) {
    MapCheck c = check_hopf_map(C.labeling.injections[l]);
    s.check("q_" + std::to_string(l + 1),
            c ? CheckStatus::pass : CheckStatus::fail, c.failure);
  }
  report_validation(s, *C.presentation);
  return s.finish();
}

struct LoadedMaps {
  MapFile file;
  PresentationPtr source;
  PresentationPtr target;
};

LoadedMaps load_maps(Session& s, const std::string& path) {
  LoadedMaps out;
  try {
    out.file = parse_map_file(Session::read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
  fs::path base = fs::path(path).parent_path();
  out.source = s.load_presentation(out.file.source, base);
  out.target = out.file.target == out.file.source
                   ? out.source
                   : s.load_presentation(out.file.target, base);
  return out;
}

HopfMap section_map(const LoadedMaps& maps, const std::string& path,
                    const std::string& name) {
  const MapSection* sec = maps.file.find(name);
  if (!sec) {
    throw InputError(path + ": no map section '" + name + ":'");
  }
  try {
    return build_map(*sec, maps.source, maps.target);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

Coequalizer run_coequalizer(Session& s, const std::string& path) {
  LoadedMaps maps = load_maps(s, path);
  HopfMap f = section_map(maps, path, "f");
  HopfMap g = section_map(maps, path, "g");
  return coequalizer(f, g, s.options().degree_bound);
}

int cmd_coequalizer(Session& s, const std::string& path) {
  Coequalizer Q = run_coequalizer(s, path);
  s.emit_artifact(print_presentation(*Q.quotient));
  for (const CheckResult& c : Q.hopf_ideal_checks) {
    s.check("ideal-" + c.name, c.status, c.detail);
  }
  report_validation(s, *Q.quotient);
  return s.finish();
}

int cmd_induce_coeq(Session& s, const std::string& coeq_path,
                    const std::string& h_path) {
  Coequalizer Q = run_coequalizer(s, coeq_path);
  LoadedMaps hm = load_maps(s, h_path);
  HopfMap h = section_map(hm, h_path, "h");
  HopfMap induced = induced_from_coeq(h, Q);
  s.emit_artifact(print_map_section("induced", induced));
  bool factors = true;
  for (GenId a = 0; a < h.source()->alphabet()->size(); ++a) {
    FreePoly x = h.source()->generator(a);
    factors = factors && induced(Q.projection(x)) == h(x);
  }
  s.check("factorization", factors ? CheckStatus::pass : CheckStatus::fail);
  MapCheck c = check_hopf_map(induced);
  s.check("hopf-map", c ? CheckStatus::pass : CheckStatus::fail, c.failure);
  return s.finish();
}

int cmd_induce_cocone(Session& s, const std::vector<std::string>& paths) {
  std::vector<HopfMap> maps;
  std::vector<PresentationPtr> factors;
  for (const auto& p : paths) {
    LoadedMaps lm = load_maps(s, p);
    maps.push_back(section_map(lm, p, "h"));
    factors.push_back(lm.source);
  }
  Coproduct C = coproduct(factors, s.options().degree_bound);
  HopfMap u = induced_from_cocone(maps, C);
  s.emit_artifact(print_map_section("induced", u));
  bool factors_ok = true;
  for (std::size_t l = 0; l < maps.size(); ++l) {
    const HopfMap& q = C.labeling.injections[l];
    for (GenId g = 0; g < q.source()->alphabet()->size(); ++g) {
      FreePoly x = q.source()->generator(g);
      factors_ok = factors_ok && u(q(x)) == maps[l](x);
    }
  }
  s.check("factorization", factors_ok ? CheckStatus::pass : CheckStatus::fail);
  MapCheck c = check_hopf_map(u);
  s.check("hopf-map", c ? CheckStatus::pass : CheckStatus::fail, c.failure);
  return s.finish();
}

int cmd_compile(Session& s, const std::string& file, std::size_t d) {
  PresentationPtr P = s.load_presentation(file);
  auto T = compile(*P, d);
  if (!T) {
    s.line("NOT-FINITE-DIMENSIONAL: basis still grows at degree "
           + std::to_string(d + 1));
    s.fail();
    return s.finish();
  }
  s.emit_artifact(print_table(*T));
  for (const CheckResult& c : check_bialgebra_axioms(*T)) {
    s.check(c.name, c.status, c.detail);
  }
  return s.finish();
}

bool report_table_axioms(Session& s, const StructureTable& T) {
  bool ok = true;
  for (const CheckResult& c : check_bialgebra_axioms(T)) {
    if (c.name == "antipode") {
      continue;
    }
    s.check(c.name, c.status, c.detail);
    ok = ok && c.status != CheckStatus::fail;
  }
  return ok;
}

int cmd_antipode(Session& s, const std::string& path) {
  StructureTable T = s.load_table(path);
  if (!report_table_axioms(s, T)) {
    return s.finish();
  }
  auto S = solve_antipode(T);
  if (!S) {
    s.line("INFEASIBLE: no antipode");
    s.fail();
    return s.finish();
  }
  s.line("antipode:");
  std::istringstream rows(print_matrix(*S));
  for (std::string row; std::getline(rows, row);) {
    s.line(row);
  }
  if (T.antipode) {
    s.check("antipode-agrees",
            *T.antipode == *S ? CheckStatus::pass : CheckStatus::fail);
  }
  return s.finish();
}

int cmd_probe(Session& s, const std::string& path, std::size_t max_dim) {
  StructureTable T = s.load_table(path);
  if (!report_table_axioms(s, T)) {
    return s.finish();
  }
  auto found = coreflection_probe(T, max_dim);
  if (!found) {
    s.line("NOT-FOUND: no coordinate Hopf subbialgebra");
    s.fail();
    return s.finish();
  }
  std::string subset;
  for (std::size_t i : found->subset) {
    std::string label = T.basis.empty() ? "e" + std::to_string(i) : T.basis[i];
    subset += (subset.empty() ? "" : " ") + label;
  }
  s.value("subset", subset);
  s.value("dimension", std::to_string(found->subset.size()));
  return s.finish();
}

// Tables are recognized by their `dim:` header.
int cmd_format(Session& s, const std::string& path) {
  std::string text = Session::read_file(path);
  bool table = text.find("\ndim:") != std::string::npos
               || text.rfind("dim:", 0) == 0;
  if (table) {
    s.emit_artifact(print_table(s.load_table(path)));
  } else {
    s.emit_artifact(print_presentation(*s.load_presentation(path)));
  }
  return exit_ok;
}

int cmd_example(Session& s, const std::string& name) {
  PresentationPtr P = s.load_presentation("example:" + name);
  s.emit_artifact(print_presentation(*P));
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finitely presented bialgebras and Hopf algebras: validation, "
               "normal forms, coproducts, coequalizers and finite-dimensional "
               "antipode solving."};
  app.name("hopfforge");
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("-D,--degree-bound", opts.degree_bound,
                 "Degree bound for completion (default: file, then "
                 "HOPFFORGE_DEGREE_BOUND, then 2*maxdeg+4)");
  app.add_option("--field", opts.field, "Field override: Q or F<p>");
  app.add_option("-o,--output", opts.output, "Write the produced artifact here");
  app.add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}));

  std::string file;
  std::string file2;
  std::string poly;
  std::size_t degree = 0;
  std::size_t max_dim = 12;
  std::vector<std::string> files;

  auto* validate_cmd = app.add_subcommand("validate", "Run the bialgebra/Hopf checks");
  validate_cmd->add_option("file", file, "Presentation file")->required();

  auto* nf_cmd = app.add_subcommand("nf", "Normal form of a polynomial");
  nf_cmd->add_option("file", file)->required();
  nf_cmd->add_option("poly", poly)->required();

  auto* rules_cmd = app.add_subcommand("rules", "Dump the completed rewrite system");
  rules_cmd->add_option("file", file)->required();

  auto* basis_cmd = app.add_subcommand("basis", "Normal words up to a degree");
  basis_cmd->add_option("file", file)->required();
  basis_cmd->add_option("-d,--degree", degree)->required();

  auto* gl_cmd = app.add_subcommand("grouplikes", "Monomial grouplikes up to a degree");
  gl_cmd->add_option("file", file)->required();
  gl_cmd->add_option("-d,--degree", degree)->required();

  auto* coprod_cmd = app.add_subcommand("coproduct", "Coproduct of Hopf algebras");
  coprod_cmd->add_option("files", files)->required();

  auto* coeq_cmd = app.add_subcommand("coequalizer", "Coequalizer of maps f, g");
  coeq_cmd->add_option("mapfile", file)->required();

  auto* induce_cmd = app.add_subcommand("induce", "Universal-property factorizations");
  induce_cmd->require_subcommand(1);
  induce_cmd->fallthrough();
  auto* induce_coeq = induce_cmd->add_subcommand("coeq", "h' : A/I -> H with h' o pi = h");
  induce_coeq->add_option("coeq-mapfile", file)->required();
  induce_coeq->add_option("h-mapfile", file2)->required();
  auto* induce_cocone = induce_cmd->add_subcommand("cocone", "u with u o q_l = h_l");
  induce_cocone->add_option("h-mapfiles", files)->required();

  auto* compile_cmd = app.add_subcommand("compile", "Structure-constant table");
  compile_cmd->add_option("file", file)->required();
  compile_cmd->add_option("-d,--degree", degree)->required();

  auto* antipode_cmd = app.add_subcommand("antipode", "Solve for the antipode of a table");
  antipode_cmd->add_option("table", file)->required();

  auto* probe_cmd = app.add_subcommand("probe", "Largest coordinate Hopf subbialgebra");
  probe_cmd->add_option("table", file)->required();
  probe_cmd->add_option("--max-dim", max_dim);

  auto* format_cmd = app.add_subcommand("format", "Print a presentation or table canonically");
  format_cmd->add_option("file", file)->required();

  auto* example_cmd = app.add_subcommand("example", "Print a built-in presentation");
  example_cmd->add_option("name", file)
      ->required()
      ->check(CLI::IsMember(example_names()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    Session s(opts, out);
    if (*validate_cmd) return cmd_validate(s, file);
    if (*nf_cmd) return cmd_nf(s, file, poly);
    if (*rules_cmd) return cmd_rules(s, file);
    if (*basis_cmd) return cmd_basis(s, file, degree);
    if (*gl_cmd) return cmd_grouplikes(s, file, degree);
    if (*coprod_cmd) return cmd_coproduct(s, files);
    if (*coeq_cmd) return cmd_coequalizer(s, file);
    if (*induce_coeq) return cmd_induce_coeq(s, file, file2);
    if (*induce_cocone) return cmd_induce_cocone(s, files);
    if (*compile_cmd) return cmd_compile(s, file, degree);
    if (*antipode_cmd) return cmd_antipode(s, file);
    if (*probe_cmd) return cmd_probe(s, file, max_dim);
    if (*format_cmd) return cmd_format(s, file);
    if (*example_cmd) return cmd_example(s, file);
  } catch (const DegreeOverflow& e) {
    err << "error: " << e.what() << " (rerun with --degree-bound "
        << e.required() << ")\n";
    return exit_input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace hopfforge::cli
