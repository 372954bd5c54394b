#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "liereduce/algebra.hpp"
#include "liereduce/corpus.hpp"
#include "liereduce/errors.hpp"

using namespace liereduce;

namespace {

struct Options {
  std::string problem;
  std::string field;
  std::string fields;
  std::string chart;
  std::string target;
  std::string directory = "corpus";
  std::string filter;
  int order = 1;
  bool json = false;
  bool timing = false;
  bool serial = false;
  std::uint64_t seed = SampleConfig{}.seed;
  double tolerance = SampleConfig{}.tolerance;

  SampleConfig config() const {
    SampleConfig c;
    c.seed = seed;
    c.tolerance = tolerance;
    return c;
  }
};

// Bad input rather than a failed check.
struct UsageError : Error {
  using Error::Error;
};

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string w; std::getline(in, w, ',');) {
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

// Emits one result, as text or as a JSON record. Returns the exit status.
int emit(const Options& o, const std::string& problem, const std::string& operation, bool ok,
         const std::string& text) {
  if (o.json) {
    std::cout << to_json(Record{problem, operation, ok ? "pass" : "fail", text, "", 0}) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return ok ? 0 : 1;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {
    if (o.problem.empty()) throw UsageError("--problem is required");
    try {
      problem_ = load_problem(o.problem);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    ws_.emplace(problem_, o.config());
  }

  Workspace& ws() { return *ws_; }
  const Problem& problem() const { return problem_; }

  const FieldDef& field(const std::string& name) const {
    if (name.empty()) throw UsageError("--field is required");
    const FieldDef* f = problem_.field(name);
    if (!f) throw UsageError("unknown field '" + name + "'");
    return *f;
  }

  const StageDef& stage(const std::string& name, bool chart) const {
    if (name.empty()) throw UsageError("--chart is required");
    const StageDef* s = problem_.stage(name);
    if (!s || (chart && !s->chart)) throw UsageError("unknown chart '" + name + "'");
    return *s;
  }

  const DESystem& system_of(const FieldDef& f) {
    if (f.stage.empty()) {
      if (!parent_) parent_ = ws_->parent();
      return *parent_;
    }
    return ws_->reduced(f.stage).system;
  }

 private:
  const Options& o_;
  Problem problem_;
  std::optional<Workspace> ws_;
  std::optional<DESystem> parent_;
};

int cmd_prolong(const Options& o) {
  Session s(o);
  const FieldDef& f = s.field(o.field);
  const ProlongedField P = prolong(s.ws().field(f.name), o.order);
  const JetSpace& space = P.base.space;
  std::vector<std::string> lines;
  for (const auto& v : space.jets(1, o.order)) {
    const std::string n = space.jet_name(v);
    lines.push_back(n + " = " + render(P.eta.at(n)));
  }
  return emit(o, s.problem().id, "prolong " + f.name, true, join(lines, "\n"));
}

int cmd_check_symmetry(const Options& o) {
  Session s(o);
  const FieldDef& f = s.field(o.field);
  const SymmetryReport rep = check_point_symmetry(s.system_of(f), s.ws().field(f.name), o.config());
  std::vector<std::string> res;
  for (const auto& r : rep.residuals) res.push_back(render(r));
  const std::string text = rep.symmetry ? "pass" : "fail: residuals " + join(res, "; ");
  return emit(o, s.problem().id, "check-symmetry " + f.name, rep.symmetry, text);
}

int cmd_canonical(const Options& o) {
  Session s(o);
  const StageDef& st = s.stage(o.chart, true);
  if (st.field.empty()) throw UsageError("chart '" + st.name + "' names no field");
  const bool ok = verify_canonical(s.ws().field(st.field), s.ws().chart(st.name), o.config());
  return emit(o, s.problem().id, "canonical-verify " + st.name, ok, ok ? "pass" : "fail");
}

int cmd_transform(const Options& o) {
  Session s(o);
  const StageDef& st = s.stage(o.chart, true);
  return emit(o, s.problem().id, "transform " + st.name, true, s.ws().transformed(st.name).render());
}

int cmd_reduce(const Options& o, bool ode) {
  Session s(o);
  ReducedSystem r;
  std::string label;
  if (!o.chart.empty()) {
    const StageDef& st = s.stage(o.chart, false);
    r = s.ws().reduced(st.name);
    label = st.name;
  } else {
    const DESystem parent = s.ws().parent();
    r = ode ? reduce_ode(parent, "alpha", o.target) : reduce_pde(parent, o.target);
  }
  if (ode != r.system.space().is_ode()) {
    throw UsageError(ode ? "not an ODE; use reduce-pde" : "an ODE; use reduce-ode");
  }
  std::string text;
  for (const auto& eq : r.system.equations()) text += std::string(role_name(eq.role)) + ": " + render(eq.expr) + " = 0\n";
  text += "integrability conditions: " + std::to_string(r.integrability_count());
  return emit(o, s.problem().id, std::string(ode ? "reduce-ode" : "reduce-pde") + (label.empty() ? "" : " " + label), true,
              text);
}

int cmd_pushforward(const Options& o) {
  Session s(o);
  const FieldDef& f = s.field(o.field);
  const StageDef& st = s.stage(o.chart, true);
  const Pushforward pf = pushforward_field(s.ws().field(f.name), s.ws().chart(st.name), s.ws().aux_defs(st.name));
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < pf.coordinates.size(); ++i) parts.push_back(pf.coordinates[i] + ": " + render(pf.coefficients[i]));
  std::string text = "{" + join(parts, "; ") + "}";
  if (pf.raw) text += " (raw: " + join({pf.leftover.begin(), pf.leftover.end()}, ", ") + " remain)";
  return emit(o, s.problem().id, "pushforward " + f.name + " " + st.name, true, text);
}

std::string describe(const Classification& c) {
  std::string text = verdict_name(c.verdict);
  if (!c.witness.empty()) text += " [" + c.witness + "]";
  return text + ": " + c.criterion;
}

int cmd_classify(const Options& o) {
  Session s(o);
  const FieldDef& f = s.field(o.field);
  const StageDef& st = s.stage(o.chart, true);
  const Classification c = classify_pushforward(s.ws().field(f.name), s.ws().chart(st.name), s.ws().aux_defs(st.name),
                                                s.ws().reduced(st.name), o.config());
  return emit(o, s.problem().id, "classify " + f.name + " " + st.name, true, describe(c));
}

int cmd_lift(const Options& o) {
  Session s(o);
  const FieldDef& f = s.field(o.field);
  if (f.stage.empty()) throw UsageError("field '" + f.name + "' is not on a reduced space");
  const Classification c = lift_test(s.ws().field(f.name), s.ws().reduced(f.stage), o.config());
  return emit(o, s.problem().id, "lift-test " + f.name, true, describe(c));
}

std::vector<std::string> generator_names(Session& s, const std::vector<std::string>& named) {
  const std::string& stage = s.field(named.at(0)).stage;
  std::vector<std::string> out;
  for (const auto& f : s.problem().fields) {
    if (f.symmetry && f.stage == stage) out.push_back(f.name);
  }
  for (const auto& n : named) {
    if (s.field(n).stage != stage) throw UsageError("fields live on different spaces");
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  return out;
}

int cmd_commutator(const Options& o) {
  Session s(o);
  const auto named = split_names(o.fields);
  if (named.size() != 2) throw UsageError("--fields takes two names, e.g. X1,X2");
  const auto names = generator_names(s, named);
  std::vector<VectorField> gens;
  for (const auto& n : names) gens.push_back(s.ws().field(n));
  const VectorField Z = commutator(s.ws().field(named[0]), s.ws().field(named[1]));
  const auto c = express_in_span(Z, gens);
  AlgebraTable t;
  t.names = names;
  const std::string text = c ? t.render_combination(*c) : "not in span: " + Z.render();
  return emit(o, s.problem().id, "commutator " + named[0] + " " + named[1], c.has_value(), text);
}

int cmd_algebra(const Options& o) {
  Session s(o);
  std::vector<std::string> names = split_names(o.fields);
  if (names.empty()) {
    for (const auto& f : s.problem().fields) {
      if (f.symmetry && f.stage.empty()) names.push_back(f.name);
    }
  }
  std::vector<VectorField> gens;
  for (const auto& n : names) gens.push_back(s.ws().field(s.field(n).name));
  const AlgebraTable t = structure_constants(gens, names);
  std::string text;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const Bracket& b = t.brackets[i][j];
      text += "[" + names[i] + ", " + names[j] + "] = " +
              (b.in_span ? t.render_combination(b.coefficients) : "not in span: " + b.value.render()) + "\n";
    }
  }
  if (!t.closed()) {
    text += "not closed";
    return emit(o, s.problem().id, "algebra", false, text);
  }
  const Solvability sol = derived_series(t);
  std::vector<std::string> dims;
  for (int d : sol.derived_series) dims.push_back(std::to_string(d));
  text += std::string(sol.solvable ? "solvable" : "not solvable") + ", derived series " + join(dims, " -> ");
  return emit(o, s.problem().id, "algebra", true, text);
}

int cmd_run_corpus(const Options& o) {
  if (!std::filesystem::is_directory(o.directory)) throw UsageError("no directory '" + o.directory + "'");
  CorpusOptions co;
  co.filter = o.filter;
  co.config = o.config();
  co.parallel = !o.serial;
  co.timing = o.timing;
  const auto records = run_corpus(o.directory, co);
  for (const auto& r : records) {
    if (o.json) {
      std::cout << to_json(r) << "\n";
    } else {
      std::cout << r.verdict << "  " << r.problem << "  " << r.operation << "  ->  " << r.computed << "\n";
    }
  }
  if (!o.json) {
    std::size_t ok = 0;
    for (const auto& r : records) ok += r.verdict == "pass" || r.verdict == "discrepancy-documented";
    std::cout << ok << "/" << records.size() << " checks passed\n";
  }
  return all_passed(records) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction of order by point symmetries, for ODEs and PDEs"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "One JSON record per check");
  app.add_option("--seed", o.seed, "Sampling seed");
  app.add_option("--tolerance", o.tolerance, "Numeric tolerance of sampled checks");

  auto with_problem = [&](CLI::App* sub) { sub->add_option("--problem", o.problem, "Problem file")->required(); };
  std::map<std::string, std::function<int()>> run;

  auto* prolong_cmd = app.add_subcommand("prolong", "Prolong a field");
  with_problem(prolong_cmd);
  prolong_cmd->add_option("--field", o.field)->required();
  prolong_cmd->add_option("--order", o.order)->check(CLI::Range(1, 6));
  run["prolong"] = [&] { return cmd_prolong(o); };

  auto* sym = app.add_subcommand("check-symmetry", "Check a field against its system");
  with_problem(sym);
  sym->add_option("--field", o.field)->required();
  run["check-symmetry"] = [&] { return cmd_check_symmetry(o); };

  auto* can = app.add_subcommand("canonical-verify", "Check that a chart straightens its field");
  with_problem(can);
  can->add_option("--chart", o.chart)->required();
  run["canonical-verify"] = [&] { return cmd_canonical(o); };

  auto* tr = app.add_subcommand("transform", "Rewrite a system in chart coordinates");
  with_problem(tr);
  tr->add_option("--chart", o.chart)->required();
  run["transform"] = [&] { return cmd_transform(o); };

  for (const char* name : {"reduce-ode", "reduce-pde"}) {
    auto* red = app.add_subcommand(name, "Reduce by a translation in a dependent variable");
    with_problem(red);
    red->add_option("--chart", o.chart, "Chart or reduction stage");
    red->add_option("--target", o.target, "Dependent variable to eliminate");
    const bool ode = std::string(name) == "reduce-ode";
    run[name] = [&o, ode] { return cmd_reduce(o, ode); };
  }

  auto* pf = app.add_subcommand("pushforward", "Push a field through a chart");
  with_problem(pf);
  pf->add_option("--field", o.field)->required();
  pf->add_option("--chart", o.chart)->required();
  run["pushforward"] = [&] { return cmd_pushforward(o); };

  auto* cl = app.add_subcommand("classify", "Point or nonlocal after reduction");
  with_problem(cl);
  cl->add_option("--field", o.field)->required();
  cl->add_option("--chart", o.chart)->required();
  run["classify"] = [&] { return cmd_classify(o); };

  auto* lt = app.add_subcommand("lift-test", "Does a reduced-system symmetry lift to a point symmetry");
  with_problem(lt);
  lt->add_option("--field", o.field)->required();
  run["lift-test"] = [&] { return cmd_lift(o); };

  auto* cm = app.add_subcommand("commutator", "Bracket of two fields");
  with_problem(cm);
  cm->add_option("--fields", o.fields)->required();
  run["commutator"] = [&] { return cmd_commutator(o); };

  auto* al = app.add_subcommand("algebra", "Structure constants and derived series");
  with_problem(al);
  al->add_option("--fields", o.fields, "Generators (default: all symmetries)");
  run["algebra"] = [&] { return cmd_algebra(o); };

  auto* rc = app.add_subcommand("run-corpus", "Run every check of a directory of problem files");
  rc->add_option("directory", o.directory, "Directory with .prob files");
  rc->add_option("--filter", o.filter, "Only the problem with this id or file name");
  rc->add_flag("--timing", o.timing, "Record wall time per check");
  rc->add_flag("--serial", o.serial, "Run problems one after another");
  run["run-corpus"] = [&] { return cmd_run_corpus(o); };

  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--json", o.json, "One JSON record per check");
    sub->add_option("--seed", o.seed, "Sampling seed");
    sub->add_option("--tolerance", o.tolerance, "Numeric tolerance of sampled checks");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << app.help();
    return 2;
  }
  try {
    return run.at(app.get_subcommands().front()->get_name())();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
