#include "liereduce/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "liereduce/algebra.hpp"
#include "liereduce/errors.hpp"

namespace liereduce {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string cur; std::getline(in, cur, sep);) {
    const auto b = cur.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string render_exprs(const std::vector<Expr>& es) {
  std::vector<std::string> parts;
  for (const auto& e : es) parts.push_back(render(e));
  return join(parts, "; ");
}

std::vector<Expr> parse_list(const std::string& text, const JetSpace& space) {
  std::vector<Expr> out;
  for (const auto& e : split(text, ';')) out.push_back(space.parse(e));
  return out;
}

Candidate candidate(const NamedExprs& named) {
  Candidate c;
  for (const auto& [n, e] : named) c[n] = e;
  return c;
}

// Linear combination of generator names, e.g. "-1*X1 + 2*X3".
Expr combination(const std::string& text, const std::vector<std::string>& names) {
  return parse_expr(text, std::set<std::string>(names.begin(), names.end()));
}

struct Outcome {
  bool pass = false;
  std::string computed;
  bool inconclusive = false;
};

class Runner {
 public:
  Runner(Workspace& ws, const CheckDef& c) : ws_(ws), c_(c), p_(ws.problem()), cfg_(ws.config()) {}

  Outcome run() {
    const std::string& op = c_.op;
    if (op == "prolong") return prolong();
    if (op == "check-symmetry") return check_symmetry();
    if (op == "canonical-verify") return canonical();
    if (op == "transform") return transform();
    if (op == "reduce") return reduced();
    if (op == "integrability-count") return integrability();
    if (op == "pushforward") return pushforward();
    if (op == "classify") return classify();
    if (op == "lift-test") return lift();
    if (op == "commutator") return commutator_check();
    if (op == "algebra") return algebra();
    if (op == "advice") return advice();
    if (op == "consistency") return consistency();
    if (op == "connection") return connection();
    throw Error("unknown operation '" + op + "'");
  }

 private:
  Workspace& ws_;
  const CheckDef& c_;
  const Problem& p_;
  const SampleConfig& cfg_;

  const DESystem& system_of(const FieldDef& f) {
    if (f.stage.empty()) {
      parent_ = ws_.parent();
      return parent_;
    }
    return ws_.reduced(f.stage).system;
  }
  DESystem parent_;

  Outcome prolong() {
    const FieldDef& f = *p_.field(c_.args[0]);
    const ProlongedField P = liereduce::prolong(ws_.field(f.name), std::stoi(c_.args[1]));
    const JetSpace& space = p_.space_of(f);
    Outcome o{true, ""};
    std::vector<std::string> parts;
    for (const auto& part : split(c_.expected, ';')) {
      const auto eq = part.find('=');
      const std::string jet = *space.resolve(split(part.substr(0, eq), ' ').front());
      const Expr want = normalize(space.parse(part.substr(eq + 1)));
      auto it = P.eta.find(jet);
      if (it == P.eta.end()) {
        parts.push_back(jet + " = (beyond the prolongation)");
        o.pass = false;
        continue;
      }
      const Expr got = normalize(it->second);
      parts.push_back(jet + " = " + render(got));
      if (!(got == want)) o.pass = false;
    }
    o.computed = join(parts, "; ");
    return o;
  }

  Outcome check_symmetry() {
    const FieldDef& f = *p_.field(c_.args[0]);
    const SymmetryReport rep = check_point_symmetry(system_of(f), ws_.field(f.name), cfg_);
    Outcome o;
    o.computed = rep.symmetry ? "symmetry" : "not-symmetry: " + render_exprs(rep.residuals);
    const auto colon = c_.expected.find(':');
    const std::string word = split(c_.expected.substr(0, colon), ' ').front();
    o.pass = (word == "symmetry") == rep.symmetry;
    if (o.pass && colon != std::string::npos) {
      const auto want = parse_list(c_.expected.substr(colon + 1), p_.space_of(f));
      if (want.size() != rep.residuals.size()) return o.pass = false, o;
      for (std::size_t i = 0; i < want.size(); ++i) {
        if (!equiv(rep.residuals[i], want[i], cfg_)) o.pass = false;
      }
    }
    return o;
  }

  Outcome canonical() {
    const StageDef& st = *p_.stage(c_.args[0]);
    const bool ok = verify_canonical(ws_.field(st.field), ws_.chart(st.name), cfg_);
    return {(ok ? "pass" : "fail") == c_.expected, ok ? "pass" : "fail"};
  }

  Outcome transform() {
    const StageDef& st = *p_.stage(c_.args[0]);
    const DESystem& got = ws_.transformed(st.name);
    const DESystem want(st.chart_space, parse_list(c_.expected, st.chart_space));
    return {same_system(got, want, cfg_), render_exprs(got.exprs())};
  }

  Outcome reduced() {
    const StageDef& st = *p_.stage(c_.args[0]);
    const DESystem& got = ws_.reduced(st.name).system;
    const DESystem want(got.space(), parse_list(c_.expected, st.reduced));
    return {same_system(got, want, cfg_), render_exprs(got.exprs())};
  }

  Outcome integrability() {
    const std::string n = std::to_string(ws_.reduced(c_.args[0]).integrability_count());
    return {n == c_.expected, n};
  }

  Outcome pushforward() {
    const StageDef& st = *p_.stage(c_.args[1]);
    const Pushforward pf = pushforward_field(ws_.field(c_.args[0]), ws_.chart(st.name), ws_.aux_defs(st.name));
    std::vector<std::string> target = st.reduced.dependent();
    target.push_back(st.target);
    const JetSpace ps(st.reduced.independent(), target, st.reduced.order(), st.reduced.parameters());
    std::map<std::string, Expr> want;
    for (const auto& [n, e] : parse_named(c_.expected, ps)) want[n] = e;
    Outcome o{!pf.raw, ""};
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < pf.coordinates.size(); ++i) {
      const auto& name = pf.coordinates[i];
      parts.push_back(name + ": " + render(pf.coefficients[i]));
      const Expr w = want.count(name) ? want[name] : Expr(0);
      if (!equiv(pf.coefficients[i], w, cfg_)) o.pass = false;
      want.erase(name);
    }
    if (!want.empty()) o.pass = false;
    o.computed = join(parts, "; ");
    if (pf.raw) o.computed += " (raw)";
    return o;
  }

  Outcome verdict_outcome(const Classification& cl) {
    Outcome o;
    o.computed = verdict_name(cl.verdict);
    if (!cl.witness.empty() && cl.verdict == Verdict::nonlocal && cl.criterion.rfind("coefficient", 0) == 0) {
      o.computed += " " + cl.witness;
    }
    o.computed += " (" + cl.criterion + ")";
    const auto w = words(c_.expected);
    o.pass = w[0] == verdict_name(cl.verdict);
    if (o.pass && w.size() > 1) o.pass = cl.witness == w[1];
    o.inconclusive = !o.pass && cl.verdict == Verdict::inconclusive;
    return o;
  }

  Outcome classify() {
    const StageDef& st = *p_.stage(c_.args[1]);
    const Classification cl = classify_pushforward(ws_.field(c_.args[0]), ws_.chart(st.name), ws_.aux_defs(st.name),
                                                   ws_.reduced(st.name), cfg_);
    return verdict_outcome(cl);
  }

  Outcome lift() {
    const FieldDef& f = *p_.field(c_.args[0]);
    return verdict_outcome(lift_test(ws_.field(f.name), ws_.reduced(f.stage), cfg_));
  }

  // The generators a bracket is expressed in: declared symmetries on the same
  // space, plus the fields themselves.
  std::vector<std::string> basis_for(const std::vector<std::string>& named) {
    const std::string& stage = p_.field(named[0])->stage;
    std::vector<std::string> out;
    for (const auto& f : p_.fields) {
      if (f.symmetry && f.stage == stage) out.push_back(f.name);
    }
    for (const auto& n : named) {
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    return out;
  }

  AlgebraTable table_for(const std::vector<std::string>& names) {
    std::vector<VectorField> gens;
    for (const auto& n : names) gens.push_back(ws_.field(n));
    return structure_constants(gens, names);
  }

  Outcome commutator_check() {
    const auto names = basis_for({c_.args[0], c_.args[1]});
    const VectorField Z = liereduce::commutator(ws_.field(c_.args[0]), ws_.field(c_.args[1]));
    std::vector<VectorField> gens;
    for (const auto& n : names) gens.push_back(ws_.field(n));
    const auto c = express_in_span(Z, gens);
    if (!c) return {false, "not in span: " + Z.render()};
    AlgebraTable t;
    t.names = names;
    const std::string got = t.render_combination(*c);
    return {combination(got, names) == combination(c_.expected, names), got};
  }

  Outcome algebra() {
    const auto names = split(c_.args[0], ',');
    const AlgebraTable t = table_for(names);
    if (!t.closed()) return {c_.expected == "not closed", "not closed"};
    const Solvability s = derived_series(t);
    std::vector<std::string> dims;
    for (int d : s.derived_series) dims.push_back(std::to_string(d));
    const std::string got = std::string("closed; ") + (s.solvable ? "solvable" : "not solvable") + "; " + join(dims, ",");
    return {words(got) == words(c_.expected), got};
  }

  OrderAdvice advice_for(AlgebraTable& t) {
    t = table_for(basis_for({c_.args[0], c_.args[1]}));
    const auto idx = [&](const std::string& n) {
      return static_cast<int>(std::find(t.names.begin(), t.names.end(), n) - t.names.begin());
    };
    return reduction_order_advice(t, idx(c_.args[0]), idx(c_.args[1]));
  }

  Outcome advice() {
    AlgebraTable t;
    const OrderAdvice a = advice_for(t);
    const std::string got = a.abelian ? "either" : t.names[a.first];
    return {got == c_.expected, got + " (" + a.text + ")"};
  }

  Outcome consistency() {
    AlgebraTable t;
    const OrderAdvice a = advice_for(t);
    const std::string& first = t.names[a.first];
    const std::string& second = t.names[a.second];
    const std::string stage = p_.field(first)->stage;
    std::vector<std::string> notes;
    bool agree = true;
    bool any = false;
    // reduce by `by`, classify `other`
    auto probe = [&](const std::string& by, const std::string& other, Verdict predicted) {
      for (const auto& ch : ws_.charts_for(by)) {
        if (p_.stage(ch)->after != stage) continue;
        any = true;
        const Classification cl = classify_pushforward(ws_.field(other), ws_.chart(ch), ws_.aux_defs(ch),
                                                       ws_.reduced(ch), cfg_);
        notes.push_back(other + " via " + ch + ": " + verdict_name(cl.verdict) + ", predicted " +
                        verdict_name(predicted));
        if (cl.verdict != predicted) agree = false;
      }
    };
    probe(first, second, Verdict::point);
    probe(second, first, a.abelian ? Verdict::point : Verdict::nonlocal);
    if (!any) return {false, "no chart for either field"};
    const std::string word = agree ? "agree" : "disagree";
    return {word == c_.expected, word + " (" + join(notes, "; ") + ")"};
  }

  Outcome connection() {
    const SolutionDef& s = *p_.solution(c_.args[0]);
    std::optional<Candidate> parent, red;
    if (s.parent) parent = candidate(*s.parent);
    if (s.reduced) red = candidate(*s.reduced);
    const ConnectionCheck cc = verify_connection(ws_.reduced(s.stage), parent, red, s.antiderivative, {0, 1, -2}, cfg_);
    std::vector<std::string> bad;
    for (const auto& n : cc.notes) {
      if (n.size() < 2 || n.compare(n.size() - 2, 2, "ok") != 0) bad.push_back(n);
    }
    const std::string got = cc.ok ? "pass" : "fail: " + join(bad, "; ");
    return {(cc.ok ? "pass" : "fail") == c_.expected, got};
  }
};

}  // namespace

std::string to_json(const Record& r) {
  nlohmann::ordered_json j;
  j["problem"] = r.problem;
  j["operation"] = r.operation;
  j["verdict"] = r.verdict;
  j["computed"] = r.computed;
  j["expected"] = r.expected;
  j["wall_ms"] = r.wall_ms;
  return j.dump();
}

Workspace::Workspace(const Problem& problem, SampleConfig config) : problem_(problem), config_(config) {}

DESystem Workspace::parent() const { return DESystem(problem_.space, problem_.equations); }

VectorField Workspace::field(const std::string& name) {
  const FieldDef* f = problem_.field(name);
  if (!f) throw PreconditionError("unknown field '" + name + "'");
  const JetSpace space = f->stage.empty() ? problem_.space : reduced(f->stage).system.space();
  std::map<std::string, Expr> coef;
  for (const auto& [n, e] : f->coefficients) coef[n] = e;
  std::vector<Expr> xi, eta;
  for (const auto& x : space.independent()) xi.push_back(coef.count(x) ? coef[x] : Expr(0));
  for (const auto& u : space.dependent()) eta.push_back(coef.count(u) ? coef[u] : Expr(0));
  return VectorField(space, xi, eta);
}

const DESystem& Workspace::source(const std::string& stage) {
  const StageDef* st = problem_.stage(stage);
  if (!st) throw PreconditionError("unknown stage '" + stage + "'");
  if (st->after.empty()) {
    if (!parent_) parent_ = parent();
    return *parent_;
  }
  return reduced(st->after).system;
}

const PointTransformation& Workspace::chart(const std::string& stage) {
  if (auto it = charts_.find(stage); it != charts_.end()) return it->second;
  const StageDef* st = problem_.stage(stage);
  if (!st || !st->chart) throw PreconditionError("'" + stage + "' is not a chart");
  const JetSpace& src = source(stage).space();
  int canonical = 0;
  while (st->target_dependent[canonical] != st->target) ++canonical;
  PointTransformation T = make_transformation(src, st->target_independent, st->target_dependent, st->forward,
                                              st->inverse, canonical);
  validate(T, config_);
  return charts_.emplace(stage, std::move(T)).first->second;
}

const DESystem& Workspace::transformed(const std::string& stage) {
  if (auto it = transformed_.find(stage); it != transformed_.end()) return it->second;
  DESystem t = transform_de(source(stage), chart(stage));
  return transformed_.emplace(stage, std::move(t)).first->second;
}

const ReducedSystem& Workspace::reduced(const std::string& stage) {
  if (auto it = reduced_.find(stage); it != reduced_.end()) return it->second;
  const StageDef* st = problem_.stage(stage);
  if (!st) throw PreconditionError("unknown stage '" + stage + "'");
  ReducedSystem r = st->chart ? reduce(transformed(stage), st->target, st->aux) : reduce(source(stage), st->target, st->aux);
  return reduced_.emplace(stage, std::move(r)).first->second;
}

std::vector<AuxDef> Workspace::aux_defs(const std::string& stage) {
  const StageDef* st = problem_.stage(stage);
  const PointTransformation& T = chart(stage);
  std::vector<AuxDef> out;
  for (std::size_t i = 0; i < st->aux.size(); ++i) out.push_back({st->aux[i], JetVar{T.canonical, {static_cast<int>(i)}}});
  return out;
}

std::vector<std::string> Workspace::charts_for(const std::string& field) const {
  std::vector<std::string> out;
  for (const auto& st : problem_.stages) {
    if (st.chart && st.field == field) out.push_back(st.name);
  }
  return out;
}

Record run_check(Workspace& ws, const CheckDef& check, bool timing) {
  Record r;
  r.problem = ws.problem().id;
  r.operation = check.label();
  r.expected = check.expected;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Runner run(ws, check);
    const Outcome o = run.run();
    r.computed = o.computed;
    if (o.pass) {
      r.verdict = check.conflict.empty() ? "pass" : "discrepancy-documented";
      if (!check.conflict.empty()) r.expected += " (stated: " + check.conflict + ")";
    } else {
      r.verdict = o.inconclusive ? "inconclusive" : "fail";
    }
  } catch (const std::exception& e) {
    r.verdict = "fail";
    r.computed = std::string("error: ") + e.what();
  }
  if (timing) {
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return r;
}

std::vector<Record> run_problem(const Problem& problem, const SampleConfig& config, bool timing) {
  Workspace ws(problem, config);
  std::vector<Record> out;
  for (const auto& c : problem.checks) out.push_back(run_check(ws, c, timing));
  return out;
}

std::vector<Record> run_corpus(const std::filesystem::path& directory, const CorpusOptions& options) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".prob") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::vector<Record>> results(files.size());
  const long n = static_cast<long>(files.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (long i = 0; i < n; ++i) {
    const auto& path = files[i];
    try {
      const Problem p = load_problem(path);
      if (!options.filter.empty() && p.id != options.filter && path.stem() != options.filter) continue;
      results[i] = run_problem(p, options.config, options.timing);
    } catch (const std::exception& e) {
      if (!options.filter.empty() && path.stem() != options.filter) continue;
      results[i].push_back(Record{path.stem().string(), "load", "fail", e.what(), "", 0});
    }
  }
  std::vector<Record> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

bool all_passed(const std::vector<Record>& records) {
  for (const auto& r : records) {
    if (r.verdict != "pass" && r.verdict != "discrepancy-documented") return false;
  }
  return true;
}

}  // namespace liereduce
