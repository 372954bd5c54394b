#include "liereduce/problem.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "liereduce/errors.hpp"
#include "liereduce/reduction.hpp"

namespace liereduce {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Line {
  int number;
  std::string text;
};

struct Section {
  std::string kind;
  std::string arg;
  int line = 0;
  std::vector<Line> lines;
  std::map<std::string, Line> keys;
};

[[noreturn]] void fail(int line, const std::string& what) { throw ParseError(what, static_cast<std::size_t>(line)); }

const std::set<std::string> keyed = {"problem", "space", "chart", "reduction", "solution", "symmetries", "fields"};
const std::set<std::string> known = {"problem", "space",     "equations", "symmetries", "fields",
                                     "chart",   "reduction", "solution",  "checks"};

std::vector<Section> sections(const std::string& text) {
  std::vector<Section> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(n, "unterminated section header");
      const auto w = words(s.substr(1, s.size() - 2));
      if (w.empty() || w.size() > 2) fail(n, "bad section header");
      if (!known.count(w[0])) fail(n, "unknown section '" + w[0] + "'");
      Section sec;
      sec.kind = w[0];
      sec.arg = w.size() == 2 ? w[1] : "";
      sec.line = n;
      out.push_back(std::move(sec));
      continue;
    }
    if (out.empty()) fail(n, "text before the first section");
    Section& sec = out.back();
    if (keyed.count(sec.kind)) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) fail(n, "expected 'key = value'");
      const std::string key = trim(s.substr(0, eq));
      if (key.empty()) fail(n, "empty key");
      if (sec.keys.count(key)) fail(n, "duplicate key '" + key + "'");
      sec.keys[key] = Line{n, trim(s.substr(eq + 1))};
    }
    sec.lines.push_back(Line{n, s});
  }
  return out;
}

// Parses an expression, turning parse errors into line-numbered ones.
Expr parse_at(const JetSpace& space, const std::string& text, int line) {
  try {
    return space.parse(text);
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

NamedExprs named_at(const std::string& text, const JetSpace& space, int line) {
  try {
    return parse_named(text, space);
  } catch (const ParseError& e) {
    fail(line, e.what());
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

std::vector<std::string> base_names(const JetSpace& s) {
  std::vector<std::string> c = s.independent();
  c.insert(c.end(), s.dependent().begin(), s.dependent().end());
  return c;
}

void check_coordinates(const NamedExprs& named, const JetSpace& space, int line) {
  const auto names = base_names(space);
  std::set<std::string> seen;
  for (const auto& [n, e] : named) {
    if (std::find(names.begin(), names.end(), n) == names.end()) fail(line, "'" + n + "' is not a coordinate");
    if (!seen.insert(n).second) fail(line, "coordinate '" + n + "' given twice");
    for (const auto& v : space.jets_in(e)) {
      if (v.order() > 0) fail(line, "coefficient uses the derivative '" + space.jet_name(v) + "'");
    }
  }
}

// Space whose names include the canonical coordinate next to the reduced ones.
JetSpace pushforward_space(const StageDef& st) {
  std::vector<std::string> dep = st.reduced.dependent();
  dep.push_back(st.target);
  return JetSpace(st.reduced.independent(), dep, st.reduced.order(), st.reduced.parameters());
}

const std::set<std::string> ops = {"prolong",  "check-symmetry", "canonical-verify", "transform",
                                   "reduce",   "integrability-count", "pushforward",  "classify",
                                   "lift-test", "commutator",    "algebra",          "advice",
                                   "consistency", "connection"};

void validate_check(const Problem& p, const CheckDef& c) {
  auto need = [&](std::size_t n) {
    if (c.args.size() != n) fail(c.line, "'" + c.op + "' takes " + std::to_string(n) + " argument(s)");
  };
  auto field = [&](const std::string& n) -> const FieldDef& {
    const FieldDef* f = p.field(n);
    if (!f) fail(c.line, "unknown field '" + n + "'");
    return *f;
  };
  auto stage = [&](const std::string& n) -> const StageDef& {
    const StageDef* s = p.stage(n);
    if (!s) fail(c.line, "unknown stage '" + n + "'");
    return *s;
  };
  auto chart = [&](const std::string& n) -> const StageDef& {
    const StageDef& s = stage(n);
    if (!s.chart) fail(c.line, "'" + n + "' is not a chart");
    return s;
  };
  auto exprs = [&](const JetSpace& space) {
    for (const auto& e : split(c.expected, ';')) parse_at(space, e, c.line);
  };
  if (c.op == "prolong") {
    need(2);
    const FieldDef& f = field(c.args[0]);
    try {
      if (std::stoi(c.args[1]) < 1) throw std::invalid_argument("order");
    } catch (const std::exception&) {
      fail(c.line, "prolongation order must be a positive integer");
    }
    for (const auto& part : split(c.expected, ';')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) fail(c.line, "expected 'jet = expression'");
      if (!p.space_of(f).resolve(trim(part.substr(0, eq)))) fail(c.line, "unknown jet '" + trim(part.substr(0, eq)) + "'");
      parse_at(p.space_of(f), trim(part.substr(eq + 1)), c.line);
    }
  } else if (c.op == "check-symmetry") {
    need(1);
    const FieldDef& f = field(c.args[0]);
    const auto colon = c.expected.find(':');
    const std::string word = trim(c.expected.substr(0, colon));
    if (word != "symmetry" && word != "not-symmetry") fail(c.line, "expected 'symmetry' or 'not-symmetry'");
    if (colon != std::string::npos) {
      for (const auto& e : split(c.expected.substr(colon + 1), ';')) parse_at(p.space_of(f), e, c.line);
    }
  } else if (c.op == "canonical-verify") {
    need(1);
    const StageDef& s = chart(c.args[0]);
    if (s.field.empty()) fail(c.line, "chart '" + s.name + "' names no field");
  } else if (c.op == "transform") {
    need(1);
    exprs(chart(c.args[0]).chart_space);
  } else if (c.op == "reduce") {
    need(1);
    exprs(stage(c.args[0]).reduced);
  } else if (c.op == "integrability-count") {
    need(1);
    stage(c.args[0]);
  } else if (c.op == "pushforward" || c.op == "classify") {
    need(2);
    const FieldDef& f = field(c.args[0]);
    const StageDef& s = chart(c.args[1]);
    if (f.stage != s.after) fail(c.line, "field and chart start from different spaces");
    if (c.op == "pushforward") {
      const JetSpace ps = pushforward_space(s);
      const NamedExprs named = named_at(c.expected, ps, c.line);
      (void)named;
    } else {
      const auto w = words(c.expected);
      if (w.empty() || (w[0] != "point" && w[0] != "nonlocal" && w[0] != "inconclusive")) {
        fail(c.line, "expected point, nonlocal or inconclusive");
      }
    }
  } else if (c.op == "lift-test") {
    need(1);
    if (field(c.args[0]).stage.empty()) fail(c.line, "lift-test needs a field on a reduced space");
  } else if (c.op == "commutator" || c.op == "advice" || c.op == "consistency") {
    need(2);
    const FieldDef& a = field(c.args[0]);
    const FieldDef& b = field(c.args[1]);
    if (a.stage != b.stage) fail(c.line, "fields live on different spaces");
  } else if (c.op == "algebra") {
    need(1);
    std::string stage0;
    const auto names = split(c.args[0], ',');
    for (std::size_t k = 0; k < names.size(); ++k) {
      const FieldDef& f = field(names[k]);
      if (k == 0) stage0 = f.stage;
      if (f.stage != stage0) fail(c.line, "fields live on different spaces");
    }
  } else if (c.op == "connection") {
    need(1);
    if (!p.solution(c.args[0])) fail(c.line, "unknown solution '" + c.args[0] + "'");
  }
}

}  // namespace

std::string CheckDef::label() const {
  std::string s = op;
  for (const auto& a : args) s += " " + a;
  return s;
}

int Problem::symmetry_count() const {
  return static_cast<int>(std::count_if(fields.begin(), fields.end(), [](const FieldDef& f) { return f.symmetry; }));
}

const FieldDef* Problem::field(const std::string& name) const {
  for (const auto& f : fields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const StageDef* Problem::stage(const std::string& name) const {
  for (const auto& s : stages) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const SolutionDef* Problem::solution(const std::string& name) const {
  for (const auto& s : solutions) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const JetSpace& Problem::space_of(const FieldDef& f) const {
  return f.stage.empty() ? space : stage(f.stage)->reduced;
}

NamedExprs parse_named(const std::string& text, const JetSpace& space) {
  NamedExprs out;
  for (const auto& part : split(text, ';')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'name: expression' in '" + part + "'", 0);
    out.emplace_back(trim(part.substr(0, colon)), space.parse(trim(part.substr(colon + 1))));
  }
  return out;
}

Problem parse_problem(const std::string& text, const std::string& origin) {
  Problem p;
  p.path = origin;
  const auto secs = sections(text);
  auto find = [&](const std::string& kind) -> const Section* {
    const Section* hit = nullptr;
    for (const auto& s : secs) {
      if (s.kind != kind) continue;
      if (hit) fail(s.line, "duplicate [" + kind + "] section");
      hit = &s;
    }
    return hit;
  };
  auto require = [&](const Section& s, const std::string& key) -> const Line& {
    auto it = s.keys.find(key);
    if (it == s.keys.end()) fail(s.line, "[" + s.kind + "] needs '" + key + "'");
    return it->second;
  };
  auto allow = [&](const Section& s, std::set<std::string> keys) {
    for (const auto& [k, l] : s.keys) {
      if (!keys.count(k)) fail(l.number, "unknown key '" + k + "' in [" + s.kind + "]");
    }
  };

  const Section* meta = find("problem");
  if (!meta) fail(1, "missing [problem] section");
  allow(*meta, {"id", "about"});
  p.id = require(*meta, "id").text;
  if (meta->keys.count("about")) p.about = meta->keys.at("about").text;

  const Section* sp = find("space");
  if (!sp) fail(1, "missing [space] section");
  allow(*sp, {"independent", "dependent", "order", "parameters"});
  const auto indep = split(require(*sp, "independent").text, ',');
  const auto dep = split(require(*sp, "dependent").text, ',');
  std::vector<std::string> params;
  if (sp->keys.count("parameters")) params = split(sp->keys.at("parameters").text, ',');
  int order = 2;
  if (sp->keys.count("order")) {
    try {
      order = std::stoi(sp->keys.at("order").text);
    } catch (const std::exception&) {
      fail(sp->keys.at("order").number, "order must be an integer");
    }
  }
  if (indep.empty() || dep.empty()) fail(sp->line, "need independent and dependent variables");
  try {
    p.space = JetSpace(indep, dep, order, params);
  } catch (const Error& e) {
    fail(sp->line, e.what());
  }

  const Section* eqs = find("equations");
  if (!eqs || eqs->lines.empty()) fail(eqs ? eqs->line : 1, "no equations");
  for (const auto& l : eqs->lines) p.equations.push_back(parse_at(p.space, l.text, l.number));

  std::set<std::string> names;
  auto claim = [&](const std::string& n, int line) {
    if (n.empty()) fail(line, "empty name");
    if (!names.insert(n).second) fail(line, "name '" + n + "' is declared twice");
  };

  // stages first: fields and solutions may live on their spaces
  for (const auto& s : secs) {
    if (s.kind != "chart" && s.kind != "reduction") continue;
    StageDef st;
    st.name = s.arg;
    st.line = s.line;
    st.chart = s.kind == "chart";
    claim(st.name, s.line);
    if (s.keys.count("after")) {
      st.after = s.keys.at("after").text;
      const StageDef* prev = p.stage(st.after);
      if (!prev) fail(s.keys.at("after").number, "unknown stage '" + st.after + "'");
      st.source = prev->reduced;
    } else {
      st.source = p.space;
    }
    const JetSpace& src = st.source;
    if (st.chart) {
      allow(s, {"after", "field", "forward", "inverse", "aux", "canonical"});
      if (s.keys.count("field")) st.field = s.keys.at("field").text;
      const Line& fw = require(s, "forward");
      const NamedExprs forward = named_at(fw.text, src, fw.number);
      if (static_cast<int>(forward.size()) != src.p() + src.m()) {
        fail(fw.number, "chart needs one expression per coordinate");
      }
      for (int i = 0; i < static_cast<int>(forward.size()); ++i) {
        (i < src.p() ? st.target_independent : st.target_dependent).push_back(forward[i].first);
        st.forward.push_back(forward[i].second);
      }
      try {
        st.chart_space = JetSpace(st.target_independent, st.target_dependent, src.order(), src.parameters());
      } catch (const Error& e) {
        fail(fw.number, e.what());
      }
      if (s.keys.count("inverse")) {
        const Line& iv = s.keys.at("inverse");
        const NamedExprs inv = named_at(iv.text, st.chart_space, iv.number);
        const auto want = base_names(src);
        if (inv.size() != want.size()) fail(iv.number, "inverse needs one expression per source coordinate");
        for (std::size_t i = 0; i < inv.size(); ++i) {
          if (inv[i].first != want[i]) fail(iv.number, "inverse must list '" + want[i] + "' in position " + std::to_string(i + 1));
          st.inverse.push_back(inv[i].second);
        }
      }
      st.target = st.target_dependent.front();
      if (s.keys.count("canonical")) {
        st.target = s.keys.at("canonical").text;
        if (std::find(st.target_dependent.begin(), st.target_dependent.end(), st.target) == st.target_dependent.end()) {
          fail(s.keys.at("canonical").number, "canonical coordinate must be a target dependent variable");
        }
      }
    } else {
      allow(s, {"after", "target", "aux"});
      st.target = src.dependent().front();
      if (s.keys.count("target")) st.target = s.keys.at("target").text;
      if (src.dependent_index(st.target) < 0) fail(s.line, "unknown dependent variable '" + st.target + "'");
    }
    const int p_ = st.chart ? static_cast<int>(st.target_independent.size()) : src.p();
    st.aux = s.keys.count("aux") ? split(s.keys.at("aux").text, ',') : default_aux_names(p_);
    if (static_cast<int>(st.aux.size()) != p_) fail(s.line, "need one auxiliary name per independent variable");
    std::vector<std::string> rdep = st.aux;
    const auto& deps = st.chart ? st.target_dependent : src.dependent();
    for (const auto& d : deps) {
      if (d != st.target) rdep.push_back(d);
    }
    try {
      st.reduced = JetSpace(st.chart ? st.target_independent : src.independent(), rdep,
                            std::max(0, src.order() - 1), src.parameters());
    } catch (const Error& e) {
      fail(s.line, e.what());
    }
    p.stages.push_back(std::move(st));
  }
  for (const auto& st : p.stages) {
    if (!st.field.empty()) {
      bool ok = false;
      for (const auto& s : secs) {
        if ((s.kind == "symmetries" || s.kind == "fields") && s.arg == st.after && s.keys.count(st.field)) ok = true;
      }
      if (!ok) fail(st.line, "chart field '" + st.field + "' is not declared on its source space");
    }
  }

  for (const auto& s : secs) {
    if (s.kind != "symmetries" && s.kind != "fields") continue;
    if (!s.arg.empty() && !p.stage(s.arg)) fail(s.line, "unknown stage '" + s.arg + "'");
    const JetSpace& space = s.arg.empty() ? p.space : p.stage(s.arg)->reduced;
    for (const auto& l : s.lines) {
      const auto eq = l.text.find('=');
      FieldDef f;
      f.name = trim(l.text.substr(0, eq));
      f.stage = s.arg;
      f.symmetry = s.kind == "symmetries";
      f.line = l.number;
      claim(f.name, l.number);
      f.coefficients = named_at(trim(l.text.substr(eq + 1)), space, l.number);
      check_coordinates(f.coefficients, space, l.number);
      p.fields.push_back(std::move(f));
    }
  }

  for (const auto& s : secs) {
    if (s.kind != "solution") continue;
    allow(s, {"stage", "parent", "reduced", "antiderivative"});
    SolutionDef sol;
    sol.name = s.arg;
    sol.line = s.line;
    claim(sol.name, s.line);
    sol.stage = require(s, "stage").text;
    const StageDef* st = p.stage(sol.stage);
    if (!st) fail(s.keys.at("stage").number, "unknown stage '" + sol.stage + "'");
    // the unreduced side lives where the stage eliminates its variable
    const JetSpace& full = st->chart ? st->chart_space : st->source;
    if (s.keys.count("parent")) sol.parent = named_at(s.keys.at("parent").text, full, s.keys.at("parent").number);
    if (s.keys.count("reduced")) {
      sol.reduced = named_at(s.keys.at("reduced").text, st->reduced, s.keys.at("reduced").number);
    }
    if (s.keys.count("antiderivative")) {
      const Line& l = s.keys.at("antiderivative");
      sol.antiderivative = parse_at(full, l.text, l.number);
    }
    if (!sol.parent && !sol.reduced) fail(s.line, "solution needs a parent or a reduced side");
    p.solutions.push_back(std::move(sol));
  }

  if (const Section* ch = find("checks")) {
    for (const auto& l : ch->lines) {
      CheckDef c;
      c.line = l.number;
      const auto arrow = l.text.find("=>");
      if (arrow == std::string::npos) fail(l.number, "expected 'operation arguments => expected'");
      const auto w = words(l.text.substr(0, arrow));
      if (w.empty()) fail(l.number, "missing operation");
      c.op = w[0];
      if (!ops.count(c.op)) fail(l.number, "unknown operation '" + c.op + "'");
      c.args.assign(w.begin() + 1, w.end());
      auto parts = split(l.text.substr(arrow + 2), '|');
      if (parts.empty()) fail(l.number, "missing expected value");
      c.expected = parts[0];
      c.origin = "derived";
      for (std::size_t k = 1; k < parts.size(); ++k) {
        const auto eq = parts[k].find('=');
        const std::string key = trim(parts[k].substr(0, eq));
        const std::string value = eq == std::string::npos ? "" : trim(parts[k].substr(eq + 1));
        if (key == "origin") {
          if (value != "stated" && value != "derived") fail(l.number, "origin is 'stated' or 'derived'");
          c.origin = value;
        } else if (key == "conflict") {
          c.conflict = value;
        } else {
          fail(l.number, "unknown check attribute '" + key + "'");
        }
      }
      validate_check(p, c);
      p.checks.push_back(std::move(c));
    }
  }
  return p;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path.string());
}

}  // namespace liereduce
