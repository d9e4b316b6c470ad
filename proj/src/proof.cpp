#include "nckit/proof.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nckit {

const Formula* AxiomSystem::axiom(const std::string& label) const {
  for (const auto& [l, f] : axioms)
    if (l == label) return &f;
  return nullptr;
}

namespace {

AxiomSystem make_system(std::string name,
                        std::vector<std::pair<std::string, std::string>> ax,
                        std::set<RuleKind> rules) {
  AxiomSystem sys;
  sys.name = std::move(name);
  for (auto& [label, text] : ax)
    sys.axioms.emplace_back(label, parse(text, Lang::Tri));
  sys.rules = std::move(rules);
  return sys;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

const std::vector<AxiomSystem>& builtin_systems() {
  static const std::vector<AxiomSystem> systems = [] {
    std::set<RuleKind> k_rules{RuleKind::Taut, RuleKind::US, RuleKind::MP,
                               RuleKind::R};
    std::vector<std::pair<std::string, std::string>> k_ax = {
        {"#T", "#true"},
        {"#!", "#!p <-> #p"},
        {"#&", "#p & #q -> #(p & q)"}};
    auto extend = [&](std::vector<std::pair<std::string, std::string>> more) {
      auto ax = k_ax;
      ax.insert(ax.end(), more.begin(), more.end());
      return ax;
    };
    std::vector<AxiomSystem> out;
    out.push_back(make_system("K", k_ax, k_rules));
    out.push_back(make_system("K4", extend({{"#4", "#p -> ##p"}}), k_rules));
    out.push_back(
        make_system("KB", extend({{"#B", "p -> #(#p -> p)"}}), k_rules));
    out.push_back(make_system(
        "KB5", extend({{"#B", "p -> #(#p -> p)"}, {"#5", "!#p -> #!#p"}}),
        k_rules));
    out.push_back(make_system(
        "KB5'",
        extend({{"#B", "p -> #(#p -> p)"}, {"#5'", "p & !#p -> #(p & #p)"}}),
        k_rules));
    out.push_back(make_system(
        "LA",
        {{"A1", "#p -> #!p"},
         {"A2", "#p & ~(p | q) -> ~q"},
         {"A3", "#p -> (p & #(p | q)) | (!p & #(!p | r))"}},
        {RuleKind::Taut, RuleKind::MP, RuleKind::RTri, RuleKind::RE}));
    return out;
  }();
  return systems;
}

const AxiomSystem* system_by_name(const std::string& name) {
  std::string n = lower(name);
  if (n == "kb5p" || n == "kb5prime") n = "kb5'";
  for (const AxiomSystem& sys : builtin_systems())
    if (lower(sys.name) == n) return &sys;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Tautology instances

namespace {

// Propositional skeleton: maximal subformulas rooted at a modality become
// shared variables; Top, Not and And keep their structure.
struct Skeleton {
  std::vector<Formula> units;  // distinct abstraction units, in order met
  std::map<Formula, int> ids;

  int unit_id(const Formula& f) {
    auto it = ids.find(f);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(units.size());
    units.push_back(f);
    ids.emplace(f, id);
    return id;
  }
};

bool eval_skeleton(const Formula& f, Skeleton& sk, std::uint32_t assignment) {
  switch (f.conn()) {
    case Conn::Top: return true;
    case Conn::Not: return !eval_skeleton(f.left(), sk, assignment);
    case Conn::And:
      return eval_skeleton(f.left(), sk, assignment) &&
             eval_skeleton(f.right(), sk, assignment);
    default: return assignment >> sk.unit_id(f) & 1;
  }
}

void collect_units(const Formula& f, Skeleton& sk) {
  switch (f.conn()) {
    case Conn::Top: return;
    case Conn::Not: collect_units(f.left(), sk); return;
    case Conn::And:
      collect_units(f.left(), sk);
      collect_units(f.right(), sk);
      return;
    default: sk.unit_id(f); return;
  }
}

}  // namespace

bool tautology_instance(const Formula& f) {
  Skeleton sk;
  collect_units(f, sk);
  if (sk.units.size() > 24)
    throw std::invalid_argument(
        "tautology check limited to 24 distinct propositional components");
  std::uint32_t count = 1u << sk.units.size();
  for (std::uint32_t a = 0; a < count; ++a)
    if (!eval_skeleton(f, sk, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Schema matching

namespace {

bool match(const Formula& schema, const Formula& candidate, Subst& out) {
  switch (schema.conn()) {
    case Conn::Atom: {
      auto it = out.find(schema.atom_name());
      if (it == out.end()) {
        out.emplace(schema.atom_name(), candidate);
        return true;
      }
      return it->second == candidate;
    }
    case Conn::Top: return candidate.is(Conn::Top);
    case Conn::Not:
      return candidate.is(Conn::Not) &&
             match(schema.left(), candidate.left(), out);
    case Conn::And:
      return candidate.is(Conn::And) &&
             match(schema.left(), candidate.left(), out) &&
             match(schema.right(), candidate.right(), out);
    default:
      return candidate.conn() == schema.conn() &&
             match(schema.left(), candidate.left(), out);
  }
}

}  // namespace

std::optional<Subst> axiom_instance(const Formula& schema,
                                    const Formula& candidate) {
  Subst out;
  if (match(schema, candidate, out)) return out;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Script parsing

namespace {

struct Cursor {
  const std::string& s;
  std::size_t at = 0;

  void skip_ws() {
    while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at])))
      ++at;
  }
  bool done() {
    skip_ws();
    return at >= s.size();
  }
};

// Splits "TAUT(1, 2)" into name and raw argument strings. Arguments never
// contain commas: references are integers and formulas have no comma syntax.
void split_rule(const std::string& text, std::size_t line_pos,
                std::string& name, std::vector<std::string>& args) {
  std::size_t i = 0;
  while (i < text.size() && text[i] != '(') ++i;
  name = text.substr(0, i);
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
    name.pop_back();
  if (i == text.size()) return;
  std::size_t close = text.rfind(')');
  if (close == std::string::npos || close < i)
    throw SyntaxError("unterminated rule argument list", line_pos);
  std::string inner = text.substr(i + 1, close - i - 1);
  std::size_t rest = close + 1;
  while (rest < text.size()) {
    if (!std::isspace(static_cast<unsigned char>(text[rest])))
      throw SyntaxError("unexpected text after rule arguments", line_pos);
    ++rest;
  }
  std::stringstream ss(inner);
  std::string piece;
  while (std::getline(ss, piece, ',')) args.push_back(piece);
  if (!args.empty() && args.back().find_first_not_of(" \t") ==
                           std::string::npos)
    throw SyntaxError("trailing comma in rule arguments", line_pos);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_ref(const std::string& arg, int& out) {
  std::string t = trim(arg);
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  out = std::stoi(t);
  return true;
}

bool parse_binding(const std::string& arg, std::string& atom,
                   std::string& formula_text) {
  std::size_t pos = arg.find(":=");
  if (pos == std::string::npos) return false;
  atom = trim(arg.substr(0, pos));
  formula_text = trim(arg.substr(pos + 2));
  return !atom.empty() && !formula_text.empty();
}

Justification parse_justification(const std::string& text,
                                  std::size_t line_pos) {
  std::string name;
  std::vector<std::string> args;
  split_rule(trim(text), line_pos, name, args);
  std::string uname = name;
  std::transform(uname.begin(), uname.end(), uname.begin(),
                 [](unsigned char c) { return std::toupper(c); });

  Justification j;
  auto want_refs = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw SyntaxError("rule " + uname + " takes between " +
                            std::to_string(lo) + " and " + std::to_string(hi) +
                            " line references",
                        line_pos);
    for (const std::string& a : args) {
      int r;
      if (!parse_ref(a, r))
        throw SyntaxError("rule " + uname + ": bad line reference '" +
                              trim(a) + "'",
                          line_pos);
      j.refs.push_back(r);
    }
  };

  if (uname == "PREMISE") {
    j.kind = Justification::Kind::Premise;
    if (!args.empty())
      throw SyntaxError("PREMISE takes no arguments", line_pos);
  } else if (uname == "TAUT") {
    j.kind = Justification::Kind::Taut;
    want_refs(0, 16);
  } else if (uname == "MP") {
    j.kind = Justification::Kind::MP;
    want_refs(2, 2);
  } else if (uname == "R") {
    j.kind = Justification::Kind::R;
    want_refs(1, 1);
  } else if (uname == "RTRI" || uname == "R#") {
    j.kind = Justification::Kind::RTri;
    want_refs(1, 1);
  } else if (uname == "RE") {
    j.kind = Justification::Kind::RE;
    want_refs(1, 1);
  } else if (uname == "US" || uname == "AX") {
    j.kind = uname == "US" ? Justification::Kind::US
                           : Justification::Kind::Axiom;
    std::size_t first_binding = 0;
    if (uname == "US") {
      int r;
      if (args.empty() || !parse_ref(args[0], r))
        throw SyntaxError("US needs a line reference first", line_pos);
      j.refs.push_back(r);
      first_binding = 1;
    } else {
      if (args.empty())
        throw SyntaxError("AX needs an axiom label first", line_pos);
      j.axiom_label = trim(args[0]);
      first_binding = 1;
    }
    for (std::size_t i = first_binding; i < args.size(); ++i) {
      std::string atom, ftext;
      if (!parse_binding(args[i], atom, ftext))
        throw SyntaxError("expected 'atom := formula', got '" + trim(args[i]) +
                              "'",
                          line_pos);
      if (!valid_atom_name(atom))
        throw SyntaxError("bad atom in substitution: '" + atom + "'",
                          line_pos);
      if (j.subst.count(atom))
        throw SyntaxError("atom '" + atom + "' bound twice", line_pos);
      j.subst.emplace(atom, parse(ftext, Lang::Tri));
    }
  } else {
    throw SyntaxError("unknown rule '" + name + "'", line_pos);
  }
  return j;
}

}  // namespace

ProofScript parse_script(const std::string& text) {
  ProofScript script;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool have_system = false;
  int last_index = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t comment = raw.find("//");
    if (comment != std::string::npos) raw = raw.substr(0, comment);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (!have_system) {
      std::istringstream hs(line);
      std::string kw, name, extra;
      hs >> kw >> name;
      if (lower(kw) == "system:" || lower(kw) == "system") {
        if (name.empty() || (hs >> extra))
          throw SyntaxError("expected 'system <name>'", line_no);
        if (!system_by_name(name))
          throw SyntaxError("unknown system '" + name + "'", line_no);
        script.system = system_by_name(name)->name;
        have_system = true;
        continue;
      }
      throw SyntaxError("script must start with 'system <name>'", line_no);
    }
    std::size_t dot = line.find('.');
    if (dot == std::string::npos)
      throw SyntaxError("expected '<index>. <formula> ; <rule>'", line_no);
    std::string idx_text = trim(line.substr(0, dot));
    int idx;
    if (!parse_ref(idx_text, idx))
      throw SyntaxError("bad line index '" + idx_text + "'", line_no);
    if (idx <= last_index)
      throw SyntaxError("line indices must increase: " + std::to_string(idx) +
                            " after " + std::to_string(last_index),
                        line_no);
    last_index = idx;
    std::size_t semi = line.find(';', dot + 1);
    if (semi == std::string::npos)
      throw SyntaxError("missing '; <rule>' part", line_no);
    std::string ftext = trim(line.substr(dot + 1, semi - dot - 1));
    if (ftext.empty()) throw SyntaxError("missing formula", line_no);
    Formula f = [&] {
      try {
        return parse(ftext, Lang::Tri);
      } catch (const SyntaxError& e) {
        throw SyntaxError(
            "line " + std::to_string(line_no) + ": " + e.what(), line_no);
      }
    }();
    Justification j =
        parse_justification(line.substr(semi + 1), line_no);
    script.lines.push_back({idx, std::move(f), std::move(j)});
  }
  if (!have_system)
    throw SyntaxError("script must start with 'system <name>'", line_no);
  return script;
}

// ---------------------------------------------------------------------------
// Checking

namespace {

struct Deconstructed {
  const Formula* a = nullptr;
  const Formula* b = nullptr;
};

// a -> b is stored as !(a & !b).
std::optional<Deconstructed> as_implication(const Formula& f) {
  if (!f.is(Conn::Not) || !f.left().is(Conn::And)) return std::nullopt;
  const Formula& conj = f.left();
  if (!conj.right().is(Conn::Not)) return std::nullopt;
  return Deconstructed{&conj.left(), &conj.right().left()};
}

// a <-> b is stored as (a -> b) & (b -> a).
std::optional<Deconstructed> as_iff(const Formula& f) {
  if (!f.is(Conn::And)) return std::nullopt;
  auto fwd = as_implication(f.left());
  auto bwd = as_implication(f.right());
  if (!fwd || !bwd) return std::nullopt;
  if (!(*fwd->a == *bwd->b) || !(*fwd->b == *bwd->a)) return std::nullopt;
  return Deconstructed{fwd->a, fwd->b};
}

struct CheckState {
  const AxiomSystem* sys;
  std::map<int, std::size_t> by_index;
  std::vector<bool> premise_dependent;
};

LineResult check_one(const ProofScript& script, std::size_t ln,
                     CheckState& st) {
  const ProofLine& line = script.lines[ln];
  auto reject = [&](const std::string& why) {
    return LineResult{line.index, false, why};
  };
  auto accept = [&](bool dep) {
    st.premise_dependent[ln] = dep;
    return LineResult{line.index, true, ""};
  };
  auto expected_vs = [&](const Formula& expected) {
    return "expected '" + render(expected) + "', got '" +
           render(line.formula) + "'";
  };

  const Justification& j = line.just;

  // Resolve references to earlier lines first.
  std::vector<std::size_t> refs;
  for (int r : j.refs) {
    auto it = st.by_index.find(r);
    if (it == st.by_index.end() || it->second >= ln)
      return reject("reference to line " + std::to_string(r) +
                    " which is not an earlier line");
    refs.push_back(it->second);
  }
  auto dep_on_refs = [&] {
    for (std::size_t r : refs)
      if (st.premise_dependent[r]) return true;
    return false;
  };
  auto need_rule = [&](RuleKind r, const char* rname) -> std::optional<LineResult> {
    if (!st.sys->has_rule(r))
      return reject(std::string("rule ") + rname + " is not part of system " +
                    st.sys->name);
    return std::nullopt;
  };
  auto need_arity = [&](std::size_t k) -> std::optional<LineResult> {
    if (refs.size() != k)
      return reject("justification needs exactly " + std::to_string(k) +
                    " line reference(s)");
    return std::nullopt;
  };

  switch (j.kind) {
    case Justification::Kind::Premise:
      return accept(true);

    case Justification::Kind::Taut: {
      if (auto r = need_rule(RuleKind::Taut, "TAUT")) return *r;
      Formula goal = line.formula;
      if (!refs.empty()) {
        Formula antecedent = script.lines[refs[0]].formula;
        for (std::size_t i = 1; i < refs.size(); ++i)
          antecedent =
              Formula::conj(antecedent, script.lines[refs[i]].formula);
        goal = Formula::impl(antecedent, line.formula);
      }
      if (!tautology_instance(goal))
        return reject(refs.empty()
                          ? "not an instance of a propositional tautology"
                          : "not a propositional consequence of the cited "
                            "lines");
      return accept(dep_on_refs());
    }

    case Justification::Kind::Axiom: {
      const Formula* schema = st.sys->axiom(j.axiom_label);
      if (!schema)
        return reject("axiom '" + j.axiom_label + "' is not part of system " +
                      st.sys->name);
      if (j.subst.empty()) {
        if (!axiom_instance(*schema, line.formula))
          return reject("not an instance of axiom " + j.axiom_label + " (" +
                        render(*schema) + ")");
      } else {
        Formula expected = substitute(*schema, j.subst);
        if (!(expected == line.formula)) return reject(expected_vs(expected));
      }
      return accept(false);
    }

    case Justification::Kind::MP: {
      if (auto r = need_rule(RuleKind::MP, "MP")) return *r;
      if (auto r = need_arity(2)) return *r;
      Formula expected =
          Formula::impl(script.lines[refs[0]].formula, line.formula);
      if (!(script.lines[refs[1]].formula == expected))
        return reject("line " + std::to_string(j.refs[1]) + " is not '" +
                      render(expected) + "'");
      return accept(dep_on_refs());
    }

    case Justification::Kind::US: {
      if (auto r = need_rule(RuleKind::US, "US")) return *r;
      if (auto r = need_arity(1)) return *r;
      if (st.premise_dependent[refs[0]])
        return reject("US applies to premise-free lines only");
      Formula expected = substitute(script.lines[refs[0]].formula, j.subst);
      if (!(expected == line.formula)) return reject(expected_vs(expected));
      return accept(false);
    }

    case Justification::Kind::R: {
      if (auto r = need_rule(RuleKind::R, "R")) return *r;
      if (auto r = need_arity(1)) return *r;
      if (st.premise_dependent[refs[0]])
        return reject("R applies to premise-free lines only");
      auto imp = as_implication(script.lines[refs[0]].formula);
      if (!imp)
        return reject("line " + std::to_string(j.refs[0]) +
                      " is not an implication");
      Formula expected =
          Formula::impl(Formula::conj(Formula::tri(*imp->a), *imp->a),
                        Formula::tri(*imp->b));
      if (!(expected == line.formula)) return reject(expected_vs(expected));
      return accept(false);
    }

    case Justification::Kind::RTri: {
      if (auto r = need_rule(RuleKind::RTri, "RTRI")) return *r;
      if (auto r = need_arity(1)) return *r;
      if (st.premise_dependent[refs[0]])
        return reject("RTRI applies to premise-free lines only");
      Formula expected = Formula::tri(script.lines[refs[0]].formula);
      if (!(expected == line.formula)) return reject(expected_vs(expected));
      return accept(false);
    }

    case Justification::Kind::RE: {
      if (auto r = need_rule(RuleKind::RE, "RE")) return *r;
      if (auto r = need_arity(1)) return *r;
      if (st.premise_dependent[refs[0]])
        return reject("RE applies to premise-free lines only");
      auto eq = as_iff(script.lines[refs[0]].formula);
      if (!eq)
        return reject("line " + std::to_string(j.refs[0]) +
                      " is not a biconditional");
      Formula expected =
          Formula::iff(Formula::tri(*eq->a), Formula::tri(*eq->b));
      if (!(expected == line.formula)) return reject(expected_vs(expected));
      return accept(false);
    }
  }
  return reject("unknown justification");
}

CheckState make_state(const ProofScript& script) {
  CheckState st;
  st.sys = system_by_name(script.system);
  if (!st.sys)
    throw std::invalid_argument("unknown system: " + script.system);
  for (std::size_t i = 0; i < script.lines.size(); ++i)
    st.by_index.emplace(script.lines[i].index, i);
  st.premise_dependent.assign(script.lines.size(), false);
  return st;
}

}  // namespace

LineResult check_line(const ProofScript& script, std::size_t line_number) {
  if (line_number >= script.lines.size())
    throw std::out_of_range("no such proof line");
  CheckState st = make_state(script);
  LineResult last{0, false, ""};
  for (std::size_t i = 0; i <= line_number; ++i)
    last = check_one(script, i, st);
  return last;
}

ProofReport check_script(const ProofScript& script) {
  CheckState st = make_state(script);
  ProofReport report{true, {}, {}};
  for (std::size_t i = 0; i < script.lines.size(); ++i) {
    LineResult r = check_one(script, i, st);
    if (!r.ok) report.ok = false;
    report.lines.push_back(std::move(r));
  }
  if (report.ok)
    for (std::size_t i = 0; i < script.lines.size(); ++i)
      if (!st.premise_dependent[i])
        report.theorems.push_back(script.lines[i].formula);
  return report;
}

}  // namespace nckit
