#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
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

using nlohmann::json;
using namespace nckit;

namespace {

// Exit codes: 0 affirmative/success, 1 negative answer, 2 usage or input
// error, 3 budget exceeded.
enum { ExitYes = 0, ExitNo = 1, ExitUsage = 2, ExitBudget = 3 };

struct Shared {
  bool as_json = false;
};

void emit(const Shared& sh, const json& j, const std::string& text) {
  if (sh.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

Lang lang_arg(const std::string& name) {
  auto l = lang_from_name(name);
  if (!l) throw CLI::ValidationError("--lang", "unknown language: " + name);
  return *l;
}

std::set<FrameProperty> class_arg(const std::string& list) {
  std::set<FrameProperty> out;
  if (list.empty()) return out;
  std::stringstream ss(list);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    auto p = frame_property_from_name(piece);
    if (!p)
      throw CLI::ValidationError("--class", "unknown frame property: " + piece);
    out.insert(*p);
  }
  return out;
}

std::vector<std::string> atoms_arg(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(piece);
  return out;
}

json valuation_to_json(const Valuation& v) {
  json out = json::object();
  for (const auto& [atom, ws] : v) out[atom] = ws;
  return out;
}

std::string valuation_to_text(const Valuation& v) {
  std::string out;
  for (const auto& [atom, ws] : v) {
    if (!out.empty()) out += ", ";
    out += atom + "={";
    bool first = true;
    for (const std::string& w : ws) {
      if (!first) out += ",";
      out += w;
      first = false;
    }
    out += "}";
  }
  return out.empty() ? "(empty)" : out;
}

// The world names a user gives for a two-model operation are resolved
// against the disjoint union: tagged names pass through, untagged names
// resolve via the side they are unique to.
std::string resolve_union_world(const DisjointUnion& u, const std::string& w,
                                std::optional<bool> left_side) {
  if (u.model.frame().has_world(w)) return w;
  bool in_left = u.left.count(w) > 0, in_right = u.right.count(w) > 0;
  if (left_side.has_value()) {
    if (*left_side && in_left) return u.left.at(w);
    if (!*left_side && in_right) return u.right.at(w);
    throw UnknownWorld(w);
  }
  if (in_left && in_right)
    throw std::invalid_argument("world '" + w +
                                "' exists in both models; use the ·L/"
                                "·R suffixed name");
  if (in_left) return u.left.at(w);
  if (in_right) return u.right.at(w);
  throw UnknownWorld(w);
}

int run(int argc, char** argv) {
  CLI::App app{"Toolkit for the modal logic of strong noncontingency"};
  app.require_subcommand(1);
  Shared sh;

  std::string formula_text, model_path, model2_path, frame_path, world_s,
      world_t, kind_name = "tri", lang_name_arg = "tri", class_list,
      atoms_list, to_target, proof_path, relation_path;
  std::vector<std::string> premises;
  std::uint64_t budget = kDefaultValuationBudget;
  std::uint64_t sat_budget = SatOptions{}.budget;
  int max_worlds = 4;

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", sh.as_json, "machine readable output");
  };

  // check
  auto* c_check = app.add_subcommand("check", "truth of a formula at a world");
  c_check->add_option("-f,--formula", formula_text)->required();
  c_check->add_option("-m,--model", model_path)->required();
  c_check->add_option("-w,--world", world_s)->required();
  add_json(c_check);
  c_check->callback([&] {
    Model m = load_model(model_path);
    Formula f = parse(formula_text);
    bool r = satisfies(m, world_s, f);
    emit(sh, {{"command", "check"}, {"world", world_s}, {"result", r}},
         r ? "true" : "false");
    std::exit(r ? ExitYes : ExitNo);
  });

  // valid-model
  auto* c_vm = app.add_subcommand("valid-model", "truth at every world");
  c_vm->add_option("-f,--formula", formula_text)->required();
  c_vm->add_option("-m,--model", model_path)->required();
  add_json(c_vm);
  c_vm->callback([&] {
    Model m = load_model(model_path);
    ModelValidity v = valid_on_model(m, parse(formula_text));
    json j{{"command", "valid-model"}, {"valid", v.valid}};
    std::string text = v.valid ? "valid" : "invalid at " + *v.counterexample_world;
    if (!v.valid) j["counterexample_world"] = *v.counterexample_world;
    emit(sh, j, text);
    std::exit(v.valid ? ExitYes : ExitNo);
  });

  // valid-frame
  auto* c_vf = app.add_subcommand("valid-frame",
                                  "truth under every valuation of the frame");
  c_vf->add_option("-f,--formula", formula_text)->required();
  c_vf->add_option("-F,--frame", frame_path)->required();
  c_vf->add_option("--budget", budget, "max valuations to enumerate");
  add_json(c_vf);
  c_vf->callback([&] {
    Frame fr = load_frame(frame_path);
    FrameValidity v = valid_on_frame(fr, parse(formula_text), budget);
    json j{{"command", "valid-frame"}, {"valid", v.valid}};
    std::string text = "valid";
    if (!v.valid) {
      j["counterexample"] = {
          {"valuation", valuation_to_json(v.counterexample->valuation)},
          {"world", v.counterexample->world}};
      text = "invalid: " + valuation_to_text(v.counterexample->valuation) +
             " at " + v.counterexample->world;
    }
    emit(sh, j, text);
    std::exit(v.valid ? ExitYes : ExitNo);
  });

  // entails
  auto* c_ent = app.add_subcommand(
      "entails", "local consequence over a frame: premises force conclusion");
  c_ent->add_option("-f,--formula", formula_text, "conclusion")->required();
  c_ent->add_option("-g,--premise", premises, "premise (repeatable)");
  c_ent->add_option("-F,--frame", frame_path)->required();
  c_ent->add_option("--budget", budget, "max valuations to enumerate");
  add_json(c_ent);
  c_ent->callback([&] {
    Frame fr = load_frame(frame_path);
    std::vector<Formula> gamma;
    for (const std::string& p : premises) gamma.push_back(parse(p));
    FrameValidity v = entails_on_frame(fr, gamma, parse(formula_text), budget);
    json j{{"command", "entails"}, {"entails", v.valid}};
    std::string text = "entailed";
    if (!v.valid) {
      j["counterexample"] = {
          {"valuation", valuation_to_json(v.counterexample->valuation)},
          {"world", v.counterexample->world}};
      text = "not entailed: " + valuation_to_text(v.counterexample->valuation) +
             " at " + v.counterexample->world;
    }
    emit(sh, j, text);
    std::exit(v.valid ? ExitYes : ExitNo);
  });

  // translate
  auto* c_tr = app.add_subcommand("translate", "rewrite between languages");
  c_tr->add_option("-f,--formula", formula_text)->required();
  c_tr->add_option("--to", to_target, "box | tri")->required();
  add_json(c_tr);
  c_tr->callback([&] {
    Formula f = parse(formula_text);
    Formula out = [&] {
      if (to_target == "box") return to_box(f);
      if (to_target == "tri") return to_blacktri(f);
      throw CLI::ValidationError("--to", "expected 'box' or 'tri'");
    }();
    emit(sh, {{"command", "translate"}, {"result", render(out)}}, render(out));
    std::exit(ExitYes);
  });

  // bisim
  auto* c_bi = app.add_subcommand(
      "bisim", "compute, query or check bisimulations");
  c_bi->add_option("-m,--model", model_path)->required();
  c_bi->add_option("-n,--other", model2_path, "second model (disjoint union)");
  c_bi->add_option("-w,--world", world_s, "world of -m");
  c_bi->add_option("-x,--other-world", world_t, "world of -n (or of -m)");
  c_bi->add_option("--kind", kind_name, "box | tri");
  c_bi->add_option("--relation", relation_path,
                   "check this relation file instead of computing");
  add_json(c_bi);
  c_bi->callback([&] {
    BisimKind kind;
    if (kind_name == "box") kind = BisimKind::Box;
    else if (kind_name == "tri") kind = BisimKind::Tri;
    else throw CLI::ValidationError("--kind", "expected 'box' or 'tri'");
    Model a = load_model(model_path);

    if (!relation_path.empty()) {
      std::ifstream in(relation_path);
      if (!in) throw std::runtime_error("cannot open file: " + relation_path);
      json jr;
      in >> jr;
      BisimRelation rel{kind, {}};
      if (jr.contains("kind")) {
        std::string k = jr["kind"].get<std::string>();
        if (k == "box") rel.kind = BisimKind::Box;
        else if (k == "tri") rel.kind = BisimKind::Tri;
        else throw std::invalid_argument("relation kind must be box or tri");
      }
      std::optional<DisjointUnion> u;
      const Model* target = &a;
      if (!model2_path.empty()) {
        u = disjoint_union(a, load_model(model2_path));
        target = &u->model;
      }
      for (const auto& e : jr.at("pairs")) {
        std::string l = e.at(0).get<std::string>(),
                    r = e.at(1).get<std::string>();
        if (u) {
          l = resolve_union_world(*u, l, std::nullopt);
          r = resolve_union_world(*u, r, std::nullopt);
        }
        rel.pairs.emplace_back(l, r);
      }
      BisimReport rep = check_bisimulation(*target, rel);
      json j{{"command", "bisim"},
             {"mode", "check"},
             {"kind", bisim_kind_name(rel.kind)},
             {"valid", rep.valid},
             {"violations", json::array()}};
      std::string text = rep.valid ? "valid " +
                                         std::string(bisim_kind_name(rel.kind)) +
                                         "-bisimulation"
                                   : "not a bisimulation:";
      for (const auto& v : rep.violations) {
        j["violations"].push_back({{"clause", v.clause},
                                   {"pair", {v.pair.first, v.pair.second}},
                                   {"detail", v.detail}});
        text += "\n  " + v.clause + " at (" + v.pair.first + ", " +
                v.pair.second + "): " + v.detail;
      }
      emit(sh, j, text);
      std::exit(rep.valid ? ExitYes : ExitNo);
    }

    if (model2_path.empty()) {
      // One model: compute the largest bisimulation on it.
      BisimRelation rel = largest_bisimulation(a, kind);
      json pairs = json::array();
      std::string text;
      for (const auto& [l, r] : rel.pairs) {
        pairs.push_back({l, r});
        text += (text.empty() ? "" : "\n") + ("(" + l + ", " + r + ")");
      }
      json j{{"command", "bisim"},
             {"mode", "largest"},
             {"kind", bisim_kind_name(kind)},
             {"pairs", pairs}};
      if (!world_s.empty() && !world_t.empty()) {
        bool rel_holds = false;
        for (const auto& [l, r] : rel.pairs)
          if (l == world_s && r == world_t) rel_holds = true;
        j["bisimilar"] = rel_holds;
        emit(sh, j, rel_holds ? "bisimilar" : "not bisimilar");
        std::exit(rel_holds ? ExitYes : ExitNo);
      }
      emit(sh, j, text.empty() ? "(empty)" : text);
      std::exit(ExitYes);
    }

    Model b = load_model(model2_path);
    LargestBisim lb = largest_bisimulation(a, b, kind);
    json pairs = json::array();
    for (const auto& [l, r] : lb.relation.pairs) pairs.push_back({l, r});
    json j{{"command", "bisim"},
           {"mode", "largest"},
           {"kind", bisim_kind_name(kind)},
           {"pairs", pairs}};
    if (!world_s.empty() && !world_t.empty()) {
      std::string l = resolve_union_world(lb.unio, world_s, true);
      std::string r = resolve_union_world(lb.unio, world_t, false);
      bool rel_holds = false;
      for (const auto& [x, y] : lb.relation.pairs)
        if (x == l && y == r) rel_holds = true;
      j["bisimilar"] = rel_holds;
      emit(sh, j, rel_holds ? "bisimilar" : "not bisimilar");
      std::exit(rel_holds ? ExitYes : ExitNo);
    }
    std::string text;
    for (const auto& [l, r] : lb.relation.pairs)
      text += (text.empty() ? "" : "\n") + ("(" + l + ", " + r + ")");
    emit(sh, j, text.empty() ? "(empty)" : text);
    std::exit(ExitYes);
  });

  // contract
  auto* c_con = app.add_subcommand("contract", "bisimulation contraction");
  c_con->add_option("-m,--model", model_path)->required();
  add_json(c_con);
  c_con->callback([&] {
    Model m = load_model(model_path);
    Contraction c = contract(m);
    json blocks = json::object();
    for (const auto& [w, b] : c.block_of) blocks[w] = b;
    json j{{"command", "contract"},
           {"model", model_to_json(c.model)},
           {"blocks", blocks}};
    emit(sh, j,
         model_to_json(c.model).dump(2) + "\nblocks: " + blocks.dump());
    std::exit(ExitYes);
  });

  // equiv
  auto* c_eq = app.add_subcommand(
      "equiv", "logical equivalence of two worlds in a sublanguage");
  c_eq->add_option("-m,--model", model_path)->required();
  c_eq->add_option("-n,--other", model2_path, "second model (disjoint union)");
  c_eq->add_option("-w,--world", world_s)->required();
  c_eq->add_option("-x,--other-world", world_t)->required();
  c_eq->add_option("--lang", lang_name_arg, "pl | box | delta | circ | tri | full");
  c_eq->add_option("--atoms", atoms_list, "comma list, default all atoms");
  add_json(c_eq);
  c_eq->callback([&] {
    Lang lang = lang_arg(lang_name_arg);
    Model a = load_model(model_path);
    std::optional<DisjointUnion> u;
    const Model* m = &a;
    std::string s = world_s, t = world_t;
    if (!model2_path.empty()) {
      u = disjoint_union(a, load_model(model2_path));
      m = &u->model;
      s = resolve_union_world(*u, world_s, true);
      t = resolve_union_world(*u, world_t, false);
    }
    std::vector<std::string> atoms =
        atoms_list.empty() ? m->atoms() : atoms_arg(atoms_list);
    auto sep = separating_formula(*m, s, t, atoms, lang);
    json j{{"command", "equiv"},
           {"lang", lang_name(lang)},
           {"equivalent", !sep.has_value()}};
    std::string text = "equivalent";
    if (sep) {
      j["separating_formula"] = render(*sep);
      text = "distinguished by " + render(*sep);
    }
    emit(sh, j, text);
    std::exit(sep ? ExitNo : ExitYes);
  });

  // prove
  auto* c_pr = app.add_subcommand("prove", "check a proof script");
  c_pr->add_option("-p,--proof", proof_path)->required();
  add_json(c_pr);
  c_pr->callback([&] {
    std::ifstream in(proof_path);
    if (!in) throw std::runtime_error("cannot open file: " + proof_path);
    std::stringstream buf;
    buf << in.rdbuf();
    ProofScript script = parse_script(buf.str());
    ProofReport rep = check_script(script);
    json lines = json::array();
    std::string text = rep.ok ? "all " + std::to_string(rep.lines.size()) +
                                    " lines check (" + script.system + ")"
                              : "rejected:";
    for (const auto& lr : rep.lines) {
      json l{{"index", lr.index}, {"ok", lr.ok}};
      if (!lr.ok) {
        l["reason"] = lr.reason;
        text += "\n  line " + std::to_string(lr.index) + ": " + lr.reason;
      }
      lines.push_back(std::move(l));
    }
    json j{{"command", "prove"},
           {"system", script.system},
           {"ok", rep.ok},
           {"lines", lines}};
    emit(sh, j, text);
    std::exit(rep.ok ? ExitYes : ExitNo);
  });

  // sat
  auto* c_sat = app.add_subcommand("sat", "bounded satisfiability search");
  c_sat->add_option("-f,--formula", formula_text)->required();
  c_sat->add_option("--class", class_list,
                    "required frame properties, comma separated "
                    "(e.g. reflexive,euclidean)");
  c_sat->add_option("--max-worlds", max_worlds);
  c_sat->add_option("--budget", sat_budget, "max candidates to test");
  add_json(c_sat);
  c_sat->callback([&] {
    SatOptions opt;
    opt.frame_class = class_arg(class_list);
    opt.max_worlds = max_worlds;
    opt.budget = sat_budget;
    SatResult r = satisfiable(parse(formula_text), opt);
    json j{{"command", "sat"},
           {"outcome", sat_outcome_name(r.outcome)},
           {"explored_bound", r.explored_bound},
           {"certification_bound", r.certification_bound}};
    std::string text;
    if (r.outcome == SatResult::Outcome::Sat) {
      j["model"] = model_to_json(*r.model);
      j["world"] = *r.world;
      text = "satisfiable at " + *r.world + " in\n" +
             model_to_json(*r.model).dump(2);
    } else if (r.outcome == SatResult::Outcome::UnsatUpTo) {
      text = "unsatisfiable in models with up to " +
             std::to_string(r.explored_bound) +
             (r.explored_bound == 1 ? " world" : " worlds");
    } else {
      text = "unsatisfiable (exhausted the finite model bound of " +
             std::to_string(r.certification_bound) +
             (r.certification_bound == 1 ? " world" : " worlds") + ")";
    }
    emit(sh, j, text);
    std::exit(r.outcome == SatResult::Outcome::Sat ? ExitYes : ExitNo);
  });

  // frame-props
  auto* c_fp = app.add_subcommand("frame-props", "report frame properties");
  c_fp->add_option("-F,--frame", frame_path)->required();
  c_fp->add_option("--class", class_list, "exit 0 iff all these hold");
  add_json(c_fp);
  c_fp->callback([&] {
    Frame fr = load_frame(frame_path);
    json props = json::object();
    std::string text;
    for (FrameProperty p : all_frame_properties()) {
      PropertyCheck c = has_property(fr, p);
      props[frame_property_name(p)] = {{"holds", c.holds},
                                       {"witness", c.witness}};
      text += (text.empty() ? "" : "\n") + std::string(frame_property_name(p)) +
              ": " + (c.holds ? "yes" : "no");
      if (!c.holds) {
        text += " (";
        for (std::size_t i = 0; i < c.witness.size(); ++i)
          text += (i ? ", " : "") + c.witness[i];
        text += ")";
      }
    }
    json j{{"command", "frame-props"}, {"properties", props}};
    emit(sh, j, text);
    if (!class_list.empty())
      std::exit(has_properties(fr, class_arg(class_list)) ? ExitYes : ExitNo);
    std::exit(ExitYes);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::exit(app.exit(e));
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::exit(ExitUsage);
  }
  return ExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return ExitBudget;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error at offset " << e.position << ": " << e.what()
              << "\n";
    return ExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitUsage;
  }
}
