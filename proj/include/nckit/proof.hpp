#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nckit/formula.hpp"

namespace nckit {

enum class RuleKind { Taut, US, MP, R, RTri, RE };

// A Hilbert-style axiom system over the # language. Axiom schemas are
// formulas whose atoms are schematic; an instance is any substitution of
// formulas for those atoms.
struct AxiomSystem {
  std::string name;
  // label -> schema, e.g. "#&" -> #p & #q -> #(p & q)
  std::vector<std::pair<std::string, Formula>> axioms;
  std::set<RuleKind> rules;

  const Formula* axiom(const std::string& label) const;
  bool has_rule(RuleKind r) const { return rules.count(r) > 0; }
};

// Built-in systems:
//   K     #T #! #&              rules TAUT US MP R
//   K4    K  + #4               (transitive frames)
//   KB    K  + #B               (symmetric frames)
//   KB5   KB + #5               (symmetric Euclidean frames)
//   KB5'  KB + #5'              (Euclidean frames already validate #5')
//   LA    A1 A2 A3              rules TAUT MP RTRI RE
// Lookup is case-insensitive; "KB5p" and "KB5prime" name KB5'.
const std::vector<AxiomSystem>& builtin_systems();
const AxiomSystem* system_by_name(const std::string& name);

// Justification of one proof line:
//   PREMISE                         hypothesis; marks the line
//                                   premise-dependent
//   TAUT                            instance of a propositional tautology
//   TAUT(i, j, ...)                 propositional consequence of the cited
//                                   lines: (li & lj & ...) -> line is an
//                                   instance of a tautology
//   AX(label)                       axiom instance, substitution inferred
//   AX(label, p := f, ...)          axiom instance, substitution as stated
//   MP(i, j)                        line j is (line i -> this line)
//   US(i, p := f, ...)              substitution applied to line i
//   R(i)                            line i is f -> g, this line is
//                                   #f & f -> #g
//   RTRI(i)                         this line is # of line i
//   RE(i)                           line i is f <-> g, this line is
//                                   #f <-> #g
// US, R, RTRI and RE only apply to premise-free lines.
struct Justification {
  enum class Kind : std::uint8_t { Premise, Taut, Axiom, MP, US, R, RTri, RE };
  Kind kind;
  std::vector<int> refs;
  std::string axiom_label;
  Subst subst;
};

struct ProofLine {
  int index;
  Formula formula;
  Justification just;
};

struct ProofScript {
  std::string system;
  std::vector<ProofLine> lines;
};

struct LineResult {
  int index;
  bool ok;
  std::string reason;  // empty when ok
};

struct ProofReport {
  bool ok;
  std::vector<LineResult> lines;
  // Formulas of accepted premise-free lines, in order.
  std::vector<Formula> theorems;
};

// Text format, one line per step, '//' starts a comment:
//
//   system K
//   1. p -> p | q ; TAUT
//   2. #p & p -> #(p | q) ; R(1)
//   3. #!p <-> #p ; AX(#!)
//
// Formulas must lie in the # language. Throws SyntaxError on malformed
// scripts (unknown rule names are detected at check time, unknown system
// names here).
ProofScript parse_script(const std::string& text);

// Verifies one line of the script against everything before it.
LineResult check_line(const ProofScript& script, std::size_t line_number);

ProofReport check_script(const ProofScript& script);

// The substitution (over the schema's atoms) turning `schema` into
// `candidate`, if one exists.
std::optional<Subst> axiom_instance(const Formula& schema,
                                    const Formula& candidate);

// True when f is a substitution instance of a propositional tautology,
// decided by abstracting the maximal modal subformulas to fresh atoms and
// truth-tabling the result. Throws std::invalid_argument beyond 24 distinct
// abstraction units.
bool tautology_instance(const Formula& f);

}  // namespace nckit
