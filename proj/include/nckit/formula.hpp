#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nckit/errors.hpp"

namespace nckit {

// Connectives of the stored AST. Everything else is sugar and is rewritten
// away at construction time:
//
//   false      !true
//   a | b      !(!a & !b)
//   a -> b     !(a & !b)
//   a <-> b    (a -> b) & (b -> a)
//   <> a       ![] !a
//   ^ a        !% a
//   @ a        !o a
//   ~ a        !# a
enum class Conn : std::uint8_t { Top, Atom, Not, And, Box, Delta, Circ, Tri };

// Sublanguages, keyed by which modality they admit. PL admits none, Full all.
enum class Lang : std::uint8_t { PL, Box, Delta, Circ, Tri, Full };

// Immutable formula tree with shared subterms. Copies are cheap.
class Formula {
public:
  static Formula top();
  static Formula atom(const std::string& name);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula box(Formula f);
  static Formula delta(Formula f);
  static Formula circ(Formula f);
  static Formula tri(Formula f);

  // Sugar constructors; the returned tree contains core connectives only.
  static Formula bottom();
  static Formula disj(Formula a, Formula b);
  static Formula impl(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula diamond(Formula f);
  static Formula nabla(Formula f);
  static Formula bullet(Formula f);
  static Formula tridown(Formula f);

  Conn conn() const;
  bool is(Conn c) const;
  const std::string& atom_name() const;  // requires conn() == Conn::Atom
  const Formula& left() const;           // any unary or binary node
  const Formula& right() const;          // requires conn() == Conn::And

  std::size_t hash() const;
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  // Total structural order, usable for std::set / std::map keys.
  bool operator<(const Formula& other) const;

private:
  struct Node;

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Conn conn, std::string atom, const Formula* a,
                      const Formula* b);
  static int compare(const Node* x, const Node* y);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Conn conn;
  std::string atom;
  std::optional<Formula> a;
  std::optional<Formula> b;
  std::size_t hash;
};

inline Conn Formula::conn() const { return node_->conn; }
inline bool Formula::is(Conn c) const { return node_->conn == c; }
inline std::size_t Formula::hash() const { return node_->hash; }

// True if `name` is a well-formed atom identifier: a letter followed by
// letters, digits or underscores, and not one of the reserved words
// (true, false, o).
bool valid_atom_name(const std::string& name);

// Parses the ASCII surface syntax:
//
//   formula := iff
//   iff     := imp ("<->" imp)*
//   imp     := or ("->" imp)?          right associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := ("!" | "[]" | "<>" | "%" | "^" | "@" | "~" | "#" | "o") unary
//            | atom
//   atom    := "true" | "false" | IDENT | "(" formula ")"
//
// Modalities outside `lang` are rejected with a SyntaxError at the offending
// token. Throws SyntaxError on malformed input.
Formula parse(const std::string& text, Lang lang = Lang::Full);

// Renders with minimal parentheses. Not(Top) prints as "false"; otherwise
// the stored core connectives print as-is. parse(render(f)) == f.
std::string render(const Formula& f);

bool in_language(const Formula& f, Lang lang);

using Subst = std::map<std::string, Formula>;

// Simultaneous substitution of formulas for atoms.
Formula substitute(const Formula& f, const Subst& subst);

// Atoms occurring in f, sorted.
std::set<std::string> props_of(const Formula& f);

// All distinct subformulas of f, children before parents, f itself last.
std::vector<Formula> subformulas(const Formula& f);

// Maximum nesting depth of modal connectives.
int modal_depth(const Formula& f);

const char* lang_name(Lang lang);
std::optional<Lang> lang_from_name(const std::string& name);

}  // namespace nckit
