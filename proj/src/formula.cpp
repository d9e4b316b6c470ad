#include "nckit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace nckit {

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Conn conn, std::string atom, const Formula* a,
                      const Formula* b) {
  auto node = std::make_shared<Node>();
  node->conn = conn;
  node->atom = std::move(atom);
  if (a) node->a = *a;
  if (b) node->b = *b;
  std::size_t h = hash_mix(0x517cc1b7, static_cast<std::size_t>(conn));
  h = hash_mix(h, std::hash<std::string>{}(node->atom));
  if (node->a) h = hash_mix(h, node->a->hash());
  if (node->b) h = hash_mix(h, node->b->hash());
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::top() { return make(Conn::Top, "", nullptr, nullptr); }

Formula Formula::atom(const std::string& name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  return make(Conn::Atom, name, nullptr, nullptr);
}

Formula Formula::neg(Formula f) { return make(Conn::Not, "", &f, nullptr); }

Formula Formula::conj(Formula a, Formula b) {
  return make(Conn::And, "", &a, &b);
}

Formula Formula::box(Formula f) { return make(Conn::Box, "", &f, nullptr); }

Formula Formula::delta(Formula f) { return make(Conn::Delta, "", &f, nullptr); }

Formula Formula::circ(Formula f) { return make(Conn::Circ, "", &f, nullptr); }

Formula Formula::tri(Formula f) { return make(Conn::Tri, "", &f, nullptr); }

Formula Formula::bottom() { return neg(top()); }

Formula Formula::disj(Formula a, Formula b) {
  return neg(conj(neg(a), neg(b)));
}

Formula Formula::impl(Formula a, Formula b) { return neg(conj(a, neg(b))); }

Formula Formula::iff(Formula a, Formula b) {
  return conj(impl(a, b), impl(b, a));
}

Formula Formula::diamond(Formula f) { return neg(box(neg(f))); }

Formula Formula::nabla(Formula f) { return neg(delta(f)); }

Formula Formula::bullet(Formula f) { return neg(circ(f)); }

Formula Formula::tridown(Formula f) { return neg(tri(f)); }

const std::string& Formula::atom_name() const {
  if (node_->conn != Conn::Atom)
    throw std::logic_error("atom_name() on a non-atom formula");
  return node_->atom;
}

const Formula& Formula::left() const {
  if (!node_->a) throw std::logic_error("left() on a leaf formula");
  return *node_->a;
}

const Formula& Formula::right() const {
  if (!node_->b) throw std::logic_error("right() on a non-binary formula");
  return *node_->b;
}

int Formula::compare(const Node* x, const Node* y) {
  if (x == y) return 0;
  if (x->conn != y->conn)
    return x->conn < y->conn ? -1 : 1;
  if (x->conn == Conn::Atom) return x->atom.compare(y->atom);
  if (x->a) {
    if (int c = compare(x->a->node_.get(), y->a->node_.get())) return c;
  }
  if (x->b) {
    if (int c = compare(x->b->node_.get(), y->b->node_.get())) return c;
  }
  return 0;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  return compare(node_.get(), other.node_.get()) == 0;
}

bool Formula::operator<(const Formula& other) const {
  return compare(node_.get(), other.node_.get()) < 0;
}

bool valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return name != "true" && name != "false" && name != "o";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok {
  End,
  LParen,
  RParen,
  And,
  Or,
  Imp,
  Iff,
  Not,
  Box,
  Diamond,
  Delta,
  Nabla,
  Circ,
  Bullet,
  Tri,
  Tridown,
  True,
  False,
  Ident
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto simple = [&](Tok k, std::size_t len) {
    out.push_back({k, s.substr(i, len), i});
    i += len;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '(': simple(Tok::LParen, 1); continue;
      case ')': simple(Tok::RParen, 1); continue;
      case '&': simple(Tok::And, 1); continue;
      case '|': simple(Tok::Or, 1); continue;
      case '!': simple(Tok::Not, 1); continue;
      case '%': simple(Tok::Delta, 1); continue;
      case '^': simple(Tok::Nabla, 1); continue;
      case '@': simple(Tok::Bullet, 1); continue;
      case '~': simple(Tok::Tridown, 1); continue;
      case '#': simple(Tok::Tri, 1); continue;
      case '[':
        if (i + 1 < s.size() && s[i + 1] == ']') {
          simple(Tok::Box, 2);
          continue;
        }
        throw SyntaxError("expected ']' after '['", i, {"]"});
      case '<':
        if (s.compare(i, 3, "<->") == 0) {
          simple(Tok::Iff, 3);
          continue;
        }
        if (i + 1 < s.size() && s[i + 1] == '>') {
          simple(Tok::Diamond, 2);
          continue;
        }
        throw SyntaxError("expected '<>' or '<->'", i, {"<>", "<->"});
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          simple(Tok::Imp, 2);
          continue;
        }
        throw SyntaxError("expected '->'", i, {"->"});
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string word = s.substr(i, j - i);
      Tok k = Tok::Ident;
      if (word == "true") k = Tok::True;
      else if (word == "false") k = Tok::False;
      else if (word == "o") k = Tok::Circ;
      out.push_back({k, std::move(word), i});
      i = j;
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

struct Parser {
  const std::vector<Token>& toks;
  std::size_t at = 0;
  Lang lang;

  const Token& peek() const { return toks[at]; }
  Token next() { return toks[at++]; }

  bool modality_allowed(Tok k) const {
    switch (k) {
      case Tok::Box:
      case Tok::Diamond: return lang == Lang::Box || lang == Lang::Full;
      case Tok::Delta:
      case Tok::Nabla: return lang == Lang::Delta || lang == Lang::Full;
      case Tok::Circ:
      case Tok::Bullet: return lang == Lang::Circ || lang == Lang::Full;
      case Tok::Tri:
      case Tok::Tridown: return lang == Lang::Tri || lang == Lang::Full;
      default: return true;
    }
  }

  Formula parse_formula() {
    Formula f = parse_imp();
    while (peek().kind == Tok::Iff) {
      next();
      f = Formula::iff(f, parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (peek().kind == Tok::Imp) {
      next();
      return Formula::impl(f, parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == Tok::Or) {
      next();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().kind == Tok::And) {
      next();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not: next(); return Formula::neg(parse_unary());
      case Tok::Box:
      case Tok::Diamond:
      case Tok::Delta:
      case Tok::Nabla:
      case Tok::Circ:
      case Tok::Bullet:
      case Tok::Tri:
      case Tok::Tridown: {
        if (!modality_allowed(t.kind))
          throw SyntaxError("modality '" + t.text + "' not in language " +
                                lang_name(lang),
                            t.pos);
        Token op = next();
        Formula f = parse_unary();
        switch (op.kind) {
          case Tok::Box: return Formula::box(f);
          case Tok::Diamond: return Formula::diamond(f);
          case Tok::Delta: return Formula::delta(f);
          case Tok::Nabla: return Formula::nabla(f);
          case Tok::Circ: return Formula::circ(f);
          case Tok::Bullet: return Formula::bullet(f);
          case Tok::Tri: return Formula::tri(f);
          default: return Formula::tridown(f);
        }
      }
      default: return parse_atom();
    }
  }

  Formula parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: next(); return Formula::top();
      case Tok::False: next(); return Formula::bottom();
      case Tok::Ident: return Formula::atom(next().text);
      case Tok::LParen: {
        next();
        Formula f = parse_formula();
        if (peek().kind != Tok::RParen)
          throw SyntaxError("expected ')'", peek().pos, {")"});
        next();
        return f;
      }
      default:
        throw SyntaxError(
            "expected a formula", t.pos,
            {"true", "false", "identifier", "(", "!", "[]", "<>", "%", "^",
             "@", "~", "#", "o"});
    }
  }
};

}  // namespace

Formula parse(const std::string& text, Lang lang) {
  std::vector<Token> toks = lex(text);
  Parser p{toks, 0, lang};
  Formula f = p.parse_formula();
  if (p.peek().kind != Tok::End)
    throw SyntaxError("unexpected trailing input", p.peek().pos);
  return f;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Binding strength used to decide where parentheses are needed. The stored
// AST only contains And and prefix operators, so the only interesting case
// is an And child of a prefix operator or of the right slot of another And.
enum Prec { PrecAnd = 1, PrecUnary = 2 };

void render_rec(const Formula& f, int parent, bool left_slot,
                std::string& out) {
  switch (f.conn()) {
    case Conn::Top: out += "true"; return;
    case Conn::Atom: out += f.atom_name(); return;
    case Conn::Not:
      if (f.left().is(Conn::Top)) {
        out += "false";
        return;
      }
      out += '!';
      render_rec(f.left(), PrecUnary, true, out);
      return;
    case Conn::Box:
    case Conn::Delta:
    case Conn::Circ:
    case Conn::Tri: {
      switch (f.conn()) {
        case Conn::Box: out += "[]"; break;
        case Conn::Delta: out += '%'; break;
        case Conn::Tri: out += '#'; break;
        default: {
          out += 'o';
          std::string inner;
          render_rec(f.left(), PrecUnary, true, inner);
          if (!inner.empty() &&
              (std::isalnum(static_cast<unsigned char>(inner[0])) ||
               inner[0] == '_'))
            out += ' ';
          out += inner;
          return;
        }
      }
      render_rec(f.left(), PrecUnary, true, out);
      return;
    }
    case Conn::And: {
      bool need = parent > PrecAnd || (parent == PrecAnd && !left_slot);
      if (need) out += '(';
      render_rec(f.left(), PrecAnd, true, out);
      out += " & ";
      render_rec(f.right(), PrecAnd, false, out);
      if (need) out += ')';
      return;
    }
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_rec(f, 0, true, out);
  return out;
}

bool in_language(const Formula& f, Lang lang) {
  switch (f.conn()) {
    case Conn::Top:
    case Conn::Atom: return true;
    case Conn::Not: return in_language(f.left(), lang);
    case Conn::And:
      return in_language(f.left(), lang) && in_language(f.right(), lang);
    case Conn::Box:
      if (lang != Lang::Box && lang != Lang::Full) return false;
      return in_language(f.left(), lang);
    case Conn::Delta:
      if (lang != Lang::Delta && lang != Lang::Full) return false;
      return in_language(f.left(), lang);
    case Conn::Circ:
      if (lang != Lang::Circ && lang != Lang::Full) return false;
      return in_language(f.left(), lang);
    case Conn::Tri:
      if (lang != Lang::Tri && lang != Lang::Full) return false;
      return in_language(f.left(), lang);
  }
  return false;
}

Formula substitute(const Formula& f, const Subst& subst) {
  switch (f.conn()) {
    case Conn::Top: return f;
    case Conn::Atom: {
      auto it = subst.find(f.atom_name());
      return it == subst.end() ? f : it->second;
    }
    case Conn::Not: return Formula::neg(substitute(f.left(), subst));
    case Conn::And:
      return Formula::conj(substitute(f.left(), subst),
                           substitute(f.right(), subst));
    case Conn::Box: return Formula::box(substitute(f.left(), subst));
    case Conn::Delta: return Formula::delta(substitute(f.left(), subst));
    case Conn::Circ: return Formula::circ(substitute(f.left(), subst));
    case Conn::Tri: return Formula::tri(substitute(f.left(), subst));
  }
  throw std::logic_error("unreachable");
}

std::set<std::string> props_of(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.conn()) {
      case Conn::Top: return;
      case Conn::Atom: out.insert(g.atom_name()); return;
      case Conn::And:
        walk(g.left());
        walk(g.right());
        return;
      default: walk(g.left()); return;
    }
  };
  walk(f);
  return out;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::set<Formula> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (seen.count(g)) return;
    switch (g.conn()) {
      case Conn::Top:
      case Conn::Atom: break;
      case Conn::And:
        walk(g.left());
        walk(g.right());
        break;
      default: walk(g.left()); break;
    }
    if (seen.insert(g).second) out.push_back(g);
  };
  walk(f);
  return out;
}

int modal_depth(const Formula& f) {
  switch (f.conn()) {
    case Conn::Top:
    case Conn::Atom: return 0;
    case Conn::Not: return modal_depth(f.left());
    case Conn::And:
      return std::max(modal_depth(f.left()), modal_depth(f.right()));
    default: return 1 + modal_depth(f.left());
  }
}

const char* lang_name(Lang lang) {
  switch (lang) {
    case Lang::PL: return "pl";
    case Lang::Box: return "box";
    case Lang::Delta: return "delta";
    case Lang::Circ: return "circ";
    case Lang::Tri: return "tri";
    case Lang::Full: return "full";
  }
  return "?";
}

std::optional<Lang> lang_from_name(const std::string& name) {
  if (name == "pl") return Lang::PL;
  if (name == "box") return Lang::Box;
  if (name == "delta") return Lang::Delta;
  if (name == "circ") return Lang::Circ;
  if (name == "tri") return Lang::Tri;
  if (name == "full") return Lang::Full;
  return std::nullopt;
}

}  // namespace nckit
