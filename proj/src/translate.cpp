#include "nckit/translate.hpp"

namespace nckit {

Formula to_box(const Formula& f) {
  switch (f.conn()) {
    case Conn::Top:
    case Conn::Atom: return f;
    case Conn::Not: return Formula::neg(to_box(f.left()));
    case Conn::And:
      return Formula::conj(to_box(f.left()), to_box(f.right()));
    case Conn::Box: return Formula::box(to_box(f.left()));
    case Conn::Delta: {
      Formula t = to_box(f.left());
      return Formula::disj(Formula::box(t), Formula::box(Formula::neg(t)));
    }
    case Conn::Circ: {
      Formula t = to_box(f.left());
      return Formula::impl(t, Formula::box(t));
    }
    case Conn::Tri: {
      Formula t = to_box(f.left());
      return Formula::conj(
          Formula::impl(t, Formula::box(t)),
          Formula::impl(Formula::neg(t), Formula::box(Formula::neg(t))));
    }
  }
  throw std::logic_error("unreachable");
}

Formula to_blacktri(const Formula& f) {
  switch (f.conn()) {
    case Conn::Top:
    case Conn::Atom: return f;
    case Conn::Not: return Formula::neg(to_blacktri(f.left()));
    case Conn::And:
      return Formula::conj(to_blacktri(f.left()), to_blacktri(f.right()));
    case Conn::Box: {
      Formula t = to_blacktri(f.left());
      return Formula::conj(Formula::tri(t), t);
    }
    case Conn::Delta:
    case Conn::Circ:
    case Conn::Tri:
      throw std::invalid_argument(
          std::string("to_blacktri expects a box-only formula, found '") +
          (f.conn() == Conn::Delta ? "%" : f.conn() == Conn::Circ ? "o" : "#") +
          "'");
  }
  throw std::logic_error("unreachable");
}

}  // namespace nckit
