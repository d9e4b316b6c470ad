#include "nckit/semantics.hpp"

#include <algorithm>

namespace nckit {

std::vector<bool> truth_set(const Model& m, const Formula& f) {
  int n = m.size();
  const Frame& fr = m.frame();
  switch (f.conn()) {
    case Conn::Top: return std::vector<bool>(n, true);
    case Conn::Atom: {
      std::vector<bool> out(n);
      for (int s = 0; s < n; ++s) out[s] = m.holds(f.atom_name(), s);
      return out;
    }
    case Conn::Not: {
      std::vector<bool> out = truth_set(m, f.left());
      out.flip();
      return out;
    }
    case Conn::And: {
      std::vector<bool> out = truth_set(m, f.left());
      std::vector<bool> rhs = truth_set(m, f.right());
      for (int s = 0; s < n; ++s) out[s] = out[s] && rhs[s];
      return out;
    }
    case Conn::Box: {
      std::vector<bool> x = truth_set(m, f.left());
      std::vector<bool> out(n);
      for (int s = 0; s < n; ++s) {
        bool all = true;
        for (int t : fr.successors(s)) all = all && x[t];
        out[s] = all;
      }
      return out;
    }
    case Conn::Delta: {
      std::vector<bool> x = truth_set(m, f.left());
      std::vector<bool> out(n);
      for (int s = 0; s < n; ++s) {
        bool all = true, none = true;
        for (int t : fr.successors(s)) (x[t] ? none : all) = false;
        out[s] = all || none;
      }
      return out;
    }
    case Conn::Circ: {
      std::vector<bool> x = truth_set(m, f.left());
      std::vector<bool> out(n);
      for (int s = 0; s < n; ++s) {
        bool all = true;
        for (int t : fr.successors(s)) all = all && x[t];
        out[s] = !x[s] || all;
      }
      return out;
    }
    case Conn::Tri: {
      std::vector<bool> x = truth_set(m, f.left());
      std::vector<bool> out(n);
      for (int s = 0; s < n; ++s) {
        bool all = true, none = true;
        for (int t : fr.successors(s)) (x[t] ? none : all) = false;
        out[s] = x[s] ? all : none;
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

bool satisfies(const Model& m, const std::string& world, const Formula& f) {
  return truth_set(m, f)[m.index_of(world)];
}

ModelValidity valid_on_model(const Model& m, const Formula& f) {
  std::vector<bool> ts = truth_set(m, f);
  for (int s = 0; s < m.size(); ++s)
    if (!ts[s]) return {false, m.frame().world_name(s)};
  return {true, std::nullopt};
}

namespace {

// Enumerates valuations of `atoms` over the frame as bit masks: bit
// (a * n + w) set means world w is in the extension of atoms[a].
class ValuationSpace {
public:
  ValuationSpace(const Frame& f, std::vector<std::string> atoms,
                 std::uint64_t budget)
      : frame_(f), atoms_(std::move(atoms)) {
    int bits = static_cast<int>(atoms_.size()) * f.size();
    if (bits >= 63)
      throw BudgetExceeded("frame valuation space too large to enumerate",
                           ~0ull, budget);
    count_ = 1ull << bits;
    if (count_ > budget)
      throw BudgetExceeded("frame valuation enumeration over budget (" +
                               std::to_string(count_) + " valuations)",
                           count_, budget);
  }

  std::uint64_t count() const { return count_; }

  Model model_for(std::uint64_t mask) const {
    std::map<std::string, std::set<std::string>> val;
    int n = frame_.size();
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
      std::set<std::string> ws;
      for (int w = 0; w < n; ++w)
        if (mask >> (a * n + w) & 1) ws.insert(frame_.world_name(w));
      val.emplace(atoms_[a], std::move(ws));
    }
    return Model(frame_, val);
  }

private:
  const Frame& frame_;
  std::vector<std::string> atoms_;
  std::uint64_t count_;
};

}  // namespace

FrameValidity valid_on_frame(const Frame& f, const Formula& formula,
                             std::uint64_t budget) {
  std::set<std::string> props = props_of(formula);
  ValuationSpace space(f, {props.begin(), props.end()}, budget);
  for (std::uint64_t mask = 0; mask < space.count(); ++mask) {
    Model m = space.model_for(mask);
    ModelValidity v = valid_on_model(m, formula);
    if (!v.valid)
      return {false,
              FrameCounterexample{m.valuation(), *v.counterexample_world}};
  }
  return {true, std::nullopt};
}

FrameValidity entails_on_frame(const Frame& f,
                               const std::vector<Formula>& premises,
                               const Formula& conclusion,
                               std::uint64_t budget) {
  std::set<std::string> props = props_of(conclusion);
  for (const Formula& p : premises) {
    std::set<std::string> ps = props_of(p);
    props.insert(ps.begin(), ps.end());
  }
  ValuationSpace space(f, {props.begin(), props.end()}, budget);
  for (std::uint64_t mask = 0; mask < space.count(); ++mask) {
    Model m = space.model_for(mask);
    std::vector<bool> ok = truth_set(m, conclusion);
    for (const Formula& p : premises) {
      std::vector<bool> pt = truth_set(m, p);
      for (int s = 0; s < f.size(); ++s) ok[s] = ok[s] || !pt[s];
    }
    for (int s = 0; s < f.size(); ++s)
      if (!ok[s])
        return {false, FrameCounterexample{m.valuation(), f.world_name(s)}};
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Definable sets

namespace {

std::uint64_t modal_image(Conn op, std::uint64_t x, const Frame& f) {
  int n = f.size();
  std::uint64_t out = 0;
  for (int s = 0; s < n; ++s) {
    std::uint64_t succ = 0;
    for (int t : f.successors(s)) succ |= 1ull << t;
    bool in = x >> s & 1;
    bool all = (succ & ~x) == 0;
    bool none = (succ & x) == 0;
    bool v = false;
    switch (op) {
      case Conn::Box: v = all; break;
      case Conn::Delta: v = all || none; break;
      case Conn::Circ: v = !in || all; break;
      case Conn::Tri: v = in ? all : none; break;
      default: throw std::logic_error("not a modal operator");
    }
    if (v) out |= 1ull << s;
  }
  return out;
}

std::vector<Conn> modal_ops(Lang lang) {
  switch (lang) {
    case Lang::PL: return {};
    case Lang::Box: return {Conn::Box};
    case Lang::Delta: return {Conn::Delta};
    case Lang::Circ: return {Conn::Circ};
    case Lang::Tri: return {Conn::Tri};
    case Lang::Full:
      return {Conn::Box, Conn::Delta, Conn::Circ, Conn::Tri};
  }
  return {};
}

}  // namespace

DefinableFamily DefinableFamily::closure(const Model& m,
                                         const std::vector<std::string>& atoms,
                                         Lang lang) {
  int n = m.size();
  if (n > 64)
    throw std::invalid_argument(
        "definable-set closure supports at most 64 worlds");
  std::uint64_t carrier =
      n == 64 ? ~0ull : (1ull << n) - 1;

  DefinableFamily fam(n, lang);
  auto add = [&](std::uint64_t set, Step step) {
    if (fam.index_.emplace(set, fam.sets_.size()).second) {
      fam.sets_.push_back(set);
      fam.steps_.push_back(std::move(step));
    }
  };

  add(carrier, Step{How::Carrier});
  for (const std::string& atom : atoms) {
    std::uint64_t set = 0;
    for (int s = 0; s < n; ++s)
      if (m.holds(atom, s)) set |= 1ull << s;
    add(set, Step{How::Atom, -1, -1, atom});
  }

  std::vector<Conn> ops = modal_ops(lang);
  std::size_t done_unary = 0, done_pairs = 0;
  while (done_unary < fam.sets_.size() || done_pairs < fam.sets_.size()) {
    std::size_t limit = fam.sets_.size();
    for (std::size_t i = done_unary; i < limit; ++i) {
      add(~fam.sets_[i] & carrier,
          Step{How::Complement, static_cast<int>(i)});
      for (Conn op : ops)
        add(modal_image(op, fam.sets_[i], m.frame()),
            Step{How::Modal, static_cast<int>(i), -1, "", op});
    }
    done_unary = limit;
    for (std::size_t i = 0; i < limit; ++i)
      for (std::size_t j = std::max(i + 1, done_pairs); j < limit; ++j)
        add(fam.sets_[i] & fam.sets_[j],
            Step{How::Intersect, static_cast<int>(i), static_cast<int>(j)});
    done_pairs = limit;
  }
  return fam;
}

bool DefinableFamily::contains(std::uint64_t set) const {
  return index_.count(set) > 0;
}

std::optional<std::size_t> DefinableFamily::separating_index(int s,
                                                             int t) const {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    bool a = sets_[i] >> s & 1, b = sets_[i] >> t & 1;
    if (a != b) return i;
  }
  return std::nullopt;
}

Formula DefinableFamily::formula_for(std::size_t i) const {
  const Step& st = steps_.at(i);
  switch (st.how) {
    case How::Carrier: return Formula::top();
    case How::Atom: return Formula::atom(st.atom);
    case How::Complement: return Formula::neg(formula_for(st.a));
    case How::Intersect:
      return Formula::conj(formula_for(st.a), formula_for(st.b));
    case How::Modal:
      switch (st.modal) {
        case Conn::Box: return Formula::box(formula_for(st.a));
        case Conn::Delta: return Formula::delta(formula_for(st.a));
        case Conn::Circ: return Formula::circ(formula_for(st.a));
        default: return Formula::tri(formula_for(st.a));
      }
  }
  throw std::logic_error("unreachable");
}

bool logically_equivalent(const Model& m, const std::string& s,
                          const std::string& t,
                          const std::vector<std::string>& atoms, Lang lang) {
  DefinableFamily fam = DefinableFamily::closure(m, atoms, lang);
  return !fam.separating_index(m.index_of(s), m.index_of(t)).has_value();
}

std::optional<Formula> separating_formula(const Model& m, const std::string& s,
                                          const std::string& t,
                                          const std::vector<std::string>& atoms,
                                          Lang lang) {
  DefinableFamily fam = DefinableFamily::closure(m, atoms, lang);
  auto idx = fam.separating_index(m.index_of(s), m.index_of(t));
  if (!idx) return std::nullopt;
  Formula f = fam.formula_for(*idx);
  // Orient the witness so it is true at s.
  if (!(fam.sets()[*idx] >> m.index_of(s) & 1)) return Formula::neg(f);
  return f;
}

}  // namespace nckit
