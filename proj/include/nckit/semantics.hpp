#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nckit/formula.hpp"
#include "nckit/kripke.hpp"

namespace nckit {

// Truth values of f at every world, in world order. The modal clauses,
// writing R(s) for the successor set and X for the truth set of the operand:
//   [] f   R(s) subset of X
//   %  f   R(s) subset of X, or R(s) disjoint from X
//   o  f   s in X implies R(s) subset of X
//   #  f   s in X implies R(s) subset of X, and
//          s not in X implies R(s) disjoint from X
std::vector<bool> truth_set(const Model& m, const Formula& f);

bool satisfies(const Model& m, const std::string& world, const Formula& f);

struct ModelValidity {
  bool valid;
  std::optional<std::string> counterexample_world;
};

ModelValidity valid_on_model(const Model& m, const Formula& f);

using Valuation = std::map<std::string, std::set<std::string>>;

struct FrameCounterexample {
  Valuation valuation;
  std::string world;
};

struct FrameValidity {
  bool valid;
  std::optional<FrameCounterexample> counterexample;
};

inline constexpr std::uint64_t kDefaultValuationBudget = 1ull << 20;

// Checks f at every world under every valuation of props_of(f), that is
// 2^(|worlds| * |atoms|) valuations. Throws BudgetExceeded if there are
// more than `budget` of them. The counterexample, when there is one, is
// the first in enumeration order (atom extensions as bit masks counting
// up, then worlds in world order).
FrameValidity valid_on_frame(const Frame& f, const Formula& formula,
                             std::uint64_t budget = kDefaultValuationBudget);

// Local consequence over one frame: at every world of every valuation where
// all premises hold, the conclusion holds. Valuations range over the atoms
// of premises and conclusion together.
FrameValidity entails_on_frame(const Frame& f,
                               const std::vector<Formula>& premises,
                               const Formula& conclusion,
                               std::uint64_t budget = kDefaultValuationBudget);

// The family of subsets of a model's world set definable by formulas of a
// sublanguage over a fixed atom list: the closure of the atom extensions
// (and the full set) under complement, intersection, and the sublanguage's
// modal set operators. On a finite model this family is finite and every
// member is the truth set of some formula, so two worlds are logically
// equivalent w.r.t. the sublanguage iff no member separates them.
//
// Supports models with at most 64 worlds; sets are bit masks over world
// indices.
class DefinableFamily {
public:
  static DefinableFamily closure(const Model& m,
                                 const std::vector<std::string>& atoms,
                                 Lang lang);

  int world_count() const { return n_; }
  Lang lang() const { return lang_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<std::uint64_t>& sets() const { return sets_; }
  bool contains(std::uint64_t set) const;
  // First definable set (in construction order) containing exactly one of
  // the two worlds.
  std::optional<std::size_t> separating_index(int s, int t) const;
  // A formula whose truth set is sets()[i].
  Formula formula_for(std::size_t i) const;

private:
  enum class How : std::uint8_t { Carrier, Atom, Complement, Intersect, Modal };
  struct Step {
    How how;
    int a = -1;
    int b = -1;
    std::string atom;
    Conn modal = Conn::Box;
  };

  DefinableFamily(int n, Lang lang) : n_(n), lang_(lang) {}

  int n_;
  Lang lang_;
  std::vector<std::uint64_t> sets_;
  std::vector<Step> steps_;
  std::map<std::uint64_t, std::size_t> index_;
};

// True when no formula of the sublanguage over `atoms` distinguishes the two
// worlds of m.
bool logically_equivalent(const Model& m, const std::string& s,
                          const std::string& t,
                          const std::vector<std::string>& atoms, Lang lang);

// A formula of the sublanguage true at exactly one of the two worlds, if any.
std::optional<Formula> separating_formula(const Model& m, const std::string& s,
                                          const std::string& t,
                                          const std::vector<std::string>& atoms,
                                          Lang lang);

}  // namespace nckit
