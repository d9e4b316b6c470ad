#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "nckit/formula.hpp"
#include "nckit/kripke.hpp"

namespace nckit {

struct SatOptions {
  std::set<FrameProperty> frame_class;
  int max_worlds = 4;
  // Charged per candidate relation and per (relation, valuation) pair.
  std::uint64_t budget = 20'000'000;
};

struct SatResult {
  enum class Outcome { Sat, UnsatUpTo, UnsatCertified };
  Outcome outcome;
  std::optional<Model> model;         // Sat only
  std::optional<std::string> world;   // Sat only
  // Largest world count exhaustively searched (Sat: size of the witness).
  int explored_bound = 0;
  // Smallest world count that certifies unsatisfiability when exhausted.
  std::uint64_t certification_bound = 0;
  std::set<FrameProperty> frame_class;
};

const char* sat_outcome_name(SatResult::Outcome o);

// A world count B such that any satisfiable f has a model with at most B
// worlds: the smaller of the classic filtration bound 2^|subformulas| and
// the bounded-tree bound sum_(i<=d) m^i of the box translation of f, where
// m counts its distinct boxed subformulas and d its modal depth. Values
// beyond 2^62 saturate.
std::uint64_t fmp_world_bound(const Formula& f);

// Generate-and-test search over pointed models with 1..max_worlds worlds
// whose frame has every property in frame_class, in a canonical order
// (world counts ascending, relation bit masks ascending, valuation bit
// masks ascending, evaluation worlds in world order), pruning relations
// and valuations that are world renamings of earlier candidates.
//
// Returns the first satisfying pointed model found. Otherwise the result
// is UnsatCertified when the class is unconstrained and every size up to
// fmp_world_bound(f) was exhausted, else UnsatUpTo. The search stops at
// the certification bound even when max_worlds is larger. Throws
// BudgetExceeded when the budget runs out before an answer is reached.
SatResult satisfiable(const Formula& f, const SatOptions& options = {});

}  // namespace nckit
