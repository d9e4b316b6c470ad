#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nckit/kripke.hpp"

namespace nckit {

enum class BisimKind { Box, Tri };

const char* bisim_kind_name(BisimKind k);

// A candidate (or verified) bisimulation: a set of world pairs over one
// model, possibly a disjoint union. For kind Tri the forth and back clauses
// are guarded: a successor move from one side only needs an answer when the
// moved-to world is not itself related to the moving world.
struct BisimRelation {
  BisimKind kind;
  std::vector<std::pair<std::string, std::string>> pairs;
};

struct ClauseViolation {
  std::string clause;  // "nonempty", "inv", "forth", "back"
  std::pair<std::string, std::string> pair;
  std::string detail;
};

struct BisimReport {
  bool valid;
  std::vector<ClauseViolation> violations;
};

// Checks the defining clauses of a (kind-)bisimulation on m:
//   nonempty   the relation has at least one pair
//   inv        related worlds agree on every atom of m
//   forth      s -> u answered by some t -> v with (u, v) related
//              (kind Tri: only required when (s, u) is unrelated)
//   back       t -> v answered by some s -> u with (u, v) related
//              (kind Tri: only required when (t, v) is unrelated)
// Throws UnknownWorld if a pair mentions a world not in m.
BisimReport check_bisimulation(const Model& m, const BisimRelation& z);

// Largest kind-bisimulation on one model, as a pair matrix computed by
// refinement: start from all atom-agreeing pairs and delete pairs whose
// forth or back clause fails against the current relation, until stable.
//
// Every bisimulation survives refinement intact: for a pair of a
// bisimulation B inside the current (larger) relation Z, a Tri guard
// "(s, u) not in Z" implies "(s, u) not in B", so B's own clause supplies
// the required witness inside B, hence inside Z. The stable relation
// therefore contains the union of all bisimulations; and being stable, it
// satisfies the clauses itself, so (when nonempty) it is one.
BisimRelation largest_bisimulation(const Model& m, BisimKind kind);

// Largest kind-bisimulation over the disjoint union of two models.
struct LargestBisim {
  DisjointUnion unio;
  BisimRelation relation;
};

LargestBisim largest_bisimulation(const Model& a, const Model& b,
                                  BisimKind kind);

// True when (a, s) and (b, t) are related by the largest kind-bisimulation
// on the disjoint union of a and b.
bool bisimilar(const Model& a, const std::string& s, const Model& b,
               const std::string& t, BisimKind kind);

// Quotient of m by Tri-bisimilarity. block_of maps every world to the name
// of its block in the contracted model.
struct Contraction {
  Model model;
  std::map<std::string, std::string> block_of;
};

Contraction contract(const Model& m);

}  // namespace nckit
