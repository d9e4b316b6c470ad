#include "nckit/bisim.hpp"

#include <algorithm>

namespace nckit {

const char* bisim_kind_name(BisimKind k) {
  return k == BisimKind::Box ? "box" : "tri";
}

namespace {

using Matrix = std::vector<std::vector<bool>>;

bool atoms_agree(const Model& m, int s, int t) {
  for (const std::string& atom : m.atoms())
    if (m.holds(atom, s) != m.holds(atom, t)) return false;
  return true;
}

// Does the forth clause of (s, t) hold against relation z? With kind Tri
// the move s -> u is exempt when z relates s to u.
bool forth_ok(const Model& m, const Matrix& z, BisimKind kind, int s, int t,
              int* failing_succ) {
  for (int u : m.frame().successors(s)) {
    if (kind == BisimKind::Tri && z[s][u]) continue;
    bool answered = false;
    for (int v : m.frame().successors(t))
      if (z[u][v]) {
        answered = true;
        break;
      }
    if (!answered) {
      if (failing_succ) *failing_succ = u;
      return false;
    }
  }
  return true;
}

bool back_ok(const Model& m, const Matrix& z, BisimKind kind, int s, int t,
             int* failing_succ) {
  for (int v : m.frame().successors(t)) {
    if (kind == BisimKind::Tri && z[t][v]) continue;
    bool answered = false;
    for (int u : m.frame().successors(s))
      if (z[u][v]) {
        answered = true;
        break;
      }
    if (!answered) {
      if (failing_succ) *failing_succ = v;
      return false;
    }
  }
  return true;
}

Matrix largest_matrix(const Model& m, BisimKind kind) {
  int n = m.size();
  Matrix z(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) z[s][t] = atoms_agree(m, s, t);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        if (!z[s][t]) continue;
        if (!forth_ok(m, z, kind, s, t, nullptr) ||
            !back_ok(m, z, kind, s, t, nullptr)) {
          z[s][t] = false;
          changed = true;
        }
      }
  }
  return z;
}

BisimRelation matrix_to_relation(const Model& m, const Matrix& z,
                                 BisimKind kind) {
  BisimRelation rel{kind, {}};
  int n = m.size();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (z[s][t])
        rel.pairs.emplace_back(m.frame().world_name(s),
                               m.frame().world_name(t));
  return rel;
}

}  // namespace

BisimReport check_bisimulation(const Model& m, const BisimRelation& z) {
  int n = m.size();
  Matrix rel(n, std::vector<bool>(n, false));
  for (const auto& [s, t] : z.pairs) rel[m.index_of(s)][m.index_of(t)] = true;

  BisimReport report{true, {}};
  auto fail = [&](const std::string& clause, int s, int t,
                  std::string detail) {
    report.valid = false;
    report.violations.push_back(
        {clause,
         {m.frame().world_name(s), m.frame().world_name(t)},
         std::move(detail)});
  };

  if (z.pairs.empty()) {
    report.valid = false;
    report.violations.push_back({"nonempty", {"", ""}, "the relation is empty"});
    return report;
  }

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (!rel[s][t]) continue;
      for (const std::string& atom : m.atoms())
        if (m.holds(atom, s) != m.holds(atom, t))
          fail("inv", s, t, "worlds disagree on atom '" + atom + "'");
      int u = -1;
      if (!forth_ok(m, rel, z.kind, s, t, &u))
        fail("forth", s, t,
             "move to " + m.frame().world_name(u) +
                 " has no matching successor on the right");
      if (!back_ok(m, rel, z.kind, s, t, &u))
        fail("back", s, t,
             "move to " + m.frame().world_name(u) +
                 " has no matching successor on the left");
    }
  return report;
}

BisimRelation largest_bisimulation(const Model& m, BisimKind kind) {
  return matrix_to_relation(m, largest_matrix(m, kind), kind);
}

LargestBisim largest_bisimulation(const Model& a, const Model& b,
                                  BisimKind kind) {
  DisjointUnion u = disjoint_union(a, b);
  BisimRelation rel = largest_bisimulation(u.model, kind);
  return {std::move(u), std::move(rel)};
}

bool bisimilar(const Model& a, const std::string& s, const Model& b,
               const std::string& t, BisimKind kind) {
  a.index_of(s);
  b.index_of(t);
  DisjointUnion u = disjoint_union(a, b);
  Matrix z = largest_matrix(u.model, kind);
  return z[u.model.index_of(u.left.at(s))][u.model.index_of(u.right.at(t))];
}

Contraction contract(const Model& m) {
  int n = m.size();
  Matrix z = largest_matrix(m, BisimKind::Tri);
  // Bisimilarity is already reflexive, symmetric and transitive; forming
  // connected components (after adding the diagonal) keeps the partition
  // well defined even on that theory's edge cases.
  std::vector<int> block_of(n, -1);
  std::vector<std::vector<std::string>> blocks;
  for (int s = 0; s < n; ++s) {
    if (block_of[s] != -1) continue;
    int b = static_cast<int>(blocks.size());
    blocks.emplace_back();
    std::vector<int> stack{s};
    block_of[s] = b;
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      blocks[b].push_back(m.frame().world_name(w));
      for (int v = 0; v < n; ++v)
        if (block_of[v] == -1 && (z[w][v] || z[v][w])) {
          block_of[v] = b;
          stack.push_back(v);
        }
    }
  }
  Model q = quotient(m, blocks);
  Contraction out{std::move(q), {}};
  for (int s = 0; s < n; ++s)
    out.block_of.emplace(m.frame().world_name(s),
                         blocks[block_of[s]].front());
  return out;
}

}  // namespace nckit
