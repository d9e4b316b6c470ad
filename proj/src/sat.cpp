#include "nckit/sat.hpp"

#include <algorithm>
#include <numeric>

#include "nckit/semantics.hpp"
#include "nckit/translate.hpp"

namespace nckit {

const char* sat_outcome_name(SatResult::Outcome o) {
  switch (o) {
    case SatResult::Outcome::Sat: return "sat";
    case SatResult::Outcome::UnsatUpTo: return "unsat-up-to";
    case SatResult::Outcome::UnsatCertified: return "unsat-certified";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kSaturated = 1ull << 62;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a >= kSaturated - b ? kSaturated : a + b;
}

}  // namespace

std::uint64_t fmp_world_bound(const Formula& f) {
  Formula boxed = to_box(f);
  std::vector<Formula> subs = subformulas(boxed);
  std::uint64_t filtration =
      subs.size() >= 62 ? kSaturated : 1ull << subs.size();
  std::uint64_t boxes = 0;
  for (const Formula& g : subs)
    if (g.is(Conn::Box)) ++boxes;
  int depth = modal_depth(boxed);
  std::uint64_t tree = 1, level = 1;
  for (int i = 0; i < depth; ++i) {
    level = sat_mul(level, boxes);
    tree = sat_add(tree, level);
  }
  return std::min(filtration, tree);
}

namespace {

// Candidate models over n worlds: the relation is an n*n bit mask (bit
// s*n+t means world s sees world t), the valuation a k*n bit mask (bit
// a*n+s means atom a holds at world s).

std::uint64_t permute_relation(std::uint64_t rel, const std::vector<int>& pi,
                               int n) {
  std::uint64_t out = 0;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (rel >> (s * n + t) & 1) out |= 1ull << (pi[s] * n + pi[t]);
  return out;
}

std::uint64_t permute_valuation(std::uint64_t val, const std::vector<int>& pi,
                                int n, int k) {
  std::uint64_t out = 0;
  for (int a = 0; a < k; ++a)
    for (int s = 0; s < n; ++s)
      if (val >> (a * n + s) & 1) out |= 1ull << (a * n + pi[s]);
  return out;
}

bool relation_has_properties(std::uint64_t rel, int n,
                             const std::set<FrameProperty>& props) {
  auto edge = [&](int s, int t) { return (rel >> (s * n + t) & 1) != 0; };
  for (FrameProperty p : props) {
    switch (p) {
      case FrameProperty::Serial:
        for (int s = 0; s < n; ++s) {
          bool any = false;
          for (int t = 0; t < n && !any; ++t) any = edge(s, t);
          if (!any) return false;
        }
        break;
      case FrameProperty::Reflexive:
        for (int s = 0; s < n; ++s)
          if (!edge(s, s)) return false;
        break;
      case FrameProperty::Symmetric:
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            if (edge(s, t) && !edge(t, s)) return false;
        break;
      case FrameProperty::Transitive:
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            for (int u = 0; u < n; ++u)
              if (edge(s, t) && edge(t, u) && !edge(s, u)) return false;
        break;
      case FrameProperty::Euclidean:
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            for (int u = 0; u < n; ++u)
              if (edge(s, t) && edge(s, u) && !edge(t, u)) return false;
        break;
      case FrameProperty::Coreflexive:
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            if (edge(s, t) && s != t) return false;
        break;
      case FrameProperty::Equivalence:
        if (!relation_has_properties(
                rel, n,
                {FrameProperty::Reflexive, FrameProperty::Symmetric,
                 FrameProperty::Transitive}))
          return false;
        break;
    }
  }
  return true;
}

Model build_model(std::uint64_t rel, std::uint64_t val, int n,
                  const std::vector<std::string>& atoms,
                  const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (rel >> (s * n + t) & 1) edges.emplace_back(names[s], names[t]);
  std::map<std::string, std::set<std::string>> v;
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    std::set<std::string> ws;
    for (int s = 0; s < n; ++s)
      if (val >> (a * n + s) & 1) ws.insert(names[s]);
    v.emplace(atoms[a], std::move(ws));
  }
  return Model(Frame(std::vector<std::string>(names.begin(), names.begin() + n),
                     edges),
               v);
}

}  // namespace

SatResult satisfiable(const Formula& f, const SatOptions& options) {
  if (options.max_worlds < 1)
    throw std::invalid_argument("max_worlds must be at least 1");
  std::set<std::string> prop_set = props_of(f);
  std::vector<std::string> atoms(prop_set.begin(), prop_set.end());
  int k = static_cast<int>(atoms.size());

  std::uint64_t cert = fmp_world_bound(f);
  bool unconstrained = options.frame_class.empty();
  std::uint64_t stop_at = options.max_worlds;
  if (unconstrained) stop_at = std::min<std::uint64_t>(stop_at, cert);

  std::vector<std::string> names;
  for (std::uint64_t i = 0; i < std::max<std::uint64_t>(stop_at, 1); ++i)
    names.push_back("w" + std::to_string(i));

  std::uint64_t spent = 0;
  auto charge = [&](std::uint64_t cost) {
    spent += cost;
    if (spent > options.budget)
      throw BudgetExceeded("satisfiability search over budget", spent,
                           options.budget);
  };

  for (int n = 1; static_cast<std::uint64_t>(n) <= stop_at; ++n) {
    if (n * n > 62 || (k > 0 && k * n > 62))
      throw BudgetExceeded(
          "satisfiability search beyond bit mask capacity at " +
              std::to_string(n) + " worlds",
          ~0ull, options.budget);

    std::vector<std::vector<int>> perms;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    do {
      perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));

    std::uint64_t rel_count = 1ull << (n * n);
    std::uint64_t val_count = 1ull << (k * n);
    for (std::uint64_t rel = 0; rel < rel_count; ++rel) {
      charge(1);
      // Keep only the least relation of its renaming class.
      bool canonical = true;
      std::vector<const std::vector<int>*> autos;
      for (const auto& pi : perms) {
        std::uint64_t image = permute_relation(rel, pi, n);
        if (image < rel) {
          canonical = false;
          break;
        }
        if (image == rel) autos.push_back(&pi);
      }
      if (!canonical) continue;
      if (!relation_has_properties(rel, n, options.frame_class)) continue;

      for (std::uint64_t val = 0; val < val_count; ++val) {
        charge(1);
        // Keep only the least valuation under the relation's symmetries.
        bool val_canonical = true;
        for (const auto* pi : autos) {
          if (permute_valuation(val, *pi, n, k) < val) {
            val_canonical = false;
            break;
          }
        }
        if (!val_canonical) continue;

        Model m = build_model(rel, val, n, atoms, names);
        std::vector<bool> ts = truth_set(m, f);
        for (int s = 0; s < n; ++s)
          if (ts[s]) {
            SatResult out{SatResult::Outcome::Sat, std::move(m), names[s],
                          n, cert, options.frame_class};
            return out;
          }
      }
    }
  }

  SatResult out{SatResult::Outcome::UnsatUpTo, std::nullopt, std::nullopt,
                static_cast<int>(stop_at), cert, options.frame_class};
  if (unconstrained && stop_at >= cert)
    out.outcome = SatResult::Outcome::UnsatCertified;
  return out;
}

}  // namespace nckit
