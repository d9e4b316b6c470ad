// Shared helpers for the test suite: seeded random formulas, frames and
// models, plus fixture loading. Everything is deterministic for a fixed
// seed so failures reproduce.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "nckit/formula.hpp"
#include "nckit/json_io.hpp"
#include "nckit/kripke.hpp"

namespace testutil {

using nckit::Formula;
using nckit::Frame;
using nckit::Lang;
using nckit::Model;

using Rng = std::mt19937_64;

inline std::string fixture_path(const std::string& name) {
  return std::string(NCKIT_FIXTURE_DIR) + "/" + name;
}

inline std::string proof_path(const std::string& name) {
  return std::string(NCKIT_PROOF_DIR) + "/" + name;
}

inline Model fixture_model(const std::string& name) {
  return nckit::load_model(fixture_path(name));
}

inline Frame fixture_frame(const std::string& name) {
  return nckit::load_frame(fixture_path(name));
}

inline int pick(Rng& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// Random formula over the given atoms with at most `depth` connective
// layers. The shape distribution covers every connective of the language.
inline Formula random_formula(Rng& rng, const std::vector<std::string>& atoms,
                              int depth, Lang lang = Lang::Full) {
  if (depth <= 0 || pick(rng, 5) == 0) {
    if (pick(rng, 8) == 0) return Formula::top();
    return Formula::atom(atoms[pick(rng, static_cast<int>(atoms.size()))]);
  }
  bool modal = lang != Lang::PL;
  switch (pick(rng, modal ? 4 : 2)) {
    case 0:
      return Formula::neg(random_formula(rng, atoms, depth - 1, lang));
    case 1:
      return Formula::conj(random_formula(rng, atoms, depth - 1, lang),
                           random_formula(rng, atoms, depth - 1, lang));
    default: {
      Formula a = random_formula(rng, atoms, depth - 1, lang);
      switch (lang) {
        case Lang::Box:
          return Formula::box(a);
        case Lang::Delta:
          return Formula::delta(a);
        case Lang::Circ:
          return Formula::circ(a);
        case Lang::Tri:
          return Formula::tri(a);
        default:
          switch (pick(rng, 4)) {
            case 0: return Formula::box(a);
            case 1: return Formula::delta(a);
            case 2: return Formula::circ(a);
            default: return Formula::tri(a);
          }
      }
    }
  }
}

enum class FrameShape { Any, Serial, Reflexive, Transitive, Symmetric, B5, S5 };

// Random frame on n worlds named w0..w(n-1). The shape argument closes the
// raw random relation under the requested properties.
inline Frame random_frame(Rng& rng, int n, FrameShape shape = FrameShape::Any) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj[i][j] = pick(rng, 3) == 0;

  auto close_transitive = [&] {
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (adj[i][k] && adj[k][j]) adj[i][j] = true;
  };
  switch (shape) {
    case FrameShape::Any:
      break;
    case FrameShape::Serial:
      for (int i = 0; i < n; ++i) {
        bool any = false;
        for (int j = 0; j < n; ++j) any = any || adj[i][j];
        if (!any) adj[i][pick(rng, n)] = true;
      }
      break;
    case FrameShape::Reflexive:
      for (int i = 0; i < n; ++i) adj[i][i] = true;
      break;
    case FrameShape::Transitive:
      close_transitive();
      break;
    case FrameShape::Symmetric:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (adj[i][j]) adj[j][i] = true;
      break;
    case FrameShape::B5:
      // Symmetric and Euclidean: closing a symmetric relation under
      // transitivity keeps symmetry and makes it Euclidean.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (adj[i][j]) adj[j][i] = true;
      close_transitive();
      break;
    case FrameShape::S5:
      for (int i = 0; i < n; ++i) adj[i][i] = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (adj[i][j]) adj[j][i] = true;
      close_transitive();
      break;
  }

  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i) worlds.push_back("w" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adj[i][j]) rel.emplace_back(worlds[i], worlds[j]);
  return Frame(worlds, rel);
}

inline Model random_model(Rng& rng, int n, const std::vector<std::string>& atoms,
                          FrameShape shape = FrameShape::Any) {
  Frame f = random_frame(rng, n, shape);
  nckit::Valuation val;
  for (const std::string& a : atoms) {
    std::set<std::string> ws;
    for (const std::string& w : f.worlds())
      if (pick(rng, 2) == 0) ws.insert(w);
    val[a] = ws;
  }
  return Model(f, val);
}

}  // namespace testutil
