#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nckit/errors.hpp"

namespace nckit {

enum class FrameProperty {
  Serial,
  Reflexive,
  Symmetric,
  Transitive,
  Euclidean,
  Coreflexive,
  Equivalence
};

const char* frame_property_name(FrameProperty p);
std::optional<FrameProperty> frame_property_from_name(const std::string& name);
// All seven properties in declaration order.
const std::vector<FrameProperty>& all_frame_properties();

// Finite frame: a nonempty ordered set of named worlds and a binary relation.
// World order is the order of construction and is preserved by every
// operation that returns worlds.
class Frame {
public:
  Frame(std::vector<std::string> worlds,
        const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(worlds_.size()); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::string& world_name(int i) const { return worlds_[i]; }
  // Throws UnknownWorld.
  int index_of(const std::string& world) const;
  bool has_world(const std::string& world) const;
  bool edge(int from, int to) const { return adj_[from][to]; }
  const std::vector<int>& successors(int world) const { return succ_[world]; }
  // Edges as name pairs in (source, target) index order.
  std::vector<std::pair<std::string, std::string>> edge_list() const;

private:
  std::vector<std::string> worlds_;
  std::map<std::string, int> index_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> succ_;
};

// Frame plus valuation. Atoms absent from the valuation are false
// everywhere; an atom may also be present with an empty extension.
class Model {
public:
  Model(Frame frame, const std::map<std::string, std::set<std::string>>& val);

  const Frame& frame() const { return frame_; }
  int size() const { return frame_.size(); }
  const std::vector<std::string>& worlds() const { return frame_.worlds(); }
  int index_of(const std::string& world) const { return frame_.index_of(world); }

  bool holds(const std::string& atom, int world) const;
  // Atoms mentioned by the valuation, sorted.
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::map<std::string, std::set<std::string>> valuation() const;

private:
  Frame frame_;
  std::vector<std::string> atoms_;
  std::map<std::string, std::vector<bool>> val_;
};

// Successor names of a world, in world order.
std::vector<std::string> successor_names(const Frame& f,
                                         const std::string& world);

// holds == true means the frame has the property and witness is empty.
// Otherwise witness names the offending worlds:
//   Serial       (s)       s has no successor
//   Reflexive    (s)       not sRs
//   Symmetric    (s,t)     sRt but not tRs
//   Transitive   (s,t,u)   sRt and tRu but not sRu
//   Euclidean    (s,t,u)   sRt and sRu but not tRu
//   Coreflexive  (s,t)     sRt with s != t
//   Equivalence  witness of the first failing of Reflexive, Symmetric,
//                Transitive
struct PropertyCheck {
  bool holds;
  std::vector<std::string> witness;
};

PropertyCheck has_property(const Frame& f, FrameProperty p);
bool has_properties(const Frame& f, const std::set<FrameProperty>& ps);

// Disjoint union. Worlds of `a` keep their names suffixed with "·L", worlds
// of `b` with "·R"; `left`/`right` map original names to tagged names.
struct DisjointUnion {
  Model model;
  std::map<std::string, std::string> left;
  std::map<std::string, std::string> right;
};

DisjointUnion disjoint_union(const Model& a, const Model& b);

// Quotient by a partition of the world set. Every block must be nonempty
// and agree on all atoms of the model; blocks are named after their first
// member in world order. [s] R [t] iff some s' in [s] sees some t' in [t].
// Throws std::invalid_argument if `blocks` is not a partition or a block
// mixes atom values.
Model quotient(const Model& m,
               const std::vector<std::vector<std::string>>& blocks);

}  // namespace nckit
