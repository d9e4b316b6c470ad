#include "nckit/kripke.hpp"

#include <algorithm>
#include <stdexcept>

#include "nckit/formula.hpp"

namespace nckit {

const char* frame_property_name(FrameProperty p) {
  switch (p) {
    case FrameProperty::Serial: return "serial";
    case FrameProperty::Reflexive: return "reflexive";
    case FrameProperty::Symmetric: return "symmetric";
    case FrameProperty::Transitive: return "transitive";
    case FrameProperty::Euclidean: return "euclidean";
    case FrameProperty::Coreflexive: return "coreflexive";
    case FrameProperty::Equivalence: return "equivalence";
  }
  return "?";
}

std::optional<FrameProperty> frame_property_from_name(const std::string& name) {
  for (FrameProperty p : all_frame_properties())
    if (name == frame_property_name(p)) return p;
  return std::nullopt;
}

const std::vector<FrameProperty>& all_frame_properties() {
  static const std::vector<FrameProperty> props = {
      FrameProperty::Serial,      FrameProperty::Reflexive,
      FrameProperty::Symmetric,   FrameProperty::Transitive,
      FrameProperty::Euclidean,   FrameProperty::Coreflexive,
      FrameProperty::Equivalence};
  return props;
}

Frame::Frame(std::vector<std::string> worlds,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : worlds_(std::move(worlds)) {
  if (worlds_.empty())
    throw std::invalid_argument("a frame needs at least one world");
  for (int i = 0; i < size(); ++i) {
    if (worlds_[i].empty())
      throw std::invalid_argument("world names must be nonempty");
    if (!index_.emplace(worlds_[i], i).second)
      throw std::invalid_argument("duplicate world name: " + worlds_[i]);
  }
  adj_.assign(size(), std::vector<bool>(size(), false));
  for (const auto& [from, to] : edges) adj_[index_of(from)][index_of(to)] = true;
  succ_.resize(size());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (adj_[i][j]) succ_[i].push_back(j);
}

int Frame::index_of(const std::string& world) const {
  auto it = index_.find(world);
  if (it == index_.end()) throw UnknownWorld(world);
  return it->second;
}

bool Frame::has_world(const std::string& world) const {
  return index_.count(world) > 0;
}

std::vector<std::pair<std::string, std::string>> Frame::edge_list() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < size(); ++i)
    for (int j : succ_[i]) out.emplace_back(worlds_[i], worlds_[j]);
  return out;
}

Model::Model(Frame frame,
             const std::map<std::string, std::set<std::string>>& val)
    : frame_(std::move(frame)) {
  for (const auto& [atom, extension] : val) {
    if (!valid_atom_name(atom))
      throw std::invalid_argument("invalid atom name in valuation: '" + atom +
                                  "'");
    std::vector<bool> flags(frame_.size(), false);
    for (const std::string& w : extension) flags[frame_.index_of(w)] = true;
    atoms_.push_back(atom);
    val_.emplace(atom, std::move(flags));
  }
}

bool Model::holds(const std::string& atom, int world) const {
  auto it = val_.find(atom);
  return it != val_.end() && it->second[world];
}

std::map<std::string, std::set<std::string>> Model::valuation() const {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& [atom, flags] : val_) {
    std::set<std::string>& ws = out[atom];
    for (int i = 0; i < size(); ++i)
      if (flags[i]) ws.insert(frame_.world_name(i));
  }
  return out;
}

std::vector<std::string> successor_names(const Frame& f,
                                         const std::string& world) {
  std::vector<std::string> out;
  for (int j : f.successors(f.index_of(world))) out.push_back(f.world_name(j));
  return out;
}

PropertyCheck has_property(const Frame& f, FrameProperty p) {
  int n = f.size();
  auto name = [&](int i) { return f.world_name(i); };
  switch (p) {
    case FrameProperty::Serial:
      for (int s = 0; s < n; ++s)
        if (f.successors(s).empty()) return {false, {name(s)}};
      return {true, {}};
    case FrameProperty::Reflexive:
      for (int s = 0; s < n; ++s)
        if (!f.edge(s, s)) return {false, {name(s)}};
      return {true, {}};
    case FrameProperty::Symmetric:
      for (int s = 0; s < n; ++s)
        for (int t : f.successors(s))
          if (!f.edge(t, s)) return {false, {name(s), name(t)}};
      return {true, {}};
    case FrameProperty::Transitive:
      for (int s = 0; s < n; ++s)
        for (int t : f.successors(s))
          for (int u : f.successors(t))
            if (!f.edge(s, u)) return {false, {name(s), name(t), name(u)}};
      return {true, {}};
    case FrameProperty::Euclidean:
      for (int s = 0; s < n; ++s)
        for (int t : f.successors(s))
          for (int u : f.successors(s))
            if (!f.edge(t, u)) return {false, {name(s), name(t), name(u)}};
      return {true, {}};
    case FrameProperty::Coreflexive:
      for (int s = 0; s < n; ++s)
        for (int t : f.successors(s))
          if (t != s) return {false, {name(s), name(t)}};
      return {true, {}};
    case FrameProperty::Equivalence:
      for (FrameProperty q : {FrameProperty::Reflexive, FrameProperty::Symmetric,
                              FrameProperty::Transitive}) {
        PropertyCheck c = has_property(f, q);
        if (!c.holds) return c;
      }
      return {true, {}};
  }
  throw std::logic_error("unreachable");
}

bool has_properties(const Frame& f, const std::set<FrameProperty>& ps) {
  for (FrameProperty p : ps)
    if (!has_property(f, p).holds) return false;
  return true;
}

DisjointUnion disjoint_union(const Model& a, const Model& b) {
  std::vector<std::string> worlds;
  std::map<std::string, std::string> left, right;
  for (const std::string& w : a.worlds()) {
    left.emplace(w, w + "·L");
    worlds.push_back(left.at(w));
  }
  for (const std::string& w : b.worlds()) {
    right.emplace(w, w + "·R");
    worlds.push_back(right.at(w));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [s, t] : a.frame().edge_list())
    edges.emplace_back(left.at(s), left.at(t));
  for (const auto& [s, t] : b.frame().edge_list())
    edges.emplace_back(right.at(s), right.at(t));
  std::map<std::string, std::set<std::string>> val;
  for (const auto& [atom, ws] : a.valuation())
    for (const std::string& w : ws) val[atom].insert(left.at(w));
  for (const auto& [atom, ws] : b.valuation())
    for (const std::string& w : ws) val[atom].insert(right.at(w));
  return {Model(Frame(std::move(worlds), edges), val), std::move(left),
          std::move(right)};
}

Model quotient(const Model& m,
               const std::vector<std::vector<std::string>>& blocks) {
  int n = m.size();
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw std::invalid_argument("partition blocks must be nonempty");
    for (const std::string& w : blocks[b]) {
      int i = m.index_of(w);
      if (block_of[i] != -1)
        throw std::invalid_argument("world appears in two blocks: " + w);
      block_of[i] = static_cast<int>(b);
    }
  }
  for (int i = 0; i < n; ++i)
    if (block_of[i] == -1)
      throw std::invalid_argument("partition misses world: " +
                                  m.frame().world_name(i));

  for (const auto& block : blocks)
    for (const std::string& atom : m.atoms()) {
      bool first = m.holds(atom, m.index_of(block.front()));
      for (const std::string& w : block)
        if (m.holds(atom, m.index_of(w)) != first)
          throw std::invalid_argument("block mixes values of atom '" + atom +
                                      "': " + block.front() + " vs " + w);
    }

  // Name each block after its first member in world order.
  std::vector<std::string> rep(blocks.size());
  std::vector<bool> named(blocks.size(), false);
  std::vector<std::string> worlds;
  std::vector<int> block_order;
  for (int i = 0; i < n; ++i) {
    int b = block_of[i];
    if (!named[b]) {
      named[b] = true;
      rep[b] = m.frame().world_name(i);
      worlds.push_back(rep[b]);
      block_order.push_back(b);
    }
  }

  std::vector<std::pair<std::string, std::string>> edges;
  for (int bi : block_order)
    for (int bj : block_order) {
      bool related = false;
      for (int i = 0; i < n && !related; ++i)
        for (int j = 0; j < n && !related; ++j)
          if (block_of[i] == bi && block_of[j] == bj && m.frame().edge(i, j))
            related = true;
      if (related) edges.emplace_back(rep[bi], rep[bj]);
    }

  std::map<std::string, std::set<std::string>> val;
  for (const std::string& atom : m.atoms()) {
    std::set<std::string> ws;
    for (int b : block_order)
      if (m.holds(atom, m.index_of(rep[b]))) ws.insert(rep[b]);
    val.emplace(atom, std::move(ws));
  }
  return Model(Frame(std::move(worlds), edges), val);
}

}  // namespace nckit
