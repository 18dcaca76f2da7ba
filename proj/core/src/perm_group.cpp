#include "tatekit/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tatekit {

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<unsigned>(x);
  return r;
}

Perm perm_identity(unsigned degree) {
  Perm r(degree);
  for (unsigned x = 0; x < degree; ++x) r[x] = x;
  return r;
}

FinGroup::FinGroup() {
  order_ = 1;
  mul_ = {0};
  inv_ = {0};
  elems_ = {Perm{}};
  bfs_edge_ = {{0, 0}};
}

bool FinGroup::is_abelian() const {
  for (unsigned g = 0; g < order_; ++g)
    for (unsigned h = g + 1; h < order_; ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

std::vector<unsigned> FinGroup::word_of(unsigned g) const {
  std::vector<unsigned> w;
  while (g != 0) {
    w.push_back(bfs_edge_[g].second);
    g = bfs_edge_[g].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

unsigned FinGroup::element_order(unsigned g) const {
  unsigned n = 1, x = g;
  while (x != 0) {
    x = mul(x, g);
    ++n;
  }
  return n;
}

FinGroup group_from_permutations(unsigned degree, const std::vector<Perm>& generators,
                                 unsigned max_order) {
  for (const Perm& p : generators) {
    if (p.size() != degree) throw Error("generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (unsigned img : p) {
      if (img >= degree || seen[img]) throw Error("generator is not a bijection");
      seen[img] = 1;
    }
  }
  FinGroup g;
  g.degree_ = degree;
  std::map<Perm, unsigned> index;
  Perm id = perm_identity(degree);
  g.elems_ = {id};
  g.bfs_edge_ = {{0u, 0u}};
  index[id] = 0;

  // BFS closure, multiplying on the right by generators in listed order
  for (std::size_t head = 0; head < g.elems_.size(); ++head) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Perm t = perm_compose(g.elems_[head], generators[s]);
      if (index.emplace(t, g.elems_.size()).second) {
        g.elems_.push_back(t);
        g.bfs_edge_.emplace_back(static_cast<unsigned>(head), static_cast<unsigned>(s));
        if (g.elems_.size() > max_order) throw GroupTooLarge("group order exceeds configured bound");
      }
    }
  }
  g.order_ = static_cast<unsigned>(g.elems_.size());

  g.gens_.clear();
  for (const Perm& p : generators) g.gens_.push_back(index.at(p));

  g.mul_.assign(static_cast<std::size_t>(g.order_) * g.order_, 0);
  for (unsigned a = 0; a < g.order_; ++a)
    for (unsigned b = 0; b < g.order_; ++b)
      g.mul_[a * g.order_ + b] = index.at(perm_compose(g.elems_[a], g.elems_[b]));
  g.inv_.assign(g.order_, 0);
  for (unsigned a = 0; a < g.order_; ++a) g.inv_[a] = index.at(perm_inverse(g.elems_[a]));
  return g;
}

Subgroup::Subgroup(const FinGroup& parent, std::vector<unsigned> members)
    : parent_(std::make_shared<FinGroup>(parent)),
      members_(std::move(members)),
      in_sub_(parent.order(), 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (unsigned m : members_) in_sub_[m] = 1;
  if (members_.empty() || members_[0] != 0) throw Error("subgroup must contain the identity");
  for (unsigned a : members_) {
    if (!in_sub_[parent.inv(a)]) throw Error("subgroup not closed under inverse");
    for (unsigned b : members_)
      if (!in_sub_[parent.mul(a, b)]) throw Error("subgroup not closed under multiplication");
  }
}

Subgroup Subgroup::generated_by(const FinGroup& parent, const std::vector<unsigned>& gens) {
  std::vector<char> in(parent.order(), 0);
  std::vector<unsigned> mem = {0};
  in[0] = 1;
  for (std::size_t head = 0; head < mem.size(); ++head)
    for (unsigned s : gens) {
      unsigned t = parent.mul(mem[head], s);
      if (!in[t]) {
        in[t] = 1;
        mem.push_back(t);
      }
    }
  return Subgroup(parent, std::move(mem));
}

Subgroup Subgroup::full(const FinGroup& parent) {
  std::vector<unsigned> all(parent.order());
  for (unsigned i = 0; i < parent.order(); ++i) all[i] = i;
  return Subgroup(parent, std::move(all));
}

bool Subgroup::is_normal() const {
  for (unsigned g = 0; g < parent_->order(); ++g)
    for (unsigned h : members_)
      if (!in_sub_[parent_->mul(parent_->mul(g, h), parent_->inv(g))]) return false;
  return true;
}

bool Subgroup::is_cyclic() const {
  for (unsigned h : members_)
    if (parent_->element_order(h) == order()) return true;
  return false;
}

std::vector<unsigned> Subgroup::coset_representatives(Side side) const {
  std::vector<char> covered(parent_->order(), 0);
  std::vector<unsigned> reps;
  for (unsigned g = 0; g < parent_->order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (unsigned h : members_)
      covered[side == Side::Left ? parent_->mul(g, h) : parent_->mul(h, g)] = 1;
  }
  return reps;
}

std::vector<unsigned> Subgroup::right_coset_rep_of() const {
  std::vector<unsigned> rep(parent_->order(), 0);
  std::vector<unsigned> reps = coset_representatives(Side::Right);
  for (unsigned r : reps)
    for (unsigned h : members_) rep[parent_->mul(h, r)] = r;
  return rep;
}

std::vector<unsigned> Subgroup::retraction_to_subgroup() const {
  std::vector<unsigned> rep = right_coset_rep_of();
  std::vector<unsigned> p(parent_->order());
  for (unsigned g = 0; g < parent_->order(); ++g) p[g] = parent_->mul(g, parent_->inv(rep[g]));
  return p;
}

SubgroupView subgroup_view(const Subgroup& h) {
  const FinGroup& G = h.parent();
  // realize the subgroup by its action on itself extended to the parent's
  // degree: use left-translation permutations on the member list
  const auto& mem = h.members();
  std::vector<int> pos(G.order(), -1);
  for (std::size_t i = 0; i < mem.size(); ++i) pos[mem[i]] = static_cast<int>(i);
  // pick a small deterministic generating set by greedy closure
  std::vector<unsigned> chosen;
  {
    std::vector<char> closed(G.order(), 0);
    closed[0] = 1;
    std::size_t closed_count = 1;
    for (unsigned m : mem) {
      if (m == 0 || closed[m]) continue;
      chosen.push_back(m);
      std::vector<unsigned> bfs = {0};
      std::fill(closed.begin(), closed.end(), 0);
      closed[0] = 1;
      for (std::size_t head = 0; head < bfs.size(); ++head)
        for (unsigned s : chosen) {
          unsigned t = G.mul(bfs[head], s);
          if (!closed[t]) {
            closed[t] = 1;
            bfs.push_back(t);
          }
        }
      closed_count = bfs.size();
      if (closed_count == mem.size()) break;
    }
  }
  std::vector<Perm> gens;
  for (unsigned m : chosen) {
    Perm p(mem.size());
    for (std::size_t i = 0; i < mem.size(); ++i) p[i] = static_cast<unsigned>(pos[G.mul(m, mem[i])]);
    gens.push_back(p);
  }
  SubgroupView view;
  view.group = group_from_permutations(static_cast<unsigned>(mem.size()), gens, G.order());
  // translate indices: subgroup element k corresponds to the permutation
  // sending pos(identity)=0 to pos(g), i.e. g = mem[perm[0]]
  view.to_parent.assign(view.group.order(), 0);
  for (unsigned k = 0; k < view.group.order(); ++k) view.to_parent[k] = mem[view.group.perm_of(k)[0]];
  view.from_parent.assign(G.order(), -1);
  for (unsigned k = 0; k < view.group.order(); ++k) view.from_parent[view.to_parent[k]] = static_cast<int>(k);
  return view;
}

std::vector<Subgroup> cyclic_subgroups(const FinGroup& g) {
  std::set<std::vector<unsigned>> seen;
  std::vector<Subgroup> out;
  for (unsigned x = 0; x < g.order(); ++x) {
    Subgroup s = Subgroup::generated_by(g, {x});
    if (seen.insert(s.members()).second) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members() < b.members();
  });
  return out;
}

std::vector<Subgroup> all_subgroups(const FinGroup& g) {
  std::set<std::vector<unsigned>> seen;
  std::vector<std::vector<unsigned>> queue;
  auto push = [&](const Subgroup& s) {
    if (seen.insert(s.members()).second) queue.push_back(s.members());
  };
  push(Subgroup::trivial(g));
  for (const Subgroup& s : cyclic_subgroups(g)) push(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::vector<unsigned> base = queue[head];
    for (unsigned x = 1; x < g.order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<unsigned> gens = base;
      gens.push_back(x);
      push(Subgroup::generated_by(g, gens));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& mem : seen) out.emplace_back(g, mem);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members() < b.members();
  });
  return out;
}

GSet::GSet(const FinGroup& grp, unsigned size, std::vector<unsigned> action_table)
    : grp_(std::make_shared<FinGroup>(grp)), size_(size), table_(std::move(action_table)) {
  if (table_.size() != static_cast<std::size_t>(grp.order()) * size) throw Error("action table size mismatch");
  for (unsigned x = 0; x < size_; ++x)
    if (act(0, x) != x) throw Error("identity does not act trivially");
  for (unsigned g = 0; g < grp.order(); ++g)
    for (unsigned h = 0; h < grp.order(); ++h)
      for (unsigned x = 0; x < size_; ++x)
        if (act(grp.mul(g, h), x) != act(g, act(h, x))) throw Error("action is not a homomorphism");
}

GSet GSet::from_generator_actions(const FinGroup& grp, unsigned size,
                                  const std::vector<Perm>& generator_images) {
  if (generator_images.size() != grp.generators().size())
    throw Error("one action permutation per group generator required");
  std::vector<unsigned> table(static_cast<std::size_t>(grp.order()) * size);
  for (unsigned x = 0; x < size; ++x) table[x] = x;  // identity row
  // fill rows along BFS words: act(g) = act(parent) followed by act(gen)
  for (unsigned g = 1; g < grp.order(); ++g) {
    auto [par, slot] = grp.parent_edge(g);
    // g = par * gen: act(g, x) = act(par, act(gen, x))
    const Perm& gen = generator_images[slot];
    if (gen.size() != size) throw Error("generator action degree mismatch");
    for (unsigned x = 0; x < size; ++x) table[g * size + x] = table[par * size + gen[x]];
  }
  return GSet(grp, size, std::move(table));
}

GSet GSet::regular(const FinGroup& grp) {
  std::vector<unsigned> table(static_cast<std::size_t>(grp.order()) * grp.order());
  for (unsigned g = 0; g < grp.order(); ++g)
    for (unsigned x = 0; x < grp.order(); ++x) table[g * grp.order() + x] = grp.mul(g, x);
  return GSet(grp, grp.order(), std::move(table));
}

GSet GSet::on_cosets(const Subgroup& h) {
  const FinGroup& G = h.parent();
  std::vector<unsigned> reps = h.coset_representatives(Subgroup::Side::Left);
  std::vector<int> coset_of(G.order(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (unsigned k : h.members()) coset_of[G.mul(reps[i], k)] = static_cast<int>(i);
  std::vector<unsigned> table(static_cast<std::size_t>(G.order()) * reps.size());
  for (unsigned g = 0; g < G.order(); ++g)
    for (std::size_t i = 0; i < reps.size(); ++i)
      table[g * reps.size() + i] = static_cast<unsigned>(coset_of[G.mul(g, reps[i])]);
  return GSet(G, static_cast<unsigned>(reps.size()), std::move(table));
}

GSet GSet::disjoint_union(const GSet& a, const GSet& b) {
  if (!(a.group() == b.group())) throw Error("disjoint union needs a common group");
  const FinGroup& g = a.group();
  unsigned size = a.size() + b.size();
  std::vector<unsigned> table(static_cast<std::size_t>(g.order()) * size);
  for (unsigned e = 0; e < g.order(); ++e) {
    for (unsigned x = 0; x < a.size(); ++x) table[e * size + x] = a.act(e, x);
    for (unsigned x = 0; x < b.size(); ++x) table[e * size + a.size() + x] = a.size() + b.act(e, x);
  }
  return GSet(g, size, std::move(table));
}

Subgroup GSet::stabilizer_of(unsigned x) const {
  std::vector<unsigned> mem;
  for (unsigned g = 0; g < grp_->order(); ++g)
    if (act(g, x) == x) mem.push_back(g);
  return Subgroup(*grp_, std::move(mem));
}

std::vector<GSet::Orbit> GSet::orbits_and_stabilizers() const {
  std::vector<char> visited(size_, 0);
  std::vector<Orbit> orbits;
  for (unsigned x = 0; x < size_; ++x) {
    if (visited[x]) continue;
    Orbit o{{}, x, stabilizer_of(x)};
    for (unsigned g = 0; g < grp_->order(); ++g) {
      unsigned y = act(g, x);
      if (!visited[y]) {
        visited[y] = 1;
        o.points.push_back(y);
      }
    }
    std::sort(o.points.begin(), o.points.end());
    orbits.push_back(std::move(o));
  }
  return orbits;
}

GSet GSet::restricted_to_orbits(const std::vector<unsigned>& which,
                                std::vector<unsigned>* point_map) const {
  auto orbits = orbits_and_stabilizers();
  std::vector<unsigned> points;
  for (unsigned oi : which) {
    if (oi >= orbits.size()) throw Error("orbit index out of range");
    for (unsigned p : orbits[oi].points) points.push_back(p);
  }
  std::sort(points.begin(), points.end());
  std::vector<int> newpos(size_, -1);
  for (std::size_t i = 0; i < points.size(); ++i) newpos[points[i]] = static_cast<int>(i);
  std::vector<unsigned> table(static_cast<std::size_t>(grp_->order()) * points.size());
  for (unsigned g = 0; g < grp_->order(); ++g)
    for (std::size_t i = 0; i < points.size(); ++i)
      table[g * points.size() + i] = static_cast<unsigned>(newpos[act(g, points[i])]);
  if (point_map) *point_map = points;
  return GSet(*grp_, static_cast<unsigned>(points.size()), std::move(table));
}

}  // namespace tatekit
