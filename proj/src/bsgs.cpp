#include "sylsync/bsgs.hpp"

#include <algorithm>

#include "sylsync/error.hpp"

namespace sylsync {

namespace {

bool fixes_prefix(const Permutation& g, const std::vector<Point>& base, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j)
    if (g[base[j]] != base[j]) return false;
  return true;
}

}  // namespace

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

void BsgsGroup::rebuild_level(std::size_t i) {
  Level& level = levels_[i];
  level.base_point = base_[i];
  level.orbit.assign(1, base_[i]);
  level.orbit_pos.assign(degree_, -1);
  level.orbit_pos[base_[i]] = 0;
  level.reps.assign(1, Permutation::identity(degree_));
  level.rep_inverses.assign(1, Permutation::identity(degree_));

  std::vector<const Permutation*> gens;
  for (const auto& s : strong_.gens)
    if (fixes_prefix(s, base_, i)) gens.push_back(&s);

  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const Permutation* s : gens) {
      Point image = (*s)[level.orbit[k]];
      if (level.orbit_pos[image] >= 0) continue;
      level.orbit_pos[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      Permutation rep = compose(level.reps[k], *s);
      level.rep_inverses.push_back(rep.inverse());
      level.reps.push_back(std::move(rep));
    }
  }
}

std::pair<Permutation, std::size_t> BsgsGroup::sift(const Permutation& g,
                                                    std::size_t from_level) const {
  if (g.degree() != degree_)
    throw Error(Errc::degree_mismatch, "sift: element degree " + std::to_string(g.degree()));
  Permutation h = g;
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    std::int32_t pos = level.orbit_pos[h[level.base_point]];
    if (pos < 0) return {std::move(h), i};
    if (pos > 0) h = compose(h, level.rep_inverses[static_cast<std::size_t>(pos)]);
  }
  return {std::move(h), levels_.size()};
}

bool BsgsGroup::contains(const Permutation& g) const {
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

BsgsGroup BsgsGroup::build(const GenSet& gens, std::span<const Point> base_prefix,
                           const std::optional<BigInt>& known_order) {
  gens.validate();
  BsgsGroup G;
  G.degree_ = gens.degree;
  G.input_ = gens;
  G.strong_.degree = gens.degree;
  for (const auto& g : gens.gens) {
    if (g.is_identity()) continue;
    if (std::find(G.strong_.gens.begin(), G.strong_.gens.end(), g) != G.strong_.gens.end())
      continue;
    G.strong_.gens.push_back(g);
  }
  for (Point b : base_prefix) {
    if (b >= G.degree_) throw Error(Errc::invalid_argument, "base point out of range");
    if (std::find(G.base_.begin(), G.base_.end(), b) == G.base_.end()) G.base_.push_back(b);
  }
  for (const auto& s : G.strong_.gens) {
    if (fixes_prefix(s, G.base_, G.base_.size()))
      G.base_.push_back(static_cast<Point>(s.first_moved_point()));
  }
  G.levels_.resize(G.base_.size());
  for (std::size_t i = 0; i < G.base_.size(); ++i) G.rebuild_level(i);

  auto transversal_product = [&G] {
    BigInt r = 1;
    for (const auto& level : G.levels_) r *= level.orbit.size();
    return r;
  };
  auto reached_known = [&] { return known_order && transversal_product() == *known_order; };

  if (!reached_known()) {
    // Holt's formulation: verify levels bottom-up; a failing Schreier
    // generator becomes a strong generator and verification resumes at the
    // deepest level it touched.
    std::size_t i = G.base_.size();
    while (i > 0) {
      std::size_t level_index = i - 1;
      bool added = false;
      const Level& lv = G.levels_[level_index];
      std::vector<std::size_t> level_gens;
      for (std::size_t s = 0; s < G.strong_.gens.size(); ++s)
        if (fixes_prefix(G.strong_.gens[s], G.base_, level_index)) level_gens.push_back(s);

      for (std::size_t k = 0; !added && k < lv.orbit.size(); ++k) {
        for (std::size_t s : level_gens) {
          const Permutation& gen = G.strong_.gens[s];
          Point image = gen[lv.orbit[k]];
          auto pos = static_cast<std::size_t>(lv.orbit_pos[image]);
          Permutation schreier = compose(compose(lv.reps[k], gen),
                                         lv.rep_inverses[pos]);
          if (schreier.is_identity()) continue;
          auto [residue, stop] = G.sift(schreier, level_index + 1);
          if (stop == G.levels_.size() && residue.is_identity()) continue;

          if (stop == G.levels_.size()) {
            G.base_.push_back(static_cast<Point>(residue.first_moved_point()));
            G.levels_.emplace_back();
          }
          G.strong_.gens.push_back(std::move(residue));
          for (std::size_t j = level_index + 1; j <= stop && j < G.levels_.size(); ++j)
            G.rebuild_level(j);
          i = stop + 1;
          if (i > G.levels_.size()) i = G.levels_.size();
          added = true;
          break;
        }
      }
      if (added && reached_known()) break;
      if (!added) --i;
    }
  }
  G.order_ = transversal_product();
  return G;
}

Permutation BsgsGroup::random_element(RngStream& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const Level& level = levels_[i];
    std::size_t k = static_cast<std::size_t>(rng.below(level.orbit.size()));
    if (k > 0) g = compose(g, level.reps[k]);
  }
  return g;
}

bool BsgsGroup::for_each_element(const std::function<bool(const Permutation&)>& visit) const {
  // depth-first over levels, deepest factor applied first
  std::vector<Permutation> partial(levels_.size() + 1);
  partial[levels_.size()] = Permutation::identity(degree_);
  std::vector<std::size_t> choice(levels_.size(), 0);
  if (levels_.empty()) return visit(partial[0]);

  // odometer with level 0 fastest; partial[i] = r_{k-1} * ... * r_i
  for (std::size_t i = levels_.size(); i-- > 0;)
    partial[i] = compose(partial[i + 1], levels_[i].reps[0]);
  for (;;) {
    if (!visit(partial[0])) return false;
    std::size_t i = 0;
    while (i < levels_.size() && choice[i] + 1 == levels_[i].orbit.size()) {
      choice[i] = 0;
      ++i;
    }
    if (i == levels_.size()) return true;
    ++choice[i];
    for (std::size_t j = i + 1; j-- > 0;)
      partial[j] = compose(partial[j + 1], levels_[j].reps[choice[j]]);
  }
}

}  // namespace sylsync
