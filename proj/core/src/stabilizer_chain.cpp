#include "polycirc/stabilizer_chain.hpp"

#include <algorithm>
#include <string>

#include "polycirc/errors.hpp"

namespace polycirc {
namespace {

// Product replacement (Celler, Leedham-Green, Murray, Niemeyer, O'Brien)
// with an accumulator ("rattle").
class ProductReplacement {
 public:
  ProductReplacement(std::span<const Permutation> gens, std::uint64_t seed) : rng_(seed) {
    const std::size_t slots = std::max<std::size_t>(10, gens.size());
    for (std::size_t i = 0; i < slots; ++i) state_.push_back(gens[i % gens.size()]);
    accumulator_ = Permutation::identity(gens.front().degree());
    for (int i = 0; i < 50; ++i) next();
  }

  Permutation next() {
    std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
    std::size_t s = pick(rng_);
    std::size_t t = pick(rng_);
    while (t == s) t = pick(rng_);
    if (rng_() & 1)
      state_[s] = state_[s] * state_[t];
    else
      state_[s] = state_[t] * state_[s];
    accumulator_ = accumulator_ * state_[s];
    return accumulator_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Permutation> state_;
  Permutation accumulator_;
};

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 const ChainOptions& options)
    : degree_(degree) {
  if (degree == 0) throw PreconditionError("stabilizer chain needs degree >= 1");
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw PreconditionError("generator degree " + std::to_string(g.degree()) +
                              " does not match group degree " + std::to_string(degree));
    if (!g.is_identity()) gens.push_back(g);
  }
  for (Point b : options.base_prefix) {
    if (b >= degree) throw PreconditionError("base point " + std::to_string(b) + " out of range");
    if (std::find(base_.begin(), base_.end(), b) != base_.end())
      throw PreconditionError("repeated base point " + std::to_string(b));
    add_level(b);
  }
  if (!gens.empty()) {
    randomized_phase(gens, options);
    for (const auto& g : gens) {
      auto r = sift(g);
      if (!r.member()) add_strong_generator(r.residue, r.level);
    }
    complete_deterministically();
  }
  order_ = order_from(0);
}

BigInt StabilizerChain::order_from(std::size_t level) const {
  BigInt result = 1;
  for (std::size_t i = level; i < levels_.size(); ++i) result *= levels_[i].orbit.size();
  return result;
}

const Permutation& StabilizerChain::transversal(std::size_t level, Point u) const {
  const Level& l = levels_.at(level);
  if (u >= degree_ || l.pos[u] < 0) throw PreconditionError("point not in basic orbit");
  return l.trans[static_cast<std::size_t>(l.pos[u])];
}

const Permutation& StabilizerChain::inverse_transversal(std::size_t level, Point u) const {
  const Level& l = levels_.at(level);
  if (u >= degree_ || l.pos[u] < 0) throw PreconditionError("point not in basic orbit");
  return l.inv_trans[static_cast<std::size_t>(l.pos[u])];
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& g, std::size_t from_level) const {
  if (g.degree() != degree_) throw PreconditionError("sifted permutation has the wrong degree");
  Permutation h = g;
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    const Point u = h[l.base_point];
    if (l.pos[u] < 0) return {std::move(h), i};
    if (u != l.base_point) h = h * l.inv_trans[static_cast<std::size_t>(l.pos[u])];
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).member();
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (const Level& l : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, l.orbit.size() - 1);
    g = l.trans[pick(rng)] * g;
  }
  return g;
}

void StabilizerChain::add_level(Point base_point) {
  Level l;
  l.base_point = base_point;
  l.orbit.push_back(base_point);
  l.pos.assign(degree_, -1);
  l.pos[base_point] = 0;
  l.trans.push_back(Permutation::identity(degree_));
  l.inv_trans.push_back(Permutation::identity(degree_));
  levels_.push_back(std::move(l));
  base_.push_back(base_point);
}

void StabilizerChain::add_strong_generator(const Permutation& h, std::size_t level) {
  if (level == levels_.size()) add_level(h.first_moved_point());
  strong_.push_back(h);
  for (std::size_t i = 0; i <= level; ++i) {
    levels_[i].gens.push_back(h);
    extend_orbit(i, h);
  }
}

void StabilizerChain::extend_orbit(std::size_t level, const Permutation& h) {
  Level& l = levels_[level];
  auto try_add = [&](std::size_t idx, const Permutation& g) {
    const Point w = g[l.orbit[idx]];
    if (l.pos[w] >= 0) return;
    l.pos[w] = static_cast<std::int32_t>(l.orbit.size());
    l.orbit.push_back(w);
    Permutation t = l.trans[idx] * g;
    l.inv_trans.push_back(inverse(t));
    l.trans.push_back(std::move(t));
  };
  const std::size_t old_size = l.orbit.size();
  for (std::size_t idx = 0; idx < old_size; ++idx) try_add(idx, h);
  for (std::size_t idx = old_size; idx < l.orbit.size(); ++idx)
    for (std::size_t gi = 0; gi < l.gens.size(); ++gi) try_add(idx, l.gens[gi]);
}

void StabilizerChain::randomized_phase(std::span<const Permutation> generators,
                                       const ChainOptions& options) {
  ProductReplacement pr(generators, options.seed);
  unsigned quiet = 0;
  while (quiet < options.random_stop) {
    auto r = sift(pr.next());
    if (r.member()) {
      ++quiet;
    } else {
      add_strong_generator(r.residue, r.level);
      quiet = 0;
    }
  }
}

void StabilizerChain::complete_deterministically() {
  // Schreier's lemma: G^(i+1) is generated by t_u s t_{u^s}^-1 over u in the
  // basic orbit and s in S_i. Check levels bottom-up; any non-sifting
  // Schreier generator is added and checking resumes at its level.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t idx = 0; idx < levels_[level].orbit.size() && !restarted; ++idx) {
      for (std::size_t gi = 0; gi < levels_[level].gens.size(); ++gi) {
        const Level& l = levels_[level];
        const Permutation& s = l.gens[gi];
        const Point w = s[l.orbit[idx]];
        Permutation schreier = l.trans[idx] * s * l.inv_trans[static_cast<std::size_t>(l.pos[w])];
        if (schreier.is_identity()) continue;
        auto r = sift(schreier, level + 1);
        if (!r.member()) {
          const std::size_t target = r.level;
          add_strong_generator(r.residue, target);
          i = static_cast<std::ptrdiff_t>(target);
          restarted = true;
          break;
        }
      }
    }
    if (!restarted) --i;
  }
}

}  // namespace polycirc
