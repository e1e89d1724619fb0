#include "adasub/model.hpp"

#include <algorithm>
#include <map>

#include "adasub/utility.hpp"

namespace adasub {

StateSpace::StateSpace(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw InvalidArgumentError("state space must be nonempty");
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    for (std::size_t j = i + 1; j < tokens_.size(); ++j)
      if (tokens_[i] == tokens_[j])
        throw InvalidArgumentError("duplicate state token: " + tokens_[i]);
}

StateId StateSpace::index_of(const std::string& token) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    if (tokens_[i] == token) return static_cast<StateId>(i);
  return -1;
}

PartialRealization PartialRealization::with(ItemId e, StateId s) const {
  if (e < 0 || e >= items())
    throw InvalidArgumentError("item index " + std::to_string(e) + " outside ground set");
  if (observed(e)) {
    if (states_[e] != s)
      throw InvalidArgumentError("conflicting observation for item " + std::to_string(e));
    return *this;
  }
  PartialRealization out = *this;
  out.mask_ |= item_bit(e);
  out.states_[e] = s;
  return out;
}

PartialRealization PartialRealization::merged(const PartialRealization& other) const {
  if (items() != other.items())
    throw InvalidArgumentError("partial realizations over different ground sets");
  PartialRealization out = *this;
  for (ItemId e = 0; e < items(); ++e)
    if (other.observed(e)) out = out.with(e, other.at(e));
  return out;
}

bool PartialRealization::subset_of(const PartialRealization& other) const {
  if ((mask_ & other.mask_) != mask_) return false;
  for (ItemId e = 0; e < items(); ++e)
    if (observed(e) && states_[e] != other.states_[e]) return false;
  return true;
}

std::uint64_t PartialRealization::key() const {
  std::uint64_t k = mask_;
  for (ItemId e = 0; e < items(); ++e) {
    std::uint64_t s = observed(e) ? static_cast<std::uint64_t>(states_[e]) : 0;
    k |= s << (12 + 4 * e);
  }
  return k;
}

bool consistent(const Realization& phi, const PartialRealization& psi) {
  if (phi.size() != psi.items())
    throw InvalidArgumentError("realization and partial realization sizes differ");
  for (ItemId e = 0; e < phi.size(); ++e)
    if (psi.observed(e) && phi.at(e) != psi.at(e)) return false;
  return true;
}

Realization complete(const PartialRealization& psi) {
  std::vector<StateId> states(psi.items(), 0);
  for (ItemId e = 0; e < psi.items(); ++e)
    if (psi.observed(e)) states[e] = psi.at(e);
  return Realization{std::move(states)};
}

namespace {

void check_distribution(const std::vector<Rational>& probs, const std::string& what) {
  Rational sum = 0;
  for (const Rational& p : probs) {
    if (p < 0) throw InvalidArgumentError(what + ": negative probability");
    sum += p;
  }
  Rational err = sum - 1;
  if (err < 0) err = -err;
  if (to_double(err) > kTol)
    throw InvalidArgumentError(what + ": probabilities sum to " + rational_str(sum));
}

}  // namespace

Prior Prior::independent(std::vector<std::vector<Rational>> probs, int n_states) {
  Prior prior;
  prior.kind_ = Kind::independent;
  prior.n_items_ = static_cast<int>(probs.size());
  prior.n_states_ = n_states;
  for (std::size_t e = 0; e < probs.size(); ++e) {
    if (static_cast<int>(probs[e].size()) != n_states)
      throw InvalidArgumentError("independent prior row has wrong arity");
    check_distribution(probs[e], "item " + std::to_string(e));
  }
  prior.probs_ = std::move(probs);

  // Eager support expansion, guarded by the product of per-item supports.
  std::size_t product = 1;
  bool expandable = true;
  for (const auto& row : prior.probs_) {
    std::size_t support = 0;
    for (const Rational& p : row)
      if (p > 0) ++support;
    if (product > kMaxAtoms / std::max<std::size_t>(support, 1)) {
      expandable = false;
      break;
    }
    product *= support;
  }
  if (expandable && prior.n_items_ > 0) {
    std::vector<StateId> states(prior.n_items_, 0);
    std::vector<JointAtom> atoms;
    atoms.reserve(product);
    auto rec = [&](auto&& self, int e, Rational p) -> void {
      if (e == prior.n_items_) {
        atoms.push_back({Realization{states}, p});
        return;
      }
      for (StateId s = 0; s < n_states; ++s) {
        if (prior.probs_[e][s] == 0) continue;
        states[e] = s;
        self(self, e + 1, p * prior.probs_[e][s]);
      }
    };
    rec(rec, 0, Rational{1});
    prior.atoms_ = std::move(atoms);
  }
  return prior;
}

Prior Prior::joint(std::vector<JointAtom> atoms, int n_items, int n_states) {
  Prior prior;
  prior.kind_ = Kind::joint;
  prior.n_items_ = n_items;
  prior.n_states_ = n_states;
  std::map<Realization, Rational> merged;
  Rational sum = 0;
  for (auto& atom : atoms) {
    if (atom.phi.size() != n_items)
      throw InvalidArgumentError("joint atom does not cover the ground set");
    for (StateId s : atom.phi.states())
      if (s < 0 || s >= n_states) throw InvalidArgumentError("joint atom has unknown state");
    if (atom.p < 0) throw InvalidArgumentError("negative probability in joint prior");
    sum += atom.p;
    if (atom.p > 0) merged[atom.phi] += atom.p;
  }
  Rational err = sum - 1;
  if (err < 0) err = -err;
  if (to_double(err) > kTol)
    throw InvalidArgumentError("joint prior sums to " + rational_str(sum));
  prior.atoms_.reserve(merged.size());
  for (auto& [phi, p] : merged) prior.atoms_.push_back({phi, p});
  return prior;
}

const std::vector<std::vector<Rational>>& Prior::item_probs() const {
  if (kind_ != Kind::independent)
    throw InvalidArgumentError("item_probs requested on a joint prior");
  return probs_;
}

const std::vector<JointAtom>& Prior::atoms() const {
  if (atoms_.empty())
    throw GuardExceededError("support expansion exceeds " + std::to_string(kMaxAtoms) +
                             " atoms");
  return atoms_;
}

Rational Prior::mass(const PartialRealization& psi) const {
  if (kind_ == Kind::independent) {
    Rational m = 1;
    for (ItemId e = 0; e < n_items_; ++e)
      if (psi.observed(e)) m *= probs_[e][psi.at(e)];
    return m;
  }
  Rational m = 0;
  for (const JointAtom& atom : atoms_)
    if (consistent(atom.phi, psi)) m += atom.p;
  return m;
}

std::vector<std::pair<StateId, Rational>> Prior::state_distribution(
    ItemId e, const PartialRealization& psi) const {
  if (e < 0 || e >= n_items_)
    throw InvalidArgumentError("item index " + std::to_string(e) + " outside ground set");
  if (psi.observed(e)) return {{psi.at(e), Rational{1}}};
  std::vector<std::pair<StateId, Rational>> out;
  if (kind_ == Kind::independent) {
    for (StateId s = 0; s < n_states_; ++s)
      if (probs_[e][s] > 0) out.emplace_back(s, probs_[e][s]);
    if (out.empty()) throw ImpossibleObservationError("item has empty state support");
    return out;
  }
  std::vector<Rational> by_state(n_states_, Rational{0});
  Rational total = 0;
  for (const JointAtom& atom : atoms_) {
    if (!consistent(atom.phi, psi)) continue;
    by_state[atom.phi.at(e)] += atom.p;
    total += atom.p;
  }
  if (total == 0)
    throw ImpossibleObservationError("partial realization has zero prior mass");
  for (StateId s = 0; s < n_states_; ++s)
    if (by_state[s] > 0) out.emplace_back(s, by_state[s] / total);
  return out;
}

bool Prior::operator==(const Prior& o) const {
  if (kind_ != o.kind_ || n_items_ != o.n_items_ || n_states_ != o.n_states_) return false;
  if (kind_ == Kind::independent) return probs_ == o.probs_;
  if (atoms_.size() != o.atoms_.size()) return false;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (!(atoms_[i].phi == o.atoms_[i].phi) || atoms_[i].p != o.atoms_[i].p) return false;
  return true;
}

Prior conditional(const Prior& prior, const PartialRealization& psi) {
  if (psi.items() != prior.items())
    throw InvalidArgumentError("partial realization over a different ground set");
  if (prior.kind() == Prior::Kind::independent) {
    auto probs = prior.item_probs();
    for (ItemId e = 0; e < prior.items(); ++e) {
      if (!psi.observed(e)) continue;
      if (probs[e][psi.at(e)] == 0)
        throw ImpossibleObservationError("observation of item " + std::to_string(e) +
                                         " has zero probability");
      for (StateId s = 0; s < prior.states(); ++s)
        probs[e][s] = (s == psi.at(e)) ? Rational{1} : Rational{0};
    }
    return Prior::independent(std::move(probs), prior.states());
  }
  std::vector<JointAtom> atoms;
  Rational total = 0;
  for (const JointAtom& atom : prior.atoms()) {
    if (!consistent(atom.phi, psi)) continue;
    atoms.push_back(atom);
    total += atom.p;
  }
  if (total == 0)
    throw ImpossibleObservationError("partial realization has zero prior mass");
  for (JointAtom& atom : atoms) atom.p /= total;
  return Prior::joint(std::move(atoms), prior.items(), prior.states());
}

std::string constraint_name(ConstraintKind k) {
  return k == ConstraintKind::cardinality ? "cardinality" : "knapsack";
}

Instance Instance::make(std::vector<Item> items, StateSpace states, Prior prior,
                        std::shared_ptr<const UtilityFunction> utility,
                        UtilitySpec utility_spec, Rational budget,
                        ConstraintKind constraint) {
  if (items.empty()) throw InvalidArgumentError("empty ground set");
  if (items.size() > 64) throw InvalidArgumentError("at most 64 items supported");
  for (std::size_t i = 0; i + 1 < items.size(); ++i) {
    if (items[i].id == items[i + 1].id)
      throw InvalidArgumentError("duplicate item id: " + items[i].id);
    if (items[i].id > items[i + 1].id)
      throw InvalidArgumentError("items must be sorted by id");
  }
  for (const Item& item : items)
    if (item.cost < 0) throw InvalidArgumentError("negative cost for item " + item.id);
  if (budget < 0) throw InvalidArgumentError("negative budget");
  if (constraint == ConstraintKind::cardinality) {
    if (denominator(budget) != 1 || budget < 1)
      throw InvalidArgumentError("cardinality budget must be a positive integer");
    for (const Item& item : items)
      if (item.cost != 1)
        throw InvalidArgumentError("cardinality constraint requires unit costs (item " +
                                   item.id + ")");
  }
  if (prior.items() != static_cast<int>(items.size()) || prior.states() != states.size())
    throw InvalidArgumentError("prior dimensions do not match the instance");
  if (!utility) throw InvalidArgumentError("missing utility function");

  Instance inst;
  inst.items_ = std::move(items);
  inst.states_ = std::move(states);
  inst.prior_ = std::move(prior);
  inst.utility_ = std::move(utility);
  inst.utility_spec_ = std::move(utility_spec);
  inst.budget_ = std::move(budget);
  inst.constraint_ = constraint;
  return inst;
}

Rational Instance::total_cost() const {
  Rational t = 0;
  for (const Item& item : items_) t += item.cost;
  return t;
}

ItemId Instance::find_item(const std::string& id) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), id,
                             [](const Item& a, const std::string& b) { return a.id < b; });
  if (it == items_.end() || it->id != id) return -1;
  return static_cast<ItemId>(it - items_.begin());
}

int Instance::budget_rounds() const {
  if (constraint_ != ConstraintKind::cardinality)
    throw ConstraintMismatchError("budget_rounds on a knapsack instance");
  return budget_.convert_to<int>();
}

bool Instance::operator==(const Instance& o) const {
  if (items_.size() != o.items_.size()) return false;
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (items_[i].id != o.items_[i].id || items_[i].cost != o.items_[i].cost) return false;
  return states_.tokens() == o.states_.tokens() && prior_ == o.prior_ &&
         utility_spec_ == o.utility_spec_ && budget_ == o.budget_ &&
         constraint_ == o.constraint_;
}

}  // namespace adasub
