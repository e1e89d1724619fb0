#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adasub/errors.hpp"
#include "adasub/types.hpp"

namespace adasub {

class UtilityFunction;

struct Item {
  std::string id;
  Rational cost;
};

// Finite ordered list of state tokens shared by every item.
class StateSpace {
 public:
  StateSpace() = default;
  explicit StateSpace(std::vector<std::string> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(StateId s) const { return tokens_[s]; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  // -1 when the token is unknown.
  StateId index_of(const std::string& token) const;

 private:
  std::vector<std::string> tokens_;
};

// Total assignment of a state to every item.
class Realization {
 public:
  Realization() = default;
  explicit Realization(std::vector<StateId> states) : states_(std::move(states)) {}

  int size() const { return static_cast<int>(states_.size()); }
  StateId at(ItemId e) const { return states_[e]; }
  StateId& at(ItemId e) { return states_[e]; }
  const std::vector<StateId>& states() const { return states_; }

  bool operator==(const Realization& o) const { return states_ == o.states_; }
  bool operator<(const Realization& o) const { return states_ < o.states_; }

 private:
  std::vector<StateId> states_;
};

// The observations accumulated so far: states of a subset of items.
class PartialRealization {
 public:
  PartialRealization() = default;
  explicit PartialRealization(int n) : states_(n, -1) {}

  int items() const { return static_cast<int>(states_.size()); }
  ItemSet domain() const { return mask_; }
  int observed_count() const { return set_size(mask_); }
  bool observed(ItemId e) const { return set_has(mask_, e); }
  StateId at(ItemId e) const { return states_[e]; }

  // Returns a copy extended with (e, s). Throws InvalidArgumentError when e is
  // outside the ground set or already observed with a different state.
  PartialRealization with(ItemId e, StateId s) const;

  // Union of two observation sets; throws InvalidArgumentError on conflict.
  PartialRealization merged(const PartialRealization& other) const;

  bool subset_of(const PartialRealization& other) const;

  // Packs (domain, states) into one key; requires n <= 12 and |O| <= 16.
  // Oracles stay within that envelope by their size guards.
  std::uint64_t key() const;
  static bool keyable(int n, int n_states) { return n <= 12 && n_states <= 16; }

  bool operator==(const PartialRealization& o) const {
    return mask_ == o.mask_ && states_ == o.states_;
  }

 private:
  ItemSet mask_ = 0;
  std::vector<StateId> states_;
};

bool consistent(const Realization& phi, const PartialRealization& psi);

// Fills unobserved items with state 0. Only meaningful together with
// state-local utilities evaluated on subsets of the observed domain.
Realization complete(const PartialRealization& psi);

struct JointAtom {
  Realization phi;
  Rational p;
};

// Distribution over realizations: either an independent per-item categorical
// product or an explicit joint atom list. Immutable and thread-safe.
class Prior {
 public:
  enum class Kind { independent, joint };

  // probs[e][s] = Pr[phi(e) = s]; each row sums to 1 within tolerance.
  static Prior independent(std::vector<std::vector<Rational>> probs, int n_states);
  static Prior joint(std::vector<JointAtom> atoms, int n_items, int n_states);

  Kind kind() const { return kind_; }
  int items() const { return n_items_; }
  int states() const { return n_states_; }

  const std::vector<std::vector<Rational>>& item_probs() const;

  // The support U+ as explicit atoms, in canonical (lexicographic) order.
  // Independent priors are expanded eagerly when the support product is at
  // most kMaxAtoms; beyond that atoms() throws GuardExceededError.
  bool has_atoms() const { return !atoms_.empty(); }
  const std::vector<JointAtom>& atoms() const;

  // Pr[Phi ~ psi] (exact).
  Rational mass(const PartialRealization& psi) const;

  // Conditional state distribution of item e given psi; observed items yield
  // a point mass. Only states with positive probability are listed.
  // Throws ImpossibleObservationError when Pr[Phi ~ psi] = 0.
  std::vector<std::pair<StateId, Rational>> state_distribution(
      ItemId e, const PartialRealization& psi) const;

  bool operator==(const Prior& o) const;

  static constexpr std::size_t kMaxAtoms = 1u << 16;

 private:
  Prior() = default;
  Kind kind_ = Kind::joint;
  int n_items_ = 0;
  int n_states_ = 0;
  std::vector<std::vector<Rational>> probs_;  // independent form
  std::vector<JointAtom> atoms_;              // joint form / expansion
};

// Φ restricted to realizations consistent with psi, renormalized.
Prior conditional(const Prior& prior, const PartialRealization& psi);

enum class ConstraintKind { cardinality, knapsack };

std::string constraint_name(ConstraintKind k);

// Utility description as parsed from the instance file; kept verbatim so
// instances serialize back without loss.
struct UtilitySpec {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> params;  // repeated keys allowed

  bool operator==(const UtilitySpec& o) const = default;
};

class Instance {
 public:
  // Items must arrive sorted by id; make() validates all model invariants
  // (unique ids, nonnegative costs, unit costs + integer positive budget
  // under cardinality, probability normalization within 1e-9).
  static Instance make(std::vector<Item> items, StateSpace states, Prior prior,
                       std::shared_ptr<const UtilityFunction> utility,
                       UtilitySpec utility_spec, Rational budget,
                       ConstraintKind constraint);

  int n() const { return static_cast<int>(items_.size()); }
  const std::vector<Item>& items() const { return items_; }
  const Item& item(ItemId e) const { return items_[e]; }
  const Rational& cost(ItemId e) const { return items_[e].cost; }
  Rational total_cost() const;
  // -1 when no such id exists.
  ItemId find_item(const std::string& id) const;
  ItemSet all_items() const { return n() == 64 ? ~ItemSet{0} : (ItemSet{1} << n()) - 1; }

  const StateSpace& states() const { return states_; }
  const Prior& prior() const { return prior_; }
  const UtilityFunction& utility() const { return *utility_; }
  std::shared_ptr<const UtilityFunction> utility_ptr() const { return utility_; }
  const UtilitySpec& utility_spec() const { return utility_spec_; }
  const Rational& budget() const { return budget_; }
  ConstraintKind constraint() const { return constraint_; }
  bool is_cardinality() const { return constraint_ == ConstraintKind::cardinality; }
  // Budget as a round count; only valid under the cardinality constraint.
  int budget_rounds() const;

  bool operator==(const Instance& o) const;

 private:
  Instance() = default;
  std::vector<Item> items_;
  StateSpace states_;
  Prior prior_;
  std::shared_ptr<const UtilityFunction> utility_;
  UtilitySpec utility_spec_;
  Rational budget_;
  ConstraintKind constraint_ = ConstraintKind::cardinality;
};

}  // namespace adasub
