#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adasub/model.hpp"
#include "adasub/types.hpp"

namespace adasub {

// f(A, phi): nonnegative, deterministic utility of selecting A when the
// hidden realization is phi.
class UtilityFunction {
 public:
  virtual ~UtilityFunction() = default;

  virtual Rational value(ItemSet selected, const Realization& phi) const = 0;

  // True when value() reads only the states of items in `selected`. All
  // bundled families are state-local, which lets conditional expectations
  // skip enumerating unobserved items.
  virtual bool state_local() const { return false; }

  virtual std::string kind() const = 0;
};

// f(A, phi) = sum over selected active items of w_e.
class StochasticModular final : public UtilityFunction {
 public:
  StochasticModular(std::vector<Rational> weights, StateId active_state);
  Rational value(ItemSet selected, const Realization& phi) const override;
  bool state_local() const override { return true; }
  std::string kind() const override { return "stochastic-modular"; }
  const std::vector<Rational>& weights() const { return weights_; }
  StateId active_state() const { return active_; }

 private:
  std::vector<Rational> weights_;
  StateId active_;
};

// Weight of edges crossing (A, E \ A) on a fixed graph; ignores states.
class GraphCut final : public UtilityFunction {
 public:
  struct Edge {
    ItemId a, b;
    Rational w;
  };
  explicit GraphCut(std::vector<Edge> edges);
  Rational value(ItemSet selected, const Realization& phi) const override;
  bool state_local() const override { return true; }
  std::string kind() const override { return "graph-cut"; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<Edge> edges_;
};

// lambda * modular + (1 - lambda) * cut.
class Blend final : public UtilityFunction {
 public:
  Blend(Rational lambda, std::shared_ptr<const UtilityFunction> modular,
        std::shared_ptr<const UtilityFunction> cut);
  Rational value(ItemSet selected, const Realization& phi) const override;
  bool state_local() const override;
  std::string kind() const override { return "blend"; }
  const Rational& lambda() const { return lambda_; }
  const UtilityFunction& modular_part() const { return *modular_; }
  const UtilityFunction& cut_part() const { return *cut_; }

 private:
  Rational lambda_;
  std::shared_ptr<const UtilityFunction> modular_;
  std::shared_ptr<const UtilityFunction> cut_;
};

// Number of universe elements covered by selected items in the active state.
class StochasticCoverage final : public UtilityFunction {
 public:
  // covers[e] = bitmask over universe elements covered by item e when active.
  StochasticCoverage(std::vector<std::uint64_t> covers, StateId active_state,
                     int universe_size);
  Rational value(ItemSet selected, const Realization& phi) const override;
  bool state_local() const override { return true; }
  std::string kind() const override { return "stochastic-coverage"; }

 private:
  std::vector<std::uint64_t> covers_;
  StateId active_;
  int universe_;
};

// Builds a utility from its file-format description; items must already be
// sorted. Throws InvalidArgumentError on unknown kinds or bad parameters.
std::shared_ptr<const UtilityFunction> make_utility(const UtilitySpec& spec,
                                                    const std::vector<Item>& items,
                                                    const StateSpace& states);

// E[f(A, Phi) | Phi ~ psi], exact.
Rational expected_utility(const Instance& inst, ItemSet selected,
                          const PartialRealization& psi);

// Delta(e | psi): may be negative. Items already in dom(psi) contribute 0.
Rational marginal_item(const Instance& inst, ItemId e, const PartialRealization& psi);

// Delta(S | psi) for a set of items.
Rational marginal_set(const Instance& inst, ItemSet s, const PartialRealization& psi);

}  // namespace adasub
