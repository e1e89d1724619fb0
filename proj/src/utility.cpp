#include "adasub/utility.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "adasub/errors.hpp"

namespace adasub {

StochasticModular::StochasticModular(std::vector<Rational> weights, StateId active_state)
    : weights_(std::move(weights)), active_(active_state) {
  for (const Rational& w : weights_)
    if (w < 0) throw InvalidArgumentError("stochastic-modular weights must be nonnegative");
}

Rational StochasticModular::value(ItemSet selected, const Realization& phi) const {
  Rational total = 0;
  for (ItemId e = 0; e < static_cast<ItemId>(weights_.size()); ++e)
    if (set_has(selected, e) && phi.at(e) == active_) total += weights_[e];
  return total;
}

GraphCut::GraphCut(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (const Edge& edge : edges_) {
    if (edge.a == edge.b) throw InvalidArgumentError("graph-cut self loop");
    if (edge.w < 0) throw InvalidArgumentError("graph-cut weights must be nonnegative");
  }
}

Rational GraphCut::value(ItemSet selected, const Realization&) const {
  Rational total = 0;
  for (const Edge& edge : edges_)
    if (set_has(selected, edge.a) != set_has(selected, edge.b)) total += edge.w;
  return total;
}

Blend::Blend(Rational lambda, std::shared_ptr<const UtilityFunction> modular,
             std::shared_ptr<const UtilityFunction> cut)
    : lambda_(std::move(lambda)), modular_(std::move(modular)), cut_(std::move(cut)) {
  if (lambda_ < 0 || lambda_ > 1)
    throw InvalidArgumentError("blend lambda must lie in [0, 1]");
}

Rational Blend::value(ItemSet selected, const Realization& phi) const {
  return lambda_ * modular_->value(selected, phi) +
         (1 - lambda_) * cut_->value(selected, phi);
}

bool Blend::state_local() const {
  return modular_->state_local() && cut_->state_local();
}

StochasticCoverage::StochasticCoverage(std::vector<std::uint64_t> covers,
                                       StateId active_state, int universe_size)
    : covers_(std::move(covers)), active_(active_state), universe_(universe_size) {
  if (universe_ > 64) throw InvalidArgumentError("coverage universe capped at 64 elements");
}

Rational StochasticCoverage::value(ItemSet selected, const Realization& phi) const {
  std::uint64_t covered = 0;
  for (ItemId e = 0; e < static_cast<ItemId>(covers_.size()); ++e)
    if (set_has(selected, e) && phi.at(e) == active_) covered |= covers_[e];
  return Rational{std::popcount(covered)};
}

namespace {

StateId resolve_active(const UtilitySpec& spec, const StateSpace& states) {
  for (const auto& [key, value] : spec.params) {
    if (key != "active") continue;
    StateId s = states.index_of(value);
    if (s < 0) throw InvalidArgumentError("unknown state token: " + value);
    return s;
  }
  return 0;  // default: first state token
}

ItemId resolve_item(const std::string& id, const std::vector<Item>& items) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].id == id) return static_cast<ItemId>(i);
  throw InvalidArgumentError("unknown item id: " + id);
}

std::shared_ptr<const StochasticModular> build_modular(const UtilitySpec& spec,
                                                       const std::vector<Item>& items,
                                                       const StateSpace& states) {
  std::vector<Rational> weights(items.size(), Rational{1});
  for (const auto& [key, value] : spec.params) {
    if (key != "w") continue;
    auto colon = value.find(':');
    if (colon == std::string::npos)
      throw InvalidArgumentError("weight parameter must look like w=<item>:<num>");
    ItemId e = resolve_item(value.substr(0, colon), items);
    weights[e] = parse_rational(value.substr(colon + 1));
  }
  return std::make_shared<StochasticModular>(std::move(weights), resolve_active(spec, states));
}

std::shared_ptr<const GraphCut> build_cut(const UtilitySpec& spec,
                                          const std::vector<Item>& items) {
  std::vector<GraphCut::Edge> edges;
  for (const auto& [key, value] : spec.params) {
    if (key != "edge") continue;
    auto colon = value.rfind(':');
    auto dash = value.find('-');
    if (colon == std::string::npos || dash == std::string::npos || dash > colon)
      throw InvalidArgumentError("edge parameter must look like edge=<a>-<b>:<num>");
    ItemId a = resolve_item(value.substr(0, dash), items);
    ItemId b = resolve_item(value.substr(dash + 1, colon - dash - 1), items);
    edges.push_back({a, b, parse_rational(value.substr(colon + 1))});
  }
  return std::make_shared<GraphCut>(std::move(edges));
}

std::shared_ptr<const StochasticCoverage> build_coverage(const UtilitySpec& spec,
                                                         const std::vector<Item>& items,
                                                         const StateSpace& states) {
  // Universe elements are interned in sorted token order.
  std::set<std::string> universe;
  std::vector<std::pair<ItemId, std::vector<std::string>>> raw;
  for (const auto& [key, value] : spec.params) {
    if (key != "cover") continue;
    auto colon = value.find(':');
    if (colon == std::string::npos)
      throw InvalidArgumentError("cover parameter must look like cover=<item>:<u1>,<u2>");
    ItemId e = resolve_item(value.substr(0, colon), items);
    std::vector<std::string> elems;
    std::string rest = value.substr(colon + 1);
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) elems.push_back(tok);
    for (const auto& u : elems) universe.insert(u);
    raw.emplace_back(e, std::move(elems));
  }
  std::map<std::string, int> index;
  for (const auto& u : universe) index.emplace(u, static_cast<int>(index.size()));
  std::vector<std::uint64_t> covers(items.size(), 0);
  for (const auto& [e, elems] : raw)
    for (const auto& u : elems) covers[e] |= std::uint64_t{1} << index.at(u);
  return std::make_shared<StochasticCoverage>(std::move(covers), resolve_active(spec, states),
                                              static_cast<int>(universe.size()));
}

}  // namespace

std::shared_ptr<const UtilityFunction> make_utility(const UtilitySpec& spec,
                                                    const std::vector<Item>& items,
                                                    const StateSpace& states) {
  if (spec.kind == "stochastic-modular") return build_modular(spec, items, states);
  if (spec.kind == "graph-cut") return build_cut(spec, items);
  if (spec.kind == "stochastic-coverage") return build_coverage(spec, items, states);
  if (spec.kind == "blend") {
    Rational lambda{1, 2};
    bool seen = false;
    for (const auto& [key, value] : spec.params) {
      if (key != "lambda") continue;
      lambda = parse_rational(value);
      seen = true;
    }
    if (!seen) throw InvalidArgumentError("blend requires a lambda parameter");
    return std::make_shared<Blend>(lambda, build_modular(spec, items, states),
                                   build_cut(spec, items));
  }
  throw InvalidArgumentError("unknown utility kind: " + spec.kind);
}

namespace {

// Expectation over the states of the items in `missing`, recursively, using
// the conditional per-item distributions. Only reached for state-local f.
Rational expect_over_missing(const Instance& inst, ItemSet selected, ItemSet missing,
                             const PartialRealization& psi) {
  if (missing == 0) return inst.utility().value(selected, complete(psi));
  ItemId e = std::countr_zero(missing);
  Rational total = 0;
  for (const auto& [s, p] : inst.prior().state_distribution(e, psi))
    total += p * expect_over_missing(inst, selected, missing & ~item_bit(e), psi.with(e, s));
  return total;
}

}  // namespace

Rational expected_utility(const Instance& inst, ItemSet selected,
                          const PartialRealization& psi) {
  if (selected & ~inst.all_items())
    throw InvalidArgumentError("selected set contains items outside the ground set");
  const UtilityFunction& f = inst.utility();
  ItemSet missing = selected & ~psi.domain();
  if (f.state_local()) {
    if (inst.prior().kind() == Prior::Kind::independent || missing == 0)
      return expect_over_missing(inst, selected, missing, psi);
  }
  // Generic path: enumerate the conditional support.
  Rational total = 0;
  Rational mass = 0;
  for (const JointAtom& atom : inst.prior().atoms()) {
    if (!consistent(atom.phi, psi)) continue;
    total += atom.p * f.value(selected, atom.phi);
    mass += atom.p;
  }
  if (mass == 0)
    throw ImpossibleObservationError("partial realization has zero prior mass");
  return total / mass;
}

Rational marginal_item(const Instance& inst, ItemId e, const PartialRealization& psi) {
  if (e < 0 || e >= inst.n())
    throw InvalidArgumentError("item index " + std::to_string(e) + " outside ground set");
  if (inst.prior().mass(psi) == 0)
    throw ImpossibleObservationError("partial realization has zero prior mass");
  if (psi.observed(e)) return Rational{0};
  ItemSet dom = psi.domain();
  return expected_utility(inst, dom | item_bit(e), psi) - expected_utility(inst, dom, psi);
}

Rational marginal_set(const Instance& inst, ItemSet s, const PartialRealization& psi) {
  if (s & ~inst.all_items())
    throw InvalidArgumentError("set contains items outside the ground set");
  if (inst.prior().mass(psi) == 0)
    throw ImpossibleObservationError("partial realization has zero prior mass");
  ItemSet dom = psi.domain();
  return expected_utility(inst, dom | s, psi) - expected_utility(inst, dom, psi);
}

}  // namespace adasub
