#pragma once

#include <functional>
#include <vector>

#include "fpg/rng.hpp"

namespace fpg {

/// Goal-conditioned tabular MDP: explicit transition tensor, initial-state
/// distribution, a fixed horizon T, and a single goal state. Episodes never
/// terminate early; a rollout always executes exactly T policy steps.
struct TabularMdp {
  int num_states = 0;
  int num_actions = 0;
  int horizon = 0;
  std::vector<double> transition;  // [s * A * S + a * S + s'] row-stochastic
  std::vector<double> initial;     // distribution over states
  int goal = 0;

  double trans(int s, int a, int next) const {
    return transition[(static_cast<std::size_t>(s) * num_actions + a) * num_states + next];
  }
  void set_trans(int s, int a, int next, double v) {
    transition[(static_cast<std::size_t>(s) * num_actions + a) * num_states + next] = v;
  }

  /// Throws if the transition rows or the initial distribution are not
  /// stochastic within 1e-9.
  void validate() const;

  int sample_initial(Rng& rng) const;
  int sample_next(int s, int a, Rng& rng) const;
};

/// Reward 1 iff the successor state is the goal.
inline double sparse_reward(int s_next, int goal) { return s_next == goal ? 1.0 : 0.0; }

/// One fixed-length episode. states has T+1 entries (s_0 included), actions
/// and behavior_logprobs have T. reached is true iff any state in the
/// sequence equals the goal.
struct DiscreteTrajectory {
  int goal = 0;
  std::vector<int> states;
  std::vector<int> actions;
  std::vector<double> behavior_logprobs;
  bool reached = false;

  int horizon() const { return static_cast<int>(actions.size()); }
};

/// Policy lookup used by rollouts and exact enumeration: probabilities over
/// actions at a state (rows of the tabular policy).
using PolicyTable = std::function<const std::vector<double>&(int state)>;

DiscreteTrajectory rollout(const TabularMdp& mdp, const PolicyTable& policy, Rng& rng);

/// Exhaustive trajectory enumeration for small MDPs: every trajectory with
/// positive probability under the policy, with its exact probability.
/// Intended for |S|, |A|, T small enough that the product space fits in
/// memory; throws std::domain_error beyond max_trajectories.
struct WeightedTrajectories {
  std::vector<DiscreteTrajectory> trajectories;
  std::vector<double> weights;  // probabilities, sum to 1
};
WeightedTrajectories enumerate_trajectories(const TabularMdp& mdp, const PolicyTable& policy,
                                            std::size_t max_trajectories = 2'000'000);

/// Random tiny MDP with Dirichlet-ish rows, used by the oracle suites.
TabularMdp random_tiny_mdp(Rng& rng, int max_states = 4, int max_actions = 2, int max_horizon = 3);

}  // namespace fpg
