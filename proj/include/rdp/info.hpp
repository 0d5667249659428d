#pragma once

#include "rdp/types.hpp"

// Elementary information-theoretic quantities on finite distributions.
// Natural log throughout; rates are in nats.
namespace rdp {

// I(X; Xhat) = sum_ij w_ij p_i (log w_ij - log r_j) for a transition
// mapping w with source marginal p and reconstruction marginal r.
// Nonnegative whenever r matches the induced column marginal.
double mutual_information(const Coupling& w, const DiscreteDistribution& p,
                          const DiscreteDistribution& r);

// KL(p || r) = sum_i p_i (log p_i - log r_i); infinite support violation
// raises a divergence-infinite error.
double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& r);

// sum_ij mass_ij cost_ij where mass is the plan itself, or w weighted
// row-wise by p when a weight distribution is given.
double expected_cost(const Coupling& plan_or_w, const DiscreteDistribution* weight,
                     const CostMatrix& cost);

// H(Pi) = sum_ij Pi_ij log(Pi_ij), 0 log 0 = 0. Nonpositive for
// probability-mass plans; the sign follows that definition, not the
// Shannon convention.
double entropy_of_plan(const Coupling& plan);

}  // namespace rdp
