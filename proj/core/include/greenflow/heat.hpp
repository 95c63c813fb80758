#pragma once

#include <memory>
#include <vector>

#include "greenflow/operators.hpp"

namespace greenflow {

// Dirichlet heat flow on the geodesic unit ball B_x(1), delta initial data
// at the center node. Implicit Euler, dt up to t=1 and 10*dt afterwards
// (the delta demands small early steps; the solution is smooth later).
// Invariants held at every step: H >= 0, mass <= 1 and nonincreasing,
// L2 norm nonincreasing.
struct HeatTrajectory {
  std::shared_ptr<const PolarGrid> grid;
  int center = 0;
  double center_radius = 0.0;
  double ball_radius = 1.0;
  std::vector<int> ball_nodes;  // interior of B_x(1)

  std::vector<double> times;  // per accepted step
  std::vector<double> mass;   // \int H
  std::vector<double> l2;     // \int H^2

  ScalarField time_integral;  // running \int_0^T H dt (trapezoid)
  ScalarField final_state;
  double t_final = 0.0;
  double sup_at_t1 = 0.0;       // sup_y H(x,y,1)
  double ball_volume = 0.0;     // sum of ball node weights
  double sup_bound_const = 0.0; // measured C in sup H(.,1) <= C / vol(B)
};

HeatTrajectory heat_evolve(const SparseOperator& op, int center_node,
                           double t_final, double dt);

struct HeatDecayFit {
  double rate = 0.0;  // fitted -d/dt log \int H^2 over t in [1, T]
  double t_lo = 1.0, t_hi = 0.0;
};

HeatDecayFit l2_decay_check(const HeatTrajectory& traj);

struct BallGreenReport {
  ScalarField field;        // \int_0^infty H dt with exponential tail
  double mass = 0.0;        // \int_{B_x(1)} G_1
  double tail_fraction = 0.0;
  double vs_elliptic_max_rel = 0.0;  // off-center cross-check vs direct solve
};

// Time-integrated kernel == elliptic Dirichlet Green's function of the ball.
// Throws when the exponential tail estimate exceeds 10% of the total mass.
BallGreenReport green_from_heat(const HeatTrajectory& traj,
                                const SparseOperator& op);

}  // namespace greenflow
