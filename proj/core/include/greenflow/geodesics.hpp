#pragma once

#include <utility>
#include <vector>

#include "greenflow/geometry.hpp"

namespace greenflow {

// Geodesic distance between (r1,theta1) and (r2,theta2).
// Space forms use the closed-form law of cosines; other rotationally
// symmetric models go through Clairaut shooting: on a negatively curved
// surface of revolution r is convex along geodesics, so a connecting
// geodesic is either monotone in r or has a single turning point, and the
// angle swept is monotone in the Clairaut constant on each branch.
double geodesic_distance(const WarpedModel& model, double r1, double theta1,
                         double r2, double theta2, double tol = 1e-9);

// Points of the geodesic circle of radius rho around (r0,0), sampled at
// `count` directions by integrating the exponential map (RK4).
std::vector<std::pair<double, double>> geodesic_circle(const WarpedModel& model,
                                                       double r0, double rho,
                                                       int count);

}  // namespace greenflow
