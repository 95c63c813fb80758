#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "greenflow/geometry.hpp"

namespace greenflow {

// Truncated polar discretization of a 2-D warped model. Node layout:
//   node 0                     pole (single shared node)
//   node 1 + (i-1)*ntheta + j  ring i = 1..nr at r_i = i h_r, theta_j = j h_theta
// Ring nr sits on the truncation circle and is always Dirichlet.
// Node weights are the volume elements phi(r_i) h_r h_theta; the pole cell
// carries the exact volume of the disk of radius h_r/2.
class PolarGrid {
 public:
  const WarpedModel& model() const { return model_; }
  double r_max() const { return r_max_; }
  int nr() const { return nr_; }
  int ntheta() const { return ntheta_; }
  double h_r() const { return h_r_; }
  double h_theta() const { return h_theta_; }
  const std::vector<double>& exhaustion_radii() const { return exhaustion_; }

  int node_count() const { return 1 + nr_ * ntheta_; }
  int node(int ring, int j) const;  // ring >= 1; j wraps
  int ring_of(int node) const { return node == 0 ? 0 : 1 + (node - 1) / ntheta_; }
  int theta_index_of(int node) const { return node == 0 ? 0 : (node - 1) % ntheta_; }
  double radius_of(int node) const { return h_r_ * ring_of(node); }
  double theta_of(int node) const { return h_theta_ * theta_index_of(node); }

  double weight(int node) const { return weights_[node]; }
  const std::vector<double>& weights() const { return weights_; }
  double pole_cell_volume() const { return weights_[0]; }

  // Ring index whose radius is closest to R; throws if off-grid.
  int ring_at(double R) const;
  // Node closest to (r, theta).
  int node_near(double r, double theta) const;

  // Sum of node weights inside B_p(R) with the boundary ring at half weight;
  // matches the smooth ball volume to O(h^2).
  double ball_weight_sum(double R) const;

  std::string key() const;  // canonical string, feeds cache hashes

  friend std::shared_ptr<const PolarGrid> build_polar_grid(
      const WarpedModel& model, double r_max, int nr, int ntheta,
      int exhaustion_count);
  friend std::shared_ptr<const PolarGrid> build_polar_grid(
      const WarpedModel& model, double r_max, int nr, int ntheta,
      const std::vector<double>& exhaustion_radii);

 private:
  PolarGrid() = default;

  WarpedModel model_;
  double r_max_ = 0.0, h_r_ = 0.0, h_theta_ = 0.0;
  int nr_ = 0, ntheta_ = 0;
  std::vector<double> exhaustion_;
  std::vector<double> weights_;
};

// Default exhaustion radii R_i = r_max * i / exhaustion_count, snapped to
// grid rings. Minimum resolution nr >= 64, ntheta >= 32; 2-D models only.
std::shared_ptr<const PolarGrid> build_polar_grid(const WarpedModel& model,
                                                  double r_max, int nr,
                                                  int ntheta,
                                                  int exhaustion_count);
std::shared_ptr<const PolarGrid> build_polar_grid(
    const WarpedModel& model, double r_max, int nr, int ntheta,
    const std::vector<double>& exhaustion_radii);

// Claimed pointwise decay |field| <= C (1+r)^{-exponent}.
struct DecayMetadata {
  double C = 0.0;
  double exponent = 0.0;
};

struct ScalarField {
  std::shared_ptr<const PolarGrid> grid;
  std::vector<double> values;
  std::optional<DecayMetadata> decay;

  double operator[](int node) const { return values[node]; }
  double& operator[](int node) { return values[node]; }

  // Bilinear sample at (r, theta); clamps to the truncation circle.
  double sample(double r, double theta) const;
};

ScalarField make_field(std::shared_ptr<const PolarGrid> grid,
                       const std::function<double(double, double)>& f);
ScalarField zero_field(std::shared_ptr<const PolarGrid> grid);

// Verifies |field| <= C (1+r)^{-exponent} at every node and attaches the
// metadata; throws if violated.
void attach_decay(ScalarField& field, double C, double exponent);

// CSV with header r,theta,value (deterministic %.17g formatting).
void write_csv(const ScalarField& field, std::ostream& out);

}  // namespace greenflow
