#pragma once

#include <memory>
#include <vector>

#include "greenflow/operators.hpp"

namespace greenflow {

// ---------------------------------------------------------------------------
// Radial construction: G(r) = \int_r^infty A(s)^{-1} ds, the minimal Green's
// function of a nonparabolic rotationally symmetric model, normalized to
// unit flux (Delta G = -delta, A(r) |G'(r)| = 1).
// ---------------------------------------------------------------------------

double radial_green(const WarpedModel& model, double r);

// Tabulated radial kernel for level-set statistics: anchored cumulative
// quadrature, values accurate to ~1e-12 anywhere in [r_min, r_max].
class RadialGreenKernel {
 public:
  RadialGreenKernel(const WarpedModel& model, double r_max,
                    double r_min = 1e-4);

  double value(double r) const;
  double derivative(double r) const { return -1.0 / area_(r); }
  double inverse(double s) const;  // unique r in [r_min, r_max] with G(r)=s
  double sup() const { return g_front_; }
  double min() const { return g_back_; }
  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  const WarpedModel& model() const { return model_; }

 private:
  double area_(double r) const;

  WarpedModel model_;
  double r_min_ = 0.0, r_max_ = 0.0;
  double g_front_ = 0.0, g_back_ = 0.0;
  std::vector<double> rs_, gs_;  // anchor table
};

// ---------------------------------------------------------------------------
// 2-D exhaustion construction.
// ---------------------------------------------------------------------------

struct GreenKernel {
  std::shared_ptr<const PolarGrid> grid;
  int pole = 0;
  double pole_radius = 0.0;
  double domain_radius = 0.0;  // exhaustion member R
  double flux_norm = 1.0;      // Delta G = -delta normalization
  ScalarField values;
  // sup |G_R - G_previous| over nodes, the reported truncation estimate
  // for the outermost member.
  double truncation_error_sup = 0.0;
};

// Dirichlet kernels G_i on B_p(R_i) for increasing R_i, discrete delta at
// `pole_node`. Verifies positivity and pointwise monotone convergence
// G_i <= G_{i+1} (+1e-8); a violation means a broken maximum principle and
// throws SolverError. The last member is the working approximation to G.
std::vector<GreenKernel> exhaustion_green(const SparseOperator& op,
                                          int pole_node,
                                          const std::vector<double>& R_list);

// |grad G| at every node: central differences in r and theta, one-sided at
// the first/last rings; entry 0 (pole) is set from the first ring.
std::vector<double> gradient_magnitude(const GreenKernel& kernel);

// ---------------------------------------------------------------------------
// Level-set machinery.
// ---------------------------------------------------------------------------

struct LevelSetBand {
  double lo = 0.0, hi = 0.0;
  std::vector<int> nodes;         // lo < G < hi (disjoint across bands)
  double integral_G = 0.0;        // sum G w over the band
  double dirichlet_integral = 0.0;  // sum G^{-1} |grad G|^2 w
};

struct LevelSetDecomposition {
  std::vector<double> thresholds;   // strictly decreasing
  std::vector<LevelSetBand> bands;  // bands[k] = L(thresholds[k+1], thresholds[k])
};

LevelSetDecomposition decompose_level_sets(const GreenKernel& kernel,
                                           std::vector<double> thresholds);

// \int_{l(s)} |grad G|: piecewise-linear marching contour over grid cells,
// metric segment lengths, per-cell gradient. Unit flux for any s that
// separates the pole from the boundary.
double flux_on_level_set(const GreenKernel& kernel, double s);
double flux_on_level_set(const RadialGreenKernel& kernel, double s);

struct AnnulusDecay {
  std::vector<double> R;
  std::vector<double> integral;  // I(R) = \int_{B_x(R+1)\B_x(R)} G^2
  double exponent = 0.0;         // fitted slope of -log I(R) vs R
};

// Center-pole kernels only (annuli are radial).
AnnulusDecay annulus_l2_decay(const GreenKernel& kernel,
                              const std::vector<double>& R_list);
AnnulusDecay annulus_l2_decay(const RadialGreenKernel& kernel,
                              const std::vector<double>& R_list);

struct CoareaReport {
  double band_integral = 0.0;  // \int_{L(delta eps, eps)} G^{-1}|grad G|^2
  double flux = 0.0;           // \int_{l(eps)} |grad G|
  double expected = 0.0;       // flux * (-log delta)
  double rel_error = 0.0;
};

CoareaReport coarea_identity_check(const GreenKernel& kernel, double delta,
                                   double eps);
CoareaReport coarea_identity_check(const RadialGreenKernel& kernel,
                                   double delta, double eps);

// ---------------------------------------------------------------------------
// Growth envelopes across poles.
// ---------------------------------------------------------------------------

struct PoleSample {
  double pole_radius = 0.0;
  double min_g = 0.0, max_g = 0.0;  // of G(x,.) on the unit sphere about x
};

struct EnvelopeFit {
  std::vector<PoleSample> samples;
  // Upper envelope: G <= A_upper e^{B_upper r(x)} on dB_x(1).
  double A_upper = 0.0, B_upper = 0.0;
  // Lower envelope: G >= A_lower^{-1} e^{-B_lower r(x)} on dB_x(1).
  double A_lower = 0.0, B_lower = 0.0;
  // Combined single-constant form (A = max of both, B = max of slopes, >=0).
  double A = 0.0, B = 0.0;
  double residual_upper = 0.0, residual_lower = 0.0;  // max log-scale misfit
};

// Samples G on geodesic unit circles about each kernel's pole and fits both
// envelopes by least squares in log scale. Needs >= 2 kernels (>= 4 for a
// meaningful fit); poles closer than 2 to the truncation boundary are
// rejected.
EnvelopeFit pointwise_bounds_scan(const std::vector<GreenKernel>& kernels);

// sup over sampled level values of the level-set flux of one kernel.
double levelset_flux_bound(const GreenKernel& kernel, int thresholds = 9);

struct FluxGrowthFit {
  std::vector<double> pole_radius;
  std::vector<double> sup_flux;
  double C = 0.0, b = 0.0;  // sup flux <= C e^{b r(x)}
};

FluxGrowthFit fit_flux_growth(const std::vector<GreenKernel>& kernels);

struct SuperlevelReport {
  double theta = 0.0;
  double mass = 0.0;  // \int_{L(theta, inf)} G
  int superlevel_nodes = 0;
  int inclusion_violations = 0;  // nodes with G > theta and d(x,.) > 1
};

// Mass of the superlevel set; when `fit` is given, theta is clamped up to
// the fitted upper envelope A_upper e^{B_upper r(x)} and the inclusion
// L(theta, inf) subset B_x(1) is verified node by node.
SuperlevelReport superlevel_mass(const GreenKernel& kernel, double theta,
                                 const EnvelopeFit* fit = nullptr);
double superlevel_mass(const RadialGreenKernel& kernel, double theta);

struct GradientRatioReport {
  double sup_ratio = 0.0;      // sup |grad G| / G outside the exclusion
  double percentile99 = 0.0;   // the C0 surrogate
  int nodes = 0;
};

GradientRatioReport gradient_estimate_check(const GreenKernel& kernel,
                                            int exclusion_cells = 2);
double gradient_ratio(const RadialGreenKernel& kernel, double r);

struct EnvelopeMargin {
  double min_margin = 0.0;   // min of log G + log A_lower + B_lower r + C0 d
  double margin_near_unit = 0.0;  // margin restricted to d in [1, 1.2]
  int nodes = 0;
};

// Verifies G(x,z) >= exp(-log A_lower - B_lower r(x) - C0 d(x,z)) over
// nodes with d(x,z) >= 1 (subsampled on non-homogeneous models).
EnvelopeMargin lower_envelope_check(const GreenKernel& kernel,
                                    const EnvelopeFit& fit, double c0);

}  // namespace greenflow
