#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace greenflow {

// Rotationally symmetric model metrics g = dr^2 + phi(r)^2 dtheta^2 with
// closed-form warping phi, so curvature and sphere areas are exact and the
// only error sources are the solvers.
//
// Families:
//   Hyperbolic  phi_K(r) = sinh(sqrt(|K|) r)/sqrt(|K|),  K < 0
//   Perturbed   phi(r)   = sinh(r) (1 + eta r^2 e^{-r}), |eta| <= 0.25, dim 2
//   Euclidean   phi(r)   = r   (uncertified sanity model for solver oracles)
enum class WarpingFamily { Hyperbolic, Perturbed, Euclidean };

struct RadialProfile {
  double r = 0.0;
  double phi = 0.0;
  double dphi = 0.0;
  double ddphi = 0.0;
};

// Result of the dense curvature scan: -a^2 <= Ric <= -b^2 < 0 certified on
// (0, r_scan_max] at `samples` radii, never assumed from the family.
struct PinchingCertificate {
  double a_sq = 0.0;
  double b_sq = 0.0;
  double r_scan_max = 0.0;
  int samples = 0;
  bool valid = false;
};

class WarpedModel {
 public:
  static WarpedModel hyperbolic(int dim, double curvature);
  static WarpedModel perturbed(double eta, double r_scan_max = 40.0);
  static WarpedModel euclidean(int dim = 2);
  static WarpedModel from_json_string(const std::string& text);

  WarpingFamily family() const { return family_; }
  int dim() const { return dim_; }
  double curvature() const { return curvature_; }
  double eta() const { return eta_; }

  bool certified() const { return cert_.valid; }
  double a_sq() const { return cert_.a_sq; }
  double b_sq() const { return cert_.b_sq; }
  double b() const;  // sqrt(b_sq); throws on uncertified models
  const PinchingCertificate& certificate() const { return cert_; }

  double phi(double r) const;
  double dphi(double r) const;
  double ddphi(double r) const;
  double third_derivative_at_zero() const;  // phi'''(0)

  // Delta r = (n-1) phi'/phi for r > 0.
  double radial_mean_curvature(double r) const;

  std::string name() const;
  std::string key() const;  // canonical string, feeds cache hashes
  std::string to_json_string() const;

 private:
  WarpedModel() = default;
  void certify(double r_scan_max, int samples);

  WarpingFamily family_ = WarpingFamily::Hyperbolic;
  int dim_ = 2;
  double curvature_ = -1.0;  // hyperbolic family only
  double eta_ = 0.0;         // perturbed family only
  PinchingCertificate cert_;
};

// phi and derivatives from the closed form; exact to machine precision.
// r < 0 is a domain error.
RadialProfile warping_eval(const WarpedModel& model, double r);

// Principal Ricci eigenvalues of the warped metric:
//   radial     = -(n-1) phi''/phi
//   tangential = -(n-2) (phi'^2 - 1)/phi^2 - phi''/phi
// At r = 0 both tend to -(n-1) phi'''(0).
std::pair<double, double> ricci_eigenvalues(const WarpedModel& model, double r);

// A(r) = omega_{n-1} phi(r)^{n-1}, the area of the geodesic sphere.
double sphere_area(const WarpedModel& model, double r);

// Smooth volume of the ball B_p(R) by quadrature of sphere_area.
double ball_volume(const WarpedModel& model, double R);

// Uniformly sampled radial function on [r0, r0 + h*(size-1)].
struct RadialField {
  double r0 = 0.0;
  double h = 0.0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double r(std::size_t i) const { return r0 + h * static_cast<double>(i); }
};

RadialField make_radial_field(double r0, double h, std::size_t n,
                              const std::function<double(double)>& f);

// Delta u = u'' + (n-1)(phi'/phi) u' for radial u. Second-order interior
// stencil, one-sided at the ends; a field starting at r0 = 0 uses the
// even-symmetry pole formula Delta u(0) = n u''(0).
RadialField laplacian_radial(const WarpedModel& model, const RadialField& u);

struct ComparisonReport {
  double min_margin = 0.0;  // min over samples of (Delta r - b coth(b r))
  double argmin_r = 0.0;
  int samples = 0;
  bool pass = false;
};

// Checks Delta r >= b coth(b r) on [r_lo, r_hi], the comparison inequality
// behind the spectral lower bound. Requires a certified model.
ComparisonReport laplacian_comparison_check(const WarpedModel& model,
                                            double r_lo, double r_hi,
                                            int samples = 20000,
                                            double tol = 1e-9);

}  // namespace greenflow
