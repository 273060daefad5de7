#pragma once
// Truncated Hardy-space series on the torus and the norms built on them.
//
// HardySeries stores the complex Fourier coefficients u_hat(0..N) of
//   u(theta) = sum_{k=0}^{N} u_hat(k) e^{ik theta};
// negative frequencies are identically zero by construction. The degree is
// explicit: trailing zeros are kept, never trimmed. All norms accumulate with
// Neumaier-compensated summation so drift diagnostics stay meaningful at the
// 1e-12 level.

#include <complex>
#include <cstddef>
#include <vector>

namespace szego {

using Complex = std::complex<double>;

/// Neumaier variant of compensated (Kahan) summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Gevrey weight parameters for sum_k e^{sigma k^gamma} |u_hat(k)|.
/// gamma = 1 is the analytic class; gamma in (0,1) interpolates toward C-inf.
struct GevreyOrder {
  double sigma = 0.0;  // radius parameter, >= 0
  double gamma = 1.0;  // exponent, in (0, 1]
  void validate() const;
};

class HardySeries {
 public:
  HardySeries() = default;  // degree-0 zero series
  /// Throws std::invalid_argument on an empty list or non-finite entries.
  explicit HardySeries(std::vector<Complex> coeffs);

  static HardySeries zero(int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// Coefficient u_hat(k); zero outside [0, degree].
  Complex coeff(int k) const {
    return (k >= 0 && k <= degree()) ? coeffs_[static_cast<std::size_t>(k)]
                                     : Complex{0.0, 0.0};
  }

  Complex& operator[](std::size_t k) { return coeffs_[k]; }
  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }

  bool is_finite() const;

  /// Same series viewed at a higher degree (zero-padded). Throws if degree
  /// is below the current one.
  HardySeries padded_to(int degree) const;

  friend bool operator==(const HardySeries& a, const HardySeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Complex> coeffs_{Complex{0.0, 0.0}};
};

/// Two-sided coefficient window v(-M..M); intermediate result of |u|^2 and
/// |u|^2 u before the Szego projection.
struct LaurentSlice {
  explicit LaurentSlice(int halfwidth);
  /// coeffs must hold exactly 2M+1 finite entries, v(k) at index k+M.
  explicit LaurentSlice(std::vector<Complex> coeffs);

  int halfwidth() const { return (static_cast<int>(coeffs.size()) - 1) / 2; }
  Complex& at(int k) { return coeffs[static_cast<std::size_t>(k + halfwidth())]; }
  Complex at(int k) const {
    return coeffs[static_cast<std::size_t>(k + halfwidth())];
  }

  std::vector<Complex> coeffs;
};

/// (sum_k |u_hat(k)|^2)^{1/2}
double l2_norm(const HardySeries& u);

/// sum_k k |u_hat(k)|^2, the squared H^{1/2} seminorm (not square-rooted).
double momentum(const HardySeries& u);

/// (sum_k (k^{2s}+1) |u_hat(k)|^2)^{1/2} with the convention 0^0 = 1, so the
/// k=0 weight is 2 at s=0 and 1 for s>0.
double hs_norm(const HardySeries& u, double s);

/// sum_k |u_hat(k)|
double wiener_norm(const HardySeries& u);

/// sum_k e^{sigma k^gamma} |u_hat(k)|. Equals wiener_norm exactly at sigma=0.
/// Throws std::range_error (naming the mode) if a term overflows double range.
double gevrey_wiener_norm(const HardySeries& u, const GevreyOrder& order);

/// (sum_k (1+k^2)^s e^{2 sigma (1+k^2)^{1/2}} |u_hat(k)|^2)^{1/2}, the norm of
/// the classical Gevrey domain D(A^s e^{sigma A}) with A = sqrt(I - Laplace).
double classical_gevrey_norm(const HardySeries& u, double s, double sigma);

/// Exact Cauchy product; result degree is deg(u) + deg(v), no truncation.
HardySeries multiply(const HardySeries& u, const HardySeries& v);

/// Modes 0..degree of w: drops every negative mode and everything above
/// degree (the composition P_N of the Szego projector with the Galerkin
/// cutoff). Requires degree <= w.halfwidth().
HardySeries szego_project(const LaurentSlice& w, int degree);

/// l2 norm of the difference, padding the shorter series with zeros.
double l2_distance(const HardySeries& a, const HardySeries& b);

}  // namespace szego
