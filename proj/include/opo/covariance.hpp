#ifndef OPO_COVARIANCE_HPP
#define OPO_COVARIANCE_HPP

#include <Eigen/Dense>
#include <array>

#include "opo/errors.hpp"

namespace opo {

/// Quadrature ordering is fixed project-wide: (X1, Y1, X2, Y2).
/// All variances are dimensionless, vacuum variance = 1 on each quadrature.

enum class ModeBasis { SignalIdler, RotatedPlusMinus };

enum class Quadrature { X, Y };

/// Selects the generalized quadrature X_m cos(phase) + Y_m sin(phase) of one
/// mode. Mode indices are 1-based; in the rotated basis mode 1 is "+" and
/// mode 2 is "-".
struct QuadratureSelector {
  int mode = 1;
  double phase = 0.0;  // radians, normalized to [0, 2*pi)

  static QuadratureSelector x(int mode);
  static QuadratureSelector y(int mode);
  static QuadratureSelector at_phase(int mode, double phase);
};

/// 4x4 real symmetric covariance matrix of a two-mode Gaussian state.
///
/// Construction enforces symmetry (to 1e-12) and strict positive
/// definiteness. It does *not* enforce the Heisenberg bound: states
/// reconstructed from measured data may sit below the physicality boundary,
/// and check_physical() reports that instead of refusing to represent it.
class TwoModeCovariance {
 public:
  static TwoModeCovariance from_matrix(const Eigen::Matrix4d& entries);
  static TwoModeCovariance vacuum();

  const Eigen::Matrix4d& entries() const { return entries_; }
  double operator()(int row, int col) const { return entries_(row, col); }

 private:
  explicit TwoModeCovariance(const Eigen::Matrix4d& entries) : entries_(entries) {}

  Eigen::Matrix4d entries_;
};

struct PhysicalityReport {
  bool physical = false;
  double min_symplectic_eigenvalue = 0.0;
};

/// Applies the 50/50 beam-splitter symplectic relating the signal/idler basis
/// to the +-45 degree rotated basis (X+ = (X1+X2)/sqrt(2), ...). The
/// transform is involutive, so `from`/`to` only decide whether anything
/// happens at all.
TwoModeCovariance rotate_basis(const TwoModeCovariance& cov, ModeBasis from, ModeBasis to);

/// Builds the symmetric signal/idler state with
///   Var((X1-X2)/sqrt(2)) = g_x,  Var((Y1+Y2)/sqrt(2)) = g_y,
///   Var(X1) = Var(X2) = v_ind_x, Var(Y1) = Var(Y2) = v_ind_y,
/// and no X-Y cross correlations. Throws PhysicalityError when the requested
/// combination is not positive definite (g >= 2v on either quadrature).
TwoModeCovariance build_covariance(double g_x, double g_y, double v_ind_x, double v_ind_y);

/// Var(A) - Cov(A,B)^2 / Var(B): residual variance of the target quadrature
/// after optimal linear inference from a measurement of the conditioner.
double conditional_variance(const TwoModeCovariance& cov, const QuadratureSelector& target,
                            const QuadratureSelector& conditioner);

/// Williamson symplectic eigenvalues, ascending. All >= 1 iff the state
/// satisfies the uncertainty relation in the vacuum-variance-1 convention.
std::array<double, 2> symplectic_eigenvalues(const TwoModeCovariance& cov);

/// Reports, never throws.
PhysicalityReport check_physical(const TwoModeCovariance& cov);

/// Var(X_m cos(theta) + Y_m sin(theta)) including the X-Y cross term.
double generalized_variance(const TwoModeCovariance& cov, const QuadratureSelector& sel);

}  // namespace opo

#endif  // OPO_COVARIANCE_HPP
