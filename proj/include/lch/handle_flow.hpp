#pragma once

// Dynamics in the model Weinstein handle of index k in R^{2n} with
// coordinates (x, y, p, q), x, y in R^{n-k}, p, q in R^k.
//
// Vectors passed to and returned by the attaching maps use block layout:
// all first coordinates, then all second coordinates, and so on, e.g. a point
// of the ball (u, v, z) is (u_1..u_m, v_1..v_m, z).

#include <cstdint>
#include <limits>
#include <vector>

#include "lch/error.hpp"

namespace lch {

struct HandleParams {
    int n = 3;
    int k = 1;
    std::vector<double> a;  // n - k positive, pairwise distinct weights
    double delta = 1.0;

    /// Throws InvalidParams.
    void validate() const;
};

struct HandleState {
    std::vector<double> x, y;  // n - k each
    std::vector<double> p, q;  // k each
};

/// Throws InvalidParams when the block sizes do not match `params`.
void check_shape(const HandleState& s, const HandleParams& params);

/// sum a_j/2 (x_j^2 + y_j^2) + sum (2 p_j^2 - q_j^2); equals +-delta^2 on the
/// two boundary pieces of the handle.
double level(const HandleState& s, const HandleParams& params);

/// N = (sum a_j/4 (x_j^2+y_j^2) + sum (4 p_j^2 + q_j^2))^{-1}. Throws
/// DegeneratePoint at the origin.
double reeb_normalization(const HandleState& s, const HandleParams& params);

/// Closed-form time-t Reeb flow with N evaluated at `s` and held fixed.
HandleState reeb_flow(const HandleState& s, double t, const HandleParams& params);

/// RK4 integration of the field N(s) R(s), recomputing N at every stage.
/// Diagnostic only.
HandleState reeb_flow_integrated(const HandleState& s, double t, const HandleParams& params,
                                 int steps = 2000);

/// (e^{t/2} x, e^{t/2} y, e^{2t} p, e^{-t} q).
HandleState liouville_flow(const HandleState& s, double t);

/// The positive T with e^{-T}(delta^2 + q^2) = e^{2T} q^2 - delta^2.
/// Throws NoRootInBracket when q == 0 or delta <= 0.
double solve_T(double q, double delta);

/// e^{-T}(delta^2 + q^2) - e^{2T} q^2 + delta^2.
double flow_time_residual(double T, double q, double delta);

/// Radii of the attaching regions; infinite means unconstrained.
struct AttachRadii {
    double rho = std::numeric_limits<double>::infinity();   // ball / index-1 region
    double rho1 = std::numeric_limits<double>::infinity();  // |p|^2 bound, index k
    double rho2 = std::numeric_limits<double>::infinity();  // sum a (x^2+y^2) bound, index k
    double tolerance = 1e-9;                                // for equality constraints
};

/// F_c(u, v, z) = (x + u, y + v, z + z0 + y.u + uv/2) with c = (x, y, z0).
/// `center` and `point` both have length 2m + 1. With `weights` (length m)
/// the point must lie in the ball sum a_i (u_i^2+v_i^2) + z^2 <= rho.
std::vector<double> attach_fc(const std::vector<double>& center, const std::vector<double>& point,
                              const std::vector<double>& weights = {}, const AttachRadii& radii = {});

/// Index-1 map G(x, y, 0, q) = (x, y, 0) on {p = 0, level = -delta^2}.
std::vector<double> attach_g_index1(const HandleState& s, const HandleParams& params,
                                    const AttachRadii& radii = {});

/// Index-k map G(x, y, p, q) = (q, (p.q) q - p, x, y, p.q + sum x_i y_i / 2)
/// on {p.q = 0, level = -delta^2}.
std::vector<double> attach_g_indexk(const HandleState& s, const HandleParams& params,
                                    const AttachRadii& radii = {});

enum class AttachVariant { Fc, GIndex1, GIndexK };

struct PullbackOptions {
    int samples = 1000;
    std::uint64_t seed = 20240611;
    double step = 1e-6;
};

struct PullbackReport {
    AttachVariant variant = AttachVariant::Fc;
    int samples = 0;
    double max_residual = 0.0;  // largest |component| of pullback - source form on the tangent space
    std::vector<double> worst_point;
};

/// Samples random domain points, pulls the target contact form back by
/// central differences and compares it with the domain's own form on the
/// tangent space: dz - y dx against alpha_b for F_c, alpha_b (index 1) or
/// alpha_N = dr - v du - t ds (index k) against alpha_{-delta} for G.
PullbackReport pullback_check(AttachVariant variant, const HandleParams& params,
                              const PullbackOptions& options = {});

/// Componentwise view of the Liouville scaling of the level function.
struct LevelParts {
    double rotational = 0.0;  // sum a_j/2 (x^2+y^2)
    double expanding = 0.0;   // sum 2 p^2
    double contracting = 0.0; // sum q^2
};
LevelParts level_parts(const HandleState& s, const HandleParams& params);

}  // namespace lch
