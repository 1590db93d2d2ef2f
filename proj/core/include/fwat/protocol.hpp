#pragma once

#include "fwat/graph.hpp"

#include <span>
#include <string>

namespace fwat {

// Exponent arguments are clamped to +-kExpCap before exponentiation; e^500 is
// still representable in double precision, anything beyond it only destroys
// the integrator. Each clamp is counted in the caller-supplied counter.
inline constexpr double kExpCap = 500.0;

struct FwatParams {
    double eta = 1.0;   // consensus gain
    double eta2 = 2.0;  // tracking gain (second-order mode)
    double t0 = 0.0;    // start time
    double t1 = 0.0;    // tracking handoff time (second-order mode only)
    double tf = 1.0;    // prescribed settling time
};

// Structural checks (throw std::invalid_argument on violation).
void validate_params_single(const FwatParams& p);
void validate_params_double(const FwatParams& p);

// The gain conditions eta > 1/lambda2^2 and eta2 > 1 are advisory: violating
// them voids the convergence certificate but the laws stay well defined, so
// the result is a warning record rather than an error.
struct GainCheck {
    bool satisfied = false;
    bool verified = false;  // false when lambda2 could not be pinned down
    double lambda2 = 0.0;
    double eta_threshold = 0.0;
    std::string note;
};
GainCheck check_gain_single(const FwatParams& p, double lambda2_min, bool holiday_present = false);
GainCheck check_gain_double(const FwatParams& p, double lambda2, bool holiday_present = false);

double capped_exp(double arg, long* sat_count = nullptr);

// phi1 = -(eta/(tf-t)) L e^{-Lx}; the velocity each agent should track.
// Defined for t < tf only (throws std::domain_error at or past tf).
Vec phi1(const Vec& x, const Mat& laplacian, const FwatParams& p, double t,
         long* sat_count = nullptr);

// Single-integrator consensus law: u = (eta/(tf-t)) L e^{-Lx} on [t0, tf),
// zero otherwise. Conserves the state average (1'u = 0 up to round-off).
Vec fwat_single_input(const Vec& x, const Mat& laplacian, const FwatParams& p, double t,
                      long* sat_count = nullptr);

// The earlier per-agent exponential law u = -(eta/(tf-t))(1 - e^{-Lx}), kept
// only as an experimental control group: it is NOT average-preserving and its
// published convergence proof does not hold. Left-multiplying it by L gives
// fwat_single_input.
Vec nonconserving_input(const Vec& x, const Mat& laplacian, const FwatParams& p, double t,
                        long* sat_count = nullptr);

// Component i of the stacked law computed from local data only. z_self is the
// agent's own relative-state sum z_i = sum_{j in N_i} (x_j - x_i); z_neighbors
// holds the same quantity received from each neighbor. Defined to agree
// exactly with component i of fwat_single_input.
double per_agent_input(double z_self, std::span<const double> z_neighbors,
                       const FwatParams& p, double t, long* sat_count = nullptr);

// z = v + phi1(x).
Vec tracking_error(const Vec& x, const Vec& v, const Mat& laplacian, const FwatParams& p,
                   double t, long* sat_count = nullptr);

struct Phi1Partials {
    Mat dx;  // (eta/(tf-t)) L diag(e^{-Lx}) L, with clamped exponentials zeroed
    Vec dt;  // -(eta/(tf-t)^2) L e^{-Lx}
};
Phi1Partials phi1_partials(const Vec& x, const Mat& laplacian, const FwatParams& p, double t,
                           long* sat_count = nullptr);

// Second-order consensus law:
//   [t0, t1):  u = -(dphi1/dx) v - dphi1/dt - (eta2/(t1-t))(1 - e^{-z})
//   [t1, tf):  u = -(dphi1/dx) v - dphi1/dt
//   otherwise: u = 0
Vec fwat_double_input(const Vec& x, const Vec& v, const Mat& laplacian, const FwatParams& p,
                      double t, long* sat_count = nullptr);

// Isolated tracking subsystem dz/dt = -(eta2/(t1-t))(1 - e^{-z}) for t < t1,
// zero from t1 on.
Vec pure_tracking_field(const Vec& z, double eta2, double t1, double t,
                        long* sat_count = nullptr);

// Exact solution of the tracking subsystem: z(t) = ln(1 + c (t1-t)^eta2) with
// c = (e^{z0} - 1)/(t1-t0)^eta2.
Vec pure_tracking_closed_form(const Vec& z0, double eta2, double t0, double t1, double t);

}  // namespace fwat
