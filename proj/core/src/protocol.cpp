#include "fwat/protocol.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fwat {

namespace {

void require_finite(const Vec& x, const char* what) {
    if (!all_finite(x)) throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

Vec capped_exp_vec(const Vec& args, long* sat_count) {
    Vec out(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) out[i] = capped_exp(args[i], sat_count);
    return out;
}

}  // namespace

void validate_params_single(const FwatParams& p) {
    if (!(p.t0 < p.tf)) throw std::invalid_argument("FwatParams: need t0 < tf");
    if (!(p.eta > 0.0)) throw std::invalid_argument("FwatParams: need eta > 0");
}

void validate_params_double(const FwatParams& p) {
    if (!(p.t0 < p.t1 && p.t1 < p.tf))
        throw std::invalid_argument("FwatParams: need t0 < t1 < tf");
    if (!(p.eta > 0.0)) throw std::invalid_argument("FwatParams: need eta > 0");
    if (!(p.eta2 > 0.0)) throw std::invalid_argument("FwatParams: need eta2 > 0");
}

GainCheck check_gain_single(const FwatParams& p, double lambda2_min, bool holiday_present) {
    GainCheck g;
    g.lambda2 = lambda2_min;
    g.eta_threshold = (lambda2_min > 0.0) ? 1.0 / (lambda2_min * lambda2_min) : 0.0;
    if (lambda2_min <= 0.0) {
        g.satisfied = false;
        g.verified = false;
        g.note = "gain condition unverified: lambda2 unavailable";
        return g;
    }
    g.satisfied = p.eta > g.eta_threshold;
    g.verified = !holiday_present;
    std::ostringstream os;
    os << "eta = " << p.eta << (g.satisfied ? " > " : " <= ") << "1/lambda2^2 = "
       << g.eta_threshold;
    if (holiday_present) os << " (holiday intervals present; certificate unverified)";
    g.note = os.str();
    return g;
}

GainCheck check_gain_double(const FwatParams& p, double lambda2, bool holiday_present) {
    GainCheck g = check_gain_single(p, lambda2, holiday_present);
    if (!(p.eta2 > 1.0)) {
        g.satisfied = false;
        g.note += "; eta2 <= 1 violates the tracking gain condition";
    }
    return g;
}

double capped_exp(double arg, long* sat_count) {
    if (arg > kExpCap) {
        if (sat_count) ++*sat_count;
        arg = kExpCap;
    } else if (arg < -kExpCap) {
        if (sat_count) ++*sat_count;
        arg = -kExpCap;
    }
    return std::exp(arg);
}

Vec phi1(const Vec& x, const Mat& laplacian, const FwatParams& p, double t, long* sat_count) {
    if (!(t < p.tf)) throw std::domain_error("phi1: undefined for t >= tf");
    require_finite(x, "phi1");
    const Vec w = laplacian * x;  // exponent arguments are -w
    Vec e(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) e[i] = capped_exp(-w[i], sat_count);
    Vec out = laplacian * e;
    const double gain = -p.eta / (p.tf - t);
    for (double& v : out) v *= gain;
    return out;
}

Vec fwat_single_input(const Vec& x, const Mat& laplacian, const FwatParams& p, double t,
                      long* sat_count) {
    require_finite(x, "fwat_single_input");
    if (t < p.t0 || t >= p.tf) return Vec(x.size(), 0.0);
    Vec u = phi1(x, laplacian, p, t, sat_count);
    for (double& v : u) v = -v;
    return u;
}

Vec nonconserving_input(const Vec& x, const Mat& laplacian, const FwatParams& p, double t,
                        long* sat_count) {
    require_finite(x, "nonconserving_input");
    if (t < p.t0 || t >= p.tf) return Vec(x.size(), 0.0);
    const Vec w = laplacian * x;
    const double gain = -p.eta / (p.tf - t);
    Vec u(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) u[i] = gain * (1.0 - capped_exp(-w[i], sat_count));
    return u;
}

double per_agent_input(double z_self, std::span<const double> z_neighbors, const FwatParams& p,
                       double t, long* sat_count) {
    if (t < p.t0 || t >= p.tf) return 0.0;
    const double ez_self = capped_exp(z_self, sat_count);
    double s = 0.0;
    for (double zj : z_neighbors) s += ez_self - capped_exp(zj, sat_count);
    return p.eta / (p.tf - t) * s;
}

Vec tracking_error(const Vec& x, const Vec& v, const Mat& laplacian, const FwatParams& p,
                   double t, long* sat_count) {
    if (x.size() != v.size()) throw std::invalid_argument("tracking_error: dimension mismatch");
    Vec z = phi1(x, laplacian, p, t, sat_count);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += v[i];
    return z;
}

Phi1Partials phi1_partials(const Vec& x, const Mat& laplacian, const FwatParams& p, double t,
                           long* sat_count) {
    if (!(t < p.tf)) throw std::domain_error("phi1_partials: undefined for t >= tf");
    require_finite(x, "phi1_partials");
    const int n = laplacian.rows();
    const Vec w = laplacian * x;

    // d/dx goes through the clamped exponential, so a saturated component has
    // zero derivative; dphi1/dt keeps the clamped value itself.
    Vec e(w.size()), e_grad(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const bool saturated = (-w[i] > kExpCap) || (-w[i] < -kExpCap);
        e[i] = capped_exp(-w[i], sat_count);
        e_grad[i] = saturated ? 0.0 : e[i];
    }

    Phi1Partials out;
    const double gx = p.eta / (p.tf - t);
    out.dx = Mat(n, n);
    // (gx) L diag(e_grad) L without forming the diagonal matrix
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double lik = laplacian(i, k);
            if (lik == 0.0) continue;
            const double coeff = gx * lik * e_grad[k];
            for (int j = 0; j < n; ++j) out.dx(i, j) += coeff * laplacian(k, j);
        }

    out.dt = laplacian * e;
    const double gt = -p.eta / ((p.tf - t) * (p.tf - t));
    for (double& v : out.dt) v *= gt;
    return out;
}

Vec fwat_double_input(const Vec& x, const Vec& v, const Mat& laplacian, const FwatParams& p,
                      double t, long* sat_count) {
    if (x.size() != v.size()) throw std::invalid_argument("fwat_double_input: dimension mismatch");
    require_finite(x, "fwat_double_input");
    require_finite(v, "fwat_double_input");
    if (t < p.t0 || t >= p.tf) return Vec(x.size(), 0.0);

    const Phi1Partials d = phi1_partials(x, laplacian, p, t, sat_count);
    Vec u = d.dx * v;
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = -u[i] - d.dt[i];

    if (t < p.t1) {
        const Vec z = tracking_error(x, v, laplacian, p, t, sat_count);
        const double gain = p.eta2 / (p.t1 - t);
        for (std::size_t i = 0; i < u.size(); ++i)
            u[i] -= gain * (1.0 - capped_exp(-z[i], sat_count));
    }
    return u;
}

Vec pure_tracking_field(const Vec& z, double eta2, double t1, double t, long* sat_count) {
    if (t >= t1) return Vec(z.size(), 0.0);
    const double gain = -eta2 / (t1 - t);
    Vec out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        out[i] = gain * (1.0 - capped_exp(-z[i], sat_count));
    return out;
}

Vec pure_tracking_closed_form(const Vec& z0, double eta2, double t0, double t1, double t) {
    const double span = std::pow(t1 - t0, eta2);
    const double decay = std::pow(t1 - t, eta2);
    Vec out(z0.size());
    for (std::size_t i = 0; i < z0.size(); ++i) {
        const double c = (std::exp(z0[i]) - 1.0) / span;
        out[i] = std::log(1.0 + c * decay);
    }
    return out;
}

}  // namespace fwat
