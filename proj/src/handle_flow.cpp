#include "lch/handle_flow.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

namespace lch {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double sum_sq(const Vec& a) { return dot(a, a); }

double weighted_sq(const Vec& w, const Vec& x, const Vec& y) {
    double s = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * (x[j] * x[j] + y[j] * y[j]);
    return s;
}

}  // namespace

void HandleParams::validate() const {
    std::ostringstream msg;
    if (k < 1 || k > n - 2) msg << "need 1 <= k <= n-2, got n=" << n << " k=" << k;
    else if (static_cast<int>(a.size()) != n - k) msg << "need n-k = " << n - k << " weights, got " << a.size();
    else if (!(delta > 0)) msg << "delta must be positive";
    else if (std::any_of(a.begin(), a.end(), [](double v) { return !(v > 0); })) msg << "weights must be positive";
    else {
        Vec sorted = a;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) msg << "weights must be distinct";
    }
    if (!msg.str().empty()) throw Error(Errc::InvalidParams, msg.str());
}

void check_shape(const HandleState& s, const HandleParams& params) {
    const auto m = static_cast<std::size_t>(params.n - params.k);
    const auto k = static_cast<std::size_t>(params.k);
    if (s.x.size() != m || s.y.size() != m || s.p.size() != k || s.q.size() != k)
        throw Error(Errc::InvalidParams, "state block sizes do not match n and k");
}

double level(const HandleState& s, const HandleParams& params) {
    return 0.5 * weighted_sq(params.a, s.x, s.y) + 2.0 * sum_sq(s.p) - sum_sq(s.q);
}

LevelParts level_parts(const HandleState& s, const HandleParams& params) {
    return {0.5 * weighted_sq(params.a, s.x, s.y), 2.0 * sum_sq(s.p), sum_sq(s.q)};
}

double reeb_normalization(const HandleState& s, const HandleParams& params) {
    const double denom = 0.25 * weighted_sq(params.a, s.x, s.y) + 4.0 * sum_sq(s.p) + sum_sq(s.q);
    if (!(denom > 0)) throw Error(Errc::DegeneratePoint, "N is undefined at the origin");
    return 1.0 / denom;
}

HandleState reeb_flow(const HandleState& s, double t, const HandleParams& params) {
    check_shape(s, params);
    const double N = reeb_normalization(s, params);
    HandleState out = s;
    for (std::size_t j = 0; j < s.x.size(); ++j) {
        const double angle = N * params.a[j] / 2.0 * t;
        const double c = std::cos(angle), sn = std::sin(angle);
        out.x[j] = s.x[j] * c - s.y[j] * sn;
        out.y[j] = s.x[j] * sn + s.y[j] * c;
    }
    const double r2 = std::sqrt(2.0);
    const double ch = std::cosh(N * r2 * t), sh = std::sinh(N * r2 * t);
    // a zero coefficient stays zero even when cosh/sinh overflow
    auto term = [](double coeff, double f) { return coeff == 0.0 ? 0.0 : coeff * f; };
    for (std::size_t j = 0; j < s.p.size(); ++j) {
        out.p[j] = term(s.p[j], ch) + term(s.q[j] / r2, sh);
        out.q[j] = term(r2 * s.p[j], sh) + term(s.q[j], ch);
    }
    return out;
}

namespace {

HandleState reeb_field(const HandleState& s, const HandleParams& params) {
    const double N = reeb_normalization(s, params);
    HandleState v = s;
    for (std::size_t j = 0; j < s.x.size(); ++j) {
        v.x[j] = -N * params.a[j] / 2.0 * s.y[j];
        v.y[j] = N * params.a[j] / 2.0 * s.x[j];
    }
    for (std::size_t j = 0; j < s.p.size(); ++j) {
        v.p[j] = N * s.q[j];
        v.q[j] = 2.0 * N * s.p[j];
    }
    return v;
}

HandleState axpy(const HandleState& s, double h, const HandleState& v) {
    HandleState out = s;
    auto add = [h](Vec& dst, const Vec& src) {
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += h * src[i];
    };
    add(out.x, v.x);
    add(out.y, v.y);
    add(out.p, v.p);
    add(out.q, v.q);
    return out;
}

}  // namespace

HandleState reeb_flow_integrated(const HandleState& s, double t, const HandleParams& params, int steps) {
    check_shape(s, params);
    if (steps < 1) throw Error(Errc::InvalidParams, "steps must be positive");
    const double h = t / steps;
    HandleState cur = s;
    for (int i = 0; i < steps; ++i) {
        const auto k1 = reeb_field(cur, params);
        const auto k2 = reeb_field(axpy(cur, h / 2, k1), params);
        const auto k3 = reeb_field(axpy(cur, h / 2, k2), params);
        const auto k4 = reeb_field(axpy(cur, h, k3), params);
        cur = axpy(cur, h / 6, k1);
        cur = axpy(cur, h / 3, k2);
        cur = axpy(cur, h / 3, k3);
        cur = axpy(cur, h / 6, k4);
    }
    return cur;
}

HandleState liouville_flow(const HandleState& s, double t) {
    HandleState out = s;
    const double half = std::exp(t / 2), twice = std::exp(2 * t), back = std::exp(-t);
    for (auto& v : out.x) v *= half;
    for (auto& v : out.y) v *= half;
    for (auto& v : out.p) v *= twice;
    for (auto& v : out.q) v *= back;
    return out;
}

double flow_time_residual(double T, double q, double delta) {
    const double d2 = delta * delta, q2 = q * q;
    return std::exp(-T) * (d2 + q2) - std::exp(2 * T) * q2 + d2;
}

double solve_T(double q, double delta) {
    if (!(delta > 0) || q == 0 || !std::isfinite(q))
        throw Error(Errc::NoRootInBracket, "need q != 0 and delta > 0");
    // The residual is 2 delta^2 at T = 0 and decreasing for T > 0.
    double lo = 0.0, hi = std::log(2.0);
    while (flow_time_residual(hi, q, delta) > 0) {
        lo = hi;
        hi *= 2;
        if (hi > 700) throw Error(Errc::NoRootInBracket, "no sign change below T = 700");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (flow_time_residual(mid, q, delta) > 0 ? lo : hi) = mid;
    }
    return std::abs(flow_time_residual(lo, q, delta)) <= std::abs(flow_time_residual(hi, q, delta)) ? lo : hi;
}

namespace {

std::string point_text(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

void require_near(double value, double target, double tol, const std::string& what) {
    if (std::abs(value - target) > tol * std::max(1.0, std::abs(target)))
        throw Error(Errc::OutOfDomain, what);
}

Vec fc_formula(const Vec& center, const Vec& point) {
    const std::size_t m = (center.size() - 1) / 2;
    Vec out(center.size());
    double yu = 0.0, uv = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double u = point[i], v = point[m + i];
        out[i] = center[i] + u;
        out[m + i] = center[m + i] + v;
        yu += center[m + i] * u;
        uv += u * v;
    }
    out[2 * m] = point[2 * m] + center[2 * m] + yu + 0.5 * uv;
    return out;
}

Vec pack(const HandleState& s) {
    Vec v;
    v.insert(v.end(), s.x.begin(), s.x.end());
    v.insert(v.end(), s.y.begin(), s.y.end());
    v.insert(v.end(), s.p.begin(), s.p.end());
    v.insert(v.end(), s.q.begin(), s.q.end());
    return v;
}

HandleState unpack(const Vec& v, std::size_t m, std::size_t k) {
    HandleState s;
    auto it = v.begin();
    auto take = [&it](std::size_t len) {
        Vec out(it, it + static_cast<std::ptrdiff_t>(len));
        it += static_cast<std::ptrdiff_t>(len);
        return out;
    };
    s.x = take(m);
    s.y = take(m);
    s.p = take(k);
    s.q = take(k);
    return s;
}

Vec g1_formula(const HandleState& s) {
    Vec out = s.x;
    out.insert(out.end(), s.y.begin(), s.y.end());
    out.push_back(0.0);
    return out;
}

Vec gk_formula(const HandleState& s) {
    const double pq = dot(s.p, s.q);
    Vec out = s.q;
    for (std::size_t i = 0; i < s.p.size(); ++i) out.push_back(pq * s.q[i] - s.p[i]);
    out.insert(out.end(), s.x.begin(), s.x.end());
    out.insert(out.end(), s.y.begin(), s.y.end());
    double r = pq;
    for (std::size_t i = 0; i < s.x.size(); ++i) r += s.x[i] * s.y[i] / 2.0;
    out.push_back(r);
    return out;
}

}  // namespace

std::vector<double> attach_fc(const std::vector<double>& center, const std::vector<double>& point,
                              const std::vector<double>& weights, const AttachRadii& radii) {
    if (center.size() % 2 == 0 || center.size() != point.size())
        throw Error(Errc::InvalidParams, "center and point must both have odd length 2m+1");
    const std::size_t m = (center.size() - 1) / 2;
    if (!weights.empty()) {
        if (weights.size() != m) throw Error(Errc::InvalidParams, "need m ball weights");
        const Vec u(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(m));
        const Vec v(point.begin() + static_cast<std::ptrdiff_t>(m), point.end() - 1);
        const double r = weighted_sq(weights, u, v) + point.back() * point.back();
        if (r > radii.rho) throw Error(Errc::OutOfDomain, "point " + point_text(point) + " is outside the ball");
    }
    return fc_formula(center, point);
}

std::vector<double> attach_g_index1(const HandleState& s, const HandleParams& params, const AttachRadii& radii) {
    params.validate();
    check_shape(s, params);
    if (params.k != 1) throw Error(Errc::InvalidParams, "index-1 map needs k = 1");
    if (std::abs(s.p[0]) > radii.tolerance) throw Error(Errc::OutOfDomain, "need p = 0");
    if (s.q[0] == 0) throw Error(Errc::OutOfDomain, "need q != 0");
    require_near(level(s, params), -params.delta * params.delta, radii.tolerance, "point is not on the lower boundary");
    if (weighted_sq(params.a, s.x, s.y) > radii.rho * radii.rho)
        throw Error(Errc::OutOfDomain, "point is outside the attaching region");
    return g1_formula(s);
}

std::vector<double> attach_g_indexk(const HandleState& s, const HandleParams& params, const AttachRadii& radii) {
    params.validate();
    check_shape(s, params);
    const double scale = std::sqrt(sum_sq(s.p) * sum_sq(s.q));
    if (std::abs(dot(s.p, s.q)) > radii.tolerance * std::max(1.0, scale)) throw Error(Errc::OutOfDomain, "need p.q = 0");
    require_near(level(s, params), -params.delta * params.delta, radii.tolerance, "point is not on the lower boundary");
    if (weighted_sq(params.a, s.x, s.y) >= radii.rho2 || sum_sq(s.p) >= radii.rho1)
        throw Error(Errc::OutOfDomain, "point is outside the attaching region");
    return gk_formula(s);
}

namespace {

// Everything the checker needs about one variant.
struct PullbackProblem {
    std::function<Vec(const Vec&)> map;
    std::function<Vec(const Vec&)> target_form;  // covector at an image point
    std::function<Vec(const Vec&)> source_form;  // covector at a domain point
    std::function<std::vector<Vec>(const Vec&)> normals;
    std::function<Vec(std::mt19937_64&)> sample;
};

// Covector of alpha_{-delta} = sum (x dy - y dx)/2 + sum (2 p dq + q dp).
Vec handle_form(const Vec& pt, std::size_t m, std::size_t k) {
    const auto s = unpack(pt, m, k);
    Vec out(pt.size(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = -0.5 * s.y[i];
        out[m + i] = 0.5 * s.x[i];
    }
    for (std::size_t j = 0; j < k; ++j) {
        out[2 * m + j] = s.q[j];
        out[2 * m + k + j] = 2.0 * s.p[j];
    }
    return out;
}

Vec level_gradient(const Vec& pt, const HandleParams& params, std::size_t m, std::size_t k) {
    const auto s = unpack(pt, m, k);
    Vec g(pt.size(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        g[i] = params.a[i] * s.x[i];
        g[m + i] = params.a[i] * s.y[i];
    }
    for (std::size_t j = 0; j < k; ++j) {
        g[2 * m + j] = 4.0 * s.p[j];
        g[2 * m + k + j] = -2.0 * s.q[j];
    }
    return g;
}

double residual_on_tangent(Vec r, std::vector<Vec> normals) {
    // Gram-Schmidt on the constraint gradients, then strip those directions.
    std::vector<Vec> basis;
    for (auto& n : normals) {
        for (const auto& b : basis) {
            const double c = dot(n, b);
            for (std::size_t i = 0; i < n.size(); ++i) n[i] -= c * b[i];
        }
        const double len = std::sqrt(sum_sq(n));
        if (len < 1e-12) continue;
        for (auto& v : n) v /= len;
        basis.push_back(n);
    }
    for (const auto& b : basis) {
        const double c = dot(r, b);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * b[i];
    }
    double worst = 0.0;
    for (double v : r) worst = std::max(worst, std::abs(v));
    return worst;
}

PullbackProblem make_problem(AttachVariant variant, const HandleParams& params) {
    const auto m = static_cast<std::size_t>(params.n - params.k);
    const auto k = static_cast<std::size_t>(params.k);
    const double d2 = params.delta * params.delta;
    PullbackProblem pb;
    switch (variant) {
        case AttachVariant::Fc: {
            // Ball of dimension 2m+1 with m = n-1 weights taken from params.a.
            const std::size_t bm = m;
            auto center = std::make_shared<Vec>(2 * bm + 1, 0.0);
            pb.sample = [bm, center, a = params.a](std::mt19937_64& rng) {
                std::uniform_real_distribution<double> unit(-1.0, 1.0);
                for (auto& c : *center) c = 2.0 * unit(rng);
                Vec pt(2 * bm + 1);
                do {
                    for (auto& v : pt) v = unit(rng);
                    const Vec u(pt.begin(), pt.begin() + static_cast<std::ptrdiff_t>(bm));
                    const Vec w(pt.begin() + static_cast<std::ptrdiff_t>(bm), pt.end() - 1);
                    if (weighted_sq(a, u, w) + pt.back() * pt.back() <= 1.0) break;
                } while (true);
                return pt;
            };
            pb.map = [center](const Vec& pt) { return fc_formula(*center, pt); };
            pb.target_form = [bm](const Vec& img) {
                Vec out(img.size(), 0.0);  // dz - y dx
                for (std::size_t i = 0; i < bm; ++i) out[i] = -img[bm + i];
                out[2 * bm] = 1.0;
                return out;
            };
            pb.source_form = [bm](const Vec& pt) {
                Vec out(pt.size(), 0.0);  // dz + (u dv - v du)/2
                for (std::size_t i = 0; i < bm; ++i) {
                    out[i] = -0.5 * pt[bm + i];
                    out[bm + i] = 0.5 * pt[i];
                }
                out[2 * bm] = 1.0;
                return out;
            };
            pb.normals = [](const Vec&) { return std::vector<Vec>{}; };
            return pb;
        }
        case AttachVariant::GIndex1: {
            if (k != 1) throw Error(Errc::InvalidParams, "index-1 check needs k = 1");
            pb.sample = [m, params, d2](std::mt19937_64& rng) {
                std::uniform_real_distribution<double> unit(-1.0, 1.0);
                HandleState s{Vec(m), Vec(m), Vec{0.0}, Vec{0.0}};
                for (auto& v : s.x) v = unit(rng);
                for (auto& v : s.y) v = unit(rng);
                const double sign = unit(rng) < 0 ? -1.0 : 1.0;
                s.q[0] = sign * std::sqrt(d2 + 0.5 * weighted_sq(params.a, s.x, s.y));
                return pack(s);
            };
            pb.map = [m, k](const Vec& pt) { return g1_formula(unpack(pt, m, k)); };
            pb.target_form = [m](const Vec& img) {
                Vec out(img.size(), 0.0);  // dz + (u dv - v du)/2
                for (std::size_t i = 0; i < m; ++i) {
                    out[i] = -0.5 * img[m + i];
                    out[m + i] = 0.5 * img[i];
                }
                out[2 * m] = 1.0;
                return out;
            };
            pb.source_form = [m, k](const Vec& pt) { return handle_form(pt, m, k); };
            pb.normals = [m, k, params](const Vec& pt) {
                Vec dp(pt.size(), 0.0);
                dp[2 * m] = 1.0;
                return std::vector<Vec>{level_gradient(pt, params, m, k), dp};
            };
            return pb;
        }
        case AttachVariant::GIndexK: {
            pb.sample = [m, k, params, d2](std::mt19937_64& rng) {
                std::uniform_real_distribution<double> unit(-1.0, 1.0);
                std::normal_distribution<double> gauss(0.0, 1.0);
                HandleState s{Vec(m), Vec(m), Vec(k), Vec(k)};
                for (auto& v : s.x) v = 0.5 * unit(rng);
                for (auto& v : s.y) v = 0.5 * unit(rng);
                for (auto& v : s.q) v = gauss(rng);
                const double qn = std::sqrt(sum_sq(s.q));
                for (auto& v : s.q) v /= qn;
                for (auto& v : s.p) v = 0.5 * unit(rng);
                const double along = dot(s.p, s.q);
                for (std::size_t j = 0; j < k; ++j) s.p[j] -= along * s.q[j];
                const double radius = std::sqrt(d2 + 0.5 * weighted_sq(params.a, s.x, s.y) + 2.0 * sum_sq(s.p));
                for (auto& v : s.q) v *= radius;
                return pack(s);
            };
            pb.map = [m, k](const Vec& pt) { return gk_formula(unpack(pt, m, k)); };
            pb.target_form = [m, k](const Vec& img) {
                // image = (u[k], v[k], s[m], t[m], r); alpha_N = dr - v du - t ds
                Vec out(img.size(), 0.0);
                for (std::size_t j = 0; j < k; ++j) out[j] = -img[k + j];
                for (std::size_t i = 0; i < m; ++i) out[2 * k + i] = -img[2 * k + m + i];
                out.back() = 1.0;
                return out;
            };
            pb.source_form = [m, k](const Vec& pt) { return handle_form(pt, m, k); };
            pb.normals = [m, k, params](const Vec& pt) {
                const auto s = unpack(pt, m, k);
                Vec dpq(pt.size(), 0.0);
                for (std::size_t j = 0; j < k; ++j) {
                    dpq[2 * m + j] = s.q[j];
                    dpq[2 * m + k + j] = s.p[j];
                }
                return std::vector<Vec>{level_gradient(pt, params, m, k), dpq};
            };
            return pb;
        }
    }
    throw Error(Errc::InvalidParams, "unknown variant");
}

}  // namespace

PullbackReport pullback_check(AttachVariant variant, const HandleParams& params, const PullbackOptions& options) {
    params.validate();
    if (options.samples < 1 || !(options.step > 0)) throw Error(Errc::InvalidParams, "bad pullback options");
    auto pb = make_problem(variant, params);
    std::mt19937_64 rng(options.seed);
    PullbackReport report;
    report.variant = variant;
    const double h = options.step;
    for (int n = 0; n < options.samples; ++n) {
        const Vec pt = pb.sample(rng);
        const Vec alpha = pb.target_form(pb.map(pt));
        Vec pulled(pt.size(), 0.0);
        for (std::size_t i = 0; i < pt.size(); ++i) {
            Vec fwd = pt, bwd = pt;
            fwd[i] += h;
            bwd[i] -= h;
            const Vec a = pb.map(fwd), b = pb.map(bwd);
            for (std::size_t r = 0; r < a.size(); ++r) pulled[i] += alpha[r] * (a[r] - b[r]) / (2 * h);
        }
        const Vec src = pb.source_form(pt);
        for (std::size_t i = 0; i < pt.size(); ++i) pulled[i] -= src[i];
        const double res = residual_on_tangent(pulled, pb.normals(pt));
        if (res >= report.max_residual) {
            report.max_residual = res;
            report.worst_point = pt;
        }
        ++report.samples;
    }
    return report;
}

}  // namespace lch
