#include "toeplitz/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "toeplitz/matrix.hpp"

namespace toeplitz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<cplx> poly_mul(const std::vector<cplx>& p, const std::vector<cplx>& q) {
    std::vector<cplx> out(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

std::vector<cplx> monomial(std::size_t k) {
    std::vector<cplx> out(k + 1, 0.0);
    out[k] = 1.0;
    return out;
}

bool by_modulus_then_arg(cplx x, cplx y) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax != ay) return ax < ay;
    return std::arg(x) < std::arg(y);
}

}  // namespace

PolynomialPair polynomial_pair(const LaurentSymbol<ComplexFloat>& s) {
    // phi = scale z^e prod(z - mn) prod(1 - pn z) / (prod(z - md) prod(1 - pd z))
    const long e = s.shift - static_cast<long>(s.minus_num.size()) + static_cast<long>(s.minus_den.size());
    PolynomialPair out;
    out.f = {s.scale.value()};
    out.g = {1.0};
    if (e > 0) out.f = poly_mul(out.f, monomial(static_cast<std::size_t>(e)));
    if (e < 0) out.g = poly_mul(out.g, monomial(static_cast<std::size_t>(-e)));
    for (const auto& x : s.minus_num) out.f = poly_mul(out.f, {-x.value(), 1.0});
    for (const auto& x : s.plus_num) out.f = poly_mul(out.f, {1.0, -x.value()});
    for (const auto& x : s.minus_den) out.g = poly_mul(out.g, {-x.value(), 1.0});
    for (const auto& x : s.plus_den) out.g = poly_mul(out.g, {1.0, -x.value()});
    out.inside_poles = static_cast<std::size_t>(std::max(0L, -e)) + s.minus_den.size();
    for (const auto& x : s.plus_den) out.plus_poles.push_back(x.value());
    return out;
}

namespace {

ShiftedRoots roots_of(const PolynomialPair& pp, cplx lambda) {
    const std::size_t len = std::max(pp.f.size(), pp.g.size());
    std::vector<cplx> h(len, 0.0);
    for (std::size_t i = 0; i < pp.f.size(); ++i) h[i] += pp.f[i];
    for (std::size_t i = 0; i < pp.g.size(); ++i) h[i] -= lambda * pp.g[i];
    double biggest = 0.0;
    for (const auto& c : h) biggest = std::max(biggest, std::abs(c));
    if (biggest == 0.0) throw ValidationError("f - lambda g is identically zero");
    ShiftedRoots out;
    while (std::abs(h.back()) <= 1e-13 * biggest) {
        h.pop_back();
        ++out.at_infinity;
    }
    out.roots = polynomial_roots(h);
    return out;
}

LocusSample make_sample(const PolynomialPair& pp, cplx lambda, LocusKind kind) {
    const auto r = roots_of(pp, lambda);
    LocusSample s;
    s.lambda = lambda;
    s.kind = kind;
    s.at_infinity = r.at_infinity;
    const std::size_t k = pp.inside_poles;
    if (kind == LocusKind::toeplitz) {
        for (const auto& z : r.roots) s.sorted_moduli.push_back(std::abs(z));
        s.split = k;
    } else {
        // the k smallest roots play a_i(lambda), the rest 1/b_i(lambda);
        // both enter the comparison set by value, together with the d_i
        auto roots = r.roots;
        std::sort(roots.begin(), roots.end(), by_modulus_then_arg);
        for (const auto& z : roots) s.sorted_moduli.push_back(std::abs(z));
        for (const auto& d : pp.plus_poles) s.sorted_moduli.push_back(std::abs(d));
        s.split = k + pp.plus_poles.size();
    }
    for (int i = 0; i < r.at_infinity; ++i) s.sorted_moduli.push_back(kInf);
    std::sort(s.sorted_moduli.begin(), s.sorted_moduli.end());
    if (s.split == 0 || s.split >= s.sorted_moduli.size())
        throw ValidationError("degree too low to define the modulus gap at position " + std::to_string(s.split + 1));
    const double lo = s.sorted_moduli[s.split - 1], hi = s.sorted_moduli[s.split];
    s.gap = std::isinf(lo) ? kInf : hi - lo;
    return s;
}

double local_scale(const LocusSample& s) {
    const double lo = s.sorted_moduli[s.split - 1], hi = s.sorted_moduli[s.split];
    if (std::isinf(hi)) return std::max(lo, 1e-300);
    return std::max(0.5 * (lo + hi), 1e-300);
}

}  // namespace

ShiftedRoots shifted_roots(const LaurentSymbol<ComplexFloat>& s, cplx lambda) {
    return roots_of(polynomial_pair(s), lambda);
}

LocusSample gap_toeplitz(const LaurentSymbol<ComplexFloat>& s, cplx lambda) {
    return make_sample(polynomial_pair(s), lambda, LocusKind::toeplitz);
}

LocusSample gap_th(const LaurentSymbol<ComplexFloat>& s, cplx lambda) {
    return make_sample(polynomial_pair(s), lambda, LocusKind::th);
}

double LocusScan::cell_diameter() const {
    const double dx = (window.re_max - window.re_min) / resolution;
    const double dy = (window.im_max - window.im_min) / resolution;
    return std::hypot(dx, dy);
}

cplx LocusScan::cell_center(int ix, int iy) const {
    const double dx = (window.re_max - window.re_min) / resolution;
    const double dy = (window.im_max - window.im_min) / resolution;
    return {window.re_min + (ix + 0.5) * dx, window.im_min + (iy + 0.5) * dy};
}

LocusScan locus_scan(const LaurentSymbol<ComplexFloat>& s, LocusKind kind, const Window& w, int resolution,
                     double threshold) {
    if (resolution < 2 || resolution > 2048) throw ValidationError("resolution must lie in [2, 2048]");
    if (!(w.re_max > w.re_min) || !(w.im_max > w.im_min)) throw ValidationError("empty window");
    const auto pp = polynomial_pair(s);
    LocusScan scan;
    scan.window = w;
    scan.resolution = resolution;
    scan.kind = kind;
    scan.threshold = threshold;
    scan.samples.resize(static_cast<std::size_t>(resolution) * resolution);

    auto sample_at = [&](cplx lambda) {
        try {
            return make_sample(pp, lambda, kind);
        } catch (const Error&) {
            LocusSample bad;
            bad.lambda = lambda;
            bad.kind = kind;
            return bad;
        }
    };
    auto below = [&](const LocusSample& x) {
        return std::isfinite(x.gap) && x.split > 0 && x.gap < threshold * local_scale(x);
    };
    auto index = [&](int ix, int iy) { return static_cast<std::size_t>(iy) * resolution + ix; };

    for (int iy = 0; iy < resolution; ++iy)
        for (int ix = 0; ix < resolution; ++ix) {
            auto& cell = scan.samples[index(ix, iy)];
            cell = sample_at(scan.cell_center(ix, iy));
            cell.flag = below(cell);
        }

    const double dx = (w.re_max - w.re_min) / resolution;
    const double dy = (w.im_max - w.im_min) / resolution;
    auto refine = [&](cplx from, cplx to) {
        // ternary search for the gap minimum on the segment
        double lo = 0.0, hi = 1.0;
        auto gap_at = [&](double t) { return sample_at(from + t * (to - from)).gap; };
        for (int it = 0; it < 60; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (gap_at(m1) <= gap_at(m2))
                hi = m2;
            else
                lo = m1;
        }
        const cplx at = from + 0.5 * (lo + hi) * (to - from);
        const auto best = sample_at(at);
        if (!below(best)) return;
        const int ix = static_cast<int>(std::floor((at.real() - w.re_min) / dx));
        const int iy = static_cast<int>(std::floor((at.imag() - w.im_min) / dy));
        if (ix < 0 || iy < 0 || ix >= resolution || iy >= resolution) return;
        scan.samples[index(ix, iy)].flag = true;
        scan.refined.push_back(at);
    };
    auto local_min = [](double left, double mid, double right) {
        return std::isfinite(mid) && mid <= left && mid <= right && (mid < left || mid < right);
    };
    for (int iy = 0; iy < resolution; ++iy)
        for (int ix = 1; ix + 1 < resolution; ++ix) {
            const double l = scan.samples[index(ix - 1, iy)].gap, m = scan.samples[index(ix, iy)].gap,
                         r = scan.samples[index(ix + 1, iy)].gap;
            if (local_min(l, m, r)) refine(scan.cell_center(ix - 1, iy), scan.cell_center(ix + 1, iy));
        }
    for (int ix = 0; ix < resolution; ++ix)
        for (int iy = 1; iy + 1 < resolution; ++iy) {
            const double l = scan.samples[index(ix, iy - 1)].gap, m = scan.samples[index(ix, iy)].gap,
                         r = scan.samples[index(ix, iy + 1)].gap;
            if (local_min(l, m, r)) refine(scan.cell_center(ix, iy - 1), scan.cell_center(ix, iy + 1));
        }
    return scan;
}

std::vector<cplx> image_curve(const LaurentSymbol<ComplexFloat>& s, int m) {
    if (m < 16) throw ValidationError("image curve needs at least 16 samples");
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / m;
        out.push_back(evaluate(s, ComplexFloat(std::polar(1.0, theta))).value());
    }
    return out;
}

double distance_to_closed_curve(cplx z, const std::vector<cplx>& curve) {
    double best = kInf;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const cplx p = curve[i], q = curve[(i + 1) % curve.size()];
        const cplx pq = q - p;
        const double len2 = std::norm(pq);
        double t = len2 > 0 ? ((z - p) * std::conj(pq)).real() / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, std::abs(z - (p + t * pq)));
    }
    return best;
}

EigCloud eig_cloud(const RationalSymbol<ComplexFloat>& s, long n, LocusKind which, const LocusScan* scan) {
    if (n < 1 || n > 400) throw ValidationError("eig_cloud needs 1 ≤ n ≤ 400");
    const auto laurent = to_laurent(s);
    const FourierCoefficients<ComplexFloat> phi(laurent);
    const auto m = which == LocusKind::toeplitz ? build_toeplitz(phi, static_cast<std::size_t>(n))
                                                : build_th(phi, static_cast<std::size_t>(n));
    const auto eig = eigenvalues(m);
    const auto curve = image_curve(laurent, 4096);
    std::vector<cplx> flagged;
    if (scan)
        for (int iy = 0; iy < scan->resolution; ++iy)
            for (int ix = 0; ix < scan->resolution; ++ix)
                if (scan->samples[static_cast<std::size_t>(iy) * scan->resolution + ix].flag)
                    flagged.push_back(scan->cell_center(ix, iy));

    EigCloud out;
    out.values = eig.values;
    out.residual = eig.max_residual;
    out.phi_at_one = evaluate(laurent, ComplexFloat(1.0)).value();
    out.phi_one_distance = kInf;
    for (const auto& lambda : out.values) {
        const double dc = distance_to_closed_curve(lambda, curve);
        out.dist_curve.push_back(dc);
        out.max_dist_curve = std::max(out.max_dist_curve, dc);
        double dl = std::numeric_limits<double>::quiet_NaN();
        if (!flagged.empty()) {
            dl = kInf;
            for (const auto& c : flagged) dl = std::min(dl, std::abs(lambda - c));
        }
        out.dist_locus.push_back(dl);
        out.phi_one_distance = std::min(out.phi_one_distance, std::abs(lambda - out.phi_at_one));
    }
    return out;
}

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

}  // namespace

void write_locus_csv(std::ostream& os, const LocusScan& scan) {
    os << "re_lambda,im_lambda,gap,flag\n";
    for (const auto& s : scan.samples)
        os << num(s.lambda.real()) << ',' << num(s.lambda.imag()) << ',' << num(s.gap) << ',' << (s.flag ? 1 : 0)
           << '\n';
}

void write_eigs_csv(std::ostream& os, const EigCloud& cloud) {
    os << "re,im,dist_curve,dist_locus\n";
    for (std::size_t i = 0; i < cloud.values.size(); ++i)
        os << num(cloud.values[i].real()) << ',' << num(cloud.values[i].imag()) << ',' << num(cloud.dist_curve[i])
           << ',' << num(cloud.dist_locus[i]) << '\n';
}

void write_curve_csv(std::ostream& os, const std::vector<cplx>& curve) {
    os << "re,im\n";
    for (const auto& z : curve) os << num(z.real()) << ',' << num(z.imag()) << '\n';
}

}  // namespace toeplitz
