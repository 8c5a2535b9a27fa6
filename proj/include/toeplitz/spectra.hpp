#pragma once

// Eigenvalue loci of T_n(phi) and T_n(phi) + H_n(phi). Writing
// phi = f/g with polynomials f, g, the zeros of phi - lambda are the roots of
// f - lambda g. The Toeplitz determinant can only vanish for large n where
// |z_k(lambda)| = |z_{k+1}(lambda)| (k = zeros of g inside the circle); for
// T + H the comparison runs over the roots together with the d parameters.
// Everything here is binary64.

#include <complex>
#include <limits>
#include <ostream>
#include <vector>

#include "toeplitz/scalar.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz {

using cplx = std::complex<double>;

enum class LocusKind { toeplitz, th };

struct ShiftedRoots {
    std::vector<cplx> roots;
    int at_infinity = 0;  // roots lost to leading-coefficient cancellation
};

struct LocusSample {
    cplx lambda;
    std::vector<double> sorted_moduli;  // +inf for roots at infinity
    double gap = std::numeric_limits<double>::infinity();
    LocusKind kind = LocusKind::toeplitz;
    std::size_t split = 0;  // gap = moduli[split] - moduli[split - 1]
    int at_infinity = 0;
    bool flag = false;
};

// Numerator f and denominator g of phi as coefficient vectors (ascending).
struct PolynomialPair {
    std::vector<cplx> f, g;
    std::size_t inside_poles = 0;  // zeros of g inside the unit circle
    std::vector<cplx> plus_poles;  // the d parameters
};

// For parameter form the inside-pole count is max(|A|, |C|): the c_i plus
// the zeros at the origin produced by clearing negative powers; the 1/d_i
// lie outside. This holds also when some |a_i| > 1.
PolynomialPair polynomial_pair(const LaurentSymbol<ComplexFloat>& s);

ShiftedRoots shifted_roots(const LaurentSymbol<ComplexFloat>& s, cplx lambda);
LocusSample gap_toeplitz(const LaurentSymbol<ComplexFloat>& s, cplx lambda);
LocusSample gap_th(const LaurentSymbol<ComplexFloat>& s, cplx lambda);

struct Window {
    double re_min = -1, re_max = 1, im_min = -1, im_max = 1;
};

struct LocusScan {
    Window window;
    int resolution = 0;
    LocusKind kind = LocusKind::toeplitz;
    double threshold = 1e-3;
    std::vector<LocusSample> samples;  // row-major: index = iy * resolution + ix
    std::vector<cplx> refined;         // gap minimizers found below threshold
    double cell_diameter() const;
    cplx cell_center(int ix, int iy) const;
};

// Grid of gap samples at cell centers. A cell is flagged when its own gap
// is below threshold * (local modulus scale), or when a discrete local
// minimum along a grid row or column refines (ternary search between the
// neighbouring centers) to a gap below that threshold inside the cell.
LocusScan locus_scan(const LaurentSymbol<ComplexFloat>& s, LocusKind kind, const Window& w, int resolution,
                     double threshold = 1e-3);

// phi(e^{2 pi i j / m}), j = 0..m-1
std::vector<cplx> image_curve(const LaurentSymbol<ComplexFloat>& s, int m);

// Distance from z to the closed polyline through the points.
double distance_to_closed_curve(cplx z, const std::vector<cplx>& curve);

struct EigCloud {
    std::vector<cplx> values;
    std::vector<double> dist_curve;  // to the image curve (4096-gon)
    std::vector<double> dist_locus;  // to the nearest flagged cell center; NaN without a scan
    cplx phi_at_one;
    double phi_one_distance = 0.0;  // min over eigenvalues of |lambda - phi(1)|
    double max_dist_curve = 0.0;
    double residual = 0.0;
};

EigCloud eig_cloud(const RationalSymbol<ComplexFloat>& s, long n, LocusKind which, const LocusScan* scan = nullptr);

void write_locus_csv(std::ostream& os, const LocusScan& scan);
void write_eigs_csv(std::ostream& os, const EigCloud& cloud);
void write_curve_csv(std::ostream& os, const std::vector<cplx>& curve);

}  // namespace toeplitz
