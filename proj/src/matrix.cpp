#include "toeplitz/matrix.hpp"

#include <Eigen/Dense>

namespace toeplitz {

EigenResult eigenvalues(const DenseMatrix<ComplexFloat>& m) {
    if (m.rows() != m.cols()) throw ValidationError("eigenvalues: matrix is not square");
    const auto n = static_cast<Eigen::Index>(m.rows());
    EigenResult out;
    if (n == 0) return out;
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j).value();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, true);
    if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
    const double scale = std::max(a.norm(), 1e-300);
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::complex<double> lambda = solver.eigenvalues()(i);
        Eigen::VectorXcd v = solver.eigenvectors().col(i);
        const double vn = v.norm();
        if (vn == 0.0) throw NumericalError("eigensolver returned a zero eigenvector");
        v /= vn;
        const double res = (a * v - lambda * v).norm() / scale;
        out.max_residual = std::max(out.max_residual, res);
        out.values.push_back(lambda);
    }
    if (!(out.max_residual <= 1e-8))
        throw NumericalError("eigenvalue residual certificate failed: " + std::to_string(out.max_residual));
    return out;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs) {
    if (coeffs.empty() || coeffs.back() == std::complex<double>(0.0))
        throw ValidationError("polynomial_roots: leading coefficient is zero");
    const auto d = static_cast<Eigen::Index>(coeffs.size()) - 1;
    if (d == 0) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) comp(i, d - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success) throw NumericalError("companion eigensolver did not converge");
    std::vector<std::complex<double>> roots;
    for (Eigen::Index i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

}  // namespace toeplitz
