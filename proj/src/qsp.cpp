#include "fragqsp/qsp.hpp"

#include "fragqsp/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fragqsp {

namespace {

using namespace std::complex_literals;

// Chebyshev nodes of the degree-n polynomial, n points.
std::vector<double> chebyshev_nodes(int n) {
    std::vector<double> x(n);
    for (int k = 0; k < n; ++k)
        x[k] = std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * n));
    return x;
}

// Coefficients of the unique degree < n interpolant through (nodes, values).
std::vector<std::complex<double>> interpolate(const std::vector<double>& nodes,
                                              const std::vector<std::complex<double>>& values) {
    const int n = static_cast<int>(nodes.size());
    Eigen::MatrixXcd vand(n, n);
    for (int r = 0; r < n; ++r) {
        double p = 1.0;
        for (int c = 0; c < n; ++c) {
            vand(r, c) = p;
            p *= nodes[r];
        }
    }
    Eigen::VectorXcd rhs(n);
    for (int r = 0; r < n; ++r) rhs[r] = values[r];
    const Eigen::VectorXcd coef = vand.fullPivLu().solve(rhs);
    return {coef.data(), coef.data() + n};
}

} // namespace

Unitary2 signal_w(double a) {
    if (!(std::abs(a) <= 1.0))
        throw std::invalid_argument("signal must satisfy |a| <= 1");
    const double s = std::sqrt(1.0 - a * a);
    Unitary2 w;
    w << a, 1.0i * s, 1.0i * s, a;
    return w;
}

Unitary2 processing_s(double phi) {
    Unitary2 s;
    s << std::polar(1.0, phi), 0.0, 0.0, std::polar(1.0, -phi);
    return s;
}

Unitary2 compose_qsp(const PhaseSequence& phases, double a) {
    if (phases.empty())
        throw std::invalid_argument("phase sequence must contain phi_0");
    const Unitary2 w = signal_w(a);
    Unitary2 u = processing_s(phases[0]);
    for (std::size_t r = 1; r < phases.size(); ++r)
        u = u * w * processing_s(phases[r]);
    return u;
}

double response(const PhaseSequence& phases, double a) {
    return std::norm(compose_qsp(phases, a)(0, 0));
}

PhaseSequence bb1_phases() {
    const double chi = 0.5 * std::acos(-0.25);
    return {std::numbers::pi / 2, -chi, 2 * chi, 0.0, -2 * chi, chi};
}

std::complex<double> eval_poly(const std::vector<std::complex<double>>& coeffs, double x) {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

PQPolynomials extract_pq(const PhaseSequence& phases, double tol) {
    if (phases.empty())
        throw std::invalid_argument("phase sequence must contain phi_0");
    const int d = static_cast<int>(phases.size()) - 1;

    PQPolynomials out;
    out.degree = d;
    {
        const auto nodes = chebyshev_nodes(d + 1);
        std::vector<std::complex<double>> vals(nodes.size());
        for (std::size_t k = 0; k < nodes.size(); ++k)
            vals[k] = compose_qsp(phases, nodes[k])(0, 0);
        out.p = interpolate(nodes, vals);
    }
    if (d > 0) {
        const auto nodes = chebyshev_nodes(d);
        std::vector<std::complex<double>> vals(nodes.size());
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const double s = std::sqrt(1.0 - nodes[k] * nodes[k]);
            vals[k] = compose_qsp(phases, nodes[k])(0, 1) / (1.0i * s);
        }
        out.q = interpolate(nodes, vals);
    }

    // Degree: the interpolants must reproduce the matrix elements away
    // from the nodes. Parity: P has the parity of d, Q the opposite.
    // Unitarity: |P|^2 + (1 - a^2) |Q|^2 = 1.
    double degree_err = 0.0, unitarity_err = 0.0, parity_err = 0.0;
    for (int g = 0; g < 1000; ++g) {
        const double a = -1.0 + 2.0 * g / 999.0;
        const Unitary2 u = compose_qsp(phases, a);
        const std::complex<double> p = eval_poly(out.p, a);
        const std::complex<double> q = out.q.empty() ? 0.0 : eval_poly(out.q, a);
        const double s = std::sqrt(std::max(0.0, 1.0 - a * a));
        degree_err = std::max(degree_err, std::abs(p - u(0, 0)));
        degree_err = std::max(degree_err, std::abs(1.0i * s * q - u(0, 1)));
        unitarity_err = std::max(unitarity_err,
                                 std::abs(std::norm(p) + (1.0 - a * a) * std::norm(q) - 1.0));
    }
    for (std::size_t k = 0; k < out.p.size(); ++k)
        if (static_cast<int>(k % 2) != d % 2)
            parity_err = std::max(parity_err, std::abs(out.p[k]));
    for (std::size_t k = 0; k < out.q.size(); ++k)
        if (static_cast<int>(k % 2) != (d + 1) % 2)
            parity_err = std::max(parity_err, std::abs(out.q[k]));

    if (degree_err > tol)
        throw VerificationError("degree condition violated by " + std::to_string(degree_err));
    if (parity_err > tol)
        throw VerificationError("parity condition violated by " + std::to_string(parity_err));
    if (unitarity_err > tol)
        throw VerificationError("unitarity condition violated by " +
                                std::to_string(unitarity_err));
    return out;
}

} // namespace fragqsp
