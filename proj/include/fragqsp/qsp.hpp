#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace fragqsp {

using Unitary2 = Eigen::Matrix2cd;
using PhaseSequence = std::vector<double>; // phi_0 .. phi_d

// Signal operator W(a) = [[a, i sqrt(1-a^2)], [i sqrt(1-a^2), a]], |a| <= 1.
Unitary2 signal_w(double a);

// Processing operator S(phi) = diag(e^{i phi}, e^{-i phi}).
Unitary2 processing_s(double phi);

// U_phi(a) = S(phi_0) * prod_{r=1..d} [ W(a) S(phi_r) ].
Unitary2 compose_qsp(const PhaseSequence& phases, double a);

// |<0| U_phi(a) |0>|^2.
double response(const PhaseSequence& phases, double a);

// (pi/2, -chi, 2 chi, 0, -2 chi, chi) with chi = arccos(-1/4)/2: a fifth
// degree sequence flattening the response around a = 1.
PhaseSequence bb1_phases();

// U_phi(a) = [[P(a), i Q(a) sqrt(1-a^2)], [i Q*(a) sqrt(1-a^2), P*(a)]].
struct PQPolynomials {
    std::vector<std::complex<double>> p; // degree d, d+1 coefficients
    std::vector<std::complex<double>> q; // degree d-1, empty when d == 0
    int degree = 0;
};

std::complex<double> eval_poly(const std::vector<std::complex<double>>& coeffs, double x);

// Interpolate P, Q off Chebyshev nodes and verify the three defining
// conditions (degree, parity, |P|^2 + (1-a^2)|Q|^2 = 1) to `tol` on a
// 1000-point grid over [-1, 1].
PQPolynomials extract_pq(const PhaseSequence& phases, double tol = 1e-9);

} // namespace fragqsp
