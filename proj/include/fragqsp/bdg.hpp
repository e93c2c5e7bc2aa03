#pragma once

#include "fragqsp/evolve.hpp"
#include "fragqsp/qsp.hpp"

#include <Eigen/Dense>
#include <numbers>

namespace fragqsp {

// Momentum sector lambda of the free-fermion picture of a pure-spin chain
// with n_cells pseudospins: single-particle energy
// eps_lambda = 2 J cos(lambda pi / (n_cells + 1)) and signal
// a_lambda = cos(eps_lambda * t_prime).
struct BdgSector {
    int lambda = 0;
    double energy = 0.0;
    double signal = 0.0;
};

// Sectors lambda = 1 .. n_cells/2. n_cells must be even and >= 2.
std::vector<BdgSector> bdg_sectors(int n_cells, double coupling_j, double t_prime);

// Transition probability of the alternating spin state under one cycle:
// prod_lambda response(phases, a_lambda).
double neel_transition_probability(int n_cells, const PhaseSequence& phases,
                                   double coupling_j = 1.0,
                                   double t_prime = -std::numbers::pi / 2);

// One-cycle matrix u on the n_cells single-particle modes of the spin
// chain (pair hopping acts as nearest-neighbor hopping of strength J,
// the staggered field as an alternating on-site potential).
Eigen::MatrixXcd single_particle_unitary(const DriveSchedule& schedule, int n_cells);

// Two-point functions C_{mn} = <d_m^dag d_n>, 1-based cells in rows/cols 0-based.
using CorrelationMatrix = Eigen::MatrixXcd;

// Alternating spin state: occupied odd cells, C = diag(1,0,1,0,...).
CorrelationMatrix neel_correlation(int n_cells);

// Product-state correlation for any pure-spin string ('u' cells occupied).
CorrelationMatrix spin_product_correlation(const PseudospinString& text);

// Heisenberg update under one cycle: C' = conj(u) C u^T.
CorrelationMatrix evolve_correlation(const CorrelationMatrix& c, const Eigen::MatrixXcd& u);

// sigma_m^z = 2 C_mm - 1 for each cell.
Eigen::VectorXd sigma_z_from_correlation(const CorrelationMatrix& c);

} // namespace fragqsp
