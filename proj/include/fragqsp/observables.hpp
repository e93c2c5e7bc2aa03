#pragma once

#include "fragqsp/evolve.hpp"

#include <Eigen/Dense>

namespace fragqsp {

// <v| sigma_m^z |v>; sigma^z is diagonal in the occupation basis.
double sigma_z_expectation(const StateVector& v, const FragmentBasis& basis, int m);
Eigen::VectorXd sigma_z_profile(const StateVector& v, const FragmentBasis& basis);

// Row l holds the sigma^z profile after l cycles, l = 0 .. cycles.
struct StroboscopicRecord {
    Eigen::MatrixXd values;
    int cycles = 0;
    int n_cells = 0;
};

StroboscopicRecord stroboscopic_run(const FragmentBasis& basis, const DriveOperators& ops,
                                    const DriveSchedule& schedule, int cycles,
                                    const StateVector& initial);

// Fragment-restricted infinite-temperature value tr_K(sigma_m^z)/dim(K).
double krylov_infinite_temperature(const FragmentBasis& basis, int m);
Eigen::VectorXd krylov_infinite_temperature_profile(const FragmentBasis& basis);

// Mean over cycles burn_in+1 .. cycles; requires cycles > burn_in.
double time_average(const StroboscopicRecord& record, int burn_in, int m);
Eigen::VectorXd time_average_profile(const StroboscopicRecord& record, int burn_in);

// Infinite-time average of sigma^z under repeated application of the cycle
// unitary: eigenphase clusters of `floquet` are projected out and the
// observable is diagonalized within each cluster.
Eigen::VectorXd diagonal_ensemble_profile(const Eigen::MatrixXcd& floquet,
                                          const StateVector& initial,
                                          const FragmentBasis& basis,
                                          double phase_tol = 1e-10);
double diagonal_ensemble(const Eigen::MatrixXcd& floquet, const StateVector& initial,
                         const FragmentBasis& basis, int m, double phase_tol = 1e-10);

} // namespace fragqsp
