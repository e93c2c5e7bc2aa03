#include "fragqsp/observables.hpp"

#include "fragqsp/errors.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fragqsp {

double sigma_z_expectation(const StateVector& v, const FragmentBasis& basis, int m) {
    if (v.size() != static_cast<Eigen::Index>(basis.dim()))
        throw std::invalid_argument("vector dimension mismatch");
    double acc = 0.0;
    for (Eigen::Index k = 0; k < v.size(); ++k)
        acc += std::norm(v[k]) * pseudospin_z(basis.states[k], m);
    return acc;
}

Eigen::VectorXd sigma_z_profile(const StateVector& v, const FragmentBasis& basis) {
    if (v.size() != static_cast<Eigen::Index>(basis.dim()))
        throw std::invalid_argument("vector dimension mismatch");
    const int n_cells = basis.length / 2;
    Eigen::VectorXd z = Eigen::VectorXd::Zero(n_cells);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        const double w = std::norm(v[k]);
        if (w == 0.0) continue;
        for (int m = 1; m <= n_cells; ++m)
            z[m - 1] += w * pseudospin_z(basis.states[k], m);
    }
    return z;
}

StroboscopicRecord stroboscopic_run(const FragmentBasis& basis, const DriveOperators& ops,
                                    const DriveSchedule& schedule, int cycles,
                                    const StateVector& initial) {
    if (cycles < 0)
        throw std::invalid_argument("cycle count must be nonnegative");
    if (initial.size() != static_cast<Eigen::Index>(basis.dim()))
        throw std::invalid_argument("vector dimension mismatch");

    StroboscopicRecord rec;
    rec.cycles = cycles;
    rec.n_cells = basis.length / 2;
    rec.values.resize(cycles + 1, rec.n_cells);

    StateVector v = initial;
    rec.values.row(0) = sigma_z_profile(v, basis);
    for (int l = 1; l <= cycles; ++l) {
        apply_drive(schedule, ops, v);
        rec.values.row(l) = sigma_z_profile(v, basis);
    }
    return rec;
}

double krylov_infinite_temperature(const FragmentBasis& basis, int m) {
    long long acc = 0;
    for (const FockState& s : basis.states) acc += pseudospin_z(s, m);
    return static_cast<double>(acc) / static_cast<double>(basis.dim());
}

Eigen::VectorXd krylov_infinite_temperature_profile(const FragmentBasis& basis) {
    const int n_cells = basis.length / 2;
    Eigen::VectorXd z(n_cells);
    for (int m = 1; m <= n_cells; ++m) z[m - 1] = krylov_infinite_temperature(basis, m);
    return z;
}

double time_average(const StroboscopicRecord& record, int burn_in, int m) {
    if (m < 1 || m > record.n_cells)
        throw std::invalid_argument("cell index out of range");
    return time_average_profile(record, burn_in)[m - 1];
}

Eigen::VectorXd time_average_profile(const StroboscopicRecord& record, int burn_in) {
    if (burn_in < 0 || record.cycles <= burn_in)
        throw std::invalid_argument("need cycles > burn_in >= 0");
    const int rows = record.cycles - burn_in;
    return record.values.bottomRows(rows).colwise().mean();
}

Eigen::VectorXd diagonal_ensemble_profile(const Eigen::MatrixXcd& floquet,
                                          const StateVector& initial,
                                          const FragmentBasis& basis,
                                          double phase_tol) {
    const Eigen::Index dim = floquet.rows();
    if (floquet.cols() != dim || initial.size() != dim ||
        dim != static_cast<Eigen::Index>(basis.dim()))
        throw std::invalid_argument("dimension mismatch");
    const double unitarity =
        (floquet.adjoint() * floquet - Eigen::MatrixXcd::Identity(dim, dim))
            .cwiseAbs()
            .maxCoeff();
    if (unitarity > 1e-8)
        throw std::invalid_argument("input matrix is not unitary");

    // Schur of a unitary matrix: T is diagonal up to rounding, Q holds an
    // orthonormal eigenbasis. Degenerate eigenphases make individual
    // eigenvectors arbitrary, but the span of a phase cluster is stable.
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(floquet);
    if (schur.info() != Eigen::Success)
        throw VerificationError("Schur decomposition failed");
    const Eigen::MatrixXcd& q = schur.matrixU();

    std::vector<double> phase(dim);
    std::vector<Eigen::Index> order(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        phase[k] = std::arg(schur.matrixT()(k, k));
        order[k] = k;
    }
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return phase[a] < phase[b]; });

    std::vector<std::vector<Eigen::Index>> clusters;
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (!clusters.empty() &&
            phase[order[i]] - phase[clusters.back().back()] < phase_tol)
            clusters.back().push_back(order[i]);
        else
            clusters.push_back({order[i]});
    }
    // Phases wrap at +-pi: merge the first and last clusters when they touch.
    if (clusters.size() > 1) {
        const double gap = phase[clusters.front().front()] + 2.0 * std::numbers::pi -
                           phase[clusters.back().back()];
        if (gap < phase_tol) {
            for (Eigen::Index k : clusters.back()) clusters.front().push_back(k);
            clusters.pop_back();
        }
    }

    const int n_cells = basis.length / 2;
    Eigen::VectorXd result = Eigen::VectorXd::Zero(n_cells);
    for (int m = 1; m <= n_cells; ++m) {
        Eigen::VectorXcd sigma(dim);
        for (Eigen::Index k = 0; k < dim; ++k)
            sigma[k] = pseudospin_z(basis.states[k], m);

        double value = 0.0;
        for (const auto& cluster : clusters) {
            const Eigen::Index w = static_cast<Eigen::Index>(cluster.size());
            Eigen::MatrixXcd qc(dim, w);
            for (Eigen::Index c = 0; c < w; ++c) qc.col(c) = q.col(cluster[c]);

            const Eigen::MatrixXcd block = qc.adjoint() * (sigma.asDiagonal() * qc);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
            if (es.info() != Eigen::Success)
                throw VerificationError("observable block diagonalization failed");
            const Eigen::VectorXcd amp = es.eigenvectors().adjoint() * (qc.adjoint() * initial);
            for (Eigen::Index n = 0; n < w; ++n)
                value += std::norm(amp[n]) * es.eigenvalues()[n];
        }
        result[m - 1] = value;
    }
    return result;
}

double diagonal_ensemble(const Eigen::MatrixXcd& floquet, const StateVector& initial,
                         const FragmentBasis& basis, int m, double phase_tol) {
    const int n_cells = basis.length / 2;
    if (m < 1 || m > n_cells)
        throw std::invalid_argument("cell index out of range");
    return diagonal_ensemble_profile(floquet, initial, basis, phase_tol)[m - 1];
}

} // namespace fragqsp
