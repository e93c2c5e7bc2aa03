#include "fragqsp/bdg.hpp"

#include <cmath>
#include <stdexcept>

namespace fragqsp {

namespace {

// Open-chain hopping eigenbasis: S_{m,lambda} = sqrt(2/(N+1)) sin(m lambda pi/(N+1))
// diagonalizes the tridiagonal hopping matrix with eigenvalue 2J cos(lambda pi/(N+1)).
Eigen::MatrixXd sine_basis(int n) {
    Eigen::MatrixXd s(n, n);
    const double norm = std::sqrt(2.0 / (n + 1));
    for (int m = 1; m <= n; ++m)
        for (int l = 1; l <= n; ++l)
            s(m - 1, l - 1) = norm * std::sin(m * l * std::numbers::pi / (n + 1));
    return s;
}

} // namespace

std::vector<BdgSector> bdg_sectors(int n_cells, double coupling_j, double t_prime) {
    if (n_cells < 2 || n_cells % 2 != 0)
        throw std::invalid_argument("cell count must be even and >= 2");
    std::vector<BdgSector> sectors;
    sectors.reserve(n_cells / 2);
    for (int lambda = 1; lambda <= n_cells / 2; ++lambda) {
        const double eps = 2.0 * coupling_j *
                           std::cos(lambda * std::numbers::pi / (n_cells + 1));
        sectors.push_back({lambda, eps, std::cos(eps * t_prime)});
    }
    return sectors;
}

double neel_transition_probability(int n_cells, const PhaseSequence& phases,
                                   double coupling_j, double t_prime) {
    double prob = 1.0;
    for (const BdgSector& s : bdg_sectors(n_cells, coupling_j, t_prime))
        prob *= response(phases, s.signal);
    return prob;
}

Eigen::MatrixXcd single_particle_unitary(const DriveSchedule& schedule, int n_cells) {
    if (n_cells < 1)
        throw std::invalid_argument("cell count must be positive");
    const Eigen::MatrixXd s = sine_basis(n_cells);
    Eigen::VectorXd eps(n_cells);
    for (int l = 1; l <= n_cells; ++l)
        eps[l - 1] = 2.0 * schedule.coupling_j *
                     std::cos(l * std::numbers::pi / (n_cells + 1));

    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n_cells, n_cells);
    for (const DriveSegment& seg : schedule.segments) {
        if (seg.generator == Generator::PairHopping) {
            Eigen::MatrixXcd phase = Eigen::MatrixXcd::Zero(n_cells, n_cells);
            for (int l = 0; l < n_cells; ++l)
                phase(l, l) = std::polar(1.0, -seg.duration * eps[l]);
            u = s * phase * s.transpose() * u;
        } else {
            for (int m = 1; m <= n_cells; ++m) {
                const double e = schedule.field_h * (m % 2 == 0 ? 1.0 : -1.0);
                u.row(m - 1) *= std::polar(1.0, -seg.duration * e);
            }
        }
    }
    return u;
}

CorrelationMatrix neel_correlation(int n_cells) {
    if (n_cells < 1)
        throw std::invalid_argument("cell count must be positive");
    PseudospinString text;
    for (int m = 0; m < n_cells; ++m) text += (m % 2 == 0 ? 'u' : 'd');
    return spin_product_correlation(text);
}

CorrelationMatrix spin_product_correlation(const PseudospinString& text) {
    if (text.empty())
        throw std::invalid_argument("empty pseudospin string");
    CorrelationMatrix c = CorrelationMatrix::Zero(text.size(), text.size());
    for (std::size_t m = 0; m < text.size(); ++m) {
        if (text[m] == 'u') c(m, m) = 1.0;
        else if (text[m] != 'd')
            throw std::invalid_argument("correlation matrix needs a pure spin string");
    }
    return c;
}

CorrelationMatrix evolve_correlation(const CorrelationMatrix& c, const Eigen::MatrixXcd& u) {
    if (c.rows() != c.cols() || u.rows() != u.cols() || c.rows() != u.rows())
        throw std::invalid_argument("correlation/unitary dimension mismatch");
    return u.conjugate() * c * u.transpose();
}

Eigen::VectorXd sigma_z_from_correlation(const CorrelationMatrix& c) {
    Eigen::VectorXd z(c.rows());
    for (Eigen::Index m = 0; m < c.rows(); ++m)
        z[m] = 2.0 * c(m, m).real() - 1.0;
    return z;
}

} // namespace fragqsp
