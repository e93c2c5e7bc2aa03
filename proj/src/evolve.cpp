#include "fragqsp/evolve.hpp"

#include "fragqsp/errors.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fragqsp {

namespace {

using namespace std::complex_literals;

Eigen::VectorXcd real_mat_times(const Eigen::MatrixXd& a, bool transpose,
                                const Eigen::VectorXcd& x) {
    Eigen::VectorXd re, im;
    if (transpose) {
        re = a.transpose() * x.real();
        im = a.transpose() * x.imag();
    } else {
        re = a * x.real();
        im = a * x.imag();
    }
    Eigen::VectorXcd y(re.size());
    y.real() = re;
    y.imag() = im;
    return y;
}

Eigen::MatrixXcd real_mat_times(const Eigen::MatrixXd& a, bool transpose,
                                const Eigen::MatrixXcd& x) {
    Eigen::MatrixXd re, im;
    if (transpose) {
        re = a.transpose() * x.real();
        im = a.transpose() * x.imag();
    } else {
        re = a * x.real();
        im = a * x.imag();
    }
    Eigen::MatrixXcd y(re.rows(), re.cols());
    y.real() = re;
    y.imag() = im;
    return y;
}

} // namespace

Propagator::Propagator(SparseOperator op, EvolveOptions opts)
    : op_(std::move(op)), opts_(opts) {
    if (op_.diagonal()) {
        diag_ = op_.diagonal_values();
        return;
    }
    op_.spectral_bounds(bound_lo_, bound_hi_);
    if (op_.dim() <= opts_.dense_max) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op_.dense());
        if (es.info() != Eigen::Success)
            throw VerificationError("eigendecomposition failed");
        evecs_ = es.eigenvectors();
        evals_ = es.eigenvalues();
        dense_ready_ = true;
    }
}

void Propagator::apply(double duration, StateVector& v) const {
    if (v.size() != op_.dim())
        throw std::invalid_argument("vector dimension mismatch");
    if (duration == 0.0) return;

    if (op_.diagonal()) {
        for (std::int64_t k = 0; k < op_.dim(); ++k)
            v[k] *= std::polar(1.0, -duration * diag_[k]);
    } else if (dense_ready_) {
        Eigen::VectorXcd w = real_mat_times(evecs_, true, v);
        for (std::int64_t k = 0; k < op_.dim(); ++k)
            w[k] *= std::polar(1.0, -duration * evals_[k]);
        v = real_mat_times(evecs_, false, w);
    } else {
        apply_chebyshev(duration, v);
    }

    const double drift = std::abs(v.norm() - 1.0);
    if (drift > opts_.norm_fail)
        throw VerificationError("norm drift " + std::to_string(drift) +
                                " exceeds tolerance");
    if (drift > opts_.norm_warn) v /= v.norm();
}

void Propagator::apply_chebyshev(double duration, StateVector& v) const {
    const double half_width = 0.5 * (bound_hi_ - bound_lo_);
    const double center = 0.5 * (bound_hi_ + bound_lo_);
    const std::complex<double> global = std::polar(1.0, -duration * center);

    const double theta = duration * half_width;
    const double abs_theta = std::abs(theta);
    if (abs_theta < 1e-14) {
        v *= global;
        return;
    }

    // exp(-i theta x) = sum_k (2 - delta_k0) (-i)^k J_k(theta) T_k(x);
    // J_k(-theta) = (-1)^k J_k(theta) folds into the i power.
    const std::complex<double> unit = (theta < 0) ? 1.0i : -1.0i;
    const int cap = opts_.cheb_max_order > 0
                        ? opts_.cheb_max_order
                        : static_cast<int>(2.0 * abs_theta) + 128;
    int order = -1;
    std::vector<double> bessel;
    bessel.reserve(64);
    for (int k = 0; k <= cap; ++k) {
        bessel.push_back(std::cyl_bessel_j(k, abs_theta));
        if (k > abs_theta && k >= 2 &&
            std::abs(bessel[k]) < 0.25 * opts_.cheb_tol &&
            std::abs(bessel[k - 1]) < 0.25 * opts_.cheb_tol) {
            order = k;
            break;
        }
    }
    if (order < 0)
        throw VerificationError("Chebyshev expansion did not reach tolerance " +
                                std::to_string(opts_.cheb_tol) + " within order " +
                                std::to_string(cap));

    // t_{k+1} = 2 Hs t_k - t_{k-1} with Hs = (H - center) / half_width.
    const auto apply_scaled = [&](const StateVector& x, StateVector& y) {
        op_.apply(x, y);
        y = (y - center * x) / half_width;
    };

    StateVector t_prev = v;
    StateVector t_cur;
    apply_scaled(v, t_cur);
    std::complex<double> coeff = unit;
    StateVector acc = bessel[0] * t_prev + (2.0 * bessel[1] * coeff) * t_cur;
    StateVector t_next(v.size());
    for (int k = 2; k <= order; ++k) {
        apply_scaled(t_cur, t_next);
        t_next = 2.0 * t_next - t_prev;
        coeff *= unit;
        acc += (2.0 * bessel[k] * coeff) * t_next;
        t_prev.swap(t_cur);
        t_cur.swap(t_next);
    }
    v = global * acc;
}

void Propagator::apply_to_matrix(double duration, Eigen::MatrixXcd& u) const {
    if (u.rows() != op_.dim())
        throw std::invalid_argument("matrix dimension mismatch");
    if (duration == 0.0) return;

    if (op_.diagonal()) {
        for (std::int64_t r = 0; r < op_.dim(); ++r)
            u.row(r) *= std::polar(1.0, -duration * diag_[r]);
    } else if (dense_ready_) {
        Eigen::MatrixXcd w = real_mat_times(evecs_, true, u);
        for (std::int64_t r = 0; r < op_.dim(); ++r)
            w.row(r) *= std::polar(1.0, -duration * evals_[r]);
        u = real_mat_times(evecs_, false, w);
    } else {
        throw CapacityError("dense propagation needs dim <= " +
                            std::to_string(opts_.dense_max) +
                            "; use cycle-by-cycle averaging instead");
    }
}

DriveSchedule schedule_from_phases(const std::vector<double>& phases,
                                   double coupling_j, double field_h, double t_prime) {
    if (phases.empty())
        throw std::invalid_argument("phase sequence must contain phi_0");
    if (field_h == 0.0)
        throw std::invalid_argument("staggered field h must be nonzero");
    for (double p : phases)
        if (!std::isfinite(p)) throw std::invalid_argument("phases must be finite");
    if (!std::isfinite(coupling_j) || !std::isfinite(field_h) || !std::isfinite(t_prime))
        throw std::invalid_argument("couplings must be finite");

    DriveSchedule s;
    s.phases = phases;
    s.coupling_j = coupling_j;
    s.field_h = field_h;
    s.t_prime = t_prime;
    const int d = static_cast<int>(phases.size()) - 1;
    for (int r = d; r >= 1; --r) {
        s.segments.push_back({Generator::Staggered, phases[r] / field_h});
        s.segments.push_back({Generator::PairHopping, t_prime});
    }
    s.segments.push_back({Generator::Staggered, phases[0] / field_h});
    return s;
}

DriveOperators make_drive_operators(const FragmentBasis& basis, double coupling_j,
                                    double field_h, EvolveOptions opts) {
    return DriveOperators{Propagator(build_h_ph(basis, coupling_j), opts),
                          Propagator(build_h_stag(basis, field_h), opts),
                          coupling_j, field_h};
}

void apply_drive(const DriveSchedule& schedule, const DriveOperators& ops, StateVector& v) {
    if (schedule.coupling_j != ops.coupling_j || schedule.field_h != ops.field_h)
        throw std::invalid_argument("schedule and operators disagree on couplings");
    for (const DriveSegment& seg : schedule.segments) {
        const Propagator& p =
            (seg.generator == Generator::PairHopping) ? ops.pair_hop : ops.staggered;
        p.apply(seg.duration, v);
    }
}

Eigen::MatrixXcd floquet_unitary(const DriveSchedule& schedule, const DriveOperators& ops) {
    if (schedule.coupling_j != ops.coupling_j || schedule.field_h != ops.field_h)
        throw std::invalid_argument("schedule and operators disagree on couplings");
    const std::int64_t dim = ops.pair_hop.op().dim();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const DriveSegment& seg : schedule.segments) {
        const Propagator& p =
            (seg.generator == Generator::PairHopping) ? ops.pair_hop : ops.staggered;
        p.apply_to_matrix(seg.duration, u);
    }
    const double residual =
        (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (residual > 1e-10)
        throw VerificationError("cycle unitary residual " + std::to_string(residual));
    return u;
}

} // namespace fragqsp
