#pragma once

#include "fragqsp/hamiltonian.hpp"

#include <Eigen/Dense>
#include <vector>

namespace fragqsp {

enum class Generator { PairHopping, Staggered };

// exp(-i * duration * H_generator); negative durations are formal unitaries.
struct DriveSegment {
    Generator generator = Generator::PairHopping;
    double duration = 0.0;
};

// One drive cycle. `segments` is in temporal order (first entry acts first).
struct DriveSchedule {
    std::vector<DriveSegment> segments;
    std::vector<double> phases; // phi_0 .. phi_d
    double coupling_j = 1.0;
    double field_h = 1.0;
    double t_prime = 0.0;
};

// Cycle realizing the phase sequence: staggered kicks of duration phi_r/h
// interleaved with pair-hopping pulses of duration t_prime,
//   exp(-i t_d H_s) exp(-i t' H_ph) ... exp(-i t_1 H_s) exp(-i t' H_ph) exp(-i t_0 H_s)
// read right to left; segments[] lists them left to right in time.
DriveSchedule schedule_from_phases(const std::vector<double>& phases,
                                   double coupling_j, double field_h, double t_prime);

struct EvolveOptions {
    std::int64_t dense_max = 4096; // eigendecompose up to this dimension
    double cheb_tol = 1e-12;       // Chebyshev truncation tolerance
    int cheb_max_order = 0;        // 0 = automatic cap
    double norm_warn = 1e-12;      // renormalize above this drift
    double norm_fail = 1e-8;       // hard error above this drift
};

// Time evolution under one Hermitian generator. Diagonal operators are
// exponentiated elementwise; otherwise a cached eigendecomposition is used
// up to dense_max and a Chebyshev expansion beyond it.
class Propagator {
public:
    explicit Propagator(SparseOperator op, EvolveOptions opts = {});

    // v <- exp(-i duration H) v; v must be normalized on entry.
    void apply(double duration, StateVector& v) const;

    // u <- exp(-i duration H) u. Requires the diagonal or dense path.
    void apply_to_matrix(double duration, Eigen::MatrixXcd& u) const;

    const SparseOperator& op() const { return op_; }
    const EvolveOptions& options() const { return opts_; }
    bool dense_path() const { return dense_ready_; }

private:
    void apply_chebyshev(double duration, StateVector& v) const;

    SparseOperator op_;
    EvolveOptions opts_;
    bool dense_ready_ = false;
    Eigen::MatrixXd evecs_;
    Eigen::VectorXd evals_;
    Eigen::VectorXd diag_;
    double bound_lo_ = 0.0, bound_hi_ = 0.0;
};

struct DriveOperators {
    Propagator pair_hop;
    Propagator staggered;
    double coupling_j = 1.0;
    double field_h = 1.0;
};

DriveOperators make_drive_operators(const FragmentBasis& basis, double coupling_j,
                                    double field_h, EvolveOptions opts = {});

// One full cycle applied in place.
void apply_drive(const DriveSchedule& schedule, const DriveOperators& ops, StateVector& v);

// Dense one-cycle unitary. Requires dim <= dense_max; the result is checked
// for unitarity to 1e-10 in the max norm.
Eigen::MatrixXcd floquet_unitary(const DriveSchedule& schedule, const DriveOperators& ops);

} // namespace fragqsp
