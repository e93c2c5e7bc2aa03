#pragma once

#include "fragqsp/fragment.hpp"

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace fragqsp {

using StateVector = Eigen::VectorXcd;

// Compressed sparse rows, real symmetric entries. Row r holds the
// matrix elements <basis[r]| H |basis[c]>.
class SparseOperator {
public:
    SparseOperator() = default;
    SparseOperator(std::vector<std::int64_t> row_ptr,
                   std::vector<std::int32_t> cols,
                   std::vector<double> vals,
                   std::int64_t dim,
                   bool diagonal);

    std::int64_t dim() const { return dim_; }
    bool diagonal() const { return diagonal_; }
    std::int64_t nonzeros() const { return static_cast<std::int64_t>(vals_.size()); }

    // y = H x. Deterministic: fixed per-row accumulation order regardless
    // of thread count.
    void apply(const StateVector& x, StateVector& y) const;
    StateVector apply(const StateVector& x) const;

    Eigen::MatrixXd dense() const;
    Eigen::VectorXd diagonal_values() const;

    // Gershgorin enclosure of the spectrum.
    void spectral_bounds(double& lo, double& hi) const;

    const std::vector<std::int64_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::int32_t>& cols() const { return cols_; }
    const std::vector<double>& vals() const { return vals_; }

private:
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> cols_;
    std::vector<double> vals_;
    std::int64_t dim_ = 0;
    bool diagonal_ = false;
};

// Pair-hopping Hamiltonian, coupling J, restricted to the fragment:
// J * sum_j (c_j^dag c_{j+3}^dag c_{j+2} c_{j+1} + h.c.), open boundaries.
SparseOperator build_h_ph(const FragmentBasis& basis, double coupling_j);

// Staggered pseudospin field (h/2) * sum_m (-1)^m sigma_m^z, diagonal.
SparseOperator build_h_stag(const FragmentBasis& basis, double field_h);

// Basis vector |basis.states[k]>.
StateVector basis_state(const FragmentBasis& basis, std::int64_t k);
StateVector basis_state(const FragmentBasis& basis, const FockState& s);

} // namespace fragqsp
