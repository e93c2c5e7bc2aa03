#include "fragqsp/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fragqsp {

SparseOperator::SparseOperator(std::vector<std::int64_t> row_ptr,
                               std::vector<std::int32_t> cols,
                               std::vector<double> vals,
                               std::int64_t dim,
                               bool diagonal)
    : row_ptr_(std::move(row_ptr)), cols_(std::move(cols)), vals_(std::move(vals)),
      dim_(dim), diagonal_(diagonal) {
    if (dim_ < 0 || row_ptr_.size() != static_cast<std::size_t>(dim_) + 1 ||
        cols_.size() != vals_.size() ||
        row_ptr_.back() != static_cast<std::int64_t>(vals_.size()))
        throw std::invalid_argument("inconsistent sparse layout");
}

void SparseOperator::apply(const StateVector& x, StateVector& y) const {
    if (x.size() != dim_)
        throw std::invalid_argument("vector dimension mismatch");
    y.resize(dim_);
#ifdef FRAGQSP_OPENMP
#pragma omp parallel for schedule(static) if (dim_ > 2048)
#endif
    for (std::int64_t r = 0; r < dim_; ++r) {
        std::complex<double> acc = 0.0;
        for (std::int64_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            acc += vals_[k] * x[cols_[k]];
        y[r] = acc;
    }
}

StateVector SparseOperator::apply(const StateVector& x) const {
    StateVector y;
    apply(x, y);
    return y;
}

Eigen::MatrixXd SparseOperator::dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
    for (std::int64_t r = 0; r < dim_; ++r)
        for (std::int64_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            m(r, cols_[k]) += vals_[k];
    return m;
}

Eigen::VectorXd SparseOperator::diagonal_values() const {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(dim_);
    for (std::int64_t r = 0; r < dim_; ++r)
        for (std::int64_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            if (cols_[k] == r) d[r] += vals_[k];
    return d;
}

void SparseOperator::spectral_bounds(double& lo, double& hi) const {
    lo = 0.0;
    hi = 0.0;
    bool first = true;
    for (std::int64_t r = 0; r < dim_; ++r) {
        double center = 0.0, radius = 0.0;
        for (std::int64_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            if (cols_[k] == r) center += vals_[k];
            else radius += std::abs(vals_[k]);
        }
        if (first) { lo = center - radius; hi = center + radius; first = false; }
        else {
            lo = std::min(lo, center - radius);
            hi = std::max(hi, center + radius);
        }
    }
}

SparseOperator build_h_ph(const FragmentBasis& basis, double coupling_j) {
    const std::int64_t dim = static_cast<std::int64_t>(basis.dim());
    std::vector<std::int64_t> row_ptr(dim + 1, 0);
    std::vector<std::int32_t> cols;
    std::vector<double> vals;

    std::vector<std::pair<std::int32_t, double>> row;
    for (std::int64_t r = 0; r < dim; ++r) {
        row.clear();
        for (const PairHopResult& mv : pair_hop_moves(basis.states[r])) {
            auto it = basis.index.find(mv.state.bits);
            if (it == basis.index.end())
                throw std::logic_error("fragment not closed under pair hopping");
            row.emplace_back(it->second, coupling_j * mv.sign);
        }
        std::sort(row.begin(), row.end());
        for (const auto& [c, v] : row) {
            cols.push_back(c);
            vals.push_back(v);
        }
        row_ptr[r + 1] = static_cast<std::int64_t>(vals.size());
    }
    return SparseOperator(std::move(row_ptr), std::move(cols), std::move(vals), dim, false);
}

SparseOperator build_h_stag(const FragmentBasis& basis, double field_h) {
    const std::int64_t dim = static_cast<std::int64_t>(basis.dim());
    std::vector<std::int64_t> row_ptr(dim + 1, 0);
    std::vector<std::int32_t> cols(dim);
    std::vector<double> vals(dim);
    const int n_cells = basis.length / 2;
    for (std::int64_t r = 0; r < dim; ++r) {
        double e = 0.0;
        for (int m = 1; m <= n_cells; ++m)
            e += (m % 2 == 0 ? 1.0 : -1.0) * pseudospin_z(basis.states[r], m);
        cols[r] = static_cast<std::int32_t>(r);
        vals[r] = 0.5 * field_h * e;
        row_ptr[r + 1] = r + 1;
    }
    return SparseOperator(std::move(row_ptr), std::move(cols), std::move(vals), dim, true);
}

StateVector basis_state(const FragmentBasis& basis, std::int64_t k) {
    if (k < 0 || k >= static_cast<std::int64_t>(basis.dim()))
        throw std::invalid_argument("basis index out of range");
    StateVector v = StateVector::Zero(basis.dim());
    v[k] = 1.0;
    return v;
}

StateVector basis_state(const FragmentBasis& basis, const FockState& s) {
    return basis_state(basis, basis.index_of(s));
}

} // namespace fragqsp
