#include "fragqsp/observables.hpp"

#include "fragqsp/errors.hpp"
#include "fragqsp/qsp.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace fragqsp;

TEST_CASE("profiles on basis states read off the configuration") {
    const FragmentBasis basis = build_fragment("u+dd");
    for (std::size_t k = 0; k < basis.dim(); ++k) {
        const Eigen::VectorXd z = sigma_z_profile(basis_state(basis, k), basis);
        for (int m = 1; m <= 4; ++m) {
            CHECK(z[m - 1] == pseudospin_z(basis.states[k], m));
            CHECK(sigma_z_expectation(basis_state(basis, k), basis, m) == z[m - 1]);
        }
    }
}

TEST_CASE("superpositions mix profiles by weight") {
    const FragmentBasis basis = build_fragment("ud");
    StateVector v(2);
    v << std::sqrt(0.25), std::complex<double>(0, std::sqrt(0.75));
    // states sorted by bits: ud (0110) before du (1001)
    CHECK(sigma_z_expectation(v, basis, 1) ==
          doctest::Approx(0.25 * 1 + 0.75 * -1).epsilon(1e-15));
    CHECK(sigma_z_expectation(v, basis, 2) ==
          doctest::Approx(0.25 * -1 + 0.75 * 1).epsilon(1e-15));
}

TEST_CASE("fragment-restricted infinite temperature averages") {
    // two-cell doublet: both orientations cancel
    CHECK(krylov_infinite_temperature(build_fragment("ud"), 1) == 0.0);
    // three cells, two up one down: dim 3, cell 1 is up in 2 of 3 states
    const FragmentBasis basis = build_fragment("uud");
    REQUIRE(basis.dim() == 3);
    CHECK(krylov_infinite_temperature(basis, 1) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    const Eigen::VectorXd prof = krylov_infinite_temperature_profile(basis);
    CHECK(prof.sum() == doctest::Approx(1.0).epsilon(1e-14)); // one net spin up
    // frozen wall cells average to exactly zero
    const FragmentBasis walled = build_fragment("ud++du");
    const Eigen::VectorXd wz = krylov_infinite_temperature_profile(walled);
    CHECK(wz[2] == 0.0);
    CHECK(wz[3] == 0.0);
}

TEST_CASE("stroboscopic record runs the drive cycle by cycle") {
    const FragmentBasis basis = build_fragment("udud");
    const DriveSchedule schedule =
        schedule_from_phases(bb1_phases(), 1.0, 1.0, -std::numbers::pi / 2);
    const DriveOperators ops = make_drive_operators(basis, 1.0, 1.0);
    const StateVector v0 = basis_state(basis, encode("udud"));
    const StroboscopicRecord rec = stroboscopic_run(basis, ops, schedule, 6, v0);

    CHECK(rec.cycles == 6);
    CHECK(rec.n_cells == 4);
    REQUIRE(rec.values.rows() == 7);
    const Eigen::Vector4d init(1.0, -1.0, 1.0, -1.0);
    CHECK((rec.values.row(0).transpose() - init).cwiseAbs().maxCoeff() == 0.0);
    CHECK(rec.values.cwiseAbs().maxCoeff() <= 1.0 + 1e-10);

    // cross-check one cycle against a direct application
    StateVector v = v0;
    apply_drive(schedule, ops, v);
    CHECK((rec.values.row(1).transpose() - sigma_z_profile(v, basis)).cwiseAbs().maxCoeff() <
          1e-14);

    CHECK_THROWS_AS(stroboscopic_run(basis, ops, schedule, -1, v0), std::invalid_argument);
}

TEST_CASE("time averages honor the burn-in window") {
    StroboscopicRecord rec;
    rec.cycles = 4;
    rec.n_cells = 1;
    rec.values.resize(5, 1);
    rec.values << 10.0, 1.0, 2.0, 3.0, 4.0;
    CHECK(time_average(rec, 0, 1) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(time_average(rec, 2, 1) == doctest::Approx(3.5).epsilon(1e-15));
    CHECK_THROWS_AS(time_average(rec, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(time_average(rec, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(time_average(rec, 0, 2), std::invalid_argument);
}

TEST_CASE("diagonal ensemble of the identity returns the initial expectation") {
    const FragmentBasis basis = build_fragment("udud");
    const auto dim = static_cast<Eigen::Index>(basis.dim());
    const StateVector v0 = basis_state(basis, encode("udud"));
    const Eigen::VectorXd z =
        diagonal_ensemble_profile(Eigen::MatrixXcd::Identity(dim, dim), v0, basis);
    const Eigen::Vector4d init(1.0, -1.0, 1.0, -1.0);
    CHECK((z - init).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("diagonal ensemble with nondegenerate phases keeps only populations") {
    // H = J X on the two-state doublet: eigenvectors (|0> +- |1>)/sqrt 2,
    // sigma_1^z is purely off-diagonal there, so the average vanishes
    const FragmentBasis basis = build_fragment("ud");
    const DriveOperators ops = make_drive_operators(basis, 1.0, 1.0);
    const DriveSchedule schedule = schedule_from_phases({0.0, 0.0}, 1.0, 1.0, -0.7);
    const Eigen::MatrixXcd u = floquet_unitary(schedule, ops);
    const StateVector v0 = basis_state(basis, encode("ud"));
    const double z1 = diagonal_ensemble(u, v0, basis, 1);
    CHECK(std::abs(z1) < 1e-12);
    CHECK_THROWS_AS(diagonal_ensemble(u, v0, basis, 5), std::invalid_argument);

    Eigen::MatrixXcd not_unitary = Eigen::MatrixXcd::Identity(2, 2) * 2.0;
    CHECK_THROWS_AS(diagonal_ensemble_profile(not_unitary, v0, basis),
                    std::invalid_argument);
}

TEST_CASE("diagonal ensemble equals the long-time stroboscopic average") {
    const FragmentBasis basis = build_fragment("ududud");
    const DriveSchedule schedule =
        schedule_from_phases({0.4, -1.2, 0.8}, 1.0, 1.0, -std::numbers::pi / 2);
    const DriveOperators ops = make_drive_operators(basis, 1.0, 1.0);
    const StateVector v0 = basis_state(basis, encode("ududud"));

    const Eigen::MatrixXcd u = floquet_unitary(schedule, ops);
    const Eigen::VectorXd predicted = diagonal_ensemble_profile(u, v0, basis);

    const int cycles = 4000;
    const StroboscopicRecord rec = stroboscopic_run(basis, ops, schedule, cycles, v0);
    const Eigen::VectorXd averaged = time_average_profile(rec, 0);
    CHECK((predicted - averaged).cwiseAbs().maxCoeff() < 5e-3);
}
