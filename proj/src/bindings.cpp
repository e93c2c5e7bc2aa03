#include "fragqsp/bdg.hpp"
#include "fragqsp/errors.hpp"
#include "fragqsp/observables.hpp"
#include "fragqsp/qsp.hpp"
#include "fragqsp/version.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fragqsp;

PYBIND11_MODULE(_core, m) {
    m.doc() = "pair-hopping chain fragments driven as quantum signal processors";
    m.attr("__version__") = kVersion;

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<FockState>(m, "FockState")
        .def(py::init([](std::uint64_t bits, int length) { return make_fock(bits, length); }),
             py::arg("bits"), py::arg("length"))
        .def_readonly("bits", &FockState::bits)
        .def_readonly("length", &FockState::length)
        .def("__eq__", [](const FockState& a, const FockState& b) { return a == b; })
        .def("__repr__", [](const FockState& s) {
            return "FockState('" + decode(s) + "')";
        });

    py::class_<ConservedCharges>(m, "ConservedCharges")
        .def_readonly("n_total", &ConservedCharges::n_total)
        .def_readonly("dipole", &ConservedCharges::dipole)
        .def_readonly("n_even", &ConservedCharges::n_even)
        .def_readonly("n_odd", &ConservedCharges::n_odd);

    m.def("encode", &encode, py::arg("text"));
    m.def("decode", &decode, py::arg("state"));
    m.def("charges", &charges, py::arg("state"));
    m.def("pseudospin_z", &pseudospin_z, py::arg("state"), py::arg("m"));

    py::class_<FragmentBasis>(m, "FragmentBasis")
        .def_property_readonly("dim", &FragmentBasis::dim)
        .def_readonly("length", &FragmentBasis::length)
        .def_readonly("seed_charges", &FragmentBasis::seed_charges)
        .def_property_readonly("states",
                               [](const FragmentBasis& b) {
                                   std::vector<std::string> out;
                                   out.reserve(b.states.size());
                                   for (const FockState& s : b.states)
                                       out.push_back(decode(s));
                                   return out;
                               })
        .def("index_of", [](const FragmentBasis& b, const std::string& s) {
            return b.index_of(encode(s));
        });

    m.def(
        "build_fragment",
        [](const std::string& seed, std::size_t capacity) {
            return build_fragment(seed, capacity);
        },
        py::arg("seed"), py::arg("capacity") = kDefaultCapacity);

    py::enum_<RegionKind>(m, "RegionKind")
        .value("FrozenWall", RegionKind::FrozenWall)
        .value("Integrable", RegionKind::Integrable)
        .value("Nonintegrable", RegionKind::Nonintegrable);

    py::class_<Region>(m, "Region")
        .def_readonly("first", &Region::first)
        .def_readonly("last", &Region::last)
        .def_readonly("kind", &Region::kind)
        .def("__repr__", [](const Region& r) {
            return "Region(" + std::to_string(r.first) + ", " + std::to_string(r.last) + ")";
        });

    m.def("partition_regions", &partition_regions, py::arg("text"));
    m.def("verify_factorization", &verify_factorization, py::arg("text"),
          py::arg("capacity") = kDefaultCapacity);

    m.def(
        "h_ph_dense",
        [](const FragmentBasis& b, double j) { return build_h_ph(b, j).dense(); },
        py::arg("basis"), py::arg("coupling_j") = 1.0);
    m.def(
        "h_stag_diagonal",
        [](const FragmentBasis& b, double h) {
            return build_h_stag(b, h).diagonal_values();
        },
        py::arg("basis"), py::arg("field_h") = 1.0);

    py::class_<DriveSchedule>(m, "DriveSchedule")
        .def_readonly("phases", &DriveSchedule::phases)
        .def_readonly("coupling_j", &DriveSchedule::coupling_j)
        .def_readonly("field_h", &DriveSchedule::field_h)
        .def_readonly("t_prime", &DriveSchedule::t_prime)
        .def_property_readonly("segments", [](const DriveSchedule& s) {
            std::vector<std::pair<std::string, double>> out;
            for (const DriveSegment& seg : s.segments)
                out.emplace_back(seg.generator == Generator::PairHopping ? "pair_hop"
                                                                         : "staggered",
                                 seg.duration);
            return out;
        });

    m.def("schedule_from_phases", &schedule_from_phases, py::arg("phases"),
          py::arg("coupling_j") = 1.0, py::arg("field_h") = 1.0,
          py::arg("t_prime") = -std::numbers::pi / 2);

    py::class_<DriveOperators>(m, "DriveOperators");
    m.def(
        "make_drive_operators",
        [](const FragmentBasis& basis, double j, double h, std::int64_t dense_max,
           double cheb_tol) {
            EvolveOptions opts;
            opts.dense_max = dense_max;
            opts.cheb_tol = cheb_tol;
            return make_drive_operators(basis, j, h, opts);
        },
        py::arg("basis"), py::arg("coupling_j") = 1.0, py::arg("field_h") = 1.0,
        py::arg("dense_max") = 4096, py::arg("cheb_tol") = 1e-12);

    m.def(
        "apply_drive",
        [](const DriveSchedule& schedule, const DriveOperators& ops, StateVector v) {
            apply_drive(schedule, ops, v);
            return v;
        },
        py::arg("schedule"), py::arg("ops"), py::arg("state"));
    m.def("floquet_unitary", &floquet_unitary, py::arg("schedule"), py::arg("ops"));

    m.def("signal_w", &signal_w, py::arg("a"));
    m.def("processing_s", &processing_s, py::arg("phi"));
    m.def("compose_qsp", &compose_qsp, py::arg("phases"), py::arg("a"));
    m.def("response", &response, py::arg("phases"), py::arg("a"));
    m.def("bb1_phases", &bb1_phases);

    py::class_<PQPolynomials>(m, "PQPolynomials")
        .def_readonly("p", &PQPolynomials::p)
        .def_readonly("q", &PQPolynomials::q)
        .def_readonly("degree", &PQPolynomials::degree);
    m.def("extract_pq", &extract_pq, py::arg("phases"), py::arg("tol") = 1e-9);

    py::class_<BdgSector>(m, "BdgSector")
        .def_readonly("lambda_index", &BdgSector::lambda)
        .def_readonly("energy", &BdgSector::energy)
        .def_readonly("signal", &BdgSector::signal);
    m.def("bdg_sectors", &bdg_sectors, py::arg("n_cells"), py::arg("coupling_j") = 1.0,
          py::arg("t_prime") = -std::numbers::pi / 2);
    m.def("neel_transition_probability", &neel_transition_probability, py::arg("n_cells"),
          py::arg("phases"), py::arg("coupling_j") = 1.0,
          py::arg("t_prime") = -std::numbers::pi / 2);
    m.def("single_particle_unitary", &single_particle_unitary, py::arg("schedule"),
          py::arg("n_cells"));
    m.def("neel_correlation", &neel_correlation, py::arg("n_cells"));
    m.def("spin_product_correlation", &spin_product_correlation, py::arg("text"));
    m.def("evolve_correlation", &evolve_correlation, py::arg("c"), py::arg("u"));
    m.def("sigma_z_from_correlation", &sigma_z_from_correlation, py::arg("c"));

    m.def("basis_state",
          [](const FragmentBasis& b, const std::string& s) {
              return basis_state(b, encode(s));
          },
          py::arg("basis"), py::arg("seed"));
    m.def("sigma_z_profile", &sigma_z_profile, py::arg("state"), py::arg("basis"));

    py::class_<StroboscopicRecord>(m, "StroboscopicRecord")
        .def_readonly("values", &StroboscopicRecord::values)
        .def_readonly("cycles", &StroboscopicRecord::cycles)
        .def_readonly("n_cells", &StroboscopicRecord::n_cells);
    m.def("stroboscopic_run", &stroboscopic_run, py::arg("basis"), py::arg("ops"),
          py::arg("schedule"), py::arg("cycles"), py::arg("initial"));
    m.def("krylov_infinite_temperature_profile", &krylov_infinite_temperature_profile,
          py::arg("basis"));
    m.def("time_average_profile", &time_average_profile, py::arg("record"),
          py::arg("burn_in") = 0);
    m.def("diagonal_ensemble_profile", &diagonal_ensemble_profile, py::arg("floquet"),
          py::arg("initial"), py::arg("basis"), py::arg("phase_tol") = 1e-10);
}
