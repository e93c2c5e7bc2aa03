"""Pair-hopping chain fragments driven as quantum signal processors.

The heavy lifting lives in the compiled extension; this package re-exports
its public names.
"""

from ._core import (  # noqa: F401
    BdgSector,
    CapacityError,
    ConfigError,
    ConservedCharges,
    DriveOperators,
    DriveSchedule,
    FockState,
    FragmentBasis,
    PQPolynomials,
    Region,
    RegionKind,
    StroboscopicRecord,
    VerificationError,
    __version__,
    apply_drive,
    basis_state,
    bb1_phases,
    bdg_sectors,
    build_fragment,
    charges,
    compose_qsp,
    decode,
    diagonal_ensemble_profile,
    encode,
    evolve_correlation,
    extract_pq,
    floquet_unitary,
    h_ph_dense,
    h_stag_diagonal,
    krylov_infinite_temperature_profile,
    make_drive_operators,
    neel_correlation,
    neel_transition_probability,
    partition_regions,
    processing_s,
    pseudospin_z,
    response,
    schedule_from_phases,
    sigma_z_from_correlation,
    sigma_z_profile,
    signal_w,
    single_particle_unitary,
    spin_product_correlation,
    stroboscopic_run,
    time_average_profile,
    verify_factorization,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
