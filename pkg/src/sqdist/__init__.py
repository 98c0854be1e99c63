"""Exact spectral invariants of squared distance matrices of complete
multipartite graphs: spectrum, inertia, energy and spectral radius from
closed forms, verified against an independent dense eigensolver."""

from .charpoly import (
    FactoredCharPoly,
    IntPolynomial,
    Sign,
    char_poly_factored,
    det_B_charpoly,
    det_delta_exact,
    lambda_s1_sign,
    reduced_matrix_B,
    reduced_poly_p,
)
from .errors import SqDistError
from .matrices import (
    DenseSymMatrix,
    SimpleGraph,
    multipartite_graph,
    sqdist_from_graph,
    sqdist_from_partition,
)
from .oracle import EigenResult, sweep, symmetric_eigenvalues, verify_partition
from .partitions import (
    MajorizationStep,
    Partition,
    Verdict,
    canonicalize,
    complete_split,
    elementary_chain,
    enumerate_class,
    enumerate_partitions,
    majorizes,
    parse_partition,
    split_h,
    turan,
    turan_h,
)
from .spectrum import (
    EnergyReport,
    InertiaTriple,
    SpectrumReport,
    energy,
    full_spectrum,
    inertia,
    radius_bipartite_closed,
    secular_roots,
    spectral_radius,
)
from .extremal import (
    ChainReport,
    ScanReport,
    scan_energy,
    scan_energy_h,
    scan_radius,
    verify_chain_monotone,
)

__version__ = "0.1.0"
