"""
Spectra of discrete magnetic Laplacians.

Components:
- assembly: twisted derivative, symmetrized Laplacian, Dirichlet compression
- eigensolver: Hermitian eigenvalues through the real doubling
- spectrum / intervals: sorted spectra, spectral order, interval arithmetic
- bracketing: J_k intervals, κ refinement, gap sets
- magnetic: gaps stable under every magnetic potential
- delta: single-vertex gap criterion and trace identities
"""

from src.spectra.assembly import (
    DmlAssembler,
    HermitianMatrix,
    TwistedDerivative,
    assemble_dirichlet_dml,
    assemble_dml,
    assemble_twisted_derivative,
    factorized_dml,
)
from src.spectra.spectrum import Spectrum, spectrally_leq
from src.spectra.eigensolver import batch_eigenvalues, eigenvalues, embed_real, residual_check, tridiagonalize
from src.spectra.intervals import Interval, complement, intersect_unions, merge_intervals, reflect
from src.spectra.bracketing import (
    Bracketing,
    bracketing,
    gap_measure_lower_bound,
    gap_set,
    kappa_refine,
    spectral_order_chain,
)
from src.spectra.magnetic import check_cost, magnetic_gap_set
from src.spectra.delta import DeltaCertificate, certify, delta_criterion, trace_identity_check, trace_weight_check

__all__ = [
    "DmlAssembler",
    "HermitianMatrix",
    "TwistedDerivative",
    "assemble_dirichlet_dml",
    "assemble_dml",
    "assemble_twisted_derivative",
    "factorized_dml",
    "Spectrum",
    "spectrally_leq",
    "batch_eigenvalues",
    "eigenvalues",
    "embed_real",
    "residual_check",
    "tridiagonalize",
    "Interval",
    "complement",
    "intersect_unions",
    "merge_intervals",
    "reflect",
    "Bracketing",
    "bracketing",
    "gap_measure_lower_bound",
    "gap_set",
    "kappa_refine",
    "spectral_order_chain",
    "check_cost",
    "magnetic_gap_set",
    "DeltaCertificate",
    "certify",
    "delta_criterion",
    "trace_identity_check",
    "trace_weight_check",
]
