"""
Discrete magnetic Laplacian assembly.

The twisted derivative d maps vertex functions to arc functions,

    (d f)(e) = e^{iα_e/2} f(head) - e^{-iα_e/2} f(tail),

and the Laplacian is Δ = M_V^{-1} d* M_E d. Δ is self-adjoint only for the
weighted inner product, so the stored matrix is the similar Hermitian matrix
S = M_V^{1/2} Δ M_V^{-1/2}:

    S[v, v]       = ρ(v)
    S[tail, head] = -e^{+iα_e} m_e / sqrt(m(tail) m(head))   (summed over arcs)

A loop lies in both E_v^+ and E_v^-, so it adds -2 cos(α_e) m_e / m(v) to the
diagonal on top of its 2 m_e / m(v) share of ρ(v).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from src.graph import DirichletGraph, MwGraph, relative_weights, rho_infinity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HermitianMatrix:
    """A symmetrized Laplacian together with the data needed to interpret it.

    ``entries`` is Hermitian; ``vertex_weights`` holds m(v) for its rows so the
    plain (unsymmetrized) operator can be recovered; ``ambient_max`` is 2ρ∞ of
    the graph the matrix came from.
    """

    entries: np.ndarray
    vertex_weights: np.ndarray
    labels: tuple[str, ...]
    ambient_max: float

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def unsymmetrized(self) -> np.ndarray:
        """Δ = M_V^{-1/2} S M_V^{1/2}."""
        root = np.sqrt(self.vertex_weights)
        return self.entries * root[None, :] / root[:, None]

    def trace(self) -> float:
        return float(np.trace(self.entries).real)


@dataclass(frozen=True)
class TwistedDerivative:
    """d as a dense |E| x |V| matrix with the weight diagonals M_V and M_E."""

    matrix: np.ndarray
    vertex_weights: np.ndarray
    arc_weights: np.ndarray


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def assemble_twisted_derivative(g: MwGraph) -> TwistedDerivative:
    d = np.zeros((g.n_arcs, g.n_vertices), dtype=complex)
    half = 0.5 * g.alphas()
    rows = np.arange(g.n_arcs)
    # a loop has head == tail, so both terms land in one column
    np.add.at(d, (rows, g.heads()), np.exp(1j * half))
    np.add.at(d, (rows, g.tails()), -np.exp(-1j * half))
    return TwistedDerivative(_readonly(d), _readonly(g.vertex_weights()), _readonly(g.arc_weights()))


def factorized_dml(g: MwGraph) -> np.ndarray:
    """M_V^{-1} d* M_E d, the Laplacian straight from its factorization."""
    td = assemble_twisted_derivative(g)
    weighted = td.arc_weights[:, None] * td.matrix
    return (td.matrix.conj().T @ weighted) / td.vertex_weights[:, None]


class DmlAssembler:
    """Assembles symmetrized Laplacians of one graph for many potentials.

    The graph structure and weights are fixed; only α varies. Used for grid
    sweeps where thousands of potentials share the same support.

    Example:
        >>> assembler = DmlAssembler(g)
        >>> stack = assembler.stack(np.zeros((16, g.n_arcs)))
        >>> stack.shape
        (16, 4, 4)
    """

    def __init__(self, g: MwGraph):
        self.graph = g
        self.n = g.n_vertices
        self._tails = g.tails()
        self._heads = g.heads()
        m_v = g.vertex_weights()
        self._coupling = g.arc_weights() / np.sqrt(m_v[self._tails] * m_v[self._heads])
        self._diagonal = relative_weights(g)
        self.ambient_max = 2.0 * rho_infinity(g) if g.n_vertices else 0.0

    def stack(self, alphas: np.ndarray) -> np.ndarray:
        """Symmetrized matrices for a (batch, |E|) array of potentials."""
        alphas = np.atleast_2d(np.asarray(alphas, dtype=float))
        batch = alphas.shape[0]
        out = np.zeros((batch, self.n, self.n), dtype=complex)
        idx = np.arange(self.n)
        out[:, idx, idx] = self._diagonal
        off = -np.exp(1j * alphas) * self._coupling
        for j, (t, h) in enumerate(zip(self._tails, self._heads)):
            out[:, t, h] += off[:, j]
            out[:, h, t] += off[:, j].conj()
        return out

    def matrix(self, alpha: np.ndarray | None = None) -> np.ndarray:
        if alpha is None:
            alpha = self.graph.alphas()
        return self.stack(alpha)[0]


def assemble_dml(g: MwGraph) -> HermitianMatrix:
    s = DmlAssembler(g).matrix()
    s = 0.5 * (s + s.conj().T)
    logger.debug("assembled DML of dimension %d from %d arcs", g.n_vertices, g.n_arcs)
    return HermitianMatrix(
        entries=_readonly(s),
        vertex_weights=_readonly(g.vertex_weights()),
        labels=g.vertex_ids,
        ambient_max=2.0 * rho_infinity(g),
    )


def assemble_dirichlet_dml(dg: DirichletGraph) -> HermitianMatrix:
    """Principal compression of the base Laplacian onto the active vertices."""
    full = assemble_dml(dg.base)
    keep = np.array([dg.base.vertex_position(v) for v in dg.active_vertices], dtype=np.intp)
    return HermitianMatrix(
        entries=_readonly(full.entries[np.ix_(keep, keep)].copy()),
        vertex_weights=_readonly(full.vertex_weights[keep].copy()),
        labels=dg.active_vertices,
        ambient_max=full.ambient_max,
    )


__all__ = [
    "HermitianMatrix",
    "TwistedDerivative",
    "DmlAssembler",
    "assemble_twisted_derivative",
    "assemble_dml",
    "assemble_dirichlet_dml",
    "factorized_dml",
]
