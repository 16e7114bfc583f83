"""Steady Galerkin finite elements on linear triangles.

Solves steady heat balance on the plate: isotropic conduction with
conductivity ``k`` in the interior, plus per-wall boundary conditions of
four kinds: fixed temperature, prescribed inward heat flux, convective
exchange ``h * (T - t_inf)`` with the ambient medium, or adiabatic.  The
discrete system is the symmetric ``K @ T = f`` assembled from element
stiffness matrices, boundary convection matrices, and source / flux /
ambient load vectors.

Sign conventions (unit plate thickness throughout):
  * ``q > 0`` means heat flowing INTO the plate across a flux wall and
    contributes positively to the load vector.
  * ``G > 0`` is volumetric heat generation and also adds to the load.

Element matrices are closed-form (linear shape functions integrate
exactly), so no numerical quadrature is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
import scipy.linalg

from .mesh import BoundaryEdge, Mesh2D, Triangle, Wall, edge_length, nodes_on_wall

_MIN_AREA = 1e-14


class DegenerateElementError(ValueError):
    """Triangle or edge with (numerically) vanishing measure."""


class SingularSystemError(RuntimeError):
    """Linear system is singular or indefinite; message carries diagnostics."""


@dataclass(frozen=True)
class PlateParameters:
    """Material and boundary data for the plate problem.

    ``k`` conductivity [W/(cm K)], ``G`` volumetric source [W/cm^3],
    ``h`` convection coefficient [W/(cm^2 K)], ``q`` inward boundary
    heat flux [W/cm^2], ``t_inf`` ambient temperature [K], ``t_fixed``
    fixed-wall temperature [K].  All per unit plate thickness.
    """

    k: float = 1.5
    G: float = 0.0
    h: float = 1.2
    q: float = 2.0
    t_inf: float = 25.0
    t_fixed: float = 100.0

    def __post_init__(self) -> None:
        if self.k <= 0.0:
            raise ValueError(f"conductivity must be positive, got k={self.k}")
        if self.h < 0.0:
            raise ValueError(f"convection coefficient must be >= 0, got h={self.h}")


class BCKind(Enum):
    DIRICHLET = "dirichlet"
    FLUX = "flux"
    CONVECTION = "convection"
    ADIABATIC = "adiabatic"


@dataclass(frozen=True)
class BoundaryConditionSet:
    """One condition kind per wall; the numeric values come from
    :class:`PlateParameters` (``t_fixed``, ``q``, ``h`` / ``t_inf``).

    The default layout is the demonstration plate: flux in on the left,
    fixed temperature on the right, convective exchange on top, and an
    adiabatic bottom.
    """

    left: BCKind = BCKind.FLUX
    right: BCKind = BCKind.DIRICHLET
    top: BCKind = BCKind.CONVECTION
    bottom: BCKind = BCKind.ADIABATIC

    def kind(self, wall: Wall) -> BCKind:
        return getattr(self, wall.value)

    def dirichlet_walls(self) -> list[Wall]:
        return [w for w in Wall if self.kind(w) is BCKind.DIRICHLET]


@dataclass(frozen=True)
class LinearSystem:
    """Assembled ``K @ T = f`` with symmetric ``K``; immutable once built."""

    K: np.ndarray
    f: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "K", np.array(self.K, dtype=float))
        object.__setattr__(self, "f", np.array(self.f, dtype=float))
        K, f = self.K, self.f
        if K.ndim != 2 or K.shape[0] != K.shape[1]:
            raise ValueError(f"K must be square, got shape {K.shape}")
        if f.shape != (K.shape[0],):
            raise ValueError(f"f shape {f.shape} does not match K {K.shape}")
        scale = np.abs(K).max()
        if scale > 0.0 and np.abs(K - K.T).max() > 1e-10 * scale:
            raise ValueError("K is not symmetric")
        K.setflags(write=False)
        f.setflags(write=False)

    @property
    def n(self) -> int:
        return self.f.shape[0]


@dataclass(frozen=True)
class TemperatureField:
    """Nodal temperatures [K], indexed like the mesh nodes."""

    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", np.array(self.values, dtype=float))
        self.values.setflags(write=False)


def element_stiffness(tri: Triangle, coords: np.ndarray, k: float) -> np.ndarray:
    """Conduction stiffness ``k * A * B^T B`` of a linear triangle.

    ``B`` holds the constant shape-function gradients.  Rows sum to zero:
    a constant temperature field drives no flux.
    """
    (x0, y0), (x1, y1), (x2, y2) = coords[list(tri.nodes)]
    area2 = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)  # twice the signed area
    if area2 <= 2.0 * _MIN_AREA:
        raise DegenerateElementError(
            f"triangle {tri.nodes} degenerate or inverted (2A={area2})"
        )
    b = np.array([y1 - y2, y2 - y0, y0 - y1])
    c = np.array([x2 - x1, x0 - x2, x1 - x0])
    grads = np.vstack([b, c]) / area2  # 2x3 matrix of shape-function gradients
    return k * (0.5 * area2) * (grads.T @ grads)


def edge_convection_matrix(edge: BoundaryEdge, coords: np.ndarray, h: float) -> np.ndarray:
    """Robin boundary matrix ``(h L / 6) [[2, 1], [1, 2]]`` of an edge."""
    L = edge_length(coords, edge)
    if L <= 0.0:
        raise DegenerateElementError(f"edge ({edge.a}, {edge.b}) has zero length")
    return (h * L / 6.0) * np.array([[2.0, 1.0], [1.0, 2.0]])


def edge_flux_vector(edge: BoundaryEdge, coords: np.ndarray, q: float) -> np.ndarray:
    """Load from a prescribed inward flux: ``q L / 2`` per edge node."""
    L = edge_length(coords, edge)
    if L <= 0.0:
        raise DegenerateElementError(f"edge ({edge.a}, {edge.b}) has zero length")
    return np.full(2, 0.5 * q * L)


def edge_ambient_vector(
    edge: BoundaryEdge, coords: np.ndarray, h: float, t_inf: float
) -> np.ndarray:
    """Ambient part of the Robin condition: ``h t_inf L / 2`` per edge node."""
    L = edge_length(coords, edge)
    if L <= 0.0:
        raise DegenerateElementError(f"edge ({edge.a}, {edge.b}) has zero length")
    return np.full(2, 0.5 * h * t_inf * L)


def element_source_vector(tri: Triangle, coords: np.ndarray, G_src: float) -> np.ndarray:
    """Load from a uniform volumetric source: ``G A / 3`` per vertex."""
    (x0, y0), (x1, y1), (x2, y2) = coords[list(tri.nodes)]
    area2 = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
    if area2 <= 2.0 * _MIN_AREA:
        raise DegenerateElementError(
            f"triangle {tri.nodes} degenerate or inverted (2A={area2})"
        )
    return np.full(3, G_src * (0.5 * area2) / 3.0)


def assemble(m: Mesh2D, p: PlateParameters, bc: BoundaryConditionSet) -> LinearSystem:
    """Scatter-add all element and boundary contributions into ``K, f``.

    Dirichlet walls contribute nothing here; constrain them afterwards
    with :func:`apply_dirichlet`.  Adiabatic walls are the natural
    boundary condition and also contribute nothing.
    """
    n = m.n_nodes
    K = np.zeros((n, n))
    f = np.zeros(n)
    coords = m.coord_array()

    for tri in m.elements:
        idx = list(tri.nodes)
        K[np.ix_(idx, idx)] += element_stiffness(tri, coords, p.k)
        if p.G != 0.0:
            f[idx] += element_source_vector(tri, coords, p.G)

    for edge in m.boundary:
        kind = bc.kind(edge.wall)
        idx = [edge.a, edge.b]
        if kind is BCKind.CONVECTION:
            K[np.ix_(idx, idx)] += edge_convection_matrix(edge, coords, p.h)
            f[idx] += edge_ambient_vector(edge, coords, p.h, p.t_inf)
        elif kind is BCKind.FLUX:
            f[idx] += edge_flux_vector(edge, coords, p.q)
        # DIRICHLET handled later, ADIABATIC contributes nothing.

    return LinearSystem(K, f)


def apply_dirichlet(sys: LinearSystem, nodes, value) -> LinearSystem:
    """Constrain nodes to fixed temperatures by symmetric elimination.

    ``value`` may be a scalar (applied to every listed node) or a
    sequence matching ``nodes``.  Each constrained row and column is
    eliminated (moving ``-K[j, i] * value`` into ``f[j]``), then the
    diagonal is set to 1 and the right-hand side to the value, which
    keeps the system symmetric positive definite.  Returns a new system.
    """
    nodes = list(nodes)
    values = np.broadcast_to(np.asarray(value, dtype=float), (len(nodes),))

    fixed: dict[int, float] = {}
    for i, v in zip(nodes, values):
        if not 0 <= i < sys.n:
            raise IndexError(f"node index {i} out of range for system of size {sys.n}")
        if i in fixed and fixed[i] != v:
            raise ValueError(
                f"conflicting constraints on node {i}: {fixed[i]} and {v}"
            )
        fixed[i] = float(v)
    if not fixed:
        return LinearSystem(sys.K.copy(), sys.f.copy())

    idx = list(fixed)
    vals = np.array([fixed[i] for i in idx])

    K = sys.K.copy()
    f = sys.f.copy()
    f -= K[:, idx] @ vals
    K[idx, :] = 0.0
    K[:, idx] = 0.0
    K[idx, idx] = 1.0
    f[idx] = vals
    return LinearSystem(K, f)


def solve(sys: LinearSystem) -> TemperatureField:
    """Direct Cholesky solve of the constrained system.

    One step of iterative refinement keeps the relative residual below
    1e-10.  Singular or indefinite systems raise
    :class:`SingularSystemError` with eigenvalue diagnostics.
    """
    try:
        factor = scipy.linalg.cho_factor(sys.K)
    except scipy.linalg.LinAlgError as exc:
        raise SingularSystemError(_diagnose(sys.K, str(exc))) from exc

    d = np.abs(np.diag(factor[0]))
    if (d.min() / d.max()) ** 2 < 1e-13:
        raise SingularSystemError(_diagnose(sys.K, "near-singular Cholesky pivot"))

    T = scipy.linalg.cho_solve(factor, sys.f)
    T += scipy.linalg.cho_solve(factor, sys.f - sys.K @ T)

    f_norm = np.linalg.norm(sys.f)
    residual = np.linalg.norm(sys.K @ T - sys.f)
    if f_norm > 0.0 and residual > 1e-10 * f_norm:
        raise SingularSystemError(
            _diagnose(sys.K, f"relative residual {residual / f_norm:.3e} exceeds 1e-10")
        )
    return TemperatureField(T)


def _diagnose(K: np.ndarray, reason: str) -> str:
    eigs = np.linalg.eigvalsh(K)
    lo, hi = eigs[0], eigs[-1]
    cond = np.inf if lo <= 0.0 else hi / lo
    return (
        f"{reason}; eigenvalue range [{lo:.3e}, {hi:.3e}], "
        f"condition estimate {cond:.3e}"
    )


def dirichlet_nodes(m: Mesh2D, bc: BoundaryConditionSet) -> list[int]:
    """Nodes constrained by the fixed-temperature walls, deduplicated."""
    seen: dict[int, None] = {}
    for wall in bc.dirichlet_walls():
        for node in nodes_on_wall(m, wall):
            seen[node] = None
    return list(seen)


def solve_crisp(
    m: Mesh2D, p: PlateParameters, bc: BoundaryConditionSet
) -> TemperatureField:
    """Assemble, constrain the fixed-temperature walls, and solve.

    This is the single crisp pipeline; the fuzzy sweep calls it for
    every parameter vertex so that the modal solve and a plain crisp
    solve are bit-for-bit identical.
    """
    system = assemble(m, p, bc)
    constrained = dirichlet_nodes(m, bc)
    if constrained:
        system = apply_dirichlet(system, constrained, p.t_fixed)
    return solve(system)
