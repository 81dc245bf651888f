"""Exact dense-linear-algebra semantics for patterns.

Branch maps are built column by column from the entangled resource state;
the superoperator is their completely positive sum, stored as a Choi matrix.
Robust determinism is decided by the definitional recursion: at every step
the two outcome-conditioned channels must agree as linear maps, which is
checked on a complete operator basis via Choi matrices; the universally
quantified perturbation angle of plane measurements is discharged by
sampling three equally spaced offsets (both sides are trigonometric
polynomials of degree one in the offset, so three samples pin them down —
the reduction itself is validated by dense sampling in the test suite).

Qubit tensor ordering is the canonical numeric vertex order throughout,
first qubit most significant.
"""

from __future__ import annotations

import math
import os
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from .angles import Angle
from .bits import bit_list
from .errors import (
    DomainError,
    InvariantViolationError,
    PreconditionError,
    ResourceLimitError,
)
from .graphs import Axis, Graph, Label, OpenGraph, odd_neighborhood
from .pauli import PauliOperator
from .patterns import OutcomeAssignment, Pattern, outcome_mask, require_valid

DEFAULT_TOL = 1e-9
_DEFAULT_MAX_QUBITS = 12

#: Single-qubit eigenbases at angle 0: axis -> (plus, minus).
_BASIS0: dict[Axis, tuple[np.ndarray, np.ndarray]] = {
    Axis.X: (
        np.array([1, 1], dtype=complex) / math.sqrt(2),
        np.array([1, -1], dtype=complex) / math.sqrt(2),
    ),
    Axis.Y: (
        np.array([1, 1j], dtype=complex) / math.sqrt(2),
        np.array([1, -1j], dtype=complex) / math.sqrt(2),
    ),
    Axis.Z: (
        np.array([1, 0], dtype=complex),
        np.array([0, 1], dtype=complex),
    ),
}

_PAULI_MATRICES: dict[Axis, np.ndarray] = {
    Axis.X: np.array([[0, 1], [1, 0]], dtype=complex),
    Axis.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    Axis.Z: np.array([[1, 0], [0, -1]], dtype=complex),
}


def max_qubits() -> int:
    """Simulator size bound; override with the MBQC_MAX_QUBITS variable."""
    value = os.environ.get("MBQC_MAX_QUBITS")
    return int(value) if value else _DEFAULT_MAX_QUBITS


def _check_size(n: int) -> None:
    bound = max_qubits()
    if n > bound:
        raise ResourceLimitError(f"{n} qubits exceeds the simulator bound {bound}")


@dataclass(frozen=True)
class QuantumState:
    """Amplitude vector over the given qubit labels (ascending order)."""

    qubits: tuple[int, ...]
    vector: np.ndarray = field(compare=False)

    def __post_init__(self) -> None:
        if tuple(sorted(self.qubits)) != self.qubits:
            raise DomainError("qubit labels must be sorted")
        if self.vector.shape != (1 << len(self.qubits),):
            raise DomainError("vector length must be 2^(number of qubits)")

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))


@dataclass(frozen=True)
class MeasurementBasisPair:
    plus: np.ndarray
    minus: np.ndarray


@dataclass(frozen=True)
class BranchMap:
    """Linear map from input amplitudes to output amplitudes for one branch."""

    matrix: np.ndarray
    outcomes: tuple[tuple[int, int], ...]
    in_qubits: tuple[int, ...]
    out_qubits: tuple[int, ...]


@dataclass(frozen=True)
class Superoperator:
    """Choi matrix of rho -> sum_m K_m rho K_m^dagger."""

    choi: np.ndarray
    in_qubits: tuple[int, ...]
    out_qubits: tuple[int, ...]
    kraus: tuple[np.ndarray, ...] = field(compare=False, default=())

    def is_trace_preserving(self, tol: float = DEFAULT_TOL) -> bool:
        acc = sum(k.conj().T @ k for k in self.kraus)
        return bool(np.max(np.abs(acc - np.eye(1 << len(self.in_qubits)))) <= tol)


def _basis_vectors(label: Label, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Measurement basis at a numeric angle (no constraint checks)."""
    if label.is_pauli:
        plus, minus = _BASIS0[label.axes[0]]
        # Angle pi measures the negated observable: outcomes swap.
        reduced = math.fmod(alpha, 2.0 * math.pi)
        if math.isclose(abs(reduced), math.pi, abs_tol=1e-12):
            return minus, plus
        return plus, minus
    p0, m0 = _BASIS0[label.complement]
    phase = complex(math.cos(alpha), math.sin(alpha))
    plus = (p0 + phase * m0) / math.sqrt(2)
    minus = (p0 - phase * m0) / math.sqrt(2)
    return plus, minus


def measurement_basis(label: Label, angle: Angle) -> MeasurementBasisPair:
    """The orthonormal pair measured for the given label and angle."""
    if label.is_pauli and not angle.is_pauli_angle():
        raise DomainError(f"Pauli label {label.value} requires angle 0 or pi, got {angle}")
    plus, minus = _basis_vectors(label, angle.to_float())
    return MeasurementBasisPair(plus, minus)


# ---------------------------------------------------------------------------
# Raw state plumbing.  Flat vectors over sorted qubit tuples; the qubit at
# tuple position a owns flat-index bit (n-1-a).


def _local_bit(qubits: Sequence[int], q: int) -> int:
    return len(qubits) - 1 - qubits.index(q)


def _local_mask(qubits: Sequence[int], vmask: int) -> int:
    out = 0
    for a, q in enumerate(qubits):
        if (vmask >> q) & 1:
            out |= 1 << (len(qubits) - 1 - a)
    return out


def _apply_pauli_mask(vec: np.ndarray, qubits: Sequence[int], xmask: int, zmask: int) -> np.ndarray:
    """Apply X_{xmask} Z_{zmask} (Z first, then X)."""
    lx = _local_mask(qubits, xmask)
    lz = _local_mask(qubits, zmask)
    idx = np.arange(vec.shape[0])
    out = vec[idx ^ lx]
    if lz:
        signs = 1.0 - 2.0 * (np.bitwise_count(idx & lz) & 1)
        out = out * signs
    return out


def _project(vec: np.ndarray, qubits: tuple[int, ...], q: int, bra: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    n = len(qubits)
    a = qubits.index(q)
    t = vec.reshape((2,) * n)
    t = np.tensordot(bra.conj(), t, axes=([0], [a]))
    rest = qubits[:a] + qubits[a + 1 :]
    return t.reshape(-1), rest


def _graph_state_vector(graph: Graph, inputs: int, input_state: np.ndarray | None) -> np.ndarray:
    verts = list(graph.vertices)
    _check_size(len(verts))
    in_qubits = bit_list(inputs)
    if input_state is None:
        if in_qubits:
            raise DomainError("input state required for a graph with inputs")
        state = np.ones(1, dtype=complex)
    else:
        state = np.asarray(input_state, dtype=complex).reshape(-1)
        if state.shape != (1 << len(in_qubits),):
            raise DomainError("input state dimension does not match the input set")
    axes_order = list(in_qubits)
    plus = _BASIS0[Axis.X][0]
    t = state.reshape((2,) * len(in_qubits))
    for q in verts:
        if not (inputs >> q) & 1:
            t = np.tensordot(t, plus, axes=0)
            axes_order.append(q)
    if verts:
        t = t.transpose([axes_order.index(q) for q in verts])
    vec = np.ascontiguousarray(t.reshape(-1))
    idx = np.arange(vec.shape[0])
    for u, v in graph.edges:
        bu = 1 << _local_bit(verts, u)
        bv = 1 << _local_bit(verts, v)
        both = ((idx & bu) != 0) & ((idx & bv) != 0)
        vec[both] *= -1.0
    return vec


def graph_state(g: OpenGraph | Graph, input_state: np.ndarray | None = None) -> QuantumState:
    """Entangled resource state: CZ over every edge on plus-states and inputs.

    ``input_state`` is the joint amplitude vector over the sorted input
    qubits; None means there are no inputs (for a bare graph every vertex is
    prepared in the plus state).
    """
    if isinstance(g, OpenGraph):
        graph, inputs = g.graph, g.inputs
    else:
        graph, inputs = g, 0
    return QuantumState(tuple(graph.vertices), _graph_state_vector(graph, inputs, input_state))


def _initial_branch_matrix(pat: Pattern) -> tuple[np.ndarray, tuple[int, ...]]:
    """Isometry of the preparation stage: columns indexed by input basis."""
    in_qubits = bit_list(pat.inputs)
    dim_in = 1 << len(in_qubits)
    cols = []
    for i in range(dim_in):
        e = np.zeros(dim_in, dtype=complex)
        e[i] = 1.0
        cols.append(_graph_state_vector(pat.graph, pat.inputs, e if in_qubits else None))
    return np.stack(cols, axis=1), tuple(pat.graph.vertices)


def _project_rows(
    k: np.ndarray, qubits: tuple[int, ...], q: int, bra: np.ndarray
) -> tuple[np.ndarray, tuple[int, ...]]:
    n = len(qubits)
    a = qubits.index(q)
    t = k.reshape((2,) * n + (k.shape[1],))
    t = np.tensordot(bra.conj(), t, axes=([0], [a]))
    rest = qubits[:a] + qubits[a + 1 :]
    return t.reshape(-1, k.shape[1]), rest


def _apply_pauli_rows(k: np.ndarray, qubits: tuple[int, ...], xmask: int, zmask: int) -> np.ndarray:
    lx = _local_mask(qubits, xmask)
    lz = _local_mask(qubits, zmask)
    idx = np.arange(k.shape[0])
    out = k[idx ^ lx, :]
    if lz:
        signs = 1.0 - 2.0 * (np.bitwise_count(idx & lz) & 1)
        out = out * signs[:, None]
    return out


def _evolve_branches(pat: Pattern) -> tuple[list[tuple[int, np.ndarray]], tuple[int, ...]]:
    """All branch matrices of a valid pattern, keyed by outcome bitmask."""
    k0, qubits = _initial_branch_matrix(pat)
    branches: list[tuple[int, np.ndarray]] = [(0, k0)]
    for step in pat.steps:
        plus, minus = _basis_vectors(step.label, step.angle.to_float())
        nxt: list[tuple[int, np.ndarray]] = []
        for omask, k in branches:
            kp, rest = _project_rows(k, qubits, step.qubit, plus)
            km, _ = _project_rows(k, qubits, step.qubit, minus)
            km = _apply_pauli_rows(km, rest, step.x_corr, step.z_corr)
            nxt.append((omask, kp))
            nxt.append((omask | (1 << step.qubit), km))
        qubits = qubits[: qubits.index(step.qubit)] + qubits[qubits.index(step.qubit) + 1 :]
        branches = nxt
    return branches, qubits


def branch_map(pat: Pattern, m: OutcomeAssignment) -> BranchMap:
    """The linear map of one outcome branch; corrections fire on outcome 1."""
    require_valid(pat)
    _check_size(pat.total_qubits())
    target = outcome_mask(pat, m)
    k, qubits = _initial_branch_matrix(pat)
    for step in pat.steps:
        plus, minus = _basis_vectors(step.label, step.angle.to_float())
        if (target >> step.qubit) & 1:
            k, qubits = _project_rows(k, qubits, step.qubit, minus)
            k = _apply_pauli_rows(k, qubits, step.x_corr, step.z_corr)
        else:
            k, qubits = _project_rows(k, qubits, step.qubit, plus)
    outcomes = tuple((s.qubit, (target >> s.qubit) & 1) for s in pat.steps)
    return BranchMap(k, outcomes, tuple(bit_list(pat.inputs)), qubits)


def _choi(kraus: Sequence[np.ndarray]) -> np.ndarray:
    vecs = np.stack([k.reshape(-1) for k in kraus], axis=1)
    return vecs @ vecs.conj().T


def semantics(pat: Pattern) -> Superoperator:
    """Superoperator semantics: the CP sum of all outcome branches."""
    require_valid(pat)
    _check_size(pat.total_qubits())
    branches, out_qubits = _evolve_branches(pat)
    kraus = tuple(k for _, k in branches)
    return Superoperator(_choi(kraus), tuple(bit_list(pat.inputs)), out_qubits, kraus)


def superoperator_equal(s1: Superoperator, s2: Superoperator, tol: float = DEFAULT_TOL) -> bool:
    """Max-entry distance of the Choi matrices within tolerance."""
    if s1.in_qubits != s2.in_qubits or len(s1.out_qubits) != len(s2.out_qubits):
        raise DomainError("superoperator dimensions differ")
    return bool(np.max(np.abs(s1.choi - s2.choi)) <= tol)


def choi_distance(s1: Superoperator, s2: Superoperator) -> float:
    if s1.choi.shape != s2.choi.shape:
        raise DomainError("superoperator dimensions differ")
    return float(np.max(np.abs(s1.choi - s2.choi)))


# ---------------------------------------------------------------------------
# Robust determinism.

_PLANE_OFFSETS = (0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0)


@dataclass(frozen=True)
class StepDiagnostic:
    index: int
    qubit: int
    label: Label
    epsilons: tuple[float, ...]
    choi_distance: float
    branch_norms: tuple[float, ...]
    ok: bool


@dataclass(frozen=True)
class RobustDeterminismReport:
    ok: bool
    tol: float
    steps: tuple[StepDiagnostic, ...]

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failing_step(self) -> StepDiagnostic | None:
        for s in self.steps:
            if not s.ok:
                return s
        return None


def is_robustly_deterministic(
    pat: Pattern,
    tol: float = DEFAULT_TOL,
    epsilon_offsets: Sequence[float] | None = None,
    stop_on_failure: bool = True,
) -> RobustDeterminismReport:
    """Definitional recursion for robust determinism.

    At each step the channel conditioned on outcome 0 must equal the
    corrected channel conditioned on outcome 1, as linear maps of the input
    density matrix.  Plane measurements must satisfy this for every
    perturbation of their angle; three offsets suffice (see module docs),
    and ``epsilon_offsets`` lets callers re-run the check with denser
    sampling.
    """
    require_valid(pat)
    _check_size(pat.total_qubits())
    offsets = tuple(epsilon_offsets) if epsilon_offsets is not None else _PLANE_OFFSETS
    k0, qubits = _initial_branch_matrix(pat)
    branches = [k0]
    diagnostics: list[StepDiagnostic] = []
    ok = True
    for i, step in enumerate(pat.steps):
        alpha = step.angle.to_float()
        eps = tuple(alpha + o for o in offsets) if step.label.is_plane else (alpha,)
        worst = 0.0
        for angle in eps:
            plus, minus = _basis_vectors(step.label, angle)
            kp = []
            km = []
            for k in branches:
                a, rest = _project_rows(k, qubits, step.qubit, plus)
                b, _ = _project_rows(k, qubits, step.qubit, minus)
                b = _apply_pauli_rows(b, rest, step.x_corr, step.z_corr)
                kp.append(a)
                km.append(b)
            worst = max(worst, float(np.max(np.abs(_choi(kp) - _choi(km)))))
        step_ok = worst <= tol
        norms = tuple(float(np.linalg.norm(k)) for k in branches)
        diagnostics.append(
            StepDiagnostic(i, step.qubit, step.label, eps, worst, norms, step_ok)
        )
        if not step_ok:
            ok = False
            if stop_on_failure:
                break
        plus, minus = _basis_vectors(step.label, alpha)
        nxt = []
        for k in branches:
            a, rest = _project_rows(k, qubits, step.qubit, plus)
            b, _ = _project_rows(k, qubits, step.qubit, minus)
            b = _apply_pauli_rows(b, rest, step.x_corr, step.z_corr)
            nxt.append(a)
            nxt.append(b)
        branches = nxt
        qubits = qubits[: qubits.index(step.qubit)] + qubits[qubits.index(step.qubit) + 1 :]
    return RobustDeterminismReport(ok, tol, tuple(diagnostics))


# ---------------------------------------------------------------------------
# Stabilizer fixed points.


def stabilizer_sign(
    g: OpenGraph, d: int, input_state: np.ndarray | None = None, tol: float = DEFAULT_TOL
) -> int:
    """Sign of the stabilizer at ``d`` on the resource state.

    Applies X_d Z_{Odd(d)} and compares with the original state; by the
    fixed-point property this is exactly +1 or -1 for d within the
    non-inputs, and anything else raises.
    """
    if d & ~g.non_inputs or d & ~g.vmask:
        raise DomainError("stabilizer set must avoid input vertices")
    state = graph_state(g, input_state)
    moved = _apply_pauli_mask(state.vector, state.qubits, d, odd_neighborhood(g, d))
    ref = int(np.argmax(np.abs(state.vector)))
    if abs(state.vector[ref]) < 1e-12:
        raise InvariantViolationError("resource state is numerically zero")
    ratio = moved[ref] / state.vector[ref]
    for sign in (1, -1):
        if abs(ratio - sign) <= tol and np.max(np.abs(moved - sign * state.vector)) <= tol:
            return sign
    raise InvariantViolationError("state is not a +/-1 eigenvector of the stabilizer")


@dataclass(frozen=True)
class SignedAxis:
    axis: Axis
    sign: int

    def matrix(self) -> np.ndarray:
        return self.sign * _PAULI_MATRICES[self.axis]

    def __str__(self) -> str:
        return ("" if self.sign > 0 else "-") + self.axis.value


def plane_fixed_point(label: Label, angle: Angle | float, tol: float = 1e-12) -> tuple[SignedAxis, SignedAxis]:
    """Axes (P, Q) of the plane with (cos a P + sin a Q) fixing the plus state.

    Both orderings and both signs per axis are tried; the orientation of the
    plane forces a negative sign for one axis in the YZ case, so signed axes
    are returned.
    """
    if not label.is_plane:
        raise DomainError("fixed-point decomposition needs a plane label")
    alpha = angle.to_float() if isinstance(angle, Angle) else float(angle)
    plus, _ = _basis_vectors(label, alpha)
    a1, a2 = label.axes
    for first, second in ((a1, a2), (a2, a1)):
        for s1 in (1, -1):
            for s2 in (1, -1):
                op = math.cos(alpha) * s1 * _PAULI_MATRICES[first] + math.sin(alpha) * s2 * _PAULI_MATRICES[second]
                if np.max(np.abs(op @ plus - plus)) <= tol:
                    return SignedAxis(first, s1), SignedAxis(second, s2)
    raise InvariantViolationError(f"no fixed-point axis pair for {label.value} at {alpha}")


# ---------------------------------------------------------------------------
# Projected stabilizer groups.

#: Pauli assignment: vertex -> (axis, sign) with sign in {+1, -1}.
PauliAssignment = Mapping[int, tuple[Axis, int]]


def _assignment_masks(assignment: PauliAssignment) -> tuple[int, int, int]:
    amask = xmask = zmask = 0
    for v, (axis, sign) in assignment.items():
        if sign not in (1, -1):
            raise DomainError("assignment signs must be +1 or -1")
        amask |= 1 << v
        if axis in (Axis.X, Axis.Y):
            xmask |= 1 << v
        if axis in (Axis.Y, Axis.Z):
            zmask |= 1 << v
    return amask, xmask, zmask


def project_assignment(g: Graph, assignment: PauliAssignment) -> QuantumState:
    """Project the graph state of the bare graph onto the assigned eigenstates."""
    state = graph_state(g if isinstance(g, Graph) else g.graph)
    vec, qubits = state.vector, state.qubits
    for v in sorted(assignment):
        axis, sign = assignment[v]
        plus, minus = _BASIS0[axis]
        bra = plus if sign > 0 else minus
        vec, qubits = _project(vec, qubits, v, bra)
    return QuantumState(qubits, vec)


def enumerate_projected_stabilizers(
    g: Graph | OpenGraph, assignment: PauliAssignment, tol: float = DEFAULT_TOL
) -> frozenset[PauliOperator]:
    """Stabilizers of a Pauli-projected graph state, up to phase.

    Requires the projection to be "strong" (its norm is exactly
    2^(-|A|/2)); the result is the set of operators X_{S minus the X-like
    assigned vertices} Z_{Odd(S) minus the Z-like ones} over subsets S whose
    clash with the assignment cancels.
    """
    graph = g.graph if isinstance(g, OpenGraph) else g
    amask, xa, za = _assignment_masks(assignment)
    projected = project_assignment(graph, assignment)
    expected = 2.0 ** (-len(assignment) / 2.0)
    if abs(projected.norm - expected) > max(tol, 1e-9):
        raise PreconditionError(
            f"projection norm {projected.norm:.6g} != 2^(-|A|/2) = {expected:.6g}"
        )
    remaining = graph.vmask & ~amask
    found: set[tuple[int, int]] = set()
    for s in range(1 << len(graph.vertices)):
        smask = 0
        for i, v in enumerate(graph.vertices):
            if (s >> i) & 1:
                smask |= 1 << v
        odd = odd_neighborhood(graph, smask)
        if smask & za != odd & xa:
            continue
        found.add((smask & ~xa, odd & ~za))
    return frozenset(PauliOperator(remaining, x, z, 0) for x, z in found)


def brute_force_projected_stabilizers(
    g: Graph | OpenGraph, assignment: PauliAssignment, tol: float = DEFAULT_TOL
) -> frozenset[PauliOperator]:
    """Oracle: try every support pair on the remaining qubits directly."""
    graph = g.graph if isinstance(g, OpenGraph) else g
    amask, _, _ = _assignment_masks(assignment)
    projected = project_assignment(graph, assignment)
    vec, qubits = projected.vector, projected.qubits
    remaining = graph.vmask & ~amask
    rem = bit_list(remaining)
    out = set()
    for xm_bits in range(1 << len(rem)):
        xm = sum(1 << rem[i] for i in range(len(rem)) if (xm_bits >> i) & 1)
        for zm_bits in range(1 << len(rem)):
            zm = sum(1 << rem[i] for i in range(len(rem)) if (zm_bits >> i) & 1)
            moved = _apply_pauli_mask(vec, qubits, xm, zm)
            if _proportional(moved, vec, tol) is not None:
                out.add((xm, zm))
    return frozenset(PauliOperator(remaining, x, z, 0) for x, z in out)


def _proportional(a: np.ndarray, b: np.ndarray, tol: float) -> complex | None:
    """Phase c with a = c*b (same norms), or None."""
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na < 1e-12 and nb < 1e-12:
        return 1.0 + 0.0j
    if abs(na - nb) > tol or nb < 1e-12:
        return None
    ref = int(np.argmax(np.abs(b)))
    c = a[ref] / b[ref]
    if np.max(np.abs(a - c * b)) <= tol * max(1.0, float(nb)):
        return complex(c)
    return None


# ---------------------------------------------------------------------------
# Branch-relation trichotomy for plane measurements.


@dataclass(frozen=True)
class BranchRelation:
    kind: str  # "proportional" | "split" | "neither"
    x: int | None = None
    residual: QuantumState | None = None


def classify_branch_relation(
    phi: QuantumState,
    phi_prime: QuantumState,
    u: int,
    label: Label,
    tol: float = 1e-8,
) -> BranchRelation:
    """Decide how two states can agree under all plane measurements of u.

    Hypotheses (projections onto the plus state proportional and of norm
    2^(-1/2), sampled at angles 0, pi/2, pi) are checked first; under them
    either the states are proportional, or qubit u factors out in opposite
    eigenstates of the axis outside the plane, sharing the residual.
    """
    if not label.is_plane:
        raise DomainError("classification needs a plane label")
    if phi.qubits != phi_prime.qubits:
        raise DomainError("states live on different registers")
    if u not in phi.qubits:
        raise DomainError(f"qubit {u} is not part of the register")
    a = phi.vector / (phi.norm or 1.0)
    b = phi_prime.vector / (phi_prime.norm or 1.0)
    inv_sqrt2 = 1.0 / math.sqrt(2)
    for alpha in (0.0, math.pi / 2.0, math.pi):
        plus, _ = _basis_vectors(label, alpha)
        pa, _ = _project(a, phi.qubits, u, plus)
        pb, _ = _project(b, phi.qubits, u, plus)
        if abs(np.linalg.norm(pa) - inv_sqrt2) > tol:
            return BranchRelation("neither")
        if _proportional(pa, pb, tol) is None and np.linalg.norm(pa - pb) > tol:
            return BranchRelation("neither")
    if _proportional(a, b, tol) is not None:
        return BranchRelation("proportional")
    p_axis = label.complement
    plus0, minus0 = _BASIS0[p_axis]
    for x, (ea, eb) in enumerate(((plus0, minus0), (minus0, plus0))):
        psi, rest = _project(a, phi.qubits, u, ea)
        other, _ = _project(a, phi.qubits, u, eb)
        psi_b, _ = _project(b, phi.qubits, u, eb)
        other_b, _ = _project(b, phi.qubits, u, ea)
        if (
            np.linalg.norm(other) <= tol
            and np.linalg.norm(other_b) <= tol
            and _proportional(psi_b, psi, tol) is not None
        ):
            return BranchRelation("split", x, QuantumState(rest, psi))
    return BranchRelation("neither")
