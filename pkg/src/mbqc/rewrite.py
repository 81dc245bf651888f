"""Pushing Pauli measurements earlier in a pattern.

A Pauli measurement directly preceded (in execution order) by a plane
measurement can trade places with it.  Writing sigma for the part of the
plane step's corrections that lands on the pushed qubit, R for the rest, C
for the Pauli step's own corrections and lambda for its axis, the swapped
steps carry:

* ``(CR, C)`` when sigma anticommutes with lambda;
* ``(R, C)`` when ``RC = CR`` differs from ``sigma = lambda`` (exactly one
  holds);
* otherwise both ``(R, P C)`` and ``(empty, P C)``, for P an axis of the
  plane acting on the plane qubit -- a genuinely nondeterministic case, and
  the only one that leaves an outcome-conditioned mark on the plane qubit.

A second single-result implementation computes the same move through
explicit exponent formulas and is kept independent for cross-checking.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .bits import parity
from .errors import DomainError, PushInapplicableError, ResourceLimitError
from .graphs import Axis
from .patterns import MeasurementStep, Pattern

_AXIS_XZ = {Axis.X: (1, 0), Axis.Y: (1, 1), Axis.Z: (0, 1)}


@dataclass(frozen=True)
class PushChoice:
    """Which branch of the nondeterministic case was taken, if any."""

    case: str  # "i" | "ii" | "iii"
    keep_r: bool | None = None
    plane_axis: Axis | None = None

    def __str__(self) -> str:
        if self.case != "iii":
            return "-"
        kept = "keep-R" if self.keep_r else "drop-R"
        assert self.plane_axis is not None
        return f"{kept},P={self.plane_axis.value}"


@dataclass(frozen=True)
class TraceEntry:
    before: Pattern
    qubit: int
    choice: PushChoice
    after: Pattern


@dataclass(frozen=True)
class RewriteTrace:
    entries: tuple[TraceEntry, ...]

    def lines(self) -> list[str]:
        return [f"u={e.qubit} case={e.choice.case} choice={e.choice}" for e in self.entries]


def _anticommutes_with_axis(x: int, z: int, axis: Axis) -> bool:
    ax, az = _AXIS_XZ[axis]
    return bool((x & az) ^ (z & ax))


def _supports_commute(rx: int, rz: int, cx: int, cz: int) -> bool:
    return (parity(rx & cz) ^ parity(rz & cx)) == 0


def _merge_axis(x_corr: int, z_corr: int, v: int, axis: Axis) -> tuple[int, int]:
    ax, az = _AXIS_XZ[axis]
    return x_corr ^ (ax << v), z_corr ^ (az << v)


def _swap_steps(
    pat: Pattern, i: int, new_u: MeasurementStep, new_v: MeasurementStep
) -> Pattern:
    steps = list(pat.steps)
    steps[i - 1] = new_u
    steps[i] = new_v
    return Pattern(pat.graph, pat.inputs, tuple(steps))


def push_step_choices(
    pat: Pattern, u: int, plane_axes: Iterable[Axis] | None = None
) -> tuple[tuple[Pattern, PushChoice], ...]:
    """Successors of pushing ``u`` one step earlier, with their choices.

    ``plane_axes`` selects which axis of the plane may mark the plane qubit
    in the nondeterministic case; the default is the canonically first one.
    Returns () when the preceding step is not a plane measurement.
    """
    i = pat.step_index(u)
    step_u = pat.steps[i]
    if not step_u.label.is_pauli:
        raise DomainError(f"qubit {u} is not Pauli-measured")
    if i == 0 or not pat.steps[i - 1].label.is_plane:
        return ()
    step_v = pat.steps[i - 1]
    v = step_v.qubit
    bu = 1 << u
    x = int(bool(step_v.x_corr & bu))
    z = int(bool(step_v.z_corr & bu))
    rx, rz = step_v.x_corr & ~bu, step_v.z_corr & ~bu
    cx, cz = step_u.x_corr, step_u.z_corr
    lam = step_u.label.axes[0]

    if _anticommutes_with_axis(x, z, lam):
        new_v = MeasurementStep(v, step_v.label, step_v.angle, cx ^ rx, cz ^ rz)
        new_u = MeasurementStep(u, step_u.label, step_u.angle, cx, cz)
        return ((_swap_steps(pat, i, new_u, new_v), PushChoice("i")),)

    sigma_eq_lambda = (x, z) == _AXIS_XZ[lam]
    if _supports_commute(rx, rz, cx, cz) != sigma_eq_lambda:
        new_v = MeasurementStep(v, step_v.label, step_v.angle, rx, rz)
        new_u = MeasurementStep(u, step_u.label, step_u.angle, cx, cz)
        return ((_swap_steps(pat, i, new_u, new_v), PushChoice("ii")),)

    axes = tuple(plane_axes) if plane_axes is not None else (step_v.label.axes[0],)
    out: list[tuple[Pattern, PushChoice]] = []
    for axis in axes:
        if axis not in step_v.label:
            raise DomainError(f"axis {axis.value} is not in the plane of qubit {v}")
        ncx, ncz = _merge_axis(cx, cz, v, axis)
        new_u = MeasurementStep(u, step_u.label, step_u.angle, ncx, ncz)
        for keep_r in (False, True):
            new_v = MeasurementStep(
                v, step_v.label, step_v.angle, rx if keep_r else 0, rz if keep_r else 0
            )
            out.append(
                (_swap_steps(pat, i, new_u, new_v), PushChoice("iii", keep_r, axis))
            )
    # The two R choices coincide when R is trivial.
    seen: dict[Pattern, PushChoice] = {}
    for p, choice in out:
        seen.setdefault(p, choice)
    return tuple(seen.items())


def push_step(pat: Pattern, u: int, plane_axis: Axis | None = None) -> frozenset[Pattern]:
    """Set of patterns reachable by pushing ``u`` one step earlier.

    Empty when the step just before ``u`` is not a plane measurement (the
    move is inapplicable there; push the intervening Pauli steps first).
    """
    axes = None if plane_axis is None else (plane_axis,)
    return frozenset(p for p, _ in push_step_choices(pat, u, axes))


def push_step_robust(pat: Pattern, u: int, sigma_prime: Axis | None = None) -> Pattern:
    """Single-result push via the exponent formulas.

    With sigma = X^x Z^z the mark on ``u``, y the commutation defect of R
    and C, and P the measured axis, the exponent of the conditional plane
    mark is ``(y+z)(1+x)`` for P=Z, ``(y+x)(1+z)`` for P=X and
    ``(y+z)(1+x+z)`` for P=Y, all mod 2; the plane step keeps R exactly when
    that exponent vanishes and additionally receives C when sigma
    anticommutes with P.  Any axis of the plane may serve as the mark.
    """
    i = pat.step_index(u)
    step_u = pat.steps[i]
    if not step_u.label.is_pauli:
        raise DomainError(f"qubit {u} is not Pauli-measured")
    if i == 0 or not pat.steps[i - 1].label.is_plane:
        raise PushInapplicableError(f"no plane measurement directly before qubit {u}")
    step_v = pat.steps[i - 1]
    v = step_v.qubit
    bu = 1 << u
    x = int(bool(step_v.x_corr & bu))
    z = int(bool(step_v.z_corr & bu))
    rx, rz = step_v.x_corr & ~bu, step_v.z_corr & ~bu
    cx, cz = step_u.x_corr, step_u.z_corr
    p_axis = step_u.label.axes[0]
    y = 0 if _supports_commute(rx, rz, cx, cz) else 1
    r = 1 if _anticommutes_with_axis(x, z, p_axis) else 0
    if p_axis is Axis.Z:
        alpha = (y + z) * (1 + x)
    elif p_axis is Axis.X:
        alpha = (y + x) * (1 + z)
    else:
        alpha = (y + z) * (1 + x + z)
    alpha &= 1

    axis = sigma_prime if sigma_prime is not None else step_v.label.axes[0]
    if axis not in step_v.label:
        raise DomainError(f"axis {axis.value} is not in the plane of qubit {v}")
    ncx, ncz = (cx, cz) if alpha == 0 else _merge_axis(cx, cz, v, axis)
    keep_r = (alpha + 1) & 1
    vx = (cx if r else 0) ^ (rx if keep_r else 0)
    vz = (cz if r else 0) ^ (rz if keep_r else 0)
    new_u = MeasurementStep(u, step_u.label, step_u.angle, ncx, ncz)
    new_v = MeasurementStep(v, step_v.label, step_v.angle, vx, vz)
    return _swap_steps(pat, i, new_u, new_v)


def pauli_inversions(pat: Pattern) -> int:
    """Count of (plane step, later Pauli step) pairs; the rewrite measure."""
    planes = 0
    count = 0
    for s in pat.steps:
        if s.label.is_plane:
            planes += 1
        else:
            count += planes
    return count


def _leftmost_redex(pat: Pattern) -> int | None:
    for i in range(1, len(pat.steps)):
        if pat.steps[i - 1].label.is_plane and pat.steps[i].label.is_pauli:
            return pat.steps[i].qubit
    return None


def normalize_pauli_first(
    pat: Pattern, strategy: str = "first", max_steps: int | None = None
) -> Pattern | frozenset[Pattern]:
    """Push Pauli measurements until none can move earlier.

    ``first`` resolves every nondeterministic choice canonically (drop R,
    first plane axis) and returns a single pattern; ``all`` explores the
    whole choice tree, both R branches and both plane axes, and returns the
    deduplicated set of normal forms.  The step budget defaults to the exact
    decreasing measure, so exceeding it means a bug, not a big input.
    """
    if strategy == "first":
        out, _ = normalize_with_trace(pat, max_steps=max_steps)
        return out
    if strategy != "all":
        raise DomainError(f"unknown strategy {strategy!r}")
    budget = pauli_inversions(pat) if max_steps is None else max_steps
    normal: set[Pattern] = set()
    seen: set[Pattern] = set()
    frontier = [(pat, 0)]
    while frontier:
        cur, depth = frontier.pop()
        if cur in seen:
            continue
        seen.add(cur)
        u = _leftmost_redex(cur)
        if u is None:
            normal.add(cur)
            continue
        if depth >= budget:
            raise ResourceLimitError("rewrite step budget exceeded")
        v_label = cur.steps[cur.step_index(u) - 1].label
        for succ, _ in push_step_choices(cur, u, v_label.axes):
            frontier.append((succ, depth + 1))
    return frozenset(normal)


def normalize_with_trace(
    pat: Pattern, max_steps: int | None = None
) -> tuple[Pattern, RewriteTrace]:
    """Deterministic normalization recording every step taken."""
    budget = pauli_inversions(pat) if max_steps is None else max_steps
    entries: list[TraceEntry] = []
    cur = pat
    steps = 0
    while True:
        u = _leftmost_redex(cur)
        if u is None:
            return cur, RewriteTrace(tuple(entries))
        if steps >= budget:
            raise ResourceLimitError("rewrite step budget exceeded")
        succs = push_step_choices(cur, u)
        nxt, choice = succs[0]
        if pauli_inversions(nxt) >= pauli_inversions(cur):
            raise ResourceLimitError("rewrite measure failed to decrease")
        entries.append(TraceEntry(cur, u, choice, nxt))
        cur = nxt
        steps += 1
