"""Corrector predicate and the three graph-flow conditions.

The central object is the corrector predicate: vertex ``v`` can serve in
correcting the measurement of ``u`` via a candidate set ``d`` when at least
one axis of ``v``'s label is compatible with ``v``'s role in the stabilizer
generated by ``d``.  Plain flow, the plane-only specialization, and the
extended variant (which may compensate already-measured plane correctors)
are all expressed through it, together with exhaustive certificate searches
for small instances.

The whole-row form ``kappa_row`` evaluates the predicate against every
candidate ``v`` at once with a handful of integer operations; the searches
and the batch checkers lean on it heavily.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import permutations

from .angles import Angle
from .bits import iter_bits, mask_of, subsets
from .errors import (
    CertificateIncompleteError,
    DomainError,
    PreconditionError,
    ResourceLimitError,
)
from .graphs import OpenGraph, odd_neighborhood
from .patterns import MeasurementStep, Pattern, underlying_open_graph

#: Correction function: measured vertex -> bitmask subset of the non-inputs.
CorrectionFunction = Mapping[int, int]


@dataclass(frozen=True)
class StrictPartialOrder:
    """Strict partial order over the measured vertices, stored closed.

    ``after[u]`` is the bitmask of vertices strictly greater than ``u``.
    """

    domain: int
    pairs: tuple[tuple[int, int], ...]
    _after: Mapping[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        after = {v: 0 for v in iter_bits(self.domain)}
        for u, v in self.pairs:
            if u not in after or v not in after:
                raise DomainError(f"order pair ({u},{v}) outside the domain")
            after[u] |= 1 << v
        # Transitive closure; reject cycles (including reflexive pairs).
        changed = True
        while changed:
            changed = False
            for u in after:
                acc = after[u]
                for w in iter_bits(acc):
                    acc |= after[w]
                if acc != after[u]:
                    after[u] = acc
                    changed = True
        for u in after:
            if (after[u] >> u) & 1:
                raise DomainError(f"order has a cycle through {u}")
        closed = tuple(
            sorted((u, v) for u in after for v in iter_bits(after[u]))
        )
        object.__setattr__(self, "pairs", closed)
        object.__setattr__(self, "_after", after)

    @staticmethod
    def make(domain: Iterable[int] | int, pairs: Iterable[tuple[int, int]]) -> StrictPartialOrder:
        dmask = domain if isinstance(domain, int) else mask_of(domain)
        return StrictPartialOrder(dmask, tuple(pairs))

    @staticmethod
    def chain(sequence: Sequence[int]) -> StrictPartialOrder:
        """The total order given by the sequence."""
        pairs = [(u, v) for i, u in enumerate(sequence) for v in sequence[i + 1 :]]
        return StrictPartialOrder.make(sequence, pairs)

    def after(self, u: int) -> int:
        return self._after.get(u, 0)

    def less(self, u: int, v: int) -> bool:
        return bool((self._after.get(u, 0) >> v) & 1)

    def leq(self, u: int, v: int) -> bool:
        return u == v or self.less(u, v)

    def refines_to(self, total: Sequence[int]) -> bool:
        """True iff the total sequence is a linear extension."""
        pos = {v: i for i, v in enumerate(total)}
        return all(
            u in pos and v in pos and pos[u] < pos[v] for u, v in self.pairs
        )

    def canonical_extension(self) -> list[int]:
        """Deterministic linear extension: smallest available vertex first."""
        remaining = set(iter_bits(self.domain))
        out: list[int] = []
        while remaining:
            ready = sorted(
                v for v in remaining
                if all(not self.less(u, v) for u in remaining if u != v)
            )
            if not ready:  # unreachable: construction rejects cycles
                raise DomainError("order is cyclic")
            out.append(ready[0])
            remaining.remove(ready[0])
        return out


@dataclass(frozen=True)
class FlowCertificate:
    """A correction function with a compatible measurement order.

    ``compensations`` is only populated for the extended kind, and only for
    vertices whose correcting role reaches into their own past.
    """

    kind: str  # "gflow" | "pauli" | "extended"
    graph: OpenGraph
    p: tuple[tuple[int, int], ...]
    order: StrictPartialOrder
    compensations: tuple[tuple[int, int], ...] = ()
    _p: Mapping[int, int] = field(init=False, repr=False, compare=False)
    _comp: Mapping[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in ("gflow", "pauli", "extended"):
            raise DomainError(f"unknown flow kind {self.kind!r}")
        object.__setattr__(self, "p", tuple(sorted(self.p)))
        object.__setattr__(self, "compensations", tuple(sorted(self.compensations)))
        object.__setattr__(self, "_p", dict(self.p))
        object.__setattr__(self, "_comp", dict(self.compensations))

    @staticmethod
    def make(
        kind: str,
        graph: OpenGraph,
        p: Mapping[int, int],
        order: StrictPartialOrder,
        compensations: Mapping[int, int] | None = None,
    ) -> FlowCertificate:
        comp = tuple((compensations or {}).items())
        return FlowCertificate(kind, graph, tuple(p.items()), order, comp)

    def correction(self, u: int) -> int:
        try:
            return self._p[u]
        except KeyError:
            raise DomainError(f"correction function undefined at {u}") from None

    def compensation(self, v: int) -> int | None:
        return self._comp.get(v)

    def p_map(self) -> dict[int, int]:
        return dict(self._p)


@dataclass(frozen=True)
class Digraph:
    """Small directed graph; ``succ[u]`` is the successor bitmask."""

    vertices: tuple[int, ...]
    succ: tuple[tuple[int, int], ...]
    _succ: Mapping[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_succ", dict(self.succ))

    def successors(self, u: int) -> int:
        return self._succ.get(u, 0)

    def is_dag(self) -> bool:
        return self.reachability() is not None

    def reachability(self) -> dict[int, int] | None:
        """Strict reachability masks, or None if the graph has a cycle."""
        reach = {v: self._succ.get(v, 0) for v in self.vertices}
        changed = True
        while changed:
            changed = False
            for u in reach:
                acc = reach[u]
                for w in iter_bits(acc):
                    acc |= reach.get(w, 0)
                if acc != reach[u]:
                    reach[u] = acc
                    changed = True
        for u, r in reach.items():
            if (r >> u) & 1:
                return None
        return reach


def _check_measured(g: OpenGraph, v: int, name: str) -> None:
    if not (g.measured >> v) & 1:
        raise DomainError(f"{name}={v} is not a measured vertex")


def _check_correction_set(g: OpenGraph, d: int) -> None:
    if d & ~g.vmask:
        raise DomainError("correction set contains vertices outside the graph")
    if d & ~g.non_inputs:
        raise DomainError("correction set touches input vertices")


def kappa_row(g: OpenGraph, d: int, u: int, odd_d: int | None = None) -> int:
    """Mask of all measured ``v`` that are ``d``-correctors of ``u``.

    Equals ``{v : kappa(u, v, d)}``.  A set bit at ``u`` itself means the
    vertex would have to correct its own measurement.
    """
    if odd_d is None:
        odd_d = odd_neighborhood(g, d)
    bu = 1 << u
    row = (
        (g.x_labelled & (odd_d ^ bu))
        | (g.y_labelled & (d ^ odd_d ^ bu))
        | (g.z_labelled & (d ^ bu))
    )
    return row & g.measured


def is_corrector(g: OpenGraph, d: int, u: int, v: int) -> bool:
    """Whether ``v`` can serve in correcting ``u`` via the set ``d``.

    True iff some axis of ``v``'s label matches ``v``'s membership pattern:
    X against the odd neighborhood of ``d``, Y against ``d`` xor its odd
    neighborhood, Z against ``d`` itself -- each XORed with ``u == v``.
    """
    _check_measured(g, u, "u")
    _check_measured(g, v, "v")
    _check_correction_set(g, d)
    return bool((kappa_row(g, d, u) >> v) & 1)


def _check_correction_function(g: OpenGraph, p: CorrectionFunction) -> None:
    if mask_of(p) != g.measured:
        raise DomainError("correction function domain must be the measured vertices")
    for u, d in p.items():
        if d & ~g.non_inputs or d & ~g.vmask:
            raise DomainError(f"p({u}) is not within the non-input vertices")


def corrector_graph(g: OpenGraph, p: CorrectionFunction) -> Digraph:
    """Directed graph with an edge (u, v) whenever v corrects u via p(u)."""
    _check_correction_function(g, p)
    succ = tuple((u, kappa_row(g, p[u], u)) for u in sorted(p))
    return Digraph(tuple(g.graph.vertices), succ)


def check_pauli_flow(g: OpenGraph, p: CorrectionFunction, order: StrictPartialOrder) -> bool:
    """Flow condition: every corrector of ``u`` is measured strictly after it."""
    return pauli_flow_violation(g, p, order) is None


def pauli_flow_violation(
    g: OpenGraph, p: CorrectionFunction, order: StrictPartialOrder
) -> str | None:
    """First violated clause, or None."""
    _check_correction_function(g, p)
    for u in sorted(p):
        row = kappa_row(g, p[u], u)
        bad = row & ~order.after(u)
        if bad:
            v = bad & -bad
            v = v.bit_length() - 1
            if v == u:
                return f"kappa_{{{u},{u}}} holds: {u} would correct itself"
            return f"kappa_{{{u},{v}}} holds but {u} is not before {v}"
    return None


def check_pauli_flow_many(
    g: OpenGraph, p: CorrectionFunction, orders: Sequence[StrictPartialOrder]
) -> list[bool]:
    """Batch variant of :func:`check_pauli_flow` sharing the kappa rows."""
    _check_correction_function(g, p)
    rows = [(u, kappa_row(g, p[u], u)) for u in sorted(p)]
    return [all(row & ~order.after(u) == 0 for u, row in rows) for order in orders]


def check_pauli_flow_original(
    g: OpenGraph, p: CorrectionFunction, order: StrictPartialOrder
) -> bool:
    """The three per-axis membership conditions, stated the historical way.

    For every measured v: if X is in v's label, v lies in the odd
    neighborhood of p(v) and in no odd neighborhood of p(u) for u not
    already before v; likewise for Y with the self-difference sets and for
    Z with the sets themselves.  Equivalent to :func:`check_pauli_flow`.
    """
    return check_pauli_flow_original_many(g, p, [order])[0]


def check_pauli_flow_original_many(
    g: OpenGraph, p: CorrectionFunction, orders: Sequence[StrictPartialOrder]
) -> list[bool]:
    """Batch variant of :func:`check_pauli_flow_original`."""
    _check_correction_function(g, p)
    measured = sorted(p)
    odd_p = {u: odd_neighborhood(g, p[u]) for u in measured}
    codd_p = {u: p[u] ^ odd_p[u] for u in measured}
    verdicts = []
    for order in orders:
        ok = True
        for v in measured:
            bv = 1 << v
            others = [u for u in measured if u != v and not order.less(u, v)]
            if g.x_labelled & bv:
                union = 0
                for u in others:
                    union |= odd_p[u]
                if not (odd_p[v] & bv) or (union & bv):
                    ok = False
                    break
            if g.y_labelled & bv:
                union = 0
                for u in others:
                    union |= codd_p[u]
                if not (codd_p[v] & bv) or (union & bv):
                    ok = False
                    break
            if g.z_labelled & bv:
                union = 0
                for u in others:
                    union |= p[u]
                if not (p[v] & bv) or (union & bv):
                    ok = False
                    break
        verdicts.append(ok)
    return verdicts


_PLANE_CLAUSES = {
    # label -> (u in p(u)?, u in Odd(p(u))?)
    "XY": (False, True),
    "YZ": (True, False),
    "XZ": (True, True),
}


def check_gflow(g: OpenGraph, p: CorrectionFunction, order: StrictPartialOrder) -> bool:
    """Plane-only flow: the flow condition plus per-plane membership clauses."""
    return gflow_violation(g, p, order) is None


def gflow_violation(g: OpenGraph, p: CorrectionFunction, order: StrictPartialOrder) -> str | None:
    for v in g.measured_vertices():
        if g.label(v).is_pauli:
            raise PreconditionError(f"vertex {v} carries a Pauli label; gflow needs planes")
    err = pauli_flow_violation(g, p, order)
    if err is not None:
        return err
    for u in sorted(p):
        want_in_p, want_in_odd = _PLANE_CLAUSES[g.label(u).value]
        in_p = bool((p[u] >> u) & 1)
        in_odd = bool((odd_neighborhood(g, p[u]) >> u) & 1)
        if in_p != want_in_p or in_odd != want_in_odd:
            return f"plane clause for {g.label(u).value} fails at vertex {u}"
    return None


def check_extended_pauli_flow(g: OpenGraph, cert: FlowCertificate) -> bool:
    """Extended flow condition for a certificate of kind "extended".

    For every measured v, collect U_v: the vertices u measured at-or-after v
    whose correction set makes v a corrector of u.  When U_v is nonempty, v
    must be plane-measured, must not correct itself, and must come with a
    compensation set D_v of non-inputs such that v lies in D_v or its odd
    neighborhood, no member of that union is a D_v-corrector of v, and every
    member is measured at-or-before every element of U_v.
    """
    return extended_pauli_flow_violation(g, cert) is None


def extended_pauli_flow_violation(g: OpenGraph, cert: FlowCertificate) -> str | None:
    if cert.kind != "extended":
        raise PreconditionError("certificate kind must be 'extended'")
    p = cert.p_map()
    _check_correction_function(g, p)
    measured = sorted(p)
    rows = {u: kappa_row(g, p[u], u) for u in measured}
    order = cert.order
    for v in measured:
        bv = 1 << v
        u_set = [u for u in measured if (rows[u] & bv) and order.leq(v, u)]
        if not u_set:
            continue
        if not g.label(v).is_plane:
            return f"U_{v} nonempty but vertex {v} is not plane-measured"
        if v in u_set:
            return f"vertex {v} lies in U_{v} (it corrects itself)"
        d = cert.compensation(v)
        if d is None:
            raise CertificateIncompleteError(f"compensation missing for vertex {v}")
        if d & ~g.non_inputs or d & ~g.vmask:
            return f"D_{v} is not within the non-input vertices"
        union = d | odd_neighborhood(g, d)
        if not (union >> v) & 1:
            return f"vertex {v} is not covered by D_{v} or its odd neighborhood"
        if union & ~g.measured:
            return f"D_{v} union its odd neighborhood reaches output vertices"
        if kappa_row(g, d, v) & union:
            w = kappa_row(g, d, v) & union
            w = (w & -w).bit_length() - 1
            return f"kappa_{{{v},{w}}} holds for D_{v}"
        for u in u_set:
            for w in iter_bits(union):
                if not order.leq(w, u):
                    return f"D_{v} member {w} is not measured at-or-before {u}"
    return None


def check_certificate(g: OpenGraph, cert: FlowCertificate) -> bool:
    """Dispatch to the checker matching the certificate kind."""
    if cert.kind == "pauli":
        return check_pauli_flow(g, cert.p_map(), cert.order)
    if cert.kind == "gflow":
        return check_gflow(g, cert.p_map(), cert.order)
    return check_extended_pauli_flow(g, cert)


def certificate_violation(g: OpenGraph, cert: FlowCertificate) -> str | None:
    if cert.kind == "pauli":
        return pauli_flow_violation(g, cert.p_map(), cert.order)
    if cert.kind == "gflow":
        return gflow_violation(g, cert.p_map(), cert.order)
    return extended_pauli_flow_violation(g, cert)


# ---------------------------------------------------------------------------
# Certificate search (exhaustive; instance sizes are capped).


def find_pauli_flow(g: OpenGraph, max_vertices: int = 8) -> FlowCertificate | None:
    """First correction function (canonical order) whose corrector graph is
    acyclic, with the reachability order; None when no choice works.
    """
    if len(g.graph.vertices) > max_vertices:
        raise ResourceLimitError(
            f"graph has {len(g.graph.vertices)} vertices; bound is {max_vertices}"
        )
    measured = g.measured_vertices()
    candidates: list[list[tuple[int, int]]] = []
    for u in measured:
        bu = 1 << u
        opts = []
        for d in subsets(g.non_inputs):
            row = kappa_row(g, d, u)
            if not row & bu:
                opts.append((d, row))
        if not opts:
            return None
        candidates.append(opts)

    chosen_d: dict[int, int] = {}
    chosen_row: dict[int, int] = {}

    def acyclic_with(u: int, row: int) -> bool:
        # Cycle through u using only already-decided rows?
        seen = 0
        frontier = row
        while frontier:
            if (frontier >> u) & 1:
                return False
            seen |= frontier
            nxt = 0
            for w in iter_bits(frontier):
                if w in chosen_row:
                    nxt |= chosen_row[w]
            frontier = nxt & ~seen
        return True

    def walk(i: int) -> bool:
        if i == len(measured):
            return True
        u = measured[i]
        for d, row in candidates[i]:
            if not acyclic_with(u, row):
                continue
            chosen_d[u] = d
            chosen_row[u] = row
            if walk(i + 1):
                return True
            del chosen_d[u], chosen_row[u]
        return False

    if not walk(0):
        return None
    kp = Digraph(tuple(g.graph.vertices), tuple(sorted(chosen_row.items())))
    reach = kp.reachability()
    assert reach is not None
    pairs = [(u, v) for u in measured for v in iter_bits(reach[u] & g.measured)]
    order = StrictPartialOrder.make(g.measured, pairs)
    return FlowCertificate.make("pauli", g, chosen_d, order)


def find_extended_pauli_flow(g: OpenGraph, max_vertices: int = 6) -> FlowCertificate | None:
    """Exhaustive extended-flow search over total measurement orders.

    Orders are enumerated lexicographically; corrections are assigned from
    the last measured vertex backwards so each vertex's constraint can be
    checked (and its compensation found) as soon as its correction set is
    chosen.  No polynomial algorithm is known, hence the small bound.
    """
    if len(g.graph.vertices) > max_vertices:
        raise ResourceLimitError(
            f"graph has {len(g.graph.vertices)} vertices; bound is {max_vertices}"
        )
    measured = g.measured_vertices()
    if not measured:
        return FlowCertificate.make("extended", g, {}, StrictPartialOrder.make(0, ()))

    odd = {d: odd_neighborhood(g, d) for d in subsets(g.non_inputs)}
    all_d = list(odd)
    # The compensation search depends only on the vertex and the mask of
    # vertices measured early enough; memoized across orders.
    comp_cache: dict[tuple[int, int], int | None] = {}

    def compensation(v: int, allowed: int) -> int | None:
        key = (v, allowed)
        if key not in comp_cache:
            comp_cache[key] = _find_compensation_rel(g, odd, v, allowed)
        return comp_cache[key]

    for perm in permutations(measured):
        pos = {v: i for i, v in enumerate(perm)}
        prefix_masks = []
        acc = 0
        for v in perm:
            acc |= 1 << v
            prefix_masks.append(acc)
        chosen: dict[int, int] = {}
        rows: dict[int, int] = {}
        comps: dict[int, int] = {}

        def assign(j: int) -> bool:
            if j < 0:
                return True
            v = perm[j]
            bv = 1 << v
            for d in all_d:
                row_v = kappa_row(g, d, v, odd[d])
                u_set = [u for u in perm[j + 1 :] if (rows[u] >> v) & 1]
                if (row_v >> v) & 1:
                    u_set.append(v)
                if u_set:
                    if not g.label(v).is_plane or v in u_set:
                        continue
                    comp = compensation(v, prefix_masks[min(pos[u] for u in u_set)])
                    if comp is None:
                        continue
                    comps[v] = comp
                elif v in comps:
                    del comps[v]
                chosen[v] = d
                rows[v] = row_v
                if assign(j - 1):
                    return True
                del chosen[v], rows[v]
                comps.pop(v, None)
            return False

        if assign(len(perm) - 1):
            order = StrictPartialOrder.chain(perm)
            cert = FlowCertificate.make("extended", g, chosen, order, comps)
            return cert
    return None


# ---------------------------------------------------------------------------
# Induced patterns.


def _totals_future(g: OpenGraph, total: Sequence[int], u: int) -> int:
    # Vertices measured after u in the total order plus the outputs, which
    # are never measured and so count as after everything.
    fut = g.outputs
    seen = False
    for v in total:
        if seen:
            fut |= 1 << v
        elif v == u:
            seen = True
    return fut


def induced_pattern(
    g: OpenGraph,
    p: CorrectionFunction,
    order: StrictPartialOrder,
    total: Sequence[int],
    angles: Mapping[int, Angle],
) -> Pattern:
    """Pattern whose corrections are generated from (p, order).

    The X targets of u are the members of p(u) still unmeasured after u
    (later in the total order or outputs), the Z targets those of the odd
    neighborhood of p(u); the total order must refine the partial one.

    Filtering by the refined total rather than by the partial order itself
    matters only for pairs the partial order leaves unordered: dropping
    those corrections would silently lose determinism (a correction on an
    unordered-but-later vertex is still required), so the filter follows the
    order the measurements actually run in.
    """
    _check_correction_function(g, p)
    if sorted(total) != g.measured_vertices():
        raise DomainError("total order must enumerate the measured vertices")
    if not order.refines_to(total):
        raise DomainError("total order is incompatible with the partial order")
    steps = []
    for u in total:
        label = g.label(u)
        if u not in angles:
            raise DomainError(f"missing angle for vertex {u}")
        angle = angles[u]
        if label.is_pauli and not (angle.is_symbolic or angle.is_pauli_angle()):
            raise PreconditionError(f"Pauli-measured vertex {u} needs angle 0 or pi")
        fut = _totals_future(g, total, u)
        steps.append(
            MeasurementStep(
                u,
                label,
                angle,
                x_corr=p[u] & fut,
                z_corr=odd_neighborhood(g, p[u]) & fut,
            )
        )
    return Pattern(g.graph, g.inputs, tuple(steps))


def is_induced_by(pat: Pattern, cert: FlowCertificate) -> bool:
    """Whether the pattern's corrections equal the certificate's induced ones
    and its measurement order refines the certificate's order.
    """
    g = underlying_open_graph(pat)
    if g != cert.graph:
        raise DomainError("pattern and certificate have different open graphs")
    total = pat.measurement_order()
    if not cert.order.refines_to(total):
        return False
    p = cert.p_map()
    for s in pat.steps:
        fut = _totals_future(g, total, s.qubit)
        if s.x_corr != p[s.qubit] & fut:
            return False
        if s.z_corr != odd_neighborhood(g, p[s.qubit]) & fut:
            return False
    return True


@dataclass(frozen=True)
class CorrectionPartition:
    """Partition of p(u) and its odd neighborhood relative to a total order.

    ``a``: correctors already measured in a plane; ``b``: already
    Pauli-measured; ``c``: not yet measured (outputs included); ``f``: u
    itself when it participates.  Each set splits into its intersection with
    p(u) (X side) and with the odd neighborhood (Z side).
    """

    u: int
    p_set: int
    odd_set: int
    a: int
    b: int
    c: int
    f: int

    def x_part(self, s: int) -> int:
        return s & self.p_set

    def z_part(self, s: int) -> int:
        return s & self.odd_set

    @property
    def all_correctors(self) -> int:
        return self.p_set | self.odd_set


def correction_partition(
    g: OpenGraph, p: CorrectionFunction, total: Sequence[int], u: int
) -> CorrectionPartition:
    _check_measured(g, u, "u")
    _check_correction_function(g, p)
    pu = p[u]
    opu = odd_neighborhood(g, pu)
    corr = pu | opu
    pos = {v: i for i, v in enumerate(total)}
    before = 0
    for v, i in pos.items():
        if i < pos[u]:
            before |= 1 << v
    planes = 0
    for v in g.measured_vertices():
        if g.label(v).is_plane:
            planes |= 1 << v
    a = corr & before & planes
    b = corr & before & ~planes
    after_total = 0
    for v, i in pos.items():
        if i > pos[u]:
            after_total |= 1 << v
    c = corr & (after_total | g.outputs)
    f = corr & (1 << u)
    assert (a | b | c | f) == corr and not (a & b) and not ((a | b) & (c | f))
    return CorrectionPartition(u, pu, opu, a, b, c, f)


# ---------------------------------------------------------------------------
# Searching for a certificate that induces a *given* pattern.


def find_inducing_certificate(pat: Pattern, kind: str = "extended") -> FlowCertificate | None:
    """Exhaustive search for a flow certificate that induces ``pat``.

    The certificate order searched is the pattern's own measurement chain:
    among orders compatible with the pattern, the chain has the fewest
    vertices that might correct from the past and the largest at-or-before
    sets for compensations, so a certificate over any compatible partial
    order implies one over the chain.  Correction sets are enumerated over
    every choice consistent with the pattern's X/Z targets, then
    compensations are searched where the extended kind needs them.  Returns
    the first hit; None if the pattern is not induced by any certificate of
    the kind.
    """
    if kind not in ("gflow", "pauli", "extended"):
        raise DomainError(f"unknown flow kind {kind!r}")
    g = underlying_open_graph(pat)
    seq = pat.measurement_order()
    if kind == "gflow" and any(g.label(v).is_pauli for v in seq):
        return None

    # Corrections on input vertices can never come from a flow.
    for s in pat.steps:
        if (s.x_corr | s.z_corr) & ~g.non_inputs:
            return None

    order = StrictPartialOrder.chain(seq)
    odd = {d: odd_neighborhood(g, d) for d in subsets(g.non_inputs)}

    cands: dict[int, list[tuple[int, int]]] = {}
    for s in pat.steps:
        u = s.qubit
        fut = _totals_future(g, seq, u)
        if s.x_corr & ~fut or s.z_corr & ~fut:
            return None
        free = g.non_inputs & g.measured & ~fut
        opts = []
        for extra in subsets(free):
            d = s.x_corr | extra
            od = odd[d]
            if od & fut != s.z_corr:
                continue
            row = kappa_row(g, d, u, od)
            if kind in ("pauli", "gflow"):
                if row & ~order.after(u):
                    continue
                if kind == "gflow":
                    want_in_p, want_in_odd = _PLANE_CLAUSES[g.label(u).value]
                    if bool((d >> u) & 1) != want_in_p or bool((od >> u) & 1) != want_in_odd:
                        continue
            opts.append((d, row))
        if not opts:
            return None
        cands[u] = opts

    if kind in ("pauli", "gflow"):
        p = {u: cands[u][0][0] for u in seq}
        return FlowCertificate.make(kind, g, p, order)

    pos = {v: i for i, v in enumerate(seq)}
    chosen: dict[int, int] = {}
    rows: dict[int, int] = {}
    comps: dict[int, int] = {}

    def assign(j: int) -> bool:
        if j < 0:
            return True
        v = seq[j]
        bv = 1 << v
        for d, row_v in cands[v]:
            u_set = [u for u in seq[j + 1 :] if (rows[u] >> v) & 1]
            if (row_v >> v) & 1:
                u_set.append(v)
            if u_set:
                if not g.label(v).is_plane or v in u_set:
                    continue
                allowed = mask_of(w for w in seq if pos[w] <= min(pos[u] for u in u_set))
                comp = _find_compensation_rel(g, odd, v, allowed)
                if comp is None:
                    continue
                comps[v] = comp
            chosen[v] = d
            rows[v] = row_v
            if assign(j - 1):
                return True
            del chosen[v], rows[v]
            comps.pop(v, None)
        return False

    if assign(len(seq) - 1):
        return FlowCertificate.make("extended", g, chosen, order, comps)
    return None


def _find_compensation_rel(
    g: OpenGraph, odd: Mapping[int, int], v: int, allowed: int
) -> int | None:
    bv = 1 << v
    for d, od in odd.items():
        union = d | od
        if not union & bv:
            continue
        if union & ~g.measured or union & ~allowed:
            continue
        if kappa_row(g, d, v, od) & union:
            continue
        return d
    return None
