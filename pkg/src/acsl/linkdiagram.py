"""Planar-diagram codes for oriented links and their linking matrices.

A crossing term ``X(a,b,c,d)`` lists the four edge labels met
counterclockwise around the crossing, starting from the edge on which
the under-strand enters; the under-strand exits at ``c``.  The crossing
sign is +1 exactly when the over-strand runs from ``d`` to ``b``::

         b                        b
         ^                        ^
         |                        |
    a -------> c      vs     a ---+---> c
         |                        |
         |                        |
         d                        d

    over d -> b : sign +1    over b -> d : sign -1

(under-strand drawn left to right; positions a,b,c,d counterclockwise).

The diagram text format is whitespace-separated ``X(a,b,c,d)`` terms
followed by a component block ``C: 1 2 3 4; 5 6`` listing each
component's edges in orientation order, components separated by ``;``.

The over-strand direction at each crossing is not stored explicitly; it
is recovered by matching crossings against the edge successions of the
component cycles.  Diagrams where that matching is not unique (a
two-edge component that is the over-strand at both of its crossings)
are rejected rather than guessed at.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

OBSERVED = "observed"
SURGERY = "surgery"

_ROLES = (OBSERVED, SURGERY)


class PDError(ValueError):
    """Malformed planar-diagram text."""


class DiagramError(ValueError):
    """Structurally invalid diagram data."""


class AmbiguousDiagram(DiagramError):
    """Over-strand orientation not determined by the diagram data."""


Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class Diagram:
    """Combinatorial oriented link diagram.

    crossings: X(a,b,c,d) tuples as described in the module docstring.
    component_edges: one cyclically ordered edge sequence per component,
    listed along the component's orientation.
    """

    crossings: tuple[Crossing, ...]
    component_edges: tuple[tuple[int, ...], ...]

    @property
    def n_components(self) -> int:
        return len(self.component_edges)


@dataclass(frozen=True)
class FramedLink:
    """Symmetric integer linking matrix with framings on the diagonal.

    Off-diagonal entries are pairwise linking numbers; the diagonal
    entry of a component is its self-linking (the linking number with
    its framing push-off).  Surgery components carry Dehn-surgery
    coefficients on the diagonal and their charges are ignored by all
    evaluators.
    """

    linking: tuple[tuple[int, ...], ...]
    charges: tuple[int, ...]
    roles: tuple[str, ...]
    names: tuple[str, ...]

    @classmethod
    def make(cls, linking, charges=None, roles=None, names=None) -> FramedLink:
        """Normalize sequences to tuples, fill defaults, and validate."""
        matrix = tuple(tuple(row) for row in linking)
        n = len(matrix)
        if charges is None:
            charges = [0] * n
        if roles is None:
            roles = [OBSERVED] * n
        if names is None:
            names = [f"C{i + 1}" for i in range(n)]
        fl = cls(matrix, tuple(charges), tuple(roles), tuple(names))
        return validate(fl)

    @property
    def n(self) -> int:
        return len(self.linking)

    def observed(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roles) if r == OBSERVED)

    def surgery(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roles) if r == SURGERY)

    def framing(self, j: int) -> int:
        return self.linking[j][j]


def validate(fl: FramedLink) -> FramedLink:
    """Check all FramedLink invariants; identity on success."""
    n = len(fl.linking)
    if not (len(fl.charges) == len(fl.roles) == len(fl.names) == n):
        raise DiagramError("charges, roles and names must match the matrix size")
    for i, row in enumerate(fl.linking):
        if len(row) != n:
            raise DiagramError(f"linking row {i} has length {len(row)}, expected {n}")
        for j, entry in enumerate(row):
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise DiagramError(f"linking[{i}][{j}] is not an integer: {entry!r}")
            if fl.linking[j][i] != entry:
                raise DiagramError(
                    f"linking matrix is not symmetric at ({i},{j}): "
                    f"{entry} vs {fl.linking[j][i]}"
                )
    for i, q in enumerate(fl.charges):
        if not isinstance(q, int) or isinstance(q, bool):
            raise DiagramError(f"charges[{i}] is not an integer: {q!r}")
    for i, role in enumerate(fl.roles):
        if role not in _ROLES:
            raise DiagramError(f"roles[{i}] must be one of {_ROLES}, got {role!r}")
        if role == SURGERY and fl.charges[i] != 0:
            warnings.warn(
                f"surgery component {fl.names[i]} carries charge {fl.charges[i]}; "
                "evaluators ignore it",
                stacklevel=2,
            )
    return fl


_CROSSING_RE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_TERM_RE = re.compile(r"X\([^)]*\)|\S+")


def parse_pd(text: str) -> Diagram:
    """Parse planar-diagram text into a validated Diagram."""
    if "C:" in text:
        crossing_part, component_part = text.split("C:", 1)
    else:
        crossing_part, component_part = text, ""
    crossings = []
    for term in _TERM_RE.findall(crossing_part):
        m = _CROSSING_RE.fullmatch(term)
        if m is None:
            raise PDError(f"bad crossing term {term!r}; expected X(a,b,c,d)")
        crossings.append(tuple(int(g) for g in m.groups()))
    components = []
    for chunk in component_part.split(";"):
        labels = chunk.split()
        if not labels:
            continue
        try:
            edges = tuple(int(tok) for tok in labels)
        except ValueError:
            raise PDError(f"bad edge label in component block: {chunk.strip()!r}") from None
        if any(e < 1 for e in edges):
            raise PDError(f"edge labels must be positive integers: {chunk.strip()!r}")
        components.append(edges)
    if not components:
        raise PDError("missing component block 'C: ...'")
    d = Diagram(tuple(crossings), tuple(components))
    _analyze(d)
    return d


@dataclass(frozen=True)
class _Analysis:
    """Resolved per-crossing data for a valid diagram."""

    component_of: dict = field(hash=False)
    signs: tuple[int, ...] = ()
    # per crossing: ((under_in, under_out), (over_in, over_out))
    strands: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = ()


@lru_cache(maxsize=None)
def _analyze(d: Diagram) -> _Analysis:
    component_of: dict[int, int] = {}
    for ci, comp in enumerate(d.component_edges):
        if not comp:
            raise DiagramError(f"component {ci} lists no edges")
        for e in comp:
            if e in component_of:
                raise DiagramError(f"edge {e} listed in more than one component")
            component_of[e] = ci

    appearances: dict[int, int] = {}
    for x in d.crossings:
        if len(x) != 4:
            raise DiagramError(f"crossing {x} does not have four edges")
        for e in x:
            if e not in component_of:
                raise DiagramError(f"edge {e} appears in a crossing but in no component")
            appearances[e] = appearances.get(e, 0) + 1

    for ci, comp in enumerate(d.component_edges):
        counts = {e: appearances.get(e, 0) for e in comp}
        if all(c == 0 for c in counts.values()):
            if len(comp) != 1:
                raise DiagramError(
                    f"component {ci} has {len(comp)} edges but meets no crossing"
                )
            continue
        bad = [e for e, c in counts.items() if c != 2]
        if bad:
            raise DiagramError(
                f"edges {bad} of component {ci} do not appear exactly twice"
            )

    # Edge successions along each component; every one is consumed by
    # exactly one strand passage through a crossing.
    transitions: set[tuple[int, int]] = set()
    for comp in d.component_edges:
        if appearances.get(comp[0], 0) == 0:
            continue
        for i, e in enumerate(comp):
            transitions.add((e, comp[(i + 1) % len(comp)]))

    for x in d.crossings:
        a, _, c, _ = x
        if (a, c) not in transitions:
            raise DiagramError(
                f"under-strand passage {a}->{c} of crossing {x} is not an "
                "edge succession of any component (or is used twice)"
            )
        transitions.remove((a, c))

    # Over-strand directions: fixpoint over the remaining successions.
    over: dict[int, tuple[int, int]] = {}
    pending = list(range(len(d.crossings)))
    while pending:
        progressed = False
        deferred = []
        for idx in pending:
            _, b, _, dd = d.crossings[idx]
            forward = (dd, b) in transitions  # over running d -> b
            backward = (b, dd) in transitions
            if forward and backward:
                deferred.append(idx)
                continue
            if not forward and not backward:
                raise DiagramError(
                    f"over-strand of crossing {d.crossings[idx]} matches no "
                    "remaining edge succession"
                )
            pick = (dd, b) if forward else (b, dd)
            transitions.remove(pick)
            over[idx] = pick
            progressed = True
        if deferred and not progressed:
            raise AmbiguousDiagram(
                "over-strand orientation is not determined for crossings "
                f"{[d.crossings[i] for i in deferred]}; two-edge components "
                "that never run under cannot be oriented from PD data"
            )
        pending = deferred
    if transitions:
        raise DiagramError(f"unmatched edge successions remain: {sorted(transitions)}")

    signs = []
    strands = []
    for idx, x in enumerate(d.crossings):
        a, b, c, dd = x
        over_in, over_out = over[idx]
        signs.append(1 if (over_in, over_out) == (dd, b) else -1)
        strands.append(((a, c), (over_in, over_out)))

    # Closed curves intersect an even number of times pairwise.
    pair_counts: dict[tuple[int, int], int] = {}
    for x in d.crossings:
        cu = component_of[x[0]]
        co = component_of[x[1]]
        if cu != co:
            key = (min(cu, co), max(cu, co))
            pair_counts[key] = pair_counts.get(key, 0) + 1
    for (i, j), count in pair_counts.items():
        if count % 2:
            raise DiagramError(
                f"components {i} and {j} cross an odd number of times ({count})"
            )

    return _Analysis(component_of, tuple(signs), tuple(strands))


def crossing_signs(d: Diagram) -> tuple[int, ...]:
    """Signs of all crossings, in crossing order."""
    return _analyze(d).signs


def crossing_sign(d: Diagram, crossing_index: int) -> int:
    """Sign of one crossing (+1 when the over-strand runs d -> b)."""
    signs = _analyze(d).signs
    if not 0 <= crossing_index < len(signs):
        raise IndexError(f"crossing index {crossing_index} out of range")
    return signs[crossing_index]


def strand_orientations(d: Diagram):
    """Per crossing: ((under_in, under_out), (over_in, over_out))."""
    return _analyze(d).strands


def linking_matrix(d: Diagram, framings) -> FramedLink:
    """Compile a diagram to a FramedLink.

    Off-diagonal entries are half the signed count of crossings between
    the two components; diagonal entries come from the explicit framing
    vector, or in ``"blackboard"`` mode from each component's writhe.
    """
    analysis = _analyze(d)
    n = d.n_components
    entries = [[0] * n for _ in range(n)]
    for x, sign in zip(d.crossings, analysis.signs):
        cu = analysis.component_of[x[0]]
        co = analysis.component_of[x[1]]
        entries[cu][co] += sign
        if cu != co:
            entries[co][cu] += sign
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if entries[i][j] % 2:
                raise DiagramError(
                    f"odd signed crossing sum between components {i} and {j}"
                )
            matrix[i][j] = entries[i][j] // 2
    if isinstance(framings, str):
        if framings != "blackboard":
            raise DiagramError(f"unknown framing mode {framings!r}")
        for j in range(n):
            matrix[j][j] = entries[j][j]  # writhe of component j
    else:
        framings = list(framings)
        if len(framings) != n:
            raise DiagramError(
                f"framing vector has length {len(framings)}, expected {n}"
            )
        for j, f in enumerate(framings):
            if not isinstance(f, int) or isinstance(f, bool):
                raise DiagramError(f"framings[{j}] is not an integer: {f!r}")
            matrix[j][j] = f
    return FramedLink.make(matrix)


def mirror_diagram(d: Diagram) -> Diagram:
    """Swap b and d in every crossing; every crossing sign negates."""
    return Diagram(
        tuple((a, dd, c, b) for a, b, c, dd in d.crossings),
        d.component_edges,
    )


def reverse_component_diagram(d: Diagram, j: int) -> Diagram:
    """Reverse the orientation of component j.

    Crossings where j runs under are rotated by two positions so the
    under-strand still enters at the first slot; the reversed edge
    sequence takes care of the over-strand direction.
    """
    if not 0 <= j < d.n_components:
        raise IndexError(f"component index {j} out of range")
    analysis = _analyze(d)
    crossings = []
    for x in d.crossings:
        a, b, c, dd = x
        if analysis.component_of[a] == j:
            crossings.append((c, dd, a, b))
        else:
            crossings.append(x)
    components = list(d.component_edges)
    components[j] = tuple(reversed(components[j]))
    out = Diagram(tuple(crossings), tuple(components))
    _analyze(out)
    return out
