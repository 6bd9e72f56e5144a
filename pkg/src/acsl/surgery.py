"""Surgery presentations, exact Gauss sums and Kirby moves.

The expectation value in the 3-manifold presented by an integer-framed
surgery link is the exact ratio of two cyclotomic Gauss sums: the
numerator sums the S^3 phase over all colour assignments of the surgery
components (each surgery component carries the uniform colour state,
i.e. every residue mod 2|k| once), with the observed charges in place;
the denominator is the same sum with the observed charges removed.

A Gauss sum is evaluated by walking the colour lattice in reflected
mixed-radix Gray-code order, updating the quadratic form incrementally
as one coordinate changes, and tallying integer counts per phase
residue mod 4|k|; a single cyclotomic reduction of the count histogram
then yields the exact value.  Surgery components that never interact
(no linking between them) factor into independent sub-lattices, which
keeps blow-ups cheap.
"""

from __future__ import annotations

import cmath
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cyclotomic import CycNum, root_power
from .invariants import CouplingLevel, Invariant
from .linkdiagram import OBSERVED, SURGERY, FramedLink, validate

_PARALLEL_THRESHOLD = 4096


class DenominatorZero(ArithmeticError):
    """The normalizing Gauss sum vanishes; the ratio is undefined."""


class TermLimit(ValueError):
    """The float oracle was asked for more terms than its cap allows."""


class NotSurgery(ValueError):
    """Kirby-move target is not a surgery component."""


class NotUnitFramed(ValueError):
    """Blow-down target does not have framing +1 or -1."""


class NotIsolated(ValueError):
    """Blow-down target still links other components."""


@dataclass(frozen=True)
class SurgeryPresentation:
    """A framed link with surgery and observed components, plus the coupling."""

    link: FramedLink
    level: CouplingLevel

    @classmethod
    def make(cls, link: FramedLink, k) -> SurgeryPresentation:
        return cls(validate(link), CouplingLevel.of(k))

    @property
    def k(self) -> int:
        return self.level.k


@dataclass(frozen=True)
class GaussSum:
    """Exact value of a colour-lattice sum and the number of terms."""

    value: CycNum
    terms: int


def _groups(indices: list[int], linking) -> list[list[int]]:
    """Partition surgery components into linking-connected groups."""
    remaining = set(indices)
    groups = []
    while remaining:
        seed = remaining.pop()
        group = [seed]
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            linked = [j for j in remaining if linking[i][j] != 0]
            for j in linked:
                remaining.remove(j)
                group.append(j)
                frontier.append(j)
        groups.append(sorted(group))
    return groups


def _histogram(block, linear, m: int, n_mod: int, offset: int) -> list[int]:
    """Counts per residue of q(c) = c.Bc + 2 lin.c + offset over Z_m^s.

    Enumerates colour vectors in reflected mixed-radix Gray-code order
    (Knuth's loopless algorithm); each step changes one coordinate by
    one, so the form updates in O(s) integer operations.
    """
    s = len(linear)
    hist = [0] * n_mod
    if s == 0:
        hist[offset % n_mod] += 1
        return hist
    c = [0] * s
    value = offset
    hist[value % n_mod] += 1
    focus = list(range(s + 1))
    direction = [1] * s
    while True:
        j = focus[0]
        focus[0] = 0
        if j == s:
            break
        old = c[j]
        new = old + direction[j]
        cross = linear[j]
        row = block[j]
        for i in range(s):
            if i != j:
                cross += row[i] * c[i]
        value += row[j] * (new * new - old * old) + 2 * (new - old) * cross
        c[j] = new
        if new == 0 or new == m - 1:
            direction[j] = -direction[j]
            focus[j] = focus[j + 1]
            focus[j + 1] = j + 1
        hist[value % n_mod] += 1
    return hist


def _group_histogram(block, linear, m, n_mod, workers: int) -> list[int]:
    """Histogram for one group, partitioned by the first coordinate when
    a worker pool is requested; partial histograms merge by addition."""
    s = len(linear)
    if workers <= 1 or s < 2 or m**s < _PARALLEL_THRESHOLD:
        return _histogram(block, linear, m, n_mod, 0)

    def chunk(v: int) -> list[int]:
        sub_block = [row[1:] for row in block[1:]]
        sub_linear = [linear[i] + block[i][0] * v for i in range(1, s)]
        offset = block[0][0] * v * v + 2 * linear[0] * v
        return _histogram(sub_block, sub_linear, m, n_mod, offset)

    hist = [0] * n_mod
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for partial in pool.map(chunk, range(m)):
            for e, count in enumerate(partial):
                hist[e] += count
    return hist


def _phase_combination(hist: list[int], level: CouplingLevel) -> CycNum:
    """Sum of hist[e] * zeta**(-sign(k) e) as one cyclotomic reduction."""
    n = level.root_order
    raw = [0] * n
    for e, count in enumerate(hist):
        if count:
            raw[(-level.sign * e) % n] += count
    return CycNum.from_coeffs(n, raw)


def gauss_sum(
    p: SurgeryPresentation, include_observed: bool, workers: int = 1
) -> GaussSum:
    """Sum of S^3 phases over all colourings of the surgery components.

    Each surgery component ranges over the residues 0..2|k|-1; observed
    components keep their charges, or are set to 0 when
    include_observed is false.  An empty surgery link gives the single
    phase of the observed charges.
    """
    fl = p.link
    level = p.level
    m = level.colour_modulus
    n = level.root_order
    surgery = list(fl.surgery())
    charges = [
        q if include_observed and r == OBSERVED else 0
        for q, r in zip(fl.charges, fl.roles)
    ]

    constant = 0
    for i, qi in enumerate(charges):
        if qi:
            constant += qi * sum(
                fl.linking[i][j] * qj for j, qj in enumerate(charges)
            )
    value = root_power(n, (-level.sign * constant) % n)

    for group in _groups(surgery, fl.linking):
        block = [[fl.linking[i][j] for j in group] for i in group]
        linear = [
            sum(fl.linking[i][j] * qj for j, qj in enumerate(charges))
            for i in group
        ]
        hist = _group_histogram(block, linear, m, n, workers)
        value = value * _phase_combination(hist, level)
    return GaussSum(value, m ** len(surgery))


def surgery_expectation(p: SurgeryPresentation, workers: int = 1) -> Invariant:
    """Exact expectation value in the presented 3-manifold.

    The ratio of the charged Gauss sum to the empty one; exactly zero
    iff the numerator vanishes, and undefined (DenominatorZero) when the
    normalizing sum itself vanishes at this coupling.
    """
    denominator = gauss_sum(p, include_observed=False, workers=workers).value
    if denominator.is_zero:
        raise DenominatorZero(
            f"normalizing Gauss sum vanishes at k={p.level.k} for this presentation"
        )
    numerator = gauss_sum(p, include_observed=True, workers=workers).value
    return Invariant.of(numerator / denominator)


def _with_link(p: SurgeryPresentation, link: FramedLink) -> SurgeryPresentation:
    return SurgeryPresentation(link, p.level)


def blow_up(p: SurgeryPresentation, sign: int) -> SurgeryPresentation:
    """Append an unlinked surgery unknot with framing +1 or -1."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    fl = p.link
    n = fl.n
    matrix = [list(row) + [0] for row in fl.linking]
    matrix.append([0] * n + [sign])
    names = set(fl.names)
    serial = n + 1
    while f"E{serial}" in names:
        serial += 1
    return _with_link(
        p,
        FramedLink(
            tuple(tuple(row) for row in matrix),
            fl.charges + (0,),
            fl.roles + (SURGERY,),
            fl.names + (f"E{serial}",),
        ),
    )


def blow_down(p: SurgeryPresentation, j: int) -> SurgeryPresentation:
    """Remove an isolated +1- or -1-framed surgery component."""
    fl = p.link
    if not 0 <= j < fl.n:
        raise IndexError(f"component index {j} out of range")
    if fl.roles[j] != SURGERY:
        raise NotSurgery(f"component {fl.names[j]} is not a surgery component")
    if fl.linking[j][j] not in (1, -1):
        raise NotUnitFramed(
            f"component {fl.names[j]} has framing {fl.linking[j][j]}, need +1 or -1"
        )
    if any(fl.linking[j][i] != 0 for i in range(fl.n) if i != j):
        raise NotIsolated(f"component {fl.names[j]} links other components")
    keep = [i for i in range(fl.n) if i != j]
    return _with_link(
        p,
        FramedLink(
            tuple(tuple(fl.linking[r][c] for c in keep) for r in keep),
            tuple(fl.charges[i] for i in keep),
            tuple(fl.roles[i] for i in keep),
            tuple(fl.names[i] for i in keep),
        ),
    )


def handle_slide(p: SurgeryPresentation, i: int, j: int, sign: int) -> SurgeryPresentation:
    """Slide component i over the surgery component j.

    Row and column i gain sign times row and column j; the new
    self-entry is L_ii + 2*sign*L_ij + L_jj.  Charges are untouched.
    """
    fl = p.link
    if not 0 <= i < fl.n or not 0 <= j < fl.n:
        raise IndexError("component index out of range")
    if i == j:
        raise ValueError("cannot slide a component over itself")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if fl.roles[j] != SURGERY:
        raise NotSurgery(f"component {fl.names[j]} is not a surgery component")
    matrix = [list(row) for row in fl.linking]
    new_ii = fl.linking[i][i] + 2 * sign * fl.linking[i][j] + fl.linking[j][j]
    for mcol in range(fl.n):
        if mcol != i:
            matrix[i][mcol] += sign * fl.linking[j][mcol]
            matrix[mcol][i] = matrix[i][mcol]
    matrix[i][i] = new_ii
    return _with_link(
        p,
        FramedLink(
            tuple(tuple(row) for row in matrix), fl.charges, fl.roles, fl.names
        ),
    )


def oracle_sums(p: SurgeryPresentation, max_terms: int = 10**6) -> tuple[complex, complex]:
    """Independent float evaluation of the numerator and denominator.

    Walks every colour vector directly and sums double-precision
    phases exp(-2*pi*i*Q/(4k)); shares no code with the exact engine.
    """
    fl = p.link
    k = p.level.k
    m = 2 * abs(k)
    surgery = [i for i, r in enumerate(fl.roles) if r == SURGERY]
    if m ** len(surgery) > max_terms:
        raise TermLimit(
            f"{m ** len(surgery)} colour vectors exceed the cap of {max_terms}"
        )
    observed_charges = [
        q if r == OBSERVED else 0 for q, r in zip(fl.charges, fl.roles)
    ]
    numerator = 0j
    denominator = 0j
    for colours in itertools.product(range(m), repeat=len(surgery)):
        charged = list(observed_charges)
        bare = [0] * fl.n
        for idx, c in zip(surgery, colours):
            charged[idx] = c
            bare[idx] = c
        q_full = 0
        q_surg = 0
        for a in range(fl.n):
            for b in range(fl.n):
                q_full += charged[a] * fl.linking[a][b] * charged[b]
                q_surg += bare[a] * fl.linking[a][b] * bare[b]
        numerator += cmath.exp(-2j * math.pi * q_full / (4 * k))
        denominator += cmath.exp(-2j * math.pi * q_surg / (4 * k))
    return numerator, denominator


def oracle_expectation(p: SurgeryPresentation, max_terms: int = 10**6) -> complex:
    """Float ratio matching surgery_expectation within roundoff."""
    numerator, denominator = oracle_sums(p, max_terms)
    if abs(denominator) < 1e-6:
        raise DenominatorZero("float normalizing sum is numerically zero")
    return numerator / denominator
