"""Orbit/stabilizer analysis of permutation groups H <= S(X) on finite X,
and the criterion for c_{S(X)}(H) to be trivial.

The criterion: the centralizer of H inside the full symmetric group is
trivial iff (a) every point stabilizer at an orbit representative is
self-normalizing in H, and (b) stabilizers at distinct representatives are
never conjugate in H.  Because conjugates of point stabilizers are again
point stabilizers (S_x^h = S_{h^-1(x)}), both conditions reduce to set
comparisons among the stabilizers along orbits, and each failure yields an
explicit non-identity permutation commuting with H.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import CapExceeded, DegreeTooLarge, InternalInconsistency

MATERIALIZATION_CAP = 100_000
ORACLE_MAX_DEGREE = 8

Perm = tuple[int, ...]


def _compose(a: Perm, b: Perm) -> Perm:
    """a after b (matching the group product convention)."""
    return tuple(a[x] for x in b)


def _validate_perm(perm: Sequence[int], degree: int) -> Perm:
    p = tuple(int(x) for x in perm)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{degree - 1}")
    return p


class PermAction:
    """A subgroup of S(degree) given by generators, closed on demand."""

    def __init__(self, degree: int, generators: Sequence[Sequence[int]]):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(
            _validate_perm(g, degree) for g in generators
        )
        self._elements: Optional[tuple[Perm, ...]] = None
        self._stabs: Optional[dict[int, frozenset[int]]] = None

    @property
    def elements(self) -> tuple[Perm, ...]:
        """All elements of the generated subgroup, in discovery order."""
        if self._elements is None:
            ident = tuple(range(self.degree))
            elems = [ident]
            index = {ident: 0}
            head = 0
            while head < len(elems):
                cur = elems[head]
                for g in self.generators:
                    nxt = _compose(cur, g)
                    if nxt not in index:
                        if len(elems) >= MATERIALIZATION_CAP:
                            raise CapExceeded(
                                f"generated subgroup exceeds {MATERIALIZATION_CAP} elements"
                            )
                        index[nxt] = len(elems)
                        elems.append(nxt)
                head += 1
            self._elements = tuple(elems)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def point_stabilizers(self) -> dict[int, frozenset[int]]:
        """For every point, the set of element indices fixing it."""
        if self._stabs is None:
            fixing: list[set[int]] = [set() for _ in range(self.degree)]
            for idx, h in enumerate(self.elements):
                for pt in range(self.degree):
                    if h[pt] == pt:
                        fixing[pt].add(idx)
            self._stabs = {pt: frozenset(s) for pt, s in enumerate(fixing)}
        return self._stabs

    def __repr__(self) -> str:
        return f"PermAction(degree={self.degree}, generators={len(self.generators)})"


@dataclass(frozen=True)
class OrbitData:
    """Orbit partition with smallest-point representatives and their
    stabilizers (as tuples of permutations)."""

    orbits: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    stabilizers: dict[int, tuple[Perm, ...]]


@dataclass(frozen=True)
class LemmaFailure:
    """Why the trivial-centralizer criterion failed.

    condition "a": the stabilizer at `representative` is not
    self-normalizing; `paired_point` is another point of the same orbit with
    an equal stabilizer and `conjugator` maps it to the representative.

    condition "b": the stabilizers at `representative` and
    `other_representative` are conjugate; `paired_point` lies in the second
    orbit, has the same stabilizer as `representative`, and `conjugator`
    maps it to `other_representative`.
    """

    condition: str
    representative: int
    other_representative: Optional[int]
    paired_point: int
    conjugator: Perm


def _orbit_partition(action: PermAction) -> tuple[tuple[int, ...], ...]:
    seen = [False] * action.degree
    orbits = []
    for start in range(action.degree):
        if seen[start]:
            continue
        orbit = {start}
        seen[start] = True
        frontier = [start]
        while frontier:
            pt = frontier.pop()
            for g in action.generators:
                img = g[pt]
                if not seen[img]:
                    seen[img] = True
                    orbit.add(img)
                    frontier.append(img)
        orbits.append(tuple(sorted(orbit)))
    return tuple(orbits)


def orbit_data(action: PermAction) -> OrbitData:
    """Orbits, representatives, and representative stabilizers."""
    elements = action.elements
    stabs = action.point_stabilizers()
    orbits = _orbit_partition(action)
    reps = tuple(orbit[0] for orbit in orbits)
    stabilizers = {}
    for orbit, rep in zip(orbits, reps):
        stab = tuple(elements[i] for i in sorted(stabs[rep]))
        if len(orbit) * len(stab) != action.order:
            raise InternalInconsistency("orbit-stabilizer arithmetic fails")
        stabilizers[rep] = stab
    return OrbitData(orbits, reps, stabilizers)


def full_symmetric_centralizer(action: PermAction) -> tuple[Perm, ...]:
    """Exhaustive centralizer of H inside the full S(X), degree <= 8."""
    if action.degree > ORACLE_MAX_DEGREE:
        raise DegreeTooLarge(
            f"exhaustive centralizer limited to degree {ORACLE_MAX_DEGREE}"
        )
    everyone = np.array(
        list(itertools.permutations(range(action.degree))), dtype=np.int8
    )
    mask = np.ones(len(everyone), dtype=bool)
    for g in action.generators:
        garr = np.asarray(g, dtype=np.int8)
        # tau∘g == g∘tau, rowwise
        mask &= (everyone[:, garr] == garr[everyone]).all(axis=1)
    return tuple(tuple(int(v) for v in row) for row in everyone[mask])


def _first_mapping(action: PermAction, src: int, dst: int) -> Perm:
    for h in action.elements:
        if h[src] == dst:
            return h
    raise InternalInconsistency(f"no element maps {src} to {dst}")


def lemma_trivial_centralizer(
    action: PermAction,
) -> tuple[bool, Optional[LemmaFailure]]:
    """Decide c_{S(X)}(H) = {id} via the two stabilizer conditions.

    Conjugate-stabilizer failures across distinct orbits (condition b) are
    reported in preference to self-normalizing failures (condition a);
    within a condition the smallest representatives win.
    """
    stabs = action.point_stabilizers()
    orbits = _orbit_partition(action)
    reps = [orbit[0] for orbit in orbits]

    # (b): S_x conjugate to S_z in H  <=>  some point of O(z) has stabilizer
    # equal (as a set) to S_x, since conjugates of point stabilizers are the
    # stabilizers along the orbit.
    for i, x in enumerate(reps):
        for z, orbit_z in ((reps[j], orbits[j]) for j in range(i + 1, len(reps))):
            for y in orbit_z:
                if stabs[y] == stabs[x]:
                    return False, LemmaFailure(
                        condition="b",
                        representative=x,
                        other_representative=z,
                        paired_point=y,
                        conjugator=_first_mapping(action, y, z),
                    )

    # (a): S_x self-normalizing  <=>  no other point of O(x) shares the
    # exact stabilizer set.
    for x, orbit in zip(reps, orbits):
        for y in orbit:
            if y != x and stabs[y] == stabs[x]:
                return False, LemmaFailure(
                    condition="a",
                    representative=x,
                    other_representative=None,
                    paired_point=y,
                    conjugator=_first_mapping(action, y, x),
                )
    return True, None


def _transversal(action: PermAction, root: int) -> dict[int, Perm]:
    """For each point of the root's orbit, one element mapping root to it."""
    ident = tuple(range(action.degree))
    reached = {root: ident}
    frontier = [root]
    while frontier:
        pt = frontier.pop()
        for g in action.generators:
            img = g[pt]
            if img not in reached:
                reached[img] = _compose(g, reached[pt])
                frontier.append(img)
    return reached


def build_centralizing_witness(action: PermAction, failure: LemmaFailure) -> Perm:
    """Turn a criterion failure into a non-identity permutation commuting
    with every generator; verified before being returned.

    For condition (a), with h0 normalizing S_x without fixing x, the witness
    sends h(x) to h(h0(x)) along the orbit and fixes everything else.  For
    condition (b) it swaps the two orbits via h(x) <-> h(y), which is well
    defined because x and y have equal stabilizers.
    """
    tau = list(range(action.degree))
    x = failure.representative
    trans_x = _transversal(action, x)
    if failure.condition == "a":
        h0 = failure.conjugator
        target = h0[x]
        for pt, u in trans_x.items():
            tau[pt] = u[target]
    elif failure.condition == "b":
        y = failure.paired_point
        for pt, u in trans_x.items():
            tau[pt] = u[y]
        trans_y = _transversal(action, y)
        for pt, v in trans_y.items():
            tau[pt] = v[x]
    else:
        raise ValueError(f"unknown failure condition {failure.condition!r}")

    witness = tuple(tau)
    if sorted(witness) != list(range(action.degree)):
        raise InternalInconsistency("constructed witness is not a permutation")
    if witness == tuple(range(action.degree)):
        raise InternalInconsistency("constructed witness is the identity")
    for g in action.generators:
        if _compose(witness, g) != _compose(g, witness):
            raise InternalInconsistency("constructed witness fails to commute")
    return witness


def random_actions(
    degree: int, count: int, seed: int, max_generators: int = 3
) -> list[PermAction]:
    """Reproducible sample of actions with 1..max_generators uniform
    generators; the seed fixes the whole sequence."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.randint(1, max_generators)
        gens = [tuple(rng.sample(range(degree), degree)) for _ in range(k)]
        out.append(PermAction(degree, gens))
    return out
