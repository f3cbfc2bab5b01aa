"""Almost trivial group topologies and the Taimanov topology.

A group topology on a finite group is determined by the normal subgroup
N = closure of {e}: the topology zeta_N whose open sets are unions of
cosets of N.  Finite groups admit no other group topologies (they are
totally Markov), which is why nothing else is representable here.  The
assignment N -> zeta_N reverses inclusion: smaller kernels mean finer
topologies, with zeta_{e} discrete and zeta_G indiscrete.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GroupMismatch, InternalInconsistency, NotNormal
from .groups import FiniteGroup, direct_product
from .subgroups import (
    Subgroup,
    center_subgroup,
    generated_subgroup,
    quotient_group,
    subgroup_as_group,
    trivial_subgroup,
    full_subgroup,
)


@dataclass(frozen=True)
class AlmostTrivialTopology:
    """The topology zeta_N with kernel N (the closure of the identity)."""

    group: FiniteGroup
    kernel: Subgroup

    @property
    def is_discrete(self) -> bool:
        return self.kernel.order == 1

    @property
    def is_indiscrete(self) -> bool:
        return self.kernel.order == self.group.order

    def __repr__(self) -> str:
        return f"AlmostTrivialTopology(kernel order {self.kernel.order} of {self.group.order})"


@dataclass(frozen=True)
class TaimanovWitness:
    """A finite set F whose centralizer realizes the Taimanov kernel Z(G)."""

    elements: tuple[int, ...]
    centralizer: Subgroup


def make_topology(group: FiniteGroup, kernel: Subgroup) -> AlmostTrivialTopology:
    if kernel.parent is not group:
        raise GroupMismatch("kernel belongs to a different group")
    if not kernel.is_normal:
        raise NotNormal("an almost trivial topology needs a normal kernel")
    return AlmostTrivialTopology(group, kernel)


def discrete_topology(group: FiniteGroup) -> AlmostTrivialTopology:
    return AlmostTrivialTopology(group, trivial_subgroup(group))


def indiscrete_topology(group: FiniteGroup) -> AlmostTrivialTopology:
    return AlmostTrivialTopology(group, full_subgroup(group))


def leq(tau: AlmostTrivialTopology, sigma: AlmostTrivialTopology) -> bool:
    """Whether sigma <= tau (sigma coarser), i.e. kernel(tau) <= kernel(sigma)."""
    if tau.group is not sigma.group:
        raise GroupMismatch("topologies live on different groups")
    return tau.kernel.issubset(sigma.kernel)


def is_open(tau: AlmostTrivialTopology, sub: Subgroup) -> bool:
    """A subgroup is zeta_N-open (equivalently closed) iff it contains N."""
    return tau.kernel.issubset(sub)


def taimanov_topology(
    group: FiniteGroup,
) -> tuple[AlmostTrivialTopology, TaimanovWitness]:
    """The topology generated by centralizers of finite sets.

    On a finite group its kernel is exactly the center.  The witness F is
    grown greedily: while c_G(F) still exceeds Z(G), adjoin the element
    whose centralizer cuts the current intersection the most (ties to the
    smallest element id).  Minimality of F is not claimed.
    """

    def build() -> tuple[AlmostTrivialTopology, TaimanovWitness]:
        zc = center_subgroup(group)
        commuting = _commuting_matrix(group)
        current = np.ones(group.order, dtype=bool)
        witness: list[int] = []
        target = np.zeros(group.order, dtype=bool)
        target[list(zc.elements)] = True
        while current.sum() > zc.order:
            counts = commuting[current].sum(axis=0)
            g = int(np.argmin(counts))
            witness.append(g)
            current &= commuting[:, g]
        if not np.array_equal(current, target):
            raise InternalInconsistency("witness centralizer disagrees with the center")
        csub = Subgroup(group, tuple(int(i) for i in np.flatnonzero(current)))
        return make_topology(group, zc), TaimanovWitness(tuple(witness), csub)

    return group._cached("taimanov_topology", build)


def _commuting_matrix(group: FiniteGroup) -> np.ndarray:
    def build() -> np.ndarray:
        if group.table is not None:
            mat = group.table == group.table.T
        else:
            mat = np.empty((group.order, group.order), dtype=bool)
            for g in range(group.order):
                mat[:, g] = group.commuting_mask(g)
        mat.setflags(write=False)
        return mat

    return group._cached("commuting_matrix", build)


def induced(tau: AlmostTrivialTopology, sub: Subgroup) -> AlmostTrivialTopology:
    """Restriction to a subgroup: kernel H∩N on H materialized as a group."""
    if sub.parent is not tau.group:
        raise GroupMismatch("subgroup belongs to a different group")
    host, embed = subgroup_as_group(sub)
    positions = {int(p): i for i, p in enumerate(embed)}
    kernel_ids = [positions[x] for x in tau.kernel.elements if x in positions]
    return make_topology(host, Subgroup(host, kernel_ids))


def quotient_topology(
    tau: AlmostTrivialTopology, modulus: Subgroup
) -> AlmostTrivialTopology:
    """Quotient by a normal subgroup N0: kernel N0*N/N0 on G/N0."""
    if modulus.parent is not tau.group:
        raise GroupMismatch("modulus belongs to a different group")
    if not modulus.is_normal:
        raise NotNormal("quotient modulus must be normal")
    quo = quotient_group(tau.group, modulus)
    join = generated_subgroup(
        tau.group, modulus.elements + tau.kernel.elements
    )
    image = sorted({int(quo.projection[x]) for x in join.elements})
    return make_topology(quo.target, Subgroup(quo.target, image, _normal=True))


def product_topology(
    tau1: AlmostTrivialTopology, tau2: AlmostTrivialTopology
) -> AlmostTrivialTopology:
    """zeta_{N1} x zeta_{N2} = zeta_{N1 x N2} on the direct product."""
    product = direct_product(tau1.group, tau2.group)
    kernel_ids = [
        product.pair_id(x1, x2)
        for x1 in tau1.kernel.elements
        for x2 in tau2.kernel.elements
    ]
    return make_topology(product, Subgroup(product, kernel_ids, _normal=True))
