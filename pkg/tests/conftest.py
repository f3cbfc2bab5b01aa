"""Shared fixtures and tiny brute-force oracles used across the suite.

The oracles deliberately use nothing but FiniteGroup.mul / FiniteGroup.inv
so they stay independent of the subgroup/topology machinery they check.
"""

from __future__ import annotations

import pytest

from topolab import build_group, parse_group_spec
from topolab.catalog import catalog_groups


@pytest.fixture(scope="session")
def catalog():
    return catalog_groups()


@pytest.fixture(scope="session")
def catalog64(catalog):
    return [(name, g) for name, g in catalog if g.order <= 64]


@pytest.fixture(scope="session")
def catalog24(catalog):
    return [(name, g) for name, g in catalog if g.order <= 24]


def group(text):
    return build_group(parse_group_spec(text))


def brute_center(g):
    return sorted(
        x
        for x in g.elements()
        if all(g.mul(x, y) == g.mul(y, x) for y in g.elements())
    )


def brute_closure(g, elems):
    found = {0} | {int(x) for x in elems}
    frontier = list(found)
    while frontier:
        cur = frontier.pop()
        for other in list(found):
            for prod in (g.mul(cur, other), g.mul(other, cur)):
                if prod not in found:
                    found.add(prod)
                    frontier.append(prod)
    return sorted(found)


def brute_is_subgroup(g, elems):
    elem_set = set(elems)
    if 0 not in elem_set:
        return False
    return all(g.mul(a, b) in elem_set for a in elem_set for b in elem_set)


def brute_commutator_subgroup(g, hs, ks):
    values = {g.commutator(h, k) for h in hs for k in ks}
    return brute_closure(g, values)


def find_element(g, perm):
    """Element id whose permutation image is the given tuple."""
    for x in g.elements():
        if g.element_perm(x) == tuple(perm):
            return x
    raise AssertionError(f"no element acts as {perm}")
