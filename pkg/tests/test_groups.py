import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_center, find_element, group
from topolab import (
    AffineSpecialLinear,
    Cyclic,
    Dihedral,
    GeneralizedDihedral,
    InvalidSpec,
    OrderCapExceeded,
    PermSpec,
    SpecialLinear,
    Symmetric,
    build_group,
    center,
    centralizer,
    commutator,
    invert,
    multiply,
    spec_order,
)


def test_cyclic_order():
    assert group("C6").order == 6


def test_heisenberg_order():
    assert group("Heis(3)").order == 27


def test_affine_sl_order_against_matrix_enumeration():
    # independent count of 3x3 matrices over F_2 with determinant 1
    def det2(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] ^ m[1][2] * m[2][1])
            ^ m[0][1] * (m[1][0] * m[2][2] ^ m[1][2] * m[2][0])
            ^ m[0][2] * (m[1][0] * m[2][1] ^ m[1][1] * m[2][0])
        )

    sl_count = sum(
        det2([bits[0:3], bits[3:6], bits[6:9]]) == 1
        for bits in itertools.product((0, 1), repeat=9)
    )
    assert sl_count == 168
    assert group("SL(3,2)").order == sl_count
    assert group("ASL(3,2)").order == sl_count * 8


def test_identity_and_inverse_laws():
    g = group("S4")
    for x in g.elements():
        assert multiply(g, 0, x) == x == multiply(g, x, 0)
        y = invert(g, x)
        assert multiply(g, x, y) == 0 == multiply(g, y, x)


def test_cyclic_inverse_is_modular_negation():
    c6 = group("C6")
    assert invert(c6, 0) == 0
    assert invert(c6, 1) == 5  # g^-1 = g^5
    c2 = group("C2")
    assert invert(c2, 1) == 1  # involutions are self-inverse


def test_multiply_matches_permutation_composition():
    s3 = group("S3")
    for x in s3.elements():
        for y in s3.elements():
            px, py = s3.element_perm(x), s3.element_perm(y)
            composed = tuple(px[py[k]] for k in range(3))
            assert s3.element_perm(multiply(s3, x, y)) == composed


def test_transposition_times_cycle_fixes_a_point():
    s3 = group("S3")
    swap = find_element(s3, (1, 0, 2))
    cyc = find_element(s3, (1, 2, 0))
    product_perm = s3.element_perm(multiply(s3, swap, cyc))
    assert product_perm == (0, 2, 1)  # a transposition fixing point 0


def test_commutator_examples():
    s3 = group("S3")
    for x in s3.elements():
        assert commutator(s3, x, x) == 0
    c6 = group("C6")
    assert all(commutator(c6, x, y) == 0 for x in c6.elements() for y in c6.elements())
    swap = find_element(s3, (1, 0, 2))
    cyc = find_element(s3, (1, 2, 0))
    comm_perm = s3.element_perm(commutator(s3, swap, cyc))
    assert sorted(comm_perm) == [0, 1, 2] and comm_perm != (0, 1, 2)
    assert comm_perm in {(1, 2, 0), (2, 0, 1)}  # a 3-cycle


@pytest.mark.parametrize(
    "spec_text, center_size",
    [("C6", 6), ("S3", 1), ("Q8", 2), ("Heis(3)", 3), ("Dih(C9)", 1)],
)
def test_center_against_exhaustive_scan(spec_text, center_size):
    g = group(spec_text)
    scanned = brute_center(g)
    assert list(center(g)) == scanned
    assert len(scanned) == center_size


def test_centralizer_examples():
    s3 = group("S3")
    assert centralizer(s3, [0]) == tuple(s3.elements())
    assert centralizer(s3, []) == tuple(s3.elements())
    cyc = find_element(s3, (1, 2, 0))
    cent = centralizer(s3, [cyc])
    brute = tuple(
        x for x in s3.elements() if multiply(s3, x, cyc) == multiply(s3, cyc, x)
    )
    assert cent == brute
    assert len(cent) == 3


def test_center_equals_centralizer_of_everything(catalog64):
    for _, g in catalog64:
        assert center(g) == centralizer(g, g.elements())


def test_center_is_a_normal_subgroup(catalog64):
    for _, g in catalog64:
        z = set(center(g))
        assert 0 in z
        for a in z:
            assert invert(g, a) in z
            for b in z:
                assert multiply(g, a, b) in z
        for x in g.elements():
            for a in z:
                assert multiply(g, multiply(g, x, a), invert(g, x)) in z


def test_perm_spec_generating_symmetric_group():
    gens = ((1, 0, 2, 3, 4), (1, 2, 3, 4, 0))
    g = build_group(PermSpec(5, gens))
    assert g.order == 120


def test_dihedral_is_generalized_dihedral_over_cyclic():
    plain = group("D18")
    general = group("Dih(C9)")
    assert np.array_equal(plain.perms, general.perms)
    assert plain.generator_ids == general.generator_ids


def test_builds_are_deterministic():
    a = group("Q8 x D8")
    b = group("Q8 x D8")
    assert np.array_equal(a.perms, b.perms)
    assert a.generator_ids == b.generator_ids
    assert np.array_equal(a.table, b.table)


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        build_group(Symmetric(9))  # 362880 > 20000
    with pytest.raises(OrderCapExceeded):
        build_group(Cyclic(100), order_cap=99)
    assert build_group(Cyclic(100), order_cap=100).order == 100


def test_invalid_specs():
    with pytest.raises(InvalidSpec):
        build_group(SpecialLinear(2, 4))  # 4 is not prime
    with pytest.raises(InvalidSpec):
        build_group(AffineSpecialLinear(2, 3))  # gcd(2, 2) != 1
    with pytest.raises(InvalidSpec):
        build_group(Dihedral(7))  # odd order
    with pytest.raises(InvalidSpec):
        build_group(Cyclic(0))
    with pytest.raises(InvalidSpec):
        build_group(GeneralizedDihedral(Symmetric(3)))  # non-abelian base
    assert spec_order(AffineSpecialLinear(3, 2)) == 1344


@pytest.mark.parametrize(
    "text, order",
    [
        ("D2", 2),
        ("Heis(1)", 1),
        ("SL(1,5)", 1),
        ("ASL(1,5)", 5),
        ("A1", 1),
        ("A2", 1),
        ("A3", 3),
        ("S1", 1),
        ("S2", 2),
        ("C1", 1),
        ("SL(2,2)", 6),
        ("SL(2,3)", 24),
    ],
)
def test_degenerate_and_small_atoms(text, order):
    assert group(text).order == order


def test_large_group_has_no_table_but_consistent_products():
    s7 = group("S7")
    assert s7.order == 5040
    assert s7.table is None
    rng = np.random.default_rng(1)
    for x, y in rng.integers(0, s7.order, (50, 2)):
        px, py = s7.element_perm(int(x)), s7.element_perm(int(y))
        composed = tuple(px[py[k]] for k in range(7))
        assert s7.element_perm(multiply(s7, int(x), int(y))) == composed


def test_small_group_table_matches_permutations():
    d8 = group("D8")
    for x in d8.elements():
        for y in d8.elements():
            px, py = d8.element_perm(x), d8.element_perm(y)
            composed = tuple(px[py[k]] for k in range(d8.degree))
            assert d8.element_perm(int(d8.table[x, y])) == composed


def test_product_component_roundtrip():
    g = group("S3 x C4")
    g1, g2 = g.factors
    assert (g1.order, g2.order) == (6, 4)
    for x in g.elements():
        a, b = g.component_ids(x)
        assert g.pair_id(a, b) == x


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 23), st.integers(0, 23), st.integers(0, 23))
def test_group_laws_random_triples(x, y, z):
    g = group("S4")
    assert multiply(g, multiply(g, x, y), z) == multiply(g, x, multiply(g, y, z))
    assert invert(g, multiply(g, x, y)) == multiply(g, invert(g, y), invert(g, x))


def test_concurrent_reads_share_caches():
    from concurrent.futures import ThreadPoolExecutor

    from topolab import all_normal_subgroups, taimanov_topology

    g = group("Q8 x D8")

    def probe(_):
        normals = all_normal_subgroups(g)
        tau, _ = taimanov_topology(g)
        return (len(normals), tau.kernel.order, center(g))

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(probe, range(16)))
    assert len(set(results)) == 1
