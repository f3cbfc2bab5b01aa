"""Finite groups as faithful permutation actions with canonical numbering.

Every group is materialized by breadth-first closure of a fixed generator
list: element 0 is the identity and new elements are discovered in shortlex
order over generator words (generators in constructor order, FIFO levels).
Two builds of the same spec therefore agree element-for-element.

Groups of order <= TABLE_LIMIT additionally carry a dense multiplication
table; larger groups multiply by composing permutations, memoized.  Both
representations sit behind the same interface and instances are immutable
after construction, so they can be shared freely between threads.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from .errors import InvalidSpec, OrderCapExceeded

DEFAULT_ORDER_CAP = 20_000
TABLE_LIMIT = 4096
_ASSOC_EXHAUSTIVE_LIMIT = 128
_ASSOC_SAMPLES = 10_000


# ---------------------------------------------------------------------------
# Group specs (abstract syntax of the construction language)


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group given by its total order (even)."""

    order: int


@dataclass(frozen=True)
class Quaternion8:
    pass


@dataclass(frozen=True)
class Symmetric:
    n: int


@dataclass(frozen=True)
class Alternating:
    n: int


@dataclass(frozen=True)
class Heisenberg:
    """Upper unitriangular 3x3 matrices over Z/m; order m^3."""

    m: int


@dataclass(frozen=True)
class GeneralizedDihedral:
    """A x| <inversion> over an abelian base group; order 2|A|."""

    base: "GroupSpec"


@dataclass(frozen=True)
class SpecialLinear:
    n: int
    p: int


@dataclass(frozen=True)
class AffineSpecialLinear:
    """SL(n,p) acting on F_p^n extended by translations; needs gcd(n, p-1) = 1."""

    n: int
    p: int


@dataclass(frozen=True)
class PermSpec:
    """Subgroup of S(degree) generated by explicit permutations."""

    degree: int
    generators: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"


GroupSpec = Union[
    Cyclic,
    Dihedral,
    Quaternion8,
    Symmetric,
    Alternating,
    Heisenberg,
    GeneralizedDihedral,
    SpecialLinear,
    AffineSpecialLinear,
    PermSpec,
    Product,
]


# ---------------------------------------------------------------------------
# The group object


class FiniteGroup:
    """A finite group with elements 0..order-1 and identity 0.

    Instances are produced by :func:`build_group`, :func:`direct_product`, or
    internally from a multiplication table (quotients, subgroup
    materializations).  All state is frozen at construction; caches added
    later are invisible to callers and safe under concurrent reads.
    """

    __slots__ = (
        "spec",
        "order",
        "degree",
        "perms",
        "inverses",
        "generator_ids",
        "_index",
        "_table",
        "_bfs_data",
        "_mul_memo",
        "_cache",
        "_cache_lock",
        "_factors",
    )

    def __init__(
        self,
        spec: Optional[GroupSpec],
        perms: np.ndarray,
        index: dict[bytes, int],
        generator_ids: tuple[int, ...],
        table: Optional[np.ndarray] = None,
        bfs_data: Optional[tuple] = None,
    ):
        self.spec = spec
        self.perms = perms
        self.perms.setflags(write=False)
        self.order = int(perms.shape[0])
        self.degree = int(perms.shape[1])
        self._index = index
        self.generator_ids = generator_ids
        self._table = table
        self._bfs_data = bfs_data
        if table is not None:
            self._table.setflags(write=False)
        inv_perms = np.argsort(perms, axis=1)
        self.inverses = np.fromiter(
            (index[row.astype(perms.dtype).tobytes()] for row in inv_perms),
            dtype=np.int32,
            count=self.order,
        )
        self.inverses.setflags(write=False)
        self._mul_memo: dict[tuple[int, int], int] = {}
        self._cache: dict = {}
        # reentrant: cached builders routinely call other cached builders
        self._cache_lock = threading.RLock()
        self._factors: Optional[tuple["FiniteGroup", "FiniteGroup"]] = None

    identity = 0

    @property
    def table(self) -> Optional[np.ndarray]:
        """Dense multiplication table; built on first demand for groups of
        order <= TABLE_LIMIT, None above that."""
        if self._table is None and self.order <= TABLE_LIMIT and self._bfs_data is not None:
            with self._cache_lock:
                if self._table is None:
                    parent, lastgen, gen_arrays = self._bfs_data
                    built = _build_table(self.perms, self._index, parent, lastgen, gen_arrays)
                    built.setflags(write=False)
                    self._table = built
        return self._table

    # -- element arithmetic -------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        """Product x*y (composition: y acts first)."""
        table = self.table
        if table is not None:
            return int(table[x, y])
        key = (x, y)
        got = self._mul_memo.get(key)
        if got is None:
            got = self._lookup(self.perms[x][self.perms[y]])
            self._mul_memo[key] = got
        return got

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x y x^-1 y^-1."""
        return self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))

    def elements(self) -> range:
        return range(self.order)

    def element_perm(self, x: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.perms[x])

    def _lookup(self, perm_row: np.ndarray) -> int:
        return self._index[np.ascontiguousarray(perm_row, dtype=self.perms.dtype).tobytes()]

    # -- vectorized helpers -------------------------------------------------

    def commuting_mask(self, g: int) -> np.ndarray:
        """Boolean mask over all x of [x, g] = e.

        Works off the permutations, so it never forces a table build.
        """
        if self._table is not None:
            return self._table[g] == self._table[:, g]
        pg = self.perms[g]
        return (self.perms[:, pg] == pg[self.perms]).all(axis=1)

    def conj_map(self, g: int) -> np.ndarray:
        """Array m with m[x] = g x g^-1 for every x."""
        if self._table is not None:
            return self._table[self._table[g], self.inv(g)].astype(np.int32)
        pg = self.perms[g]
        pginv = self.perms[self.inv(g)]
        rows = pg[self.perms[:, pginv]]
        return np.fromiter(
            (self._lookup(row) for row in rows), dtype=np.int32, count=self.order
        )

    def mul_row(self, x: int, ys: np.ndarray) -> np.ndarray:
        """Products x*y for an array of ys."""
        if self._table is not None:
            return self._table[x, ys].astype(np.int32)
        return np.fromiter((self.mul(x, int(y)) for y in ys), dtype=np.int32, count=len(ys))

    def mul_col(self, xs: np.ndarray, y: int) -> np.ndarray:
        """Products x*y for an array of xs."""
        if self._table is not None:
            return self._table[xs, y].astype(np.int32)
        return np.fromiter((self.mul(int(x), y) for x in xs), dtype=np.int32, count=len(xs))

    # -- shared derived-data cache -------------------------------------------

    def _cached(self, key, builder: Callable[[], object]):
        got = self._cache.get(key)
        if got is not None:
            return got
        with self._cache_lock:
            got = self._cache.get(key)
            if got is None:
                got = builder()
                self._cache[key] = got
        return got

    # -- product metadata ----------------------------------------------------

    @property
    def factors(self) -> Optional[tuple["FiniteGroup", "FiniteGroup"]]:
        return self._factors

    def pair_id(self, x1: int, x2: int) -> int:
        """Element id of (x1, x2) in a direct product group."""
        if self._factors is None:
            raise ValueError("not a direct product")
        g1, g2 = self._factors
        combined = np.concatenate(
            [g1.perms[x1].astype(np.int64), g2.perms[x2].astype(np.int64) + g1.degree]
        ).astype(self.perms.dtype)
        return self._lookup(combined)

    def component_ids(self, x: int) -> tuple[int, int]:
        """Factor element ids of a direct product element."""
        if self._factors is None:
            raise ValueError("not a direct product")
        g1, g2 = self._factors
        row = self.perms[x]
        left = row[: g1.degree].astype(g1.perms.dtype)
        right = (row[g1.degree :].astype(np.int64) - g1.degree).astype(g2.perms.dtype)
        return g1._lookup(left), g2._lookup(right)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


# ---------------------------------------------------------------------------
# Spec validation and closed-form orders


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidSpec(msg)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _sl_order(n: int, p: int) -> int:
    order = p ** (n * (n - 1) // 2)
    for k in range(2, n + 1):
        order *= p**k - 1
    return order


def spec_order(spec: GroupSpec) -> Optional[int]:
    """Closed-form order of a spec, or None when only closure can tell (perm)."""
    if isinstance(spec, Cyclic):
        _require(spec.n >= 1, "cyclic order must be >= 1")
        return spec.n
    if isinstance(spec, Dihedral):
        _require(spec.order >= 2 and spec.order % 2 == 0, "dihedral order must be even and >= 2")
        return spec.order
    if isinstance(spec, Quaternion8):
        return 8
    if isinstance(spec, Symmetric):
        _require(spec.n >= 1, "symmetric degree must be >= 1")
        return math.factorial(spec.n)
    if isinstance(spec, Alternating):
        _require(spec.n >= 1, "alternating degree must be >= 1")
        return max(1, math.factorial(spec.n) // 2)
    if isinstance(spec, Heisenberg):
        _require(spec.m >= 1, "Heisenberg modulus must be >= 1")
        return spec.m**3
    if isinstance(spec, GeneralizedDihedral):
        base = spec_order(spec.base)
        return None if base is None else 2 * base
    if isinstance(spec, SpecialLinear):
        _require(spec.n >= 1, "SL dimension must be >= 1")
        _require(_is_prime(spec.p), f"SL field size {spec.p} is not prime")
        return _sl_order(spec.n, spec.p)
    if isinstance(spec, AffineSpecialLinear):
        _require(spec.n >= 1, "ASL dimension must be >= 1")
        _require(_is_prime(spec.p), f"ASL field size {spec.p} is not prime")
        _require(
            math.gcd(spec.n, spec.p - 1) == 1,
            f"ASL requires gcd(n, p-1) = 1, got gcd({spec.n}, {spec.p - 1})",
        )
        return _sl_order(spec.n, spec.p) * spec.p**spec.n
    if isinstance(spec, PermSpec):
        _require(spec.degree >= 1, "perm degree must be >= 1")
        for gen in spec.generators:
            _require(
                len(gen) == spec.degree and sorted(gen) == list(range(spec.degree)),
                f"generator {gen} is not a permutation of 0..{spec.degree - 1}",
            )
        return None
    if isinstance(spec, Product):
        left = spec_order(spec.left)
        right = spec_order(spec.right)
        if left is None or right is None:
            return None
        return left * right
    raise InvalidSpec(f"unknown spec node {spec!r}")


# ---------------------------------------------------------------------------
# Breadth-first enumeration


def _perm_dtype(degree: int):
    return np.uint16 if degree <= 0xFFFF else np.uint32


def _bfs_enumerate(
    degree: int, gens: Sequence[np.ndarray], order_cap: int
) -> tuple[np.ndarray, dict[bytes, int], np.ndarray, np.ndarray, list[np.ndarray]]:
    dtype = _perm_dtype(degree)
    gen_arrays: list[np.ndarray] = []
    seen_gens: set[bytes] = set()
    ident = np.arange(degree, dtype=dtype)
    ident_key = ident.tobytes()
    for g in gens:
        arr = np.asarray(g, dtype=dtype)
        key = arr.tobytes()
        if key == ident_key or key in seen_gens:
            continue
        seen_gens.add(key)
        gen_arrays.append(arr)

    perms: list[np.ndarray] = [ident]
    index: dict[bytes, int] = {ident_key: 0}
    parent = [0]
    lastgen = [-1]
    head = 0
    while head < len(perms):
        cur = perms[head]
        for gi, g in enumerate(gen_arrays):
            nxt = cur[g]
            key = nxt.tobytes()
            if key not in index:
                if len(perms) >= order_cap:
                    raise OrderCapExceeded(
                        f"group closure exceeds the order cap ({order_cap})"
                    )
                index[key] = len(perms)
                perms.append(nxt)
                parent.append(head)
                lastgen.append(gi)
        head += 1
    return (
        np.vstack(perms),
        index,
        np.asarray(parent, dtype=np.int32),
        np.asarray(lastgen, dtype=np.int32),
        gen_arrays,
    )


def _build_table(
    perms: np.ndarray,
    index: dict[bytes, int],
    parent: np.ndarray,
    lastgen: np.ndarray,
    gen_arrays: Sequence[np.ndarray],
) -> np.ndarray:
    n = perms.shape[0]
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n, dtype=np.int32)
    rmul = []
    for g in gen_arrays:
        rows = perms[:, g]
        rmul.append(
            np.fromiter((index[row.tobytes()] for row in rows), dtype=np.int32, count=n)
        )
    for y in range(1, n):
        table[:, y] = rmul[lastgen[y]][table[:, parent[y]]]
    return table


def _assemble(
    spec: Optional[GroupSpec],
    degree: int,
    gens: Sequence[np.ndarray],
    order_cap: int,
    seed: int,
    expected_order: Optional[int],
) -> FiniteGroup:
    perms, index, parent, lastgen, gen_arrays = _bfs_enumerate(degree, gens, order_cap)
    gen_ids = tuple(index[g.tobytes()] for g in gen_arrays)
    group = FiniteGroup(
        spec, perms, index, gen_ids, bfs_data=(parent, lastgen, gen_arrays)
    )
    if expected_order is not None and group.order != expected_order:
        raise InvalidSpec(
            f"closure produced order {group.order}, expected {expected_order} for {spec!r}"
        )
    _smoke_check(group, seed)
    return group


def _smoke_check(group: FiniteGroup, seed: int) -> None:
    """Identity/inverse/associativity sanity checks at construction.

    Exhaustive associativity up to order 128 (on the table); seeded random
    triples above that, without forcing a table build.
    """
    n = group.order
    if not np.array_equal(group.perms[0], np.arange(group.degree, dtype=group.perms.dtype)):
        raise InvalidSpec("element 0 is not the identity")
    if len(np.unique(group.inverses)) != n:
        raise InvalidSpec("inverse map is not a bijection")
    composed = np.take_along_axis(group.perms, group.perms[group.inverses], axis=1)
    if not (composed == np.arange(group.degree, dtype=group.perms.dtype)).all():
        raise InvalidSpec("inverse law fails on permutations")
    if n <= _ASSOC_EXHAUSTIVE_LIMIT:
        t = group.table
        if not (
            np.array_equal(t[0], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))
        ):
            raise InvalidSpec("identity law fails on the table")
        # t[t][x,y,z] = (x y) z  and  t[:, t][x,y,z] = x (y z)
        if not np.array_equal(t[t], t[:, t]):
            raise InvalidSpec("associativity fails")
        return
    rng = np.random.default_rng(seed)
    perms = group.perms
    for _ in range(_ASSOC_SAMPLES // 1000):
        xs = rng.integers(0, n, 1000)
        ys = rng.integers(0, n, 1000)
        zs = rng.integers(0, n, 1000)
        left = np.take_along_axis(
            np.take_along_axis(perms[xs], perms[ys], axis=1), perms[zs], axis=1
        )
        right = np.take_along_axis(
            perms[xs], np.take_along_axis(perms[ys], perms[zs], axis=1), axis=1
        )
        if not np.array_equal(left, right):
            raise InvalidSpec("associativity fails on sampled triples")


# ---------------------------------------------------------------------------
# Constructors (canonical generator lists, documented per constructor)


def _cyclic_action(n: int) -> tuple[int, list[np.ndarray]]:
    # Rotation k -> k+1 on n points; enumeration is e, g, g^2, ...
    if n == 1:
        return 1, []
    rot = np.roll(np.arange(n), -1)
    return n, [rot]


def _symmetric_action(n: int) -> tuple[int, list[np.ndarray]]:
    # Generators: transposition (0 1), then the full cycle (0 1 ... n-1).
    if n == 1:
        return 1, []
    swap = np.arange(n)
    swap[[0, 1]] = [1, 0]
    if n == 2:
        return n, [swap]
    return n, [swap, np.roll(np.arange(n), -1)]


def _alternating_action(n: int) -> tuple[int, list[np.ndarray]]:
    # Generators: (0 1 2), then an n- or (n-1)-cycle of even parity.
    if n <= 2:
        return max(n, 1), []
    tri = np.arange(n)
    tri[[0, 1, 2]] = [1, 2, 0]
    if n == 3:
        return n, [tri]
    if n % 2 == 1:
        return n, [tri, np.roll(np.arange(n), -1)]
    cyc = np.arange(n)
    cyc[1:] = np.roll(np.arange(1, n), -1)
    return n, [tri, cyc]


def _quaternion_action() -> tuple[int, list[np.ndarray]]:
    # Left-regular action on the 8 unit labels {1,i,j,k,-1,-i,-j,-k};
    # generators i and j.
    def unit_mul(a: int, b: int) -> int:
        sa, ua = divmod(a, 4)
        sb, ub = divmod(b, 4)
        sign = sa ^ sb
        if ua == 0:
            unit = ub
        elif ub == 0:
            unit = ua
        elif ua == ub:
            unit, sign = 0, sign ^ 1
        else:
            third = 6 - ua - ub
            unit = third
            if (ua, ub) not in ((1, 2), (2, 3), (3, 1)):
                sign ^= 1
        return 4 * sign + unit

    rows = [np.array([unit_mul(a, b) for b in range(8)]) for a in range(8)]
    return 8, [rows[1], rows[2]]


def _heisenberg_action(m: int) -> tuple[int, list[np.ndarray]]:
    # Faithful affine-plane action on Z_m^2 (point x*m + y):
    #   X: (x, y) -> (x + y, y),  Y: (x, y) -> (x, y + 1).
    if m == 1:
        return 1, []
    pts = np.arange(m * m)
    xs, ys = divmod(pts, m)
    gen_x = ((xs + ys) % m) * m + ys
    gen_y = xs * m + (ys + 1) % m
    return m * m, [gen_x, gen_y]


def _gen_dihedral_action(base: FiniteGroup) -> tuple[int, list[np.ndarray]]:
    # Left-regular action of A x| <inv> on points (a, eps) = eps*|A| + a.
    # Generators: each base generator as (g, 0), then the flip (e, 1).
    n = base.order
    gens: list[np.ndarray] = []
    for g in base.generator_ids:
        left = (
            base.table[g]
            if base.table is not None
            else np.fromiter((base.mul(g, a) for a in range(n)), dtype=np.int64, count=n)
        )
        gens.append(np.concatenate([left, left + n]))
    inv = base.inverses.astype(np.int64)
    flip = np.concatenate([inv + n, inv])
    gens.append(flip)
    return 2 * n, gens


def _vector_points(n: int, p: int) -> np.ndarray:
    """All vectors of F_p^n as rows, indexed big-endian base p."""
    pts = np.arange(p**n)
    cols = []
    for k in range(n):
        cols.append((pts // p ** (n - 1 - k)) % p)
    return np.stack(cols, axis=1)


def _vector_index(vecs: np.ndarray, p: int) -> np.ndarray:
    n = vecs.shape[1]
    weights = p ** np.arange(n - 1, -1, -1)
    return (vecs % p) @ weights


def _sl_generators(n: int, p: int) -> list[np.ndarray]:
    """Elementary transvections I + E_ij (row-major (i, j), i != j)."""
    vecs = _vector_points(n, p)
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            image = vecs.copy()
            image[:, i] = (image[:, i] + image[:, j]) % p
            gens.append(_vector_index(image, p))
    return gens


def _sl_action(n: int, p: int) -> tuple[int, list[np.ndarray]]:
    if n == 1:
        return p, []
    return p**n, _sl_generators(n, p)


def _asl_action(n: int, p: int) -> tuple[int, list[np.ndarray]]:
    # SL transvections plus the translation v -> v + e_1.
    vecs = _vector_points(n, p)
    shift = vecs.copy()
    shift[:, 0] = (shift[:, 0] + 1) % p
    gens = _sl_generators(n, p) if n > 1 else []
    gens.append(_vector_index(shift, p))
    return p**n, gens


def build_group(
    spec: GroupSpec, *, order_cap: int = DEFAULT_ORDER_CAP, seed: int = 0
) -> FiniteGroup:
    """Build the group described by a spec.

    Raises InvalidSpec for malformed specs and OrderCapExceeded when the
    result (known in closed form for every constructor except perm specs)
    would exceed order_cap.
    """
    expected = spec_order(spec)
    if expected is not None and expected > order_cap:
        raise OrderCapExceeded(
            f"spec {spec!r} has order {expected}, above the cap ({order_cap})"
        )
    if isinstance(spec, Cyclic):
        degree, gens = _cyclic_action(spec.n)
    elif isinstance(spec, Dihedral):
        return _assemble_gen_dihedral(spec, Cyclic(spec.order // 2), order_cap, seed)
    elif isinstance(spec, Quaternion8):
        degree, gens = _quaternion_action()
    elif isinstance(spec, Symmetric):
        degree, gens = _symmetric_action(spec.n)
    elif isinstance(spec, Alternating):
        degree, gens = _alternating_action(spec.n)
    elif isinstance(spec, Heisenberg):
        degree, gens = _heisenberg_action(spec.m)
    elif isinstance(spec, GeneralizedDihedral):
        return _assemble_gen_dihedral(spec, spec.base, order_cap, seed)
    elif isinstance(spec, SpecialLinear):
        degree, gens = _sl_action(spec.n, spec.p)
    elif isinstance(spec, AffineSpecialLinear):
        degree, gens = _asl_action(spec.n, spec.p)
    elif isinstance(spec, PermSpec):
        degree, gens = spec.degree, [np.asarray(g) for g in spec.generators]
    elif isinstance(spec, Product):
        left = build_group(spec.left, order_cap=order_cap, seed=seed)
        right = build_group(spec.right, order_cap=order_cap, seed=seed)
        return direct_product(left, right, order_cap=order_cap, seed=seed, spec=spec)
    else:
        raise InvalidSpec(f"unknown spec node {spec!r}")
    return _assemble(spec, degree, gens, order_cap, seed, expected)


def _assemble_gen_dihedral(
    spec: GroupSpec, base_spec: GroupSpec, order_cap: int, seed: int
) -> FiniteGroup:
    base = build_group(base_spec, order_cap=order_cap, seed=seed)
    if not _is_abelian(base):
        raise InvalidSpec("generalized dihedral base must be abelian")
    degree, gens = _gen_dihedral_action(base)
    return _assemble(spec, degree, gens, order_cap, seed, 2 * base.order)


def direct_product(
    left: FiniteGroup,
    right: FiniteGroup,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    seed: int = 0,
    spec: Optional[GroupSpec] = None,
) -> FiniteGroup:
    """Direct product acting on the disjoint union of the factor point sets.

    Memoized per factor pair; the cached value pins the right factor, so
    identity-keyed caching is safe.
    """
    expected = left.order * right.order
    if expected > order_cap:
        raise OrderCapExceeded(
            f"product order {expected} is above the cap ({order_cap})"
        )

    def build() -> FiniteGroup:
        degree = left.degree + right.degree
        gens: list[np.ndarray] = []
        for g in left.generator_ids:
            row = np.arange(degree, dtype=np.int64)
            row[: left.degree] = left.perms[g]
            gens.append(row)
        for g in right.generator_ids:
            row = np.arange(degree, dtype=np.int64)
            row[left.degree :] = right.perms[g].astype(np.int64) + left.degree
            gens.append(row)
        node = spec
        if node is None and left.spec is not None and right.spec is not None:
            node = Product(left.spec, right.spec)
        group = _assemble(node, degree, gens, order_cap, seed, expected)
        group._factors = (left, right)
        return group

    return left._cached(("direct_product", id(right)), build)


def group_from_table(
    table: np.ndarray,
    generator_ids: tuple[int, ...],
    spec: Optional[GroupSpec] = None,
) -> FiniteGroup:
    """Wrap an explicit multiplication table (rows double as the regular action)."""
    table = np.ascontiguousarray(table, dtype=np.int32)
    n = table.shape[0]
    if not np.array_equal(table[0], np.arange(n)):
        raise InvalidSpec("table row 0 is not the identity")
    perms = table.astype(_perm_dtype(n))
    index = {perms[i].tobytes(): i for i in range(n)}
    if len(index) != n:
        raise InvalidSpec("table rows are not distinct")
    group = FiniteGroup(spec, perms, index, generator_ids, table)
    if not (table[np.arange(n), group.inverses] == 0).all():
        raise InvalidSpec("table has an element without an inverse")
    return group


# ---------------------------------------------------------------------------
# Element-level operations


def multiply(group: FiniteGroup, x: int, y: int) -> int:
    """Group product x*y."""
    return group.mul(x, y)


def invert(group: FiniteGroup, x: int) -> int:
    """The unique y with x*y = e."""
    return group.inv(x)


def commutator(group: FiniteGroup, x: int, y: int) -> int:
    """[x, y] = x y x^-1 y^-1."""
    return group.commutator(x, y)


def _is_abelian(group: FiniteGroup) -> bool:
    return len(center(group)) == group.order


def center(group: FiniteGroup) -> tuple[int, ...]:
    """Elements commuting with everything; equals the centralizer of any
    generating set."""

    def build() -> tuple[int, ...]:
        mask = np.ones(group.order, dtype=bool)
        for g in group.generator_ids:
            mask &= group.commuting_mask(g)
        return tuple(int(i) for i in np.flatnonzero(mask))

    return group._cached("center", build)


def centralizer(group: FiniteGroup, elems: Iterable[int]) -> tuple[int, ...]:
    """Intersection of the centralizers of elems; the whole group if empty."""
    mask = np.ones(group.order, dtype=bool)
    for s in elems:
        mask &= group.commuting_mask(int(s))
    return tuple(int(i) for i in np.flatnonzero(mask))
