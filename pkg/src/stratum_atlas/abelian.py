"""Exact arithmetic in finite products of cyclic groups.

A subgroup ``H`` of ``G = Z/m_1 x ... x Z/m_r`` is stored through its
preimage lattice ``L`` in ``Z^r``: the lattice spanned by lifts of the
generators together with every ``m_i e_i``. ``L`` has full rank, its Hermite
normal form is an upper triangular ``r x r`` matrix, and ``[G : H]`` equals
the determinant of that matrix.

Two independent engines are provided: the lattice one, and a breadth-first
closure over explicit elements meant for cross-checking on small groups.
All arithmetic uses Python integers.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BoundExceededError, GroupError

GroupElement = tuple[int, ...]

DEFAULT_CLOSURE_BOUND = 10**6


@dataclass(frozen=True)
class GroupSpec:
    """The group ``Z/m_1 x ... x Z/m_r``; a modulus of 1 is a trivial factor."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        if any(m < 1 for m in moduli):
            raise GroupError(f"moduli must be positive, got {moduli}")
        object.__setattr__(self, "moduli", moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    def zero(self) -> GroupElement:
        return (0,) * self.rank

    def delta(self, i: int) -> GroupElement:
        """Generator of the ``i``-th factor (zero when that factor is trivial)."""
        return tuple((1 if j == i else 0) % m for j, m in enumerate(self.moduli))

    def element(self, coords: Iterable[int]) -> GroupElement:
        """Reduce arbitrary integer coordinates into canonical form."""
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise GroupError(f"expected {self.rank} coordinates, got {len(coords)}")
        return tuple(c % m for c, m in zip(coords, self.moduli))

    def check(self, x: Sequence[int]) -> GroupElement:
        """Return ``x`` as a tuple if it is a canonical element, else raise."""
        x = tuple(x)
        if len(x) != self.rank:
            raise GroupError(f"expected {self.rank} coordinates, got {len(x)}")
        for c, m in zip(x, self.moduli):
            if not 0 <= c < m:
                raise GroupError(f"coordinate {c} out of range for modulus {m}")
        return x

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def scale(self, k: int, x: GroupElement) -> GroupElement:
        return tuple((k * a) % m for a, m in zip(x, self.moduli))

    def elements(self):
        """Iterate over all elements in lexicographic order."""
        return itertools.product(*(range(m) for m in self.moduli))


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def hnf_modular(moduli: Sequence[int], vectors: Iterable[Sequence[int]]) -> list[list[int]]:
    """Hermite normal form of the lattice spanned by ``vectors`` and all ``m_i e_i``.

    Rows of the result form an upper triangular basis with positive diagonal
    and entries above each pivot reduced into ``[0, pivot)``.
    """
    r = len(moduli)
    basis = [[m if j == i else 0 for j in range(r)] for i, m in enumerate(moduli)]
    for v0 in vectors:
        if len(v0) != r:
            raise GroupError(f"vector {tuple(v0)} has wrong length for rank {r}")
        # m_i e_i always lies in the lattice, so reducing v modulo it is harmless
        v = [c % m for c, m in zip(v0, moduli)]
        for j in range(r):
            b = v[j]
            if b == 0:
                continue
            row = basis[j]
            a = row[j]
            if b % a == 0:
                q = b // a
                for jj in range(j, r):
                    v[jj] -= q * row[jj]
            else:
                x, y, g = xgcd(a, b)
                ag, bg = a // g, b // g
                new_row = [0] * r
                for jj in range(j, r):
                    aa, bb = row[jj], v[jj]
                    new_row[jj] = x * aa + y * bb
                    v[jj] = ag * bb - bg * aa
                basis[j] = new_row
            for jj in range(j + 1, r):
                v[jj] %= moduli[jj]
        _reduce(basis, moduli)
    return basis


def _reduce(basis: list[list[int]], moduli: Sequence[int]) -> None:
    r = len(basis)
    for j in range(r):
        if basis[j][j] < 0:
            basis[j] = [-c for c in basis[j]]
    # left to right, so later row operations never touch an already reduced column
    for j in range(r):
        pivot_row = basis[j]
        p = pivot_row[j]
        for i in range(j):
            row = basis[i]
            q = row[j] // p
            if q:
                for jj in range(j, r):
                    row[jj] -= q * pivot_row[jj]


@dataclass(frozen=True)
class SubgroupBasis:
    """A subgroup in canonical form: the HNF of its preimage lattice."""

    spec: GroupSpec
    basis: tuple[tuple[int, ...], ...]
    gens: tuple[GroupElement, ...] = field(default=(), compare=False, repr=False)

    @property
    def index(self) -> int:
        return math.prod(self.basis[i][i] for i in range(self.spec.rank))

    @property
    def order(self) -> int:
        return self.spec.order // self.index

    def __contains__(self, x) -> bool:
        return contains(self, x)

    def to_json(self) -> str:
        """Row-major dump of the HNF matrix."""
        return json.dumps({"moduli": list(self.spec.moduli), "hnf": [list(r) for r in self.basis]})


def subgroup_from_generators(spec: GroupSpec, gens: Iterable[Sequence[int]]) -> SubgroupBasis:
    gens = tuple(spec.check(g) for g in gens)
    basis = hnf_modular(spec.moduli, gens)
    return SubgroupBasis(spec, tuple(tuple(row) for row in basis), gens)


def contains(sub: SubgroupBasis, x: Sequence[int]) -> bool:
    """Lattice membership against the triangular basis."""
    v = list(sub.spec.check(x))
    r = sub.spec.rank
    for j in range(r):
        row = sub.basis[j]
        if v[j] % row[j]:
            return False
        q = v[j] // row[j]
        if q:
            for jj in range(j, r):
                v[jj] -= q * row[jj]
    return True


def brute_force_closure(
    spec: GroupSpec, gens: Iterable[Sequence[int]], bound: int = DEFAULT_CLOSURE_BOUND
) -> set[GroupElement]:
    """All elements of the subgroup generated by ``gens``, by breadth-first search."""
    if spec.order > bound:
        raise BoundExceededError(f"group order {spec.order} exceeds bound {bound}")
    gens = [spec.check(g) for g in gens]
    gens = [g for g in dict.fromkeys(gens) if any(g)]
    moduli = spec.moduli
    start = spec.zero()
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple((a + b) % m for a, b, m in zip(x, g, moduli))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _check_homomorphism(src: GroupSpec, dst: GroupSpec, matrix) -> list[list[int]]:
    rows = [list(map(int, row)) for row in matrix]
    if len(rows) != dst.rank or any(len(row) != src.rank for row in rows):
        raise GroupError(f"matrix must be {dst.rank} x {src.rank}")
    for j, (row, n) in enumerate(zip(rows, dst.moduli)):
        for i, (a, m) in enumerate(zip(row, src.moduli)):
            if (a * m) % n:
                raise GroupError(
                    f"ill-defined homomorphism: entry ({j},{i})={a} times source modulus {m} "
                    f"is not divisible by target modulus {n}"
                )
    return rows


def apply_homomorphism(src: GroupSpec, dst: GroupSpec, matrix, x: Sequence[int]) -> GroupElement:
    """Image of ``x``; ``matrix`` has one row per target factor."""
    rows = _check_homomorphism(src, dst, matrix)
    x = src.check(x)
    return tuple(sum(a * c for a, c in zip(row, x)) % n for row, n in zip(rows, dst.moduli))


def homomorphism_kernel(src: GroupSpec, dst: GroupSpec, matrix) -> SubgroupBasis:
    """Kernel of the homomorphism ``src -> dst`` given by ``matrix``.

    The graph lattice ``{(A x + n y, x)}`` is put in Hermite form with target
    coordinates first; rows whose target part vanishes span the kernel.
    """
    rows = _check_homomorphism(src, dst, matrix)
    k, r = dst.rank, src.rank
    moduli = tuple(dst.moduli) + tuple(src.moduli)
    graph = []
    for i in range(r):
        graph.append([row[i] for row in rows] + [1 if jj == i else 0 for jj in range(r)])
    basis = hnf_modular(moduli, graph)
    kernel_vectors = [row[k:] for row in basis[k:]]
    gens = tuple(src.element(v) for v in kernel_vectors)
    return subgroup_from_generators(src, gens)


def image_by_enumeration(src: GroupSpec, dst: GroupSpec, matrix, bound: int = DEFAULT_CLOSURE_BOUND):
    """Image of a homomorphism, found by evaluating it on every source element."""
    if src.order > bound:
        raise BoundExceededError(f"group order {src.order} exceeds bound {bound}")
    rows = _check_homomorphism(src, dst, matrix)
    return {
        tuple(sum(a * c for a, c in zip(row, x)) % n for row, n in zip(rows, dst.moduli))
        for x in src.elements()
    }


def project(spec: GroupSpec, coords: Sequence[int]) -> GroupSpec:
    return GroupSpec(tuple(spec.moduli[i] for i in coords))


def projected_subgroup(sub: SubgroupBasis, coords: Sequence[int]) -> SubgroupBasis:
    """Image of ``sub`` under the projection onto the listed coordinates."""
    coords = list(coords)
    target = project(sub.spec, coords)
    gens = list(sub.gens) + [tuple(row[i] % sub.spec.moduli[i] for i in range(sub.spec.rank)) for row in sub.basis]
    return subgroup_from_generators(target, [tuple(g[i] for i in coords) for g in gens])
