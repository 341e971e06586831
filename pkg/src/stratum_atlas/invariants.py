"""Closed-form framed component counts and the invariants behind them.

In genus 0 without simple poles the components of the framed stratum are
separated by a gcd-valued invariant ``Phi`` (one ``Z/N_ij`` coordinate per
pair of singularities) together with a ``Z/2`` spin invariant ``Sp`` when
there are at least three odd-degree singularities. Both are handled here as
homomorphisms on frame shifts: changing the frame by ``x`` changes ``Phi``
by ``phi_delta(x)`` and ``Sp`` by ``sp_delta(x)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, Sequence

from .abelian import GroupElement, GroupSpec, SubgroupBasis, homomorphism_kernel, subgroup_from_generators
from .components import ComponentDescriptor, HypFlag, Kind
from .errors import PreconditionError, UnknownHyperellipticError
from .monodromy import frame_group, mon, parity
from .stratum import Signature, predicates


def _gcd(values) -> int:
    return reduce(math.gcd, (abs(v) for v in values), 0)


def _require_genus0_no_simple_pole(sig: Signature) -> None:
    if sig.genus != 0:
        raise PreconditionError(f"{sig} has genus {sig.genus}, expected 0")
    if -1 in sig.degrees:
        raise PreconditionError(f"{sig} has a simple pole")


@dataclass(frozen=True)
class NMatrix:
    """The integers ``N_ij`` (``i < j``, 0-based) of a genus-0 signature."""

    signature: Signature
    values: dict[tuple[int, int], int]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        if i == j:
            return 1
        return self.values[(min(i, j), max(i, j))]

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.values)

    @property
    def total(self) -> int:
        return math.prod(self.values.values())


def n_matrix(sig: Signature) -> NMatrix:
    _require_genus0_no_simple_pole(sig)
    degs = sig.degrees
    r = len(degs)
    values = {}
    for i, j in itertools.combinations(range(r), 2):
        rest = [degs[k] for k in range(r) if k not in (i, j)]
        values[(i, j)] = _gcd(rest + [degs[i] + 1, degs[j] + 1])
    for (p, a), (q, b) in itertools.combinations(values.items(), 2):
        if math.gcd(a, b) != 1:
            raise AssertionError(f"N{p} = {a} and N{q} = {b} are not coprime for {sig}")
    return NMatrix(sig, values)


def closed_form_count(component: ComponentDescriptor) -> int:
    """Number of framed components over ``component`` by gcd arithmetic on the degrees."""
    sig = component.signature
    preds = predicates(sig)
    if component.hyperelliptic is HypFlag.UNKNOWN:
        raise UnknownHyperellipticError(f"hyperelliptic status of {component.label()} in {sig} is unknown")
    if component.kind is Kind.GENUS0:
        if preds.has_simple_pole:
            return 1
        big_n = n_matrix(sig).total
        return big_n if preds.odd_degree_count <= 2 else 2 * big_n
    if component.is_hyperelliptic:
        return _hyperelliptic_count(sig)
    if preds.poles_are_exactly_two_simple:
        return 1 if all(n % 2 == 0 for n in sig.zeroes) else 2
    return 1 if preds.has_simple_pole or preds.all_degrees_even else 2


def _hyperelliptic_count(sig: Signature) -> int:
    zeroes, poles = sig.zeroes, sig.poles
    if len(poles) == 2 and poles[0] == poles[1] == -1:
        pole_factor = 1
    elif len(poles) == 2:
        pole_factor = abs(poles[0] + 1)
    else:
        pole_factor = 1
    zero_factor = zeroes[0] + 1 if len(zeroes) == 2 else 1
    return zero_factor * pole_factor


def invariant_target(nmat: NMatrix, with_sp: bool) -> GroupSpec:
    moduli = [nmat[p] for p in nmat.pairs]
    if with_sp:
        moduli.append(2)
    return GroupSpec(tuple(moduli))


def phi_delta(nmat: NMatrix, x: Sequence[int]) -> GroupElement:
    """Change of ``Phi`` under the frame shift ``x``: ``(x_j - x_i) mod N_ij``."""
    x = frame_group(nmat.signature).spec.check(x)
    return tuple((x[j] - x[i]) % nmat[(i, j)] for i, j in nmat.pairs)


def sp_delta(sig: Signature, x: Sequence[int]) -> int:
    if not any(n % 2 for n in sig.degrees):
        raise PreconditionError(f"{sig} has no odd-degree singularity")
    x = frame_group(sig).spec.check(x)
    return parity(sig, x)


def theta_matrix(nmat: NMatrix, with_sp: bool) -> list[list[int]]:
    """Rows of ``Phi`` (and optionally ``Sp``) as a homomorphism matrix on ``Hor``."""
    r = len(nmat.signature)
    rows = []
    for i, j in nmat.pairs:
        row = [0] * r
        row[i], row[j] = -1, 1
        rows.append(row)
    if with_sp:
        rows.append([1 if n % 2 else 0 for n in nmat.signature.degrees])
    return rows


def theta_kernel(sig: Signature) -> SubgroupBasis:
    nmat = n_matrix(sig)
    with_sp = predicates(sig).odd_degree_count >= 3
    return homomorphism_kernel(
        frame_group(sig).spec, invariant_target(nmat, with_sp), theta_matrix(nmat, with_sp)
    )


def theta_kernel_equals_mon(component: ComponentDescriptor) -> bool:
    sig = component.signature
    _require_genus0_no_simple_pole(sig)
    return theta_kernel(sig) == mon(component)


def psi_matrix(sig: Signature, with_parity: bool = False):
    """Reduction map ``x -> (x_i mod N_ij)`` over ordered pairs, as ``(target, matrix)``.

    With ``with_parity`` an extra ``x_i mod 2`` factor is added for every
    odd-degree singularity.
    """
    nmat = n_matrix(sig)
    r = len(sig)
    moduli, rows = [], []
    for i in range(r):
        for j in range(r):
            if i != j:
                moduli.append(nmat[(i, j)])
                rows.append([1 if k == i else 0 for k in range(r)])
        if with_parity and sig[i] % 2:
            moduli.append(2)
            rows.append([1 if k == i else 0 for k in range(r)])
    return GroupSpec(tuple(moduli)), rows


def psi_kernel(sig: Signature, with_parity: bool = False) -> SubgroupBasis:
    target, rows = psi_matrix(sig, with_parity)
    return homomorphism_kernel(frame_group(sig).spec, target, rows)


def diagonal_subgroup(sig: Signature, factors: Sequence[int]) -> SubgroupBasis:
    """Subgroup generated by ``factors[i] * delta_i``."""
    spec = frame_group(sig).spec
    return subgroup_from_generators(spec, [spec.scale(d, spec.delta(i)) for i, d in enumerate(factors)])


class DkCheck(NamedTuple):
    dk: int
    epsilon_k: int
    product_Nki: int
    equal: bool


def dk_check(sig: Signature, k: int) -> DkCheck:
    """Compare the gcd generating the ``k``-th diagonal part of ``Mon`` with ``eps_k * prod_i N_ki``."""
    _require_genus0_no_simple_pole(sig)
    degs = sig.degrees
    r = len(degs)
    if not 0 <= k < r:
        raise IndexError(f"singularity index {k} out of range for {sig}")
    others = [i for i in range(r) if i != k]
    values = [2 * degs[i] * degs[j] for i, j in itertools.permutations(others, 2)]
    values += [degs[i] * (degs[i] + 1) for i in others]
    values.append(degs[k] + 1)
    dk = _gcd(values)
    odd_others = sum(1 for i in others if degs[i] % 2)
    eps = 2 if degs[k] % 2 and odd_others >= 2 else 1
    nmat = n_matrix(sig)
    prod = math.prod(nmat[(k, i)] for i in others)
    return DkCheck(dk, eps, prod, dk == eps * prod)


def partial_closed_form_count(component: ComponentDescriptor, marked) -> int | None:
    """Closed form for partial markings where one is known, else None.

    Positive genus, nonhyperelliptic: connected when an unmarked odd-degree
    singularity exists, otherwise the fully framed count. Simple poles carry
    no frame, so they never count as unmarked. Genus 0: the
    restriction of ``Phi`` to marked pairs, plus ``Sp`` when every odd
    singularity is marked and there are at least three of them.
    """
    sig = component.signature
    marked = sorted(set(marked))
    if not marked:
        return 1
    if len(marked) == len(sig):
        return closed_form_count(component)
    # simple poles carry no separatrix, so they are never counted as unmarked
    odd = [i for i, n in enumerate(sig.degrees) if n % 2 and n != -1]
    unmarked_odd = any(i not in marked for i in odd)
    if component.kind is Kind.GENUS0:
        if -1 in sig.degrees:
            return 1
        nmat = n_matrix(sig)
        count = math.prod(nmat[(i, j)] for i, j in itertools.combinations(marked, 2))
        return count if unmarked_odd or len(odd) <= 2 else 2 * count
    if component.is_hyperelliptic or component.hyperelliptic is HypFlag.UNKNOWN:
        return None
    return 1 if unmarked_odd else closed_form_count(component)


# Spin invariant bookkeeping on pairings of odd-degree singularities.

Pairing = tuple[tuple[int, int], ...]


def check_pairing(pairing, odd_indices=None) -> Pairing:
    pairing = tuple((int(a), int(b)) for a, b in pairing)
    flat = [p for pair in pairing for p in pair]
    if len(set(flat)) != len(flat):
        raise PreconditionError(f"pairing {pairing} uses a singularity twice")
    if odd_indices is not None and sorted(flat) != sorted(odd_indices):
        raise PreconditionError(f"pairing {pairing} does not cover exactly {sorted(odd_indices)}")
    return pairing


def odd_pairing(sig: Signature) -> Pairing:
    """Default pairing: consecutive odd-degree singularities in signature order."""
    odd = [i for i, n in enumerate(sig.degrees) if n % 2]
    return tuple((odd[t], odd[t + 1]) for t in range(0, len(odd), 2))


def apply_pairing_move(pairing: Pairing, move: tuple) -> Pairing:
    """``("within", j)`` swaps both ends of pair ``j``; ``("across", j, k)`` swaps the first ends of pairs ``j`` and ``k``."""
    pairing = [list(p) for p in check_pairing(pairing)]
    kind = move[0]
    if kind == "within" and len(move) == 2:
        j = move[1]
        if not 0 <= j < len(pairing):
            raise PreconditionError(f"pair index {j} out of range")
        pairing[j].reverse()
    elif kind == "across" and len(move) == 3:
        j, k = move[1], move[2]
        if j == k or not (0 <= j < len(pairing) and 0 <= k < len(pairing)):
            raise PreconditionError(f"invalid pair indices {j}, {k}")
        pairing[j][0], pairing[k][0] = pairing[k][0], pairing[j][0]
    else:
        raise PreconditionError(f"unknown move {move!r}")
    return tuple(tuple(p) for p in pairing)


def sp_pairing_update(pairing: Pairing, move: tuple) -> int:
    """Change of ``Sp`` when the pairing is modified by ``move``; both kinds flip it."""
    apply_pairing_move(pairing, move)
    return 1


def pairing_sp_difference(a: Pairing, b: Pairing) -> int:
    """``Sp`` under pairing ``b`` minus ``Sp`` under pairing ``a``, modulo 2.

    Every elementary move is a transposition of the flattened sequence
    ``(P1-, P1+, P2-, P2+, ...)``, so the difference is the sign of the
    permutation relating the two sequences.
    """
    fa = [p for pair in check_pairing(a) for p in pair]
    fb = [p for pair in check_pairing(b) for p in pair]
    if sorted(fa) != sorted(fb):
        raise PreconditionError("pairings are on different singularities")
    pos = {v: t for t, v in enumerate(fa)}
    perm = [pos[v] for v in fb]
    seen = [False] * len(perm)
    transpositions = 0
    for start in range(len(perm)):
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = perm[t]
            length += 1
        if length:
            transpositions += length - 1
    return transpositions % 2


SIMPLE_GLUING = "simple"
SELF_GLUING = "self"


def sp_glue(sp_a: int, sp_b: int | None = None, kind: str = SIMPLE_GLUING) -> int:
    """``Sp`` of a surface obtained by gluing, under the compatible pairing convention."""
    if sp_a not in (0, 1):
        raise PreconditionError("sp_a must be 0 or 1")
    if kind == SIMPLE_GLUING:
        if sp_b is None:
            raise PreconditionError("simple gluing needs both invariants")
        if sp_b not in (0, 1):
            raise PreconditionError("sp_b must be 0 or 1")
        return (sp_a + sp_b) % 2
    if kind == SELF_GLUING:
        return sp_a
    raise PreconditionError(f"unknown gluing kind {kind!r}")
