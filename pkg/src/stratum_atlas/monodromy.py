"""Frame groups and monodromy subgroups of framed strata.

For a component ``C``, framings of a base surface form the group
``Hor = prod_P Z/h_P`` (simple poles give a trivial factor). Loops in ``C``
act on framings through a subgroup ``Mon``, and the number of components
of the framed space over ``C`` is ``[Hor : Mon]``. Here ``Mon`` is built from
the explicit frame shifts known to lie in it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .abelian import GroupElement, GroupSpec, SubgroupBasis, projected_subgroup, subgroup_from_generators
from .components import ComponentDescriptor, HypFlag, Kind
from .errors import PreconditionError, UnknownHyperellipticError
from .stratum import Signature, h_values, predicates


@dataclass(frozen=True)
class FrameGroup:
    signature: Signature
    spec: GroupSpec

    @classmethod
    def of(cls, sig: Signature) -> FrameGroup:
        return cls(sig, GroupSpec(tuple(max(h, 1) for h in h_values(sig))))

    def delta(self, i: int) -> GroupElement:
        return self.spec.delta(i)


def frame_group(sig: Signature) -> FrameGroup:
    return FrameGroup.of(sig)


def _check_index(sig: Signature, i: int) -> None:
    if not 0 <= i < len(sig):
        raise IndexError(f"singularity index {i} out of range for {sig}")


def tau(sig: Signature, i: int, j: int) -> GroupElement:
    """``deg(j) * delta_i + deg(i) * delta_j``."""
    _check_index(sig, i)
    _check_index(sig, j)
    if i == j:
        raise PreconditionError("tau needs two distinct singularities")
    spec = frame_group(sig).spec
    coords = [0] * len(sig)
    coords[i] = sig[j]
    coords[j] = sig[i]
    return spec.element(coords)


def sigma(sig: Signature, i: int) -> GroupElement:
    _check_index(sig, i)
    spec = frame_group(sig).spec
    return spec.scale(2, spec.delta(i))


def rho(sig: Signature) -> GroupElement:
    """Frame shift of a full turn of the whole surface."""
    spec = frame_group(sig).spec
    return spec.element([1] * len(sig))


@dataclass(frozen=True)
class GeneratorSet:
    """Named frame shifts known to lie in ``Mon``; names use 1-based indices."""

    component: ComponentDescriptor
    elements: tuple[tuple[str, GroupElement], ...]

    @property
    def group(self) -> FrameGroup:
        return frame_group(self.component.signature)

    def vectors(self) -> list[GroupElement]:
        return [g for _, g in self.elements]

    def names(self) -> list[str]:
        return [name for name, _ in self.elements]


def _tau_named(sig, i, j):
    return (f"tau({i + 1},{j + 1})", tau(sig, i, j))


def _sigma_named(sig, i):
    return (f"sigma({i + 1})", sigma(sig, i))


def generator_set(component: ComponentDescriptor) -> GeneratorSet:
    sig = component.signature
    r = len(sig)
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    if component.hyperelliptic is HypFlag.UNKNOWN:
        raise UnknownHyperellipticError(f"hyperelliptic status of {component.label()} in {sig} is unknown")

    if component.kind is Kind.GENUS0:
        elements = [_tau_named(sig, i, j) for i, j in pairs]
    elif component.is_hyperelliptic:
        counts = Counter(sig.degrees)
        elements = [_tau_named(sig, i, j) for i, j in pairs if sig[i] == sig[j]]
        elements += [_sigma_named(sig, i) for i in range(r) if counts[sig[i]] == 1]
    elif predicates(sig).poles_are_exactly_two_simple:
        elements = [_sigma_named(sig, i) for i in range(r)]
        elements += [_tau_named(sig, i, j) for i, j in pairs if sig[i] > 0 and sig[j] > 0]
    else:
        poles = [i for i in range(r) if sig[i] < 0]
        only_pole = poles[0] if len(poles) == 1 else None
        elements = [_sigma_named(sig, i) for i in range(r)]
        elements += [_tau_named(sig, i, j) for i, j in pairs if only_pole not in (i, j)]
    elements.append(("rho", rho(sig)))
    return GeneratorSet(component, tuple(elements))


@lru_cache(maxsize=4096)
def mon(component: ComponentDescriptor) -> SubgroupBasis:
    gens = generator_set(component)
    return subgroup_from_generators(gens.group.spec, gens.vectors())


def framed_component_count(component: ComponentDescriptor) -> int:
    return mon(component).index


def partial_component_count(component: ComponentDescriptor, marked) -> int:
    """Components when only the singularities in ``marked`` (0-based) carry a frame."""
    sig = component.signature
    marked = sorted(set(marked))
    for i in marked:
        _check_index(sig, i)
    if not marked:
        return 1
    return projected_subgroup(mon(component), marked).index


def parity(sig: Signature, x: GroupElement) -> int:
    """Sum of the coordinates at odd-degree singularities, modulo 2.

    Well defined because ``h`` is even at every odd-degree singularity other
    than a simple pole, whose coordinate is identically 0.
    """
    return sum(c for c, n in zip(x, sig.degrees) if n % 2) % 2
