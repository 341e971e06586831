"""Connected components of strata of meromorphic differentials.

Genus 0 strata are connected. Genus 1 components are labelled by their
rotation number. In genus at least 2 a stratum has at most one
hyperelliptic component and one or two nonhyperelliptic ones, the latter
told apart by spin parity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce

from .errors import PreconditionError
from .stratum import Signature, predicates


class Kind(str, Enum):
    GENUS0 = "genus0"
    TORUS = "torus"
    HYPERELLIPTIC = "hyperelliptic"
    SPIN = "spin"
    GENERIC = "generic"


class HypFlag(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ComponentDescriptor:
    """One connected component of a stratum.

    ``d`` is set only for ``Kind.TORUS`` and ``parity`` only for
    ``Kind.SPIN``.
    """

    signature: Signature
    kind: Kind
    hyperelliptic: HypFlag = HypFlag.NO
    d: int | None = None
    parity: int | None = None

    def __post_init__(self):
        g = self.signature.genus
        preds = predicates(self.signature)
        if self.kind is Kind.GENUS0 and g != 0:
            raise PreconditionError("Genus0 component in positive genus")
        if self.kind is Kind.TORUS:
            if g != 1 or self.d is None or self.d not in rotation_numbers(self.signature):
                raise PreconditionError(f"no torus component with d={self.d} in {self.signature}")
        elif self.d is not None:
            raise PreconditionError("rotation number given for a non-torus component")
        if self.kind is Kind.SPIN:
            if not preds.is_even_type or self.parity not in (0, 1):
                raise PreconditionError("spin component needs an even-type signature and parity 0/1")
        elif self.parity is not None:
            raise PreconditionError("parity given for a non-spin component")
        if self.kind is Kind.HYPERELLIPTIC:
            if not preds.is_hyperelliptic_type:
                raise PreconditionError(f"{self.signature} is not of hyperelliptic type")
            if self.hyperelliptic is not HypFlag.YES:
                raise PreconditionError("hyperelliptic component must carry flag 'yes'")

    @property
    def is_hyperelliptic(self) -> bool:
        return self.hyperelliptic is HypFlag.YES

    @property
    def spin_parity(self) -> int | None:
        """Spin parity when the labels determine it, else None.

        For an even-type torus the parity is even exactly when the rotation
        number is odd.
        """
        if self.kind is Kind.SPIN:
            return self.parity
        if self.kind is Kind.TORUS and predicates(self.signature).is_even_type:
            return 0 if self.d % 2 else 1
        return None

    def label(self) -> str:
        if self.kind is Kind.TORUS:
            return f"torus(d={self.d})"
        if self.kind is Kind.SPIN:
            return f"spin({'even' if self.parity == 0 else 'odd'})"
        return self.kind.value

    def to_json(self) -> dict:
        out = {"kind": self.kind.value}
        if self.d is not None:
            out["d"] = self.d
        if self.parity is not None:
            out["parity"] = self.parity
        out["hyperelliptic"] = self.hyperelliptic.value
        return out


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rotation_numbers(sig: Signature) -> list[int]:
    """Rotation numbers realised by the components of a genus-one stratum."""
    if sig.genus != 1:
        raise PreconditionError(f"rotation numbers need genus 1, {sig} has genus {sig.genus}")
    big_n = reduce(math.gcd, (abs(n) for n in sig.degrees))
    ds = _divisors(big_n)
    if len(sig.zeroes) == 1 and len(sig.poles) == 1:
        ds.remove(big_n)
    return ds


def _hyperelliptic_torus(sig: Signature, d: int) -> bool:
    # [n, n, -2n] and [2n, -n, -n] with rotation number n
    degs = sig.degrees
    if len(degs) != 3:
        return False
    a, b, c = degs
    if a == b > 0 and c == -2 * a:
        return d == a
    if a > 0 and b == c < 0 and a == -2 * b:
        return d == -b
    return False


def components(sig: Signature) -> list[ComponentDescriptor]:
    g = sig.genus
    preds = predicates(sig)
    if g == 0:
        return [ComponentDescriptor(sig, Kind.GENUS0)]
    if g == 1:
        out = []
        for d in rotation_numbers(sig):
            if _hyperelliptic_torus(sig, d):
                flag = HypFlag.YES
            elif preds.is_hyperelliptic_type:
                flag = HypFlag.UNKNOWN
            else:
                flag = HypFlag.NO
            out.append(ComponentDescriptor(sig, Kind.TORUS, flag, d=d))
        return out

    pole_sum = sig.pole_order_sum
    if pole_sum % 2:
        return [ComponentDescriptor(sig, Kind.GENERIC)]
    if pole_sum == 2 and g == 2:
        if preds.is_hyperelliptic_type:
            return [
                ComponentDescriptor(sig, Kind.HYPERELLIPTIC, HypFlag.YES),
                ComponentDescriptor(sig, Kind.GENERIC),
            ]
        return [ComponentDescriptor(sig, Kind.GENERIC)]
    out = []
    if preds.is_hyperelliptic_type:
        out.append(ComponentDescriptor(sig, Kind.HYPERELLIPTIC, HypFlag.YES))
    if preds.is_even_type:
        out.append(ComponentDescriptor(sig, Kind.SPIN, parity=0))
        out.append(ComponentDescriptor(sig, Kind.SPIN, parity=1))
    else:
        out.append(ComponentDescriptor(sig, Kind.GENERIC))
    return out


def named_singularity_component_count(sig: Signature) -> int:
    """Components with labelled singularities; same as the unlabelled count."""
    return len(components(sig))
