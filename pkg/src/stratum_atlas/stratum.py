"""Signatures of strata of meromorphic differentials.

A signature is the multiset of singularity degrees: positive entries are
zeroes, negative entries are poles (a pole of order ``p`` has degree ``-p``).
Entries are kept in descending order and a singularity is identified by its
position in that order (0-based in the Python API, 1-based in every
human-facing output).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidSignatureError, PreconditionError, SignatureParseError

__all__ = [
    "Signature",
    "SingularityRef",
    "Predicates",
    "parse_signature",
    "format_signature",
    "violations",
    "validate",
    "genus",
    "predicates",
    "h_values",
    "pole_zero_residue_possible",
]

# Rule names, in the order they are reported.
ZERO_ENTRY = "zero entry"
EMPTY = "empty list"
ODD_SUM = "non-even sum"
NEGATIVE_GENUS = "negative genus"
NO_POLE = "no pole"
SOLE_SIMPLE_POLE = "sole simple pole"


def violations(degrees) -> list[str]:
    """Return the names of all stratum rules broken by ``degrees``."""
    degrees = list(degrees)
    if not degrees:
        return [EMPTY]
    out = []
    if any(n == 0 for n in degrees):
        out.append(ZERO_ENTRY)
    total = sum(degrees)
    if total % 2:
        out.append(ODD_SUM)
    elif total < -2:
        out.append(NEGATIVE_GENUS)
    poles = [n for n in degrees if n < 0]
    if not poles:
        out.append(NO_POLE)
    elif poles == [-1]:
        out.append(SOLE_SIMPLE_POLE)
    return out


@dataclass(frozen=True)
class Signature:
    """A valid meromorphic stratum signature, degrees in descending order."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(sorted((int(n) for n in self.degrees), reverse=True))
        bad = violations(degrees)
        if bad:
            raise InvalidSignatureError(degrees, bad)
        object.__setattr__(self, "degrees", degrees)

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __str__(self):
        return format_signature(self)

    @property
    def genus(self) -> int:
        return (sum(self.degrees) + 2) // 2

    @property
    def zeroes(self) -> tuple[int, ...]:
        return tuple(n for n in self.degrees if n > 0)

    @property
    def poles(self) -> tuple[int, ...]:
        return tuple(n for n in self.degrees if n < 0)

    @property
    def pole_order_sum(self) -> int:
        return -sum(self.poles)

    def ref(self, index: int) -> SingularityRef:
        if not 0 <= index < len(self.degrees):
            raise IndexError(f"singularity index {index} out of range")
        return SingularityRef(index, self.degrees[index])


class SingularityRef(NamedTuple):
    index: int
    degree: int


_ENTRY = re.compile(r"^([+-]?\d+)(?:\^(\d+))?$")


def parse_signature(text: str) -> Signature:
    """Parse ``"2,2,-3,-3"``, ``"H(2^2,-3^2)"`` and similar forms.

    Whitespace is ignored; ``n^k`` repeats ``n`` k times.
    """
    s = re.sub(r"\s+", "", text).replace("−", "-")
    if s.startswith("H(") and s.endswith(")"):
        s = s[2:-1]
    if not s:
        raise SignatureParseError("empty list")
    degrees = []
    for token in s.split(","):
        m = _ENTRY.match(token)
        if not m:
            raise SignatureParseError(f"malformed token {token!r}")
        value, mult = int(m.group(1)), m.group(2)
        count = int(mult) if mult is not None else 1
        if count < 1:
            raise SignatureParseError(f"malformed token {token!r}: multiplicity must be positive")
        if value == 0:
            raise SignatureParseError("zero entry")
        degrees.extend([value] * count)
    return Signature(tuple(degrees))


def format_signature(sig: Signature) -> str:
    return ",".join(str(n) for n in sig.degrees)


def validate(degrees) -> Signature:
    """Build a Signature, raising InvalidSignatureError with every violated rule."""
    return Signature(tuple(degrees))


def genus(sig: Signature) -> int:
    return sig.genus


class Predicates(NamedTuple):
    has_simple_pole: bool
    poles_are_exactly_two_simple: bool
    all_degrees_even: bool
    odd_degree_count: int
    is_hyperelliptic_type: bool
    is_even_type: bool


def _hyperelliptic_multiset(values: list[int]) -> bool:
    # {2n} or {n, n}, values all of one sign
    if len(values) == 1:
        return values[0] % 2 == 0
    return len(values) == 2 and values[0] == values[1]


def predicates(sig: Signature) -> Predicates:
    zeroes, poles = list(sig.zeroes), list(sig.poles)
    odd = sum(1 for n in sig.degrees if n % 2)
    zeroes_even = all(n % 2 == 0 for n in zeroes)
    two_simple = sorted(poles) == [-1, -1]
    return Predicates(
        has_simple_pole=-1 in poles,
        poles_are_exactly_two_simple=two_simple,
        all_degrees_even=odd == 0,
        odd_degree_count=odd,
        is_hyperelliptic_type=_hyperelliptic_multiset(zeroes) and _hyperelliptic_multiset(poles),
        is_even_type=zeroes_even and (all(p % 2 == 0 for p in poles) or two_simple),
    )


def h_values(sig: Signature) -> list[int]:
    """Number of horizontal separatrix choices at each singularity."""
    return [abs(n + 1) for n in sig.degrees]


def pole_zero_residue_possible(sig: Signature, pole: SingularityRef | int) -> bool:
    """Whether the component may contain a surface where ``pole`` has zero residue.

    Only the two classical obstructions apply: a sphere with exactly two
    poles and one zero, or a single other pole which is simple.
    """
    ref = sig.ref(pole) if isinstance(pole, int) else pole
    if not 0 <= ref.index < len(sig) or sig[ref.index] != ref.degree:
        raise PreconditionError(f"{ref} does not belong to {sig}")
    if ref.degree > -2:
        raise PreconditionError(f"singularity {ref.index} (degree {ref.degree}) is not a non-simple pole")
    others = [n for i, n in enumerate(sig.degrees) if i != ref.index and n < 0]
    if sig.genus == 0 and len(sig.poles) == 2 and len(sig.zeroes) == 1:
        return False
    if others == [-1]:
        return False
    return True


def multiplicities(sig: Signature) -> Counter:
    return Counter(sig.degrees)
