"""Framed components of strata of meromorphic differentials, with an exact monodromy oracle."""

from .abelian import GroupSpec, SubgroupBasis, brute_force_closure, contains, subgroup_from_generators
from .components import ComponentDescriptor, HypFlag, Kind, components, rotation_numbers
from .errors import (
    AtlasError,
    BoundExceededError,
    GroupError,
    InvalidSignatureError,
    PreconditionError,
    SignatureParseError,
    UnknownHyperellipticError,
)
from .invariants import closed_form_count, dk_check, n_matrix, partial_closed_form_count, theta_kernel_equals_mon
from .monodromy import framed_component_count, generator_set, mon, partial_component_count
from .report import SCHEMA, analyze
from .stratum import Signature, format_signature, parse_signature, predicates

__version__ = "0.1.0"
