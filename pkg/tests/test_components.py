import pytest

from stratum_atlas.components import (
    ComponentDescriptor,
    HypFlag,
    Kind,
    components,
    named_singularity_component_count,
    rotation_numbers,
)
from stratum_atlas.errors import PreconditionError
from stratum_atlas.stratum import Signature, predicates
from stratum_atlas.sweep import enumerate_signatures


def kinds(degrees):
    return [(c.kind, c.parity) for c in components(Signature(degrees))]


@pytest.mark.parametrize("degrees, expected", [((2, -2), [1]), ((3, 3, -6), [1, 3]), ((3, -1, -2), [1])])
def test_rotation_numbers(degrees, expected):
    assert rotation_numbers(Signature(degrees)) == expected


def test_rotation_numbers_need_genus_one():
    with pytest.raises(PreconditionError):
        rotation_numbers(Signature((4, -2)))


def test_components_examples():
    assert kinds((2, 2, -3, -3)) == [(Kind.GENUS0, None)]
    assert kinds((4, -2)) == [(Kind.HYPERELLIPTIC, None), (Kind.GENERIC, None)]
    # odd pole-order sum
    assert kinds((3, 2, -1, -1, -1)) == [(Kind.GENERIC, None)]
    assert kinds((6, -2, -2)) == [(Kind.HYPERELLIPTIC, None), (Kind.SPIN, 0), (Kind.SPIN, 1)]
    assert kinds((3, 1, -2)) == [(Kind.GENERIC, None)]
    assert kinds((3, 3, -2, -2)) == [(Kind.HYPERELLIPTIC, None), (Kind.GENERIC, None)]


def test_torus_flags():
    comps = components(Signature((3, 3, -6)))
    assert [(c.d, c.hyperelliptic) for c in comps] == [(1, HypFlag.UNKNOWN), (3, HypFlag.YES)]
    assert all(c.hyperelliptic is HypFlag.NO for c in components(Signature((4, -1, -3))))


def test_named_singularity_counts():
    assert named_singularity_component_count(Signature((2, 2, -3, -3))) == 1
    assert named_singularity_component_count(Signature((4, -2))) == 2
    assert named_singularity_component_count(Signature((3, -1, -2))) == 1


def test_descriptor_invariants():
    s = Signature((3, 1, -2))
    with pytest.raises(PreconditionError):
        ComponentDescriptor(s, Kind.HYPERELLIPTIC, HypFlag.YES)
    with pytest.raises(PreconditionError):
        ComponentDescriptor(s, Kind.SPIN, parity=0)
    with pytest.raises(PreconditionError):
        ComponentDescriptor(s, Kind.GENUS0)
    with pytest.raises(PreconditionError):
        ComponentDescriptor(Signature((2, -2)), Kind.TORUS, d=2)


def test_labels_and_json():
    c = ComponentDescriptor(Signature((3, 3, -6)), Kind.TORUS, HypFlag.UNKNOWN, d=1)
    assert c.label() == "torus(d=1)"
    assert c.to_json() == {"kind": "torus", "d": 1, "hyperelliptic": "unknown"}
    spin = components(Signature((6, -2, -2)))[2]
    assert spin.label() == "spin(odd)" and spin.spin_parity == 1


def test_even_torus_parity_follows_rotation_number():
    for c in components(Signature((4, -2, -2))):
        assert c.spin_parity == (0 if c.d % 2 else 1)


def test_sweep_structure():
    for sig in enumerate_signatures(4, 6):
        comps = components(sig)
        preds = predicates(sig)
        assert sum(c.is_hyperelliptic for c in comps) <= 1
        if sig.genus >= 2 and sig.pole_order_sum % 2 == 0 and not (sig.pole_order_sum == 2 and sig.genus == 2):
            assert sum(c.kind is Kind.SPIN for c in comps) == (2 if preds.is_even_type else 0)
        if sig.genus >= 2:
            assert sum(not c.is_hyperelliptic for c in comps) in (1, 2)
