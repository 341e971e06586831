import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import comp
from stratum_atlas.abelian import brute_force_closure
from stratum_atlas.components import HypFlag, Kind, components
from stratum_atlas.errors import PreconditionError, UnknownHyperellipticError
from stratum_atlas.monodromy import (
    frame_group,
    framed_component_count,
    generator_set,
    mon,
    parity,
    partial_component_count,
    rho,
    sigma,
    tau,
)
from stratum_atlas.stratum import Signature
from stratum_atlas.sweep import enumerate_signatures

S = Signature((2, 2, -3, -3))


def test_frame_group():
    assert frame_group(S).spec.moduli == (3, 3, 2, 2)
    assert frame_group(Signature((4, -1, -1))).spec.moduli == (5, 1, 1)


def test_tau_sigma_rho_examples():
    assert tau(S, 0, 1) == (2, 2, 0, 0)
    assert tau(S, 0, 2) == (0, 0, 0, 0)
    assert sigma(Signature((4, -2)), 0) == (2, 0)
    assert sigma(Signature((4, -1, -1)), 1) == (0, 0, 0)
    assert sigma(S, 2) == (0, 0, 0, 0)
    assert rho(S) == (1, 1, 1, 1)
    assert rho(Signature((4, -2))) == (1, 0)
    with pytest.raises(PreconditionError):
        tau(S, 1, 1)
    with pytest.raises(IndexError):
        sigma(S, 4)


def test_generator_sets():
    assert generator_set(components(S)[0]).names() == [
        "tau(1,2)", "tau(1,3)", "tau(1,4)", "tau(2,3)", "tau(2,4)", "tau(3,4)", "rho"]
    generic = comp(Kind.GENERIC, 3, 1, -2)
    assert generator_set(generic).names() == ["sigma(1)", "sigma(2)", "sigma(3)", "tau(1,2)", "rho"]
    hyp = comp(Kind.HYPERELLIPTIC, 3, 3, -2, -2)
    assert generator_set(hyp).names() == ["tau(1,2)", "tau(3,4)", "rho"]
    two_simple = comp(Kind.SPIN, 2, 2, -1, -1, parity=0)
    assert generator_set(two_simple).names() == [
        "sigma(1)", "sigma(2)", "sigma(3)", "sigma(4)", "tau(1,2)", "rho"]


def test_unknown_flag_is_refused():
    torus = components(Signature((3, 3, -6)))[0]
    assert torus.hyperelliptic is HypFlag.UNKNOWN
    with pytest.raises(UnknownHyperellipticError):
        generator_set(torus)


def test_mon_examples():
    g0 = components(S)[0]
    sub = mon(g0)
    assert sub.index == 6 and sub.order == 6
    assert all(x[0] == x[1] and x[2] == x[3] for x in brute_force_closure(sub.spec, generator_set(g0).vectors()))
    generic = comp(Kind.GENERIC, 3, 1, -2)
    assert mon(generic).order == 4 and mon(generic).index == 2
    assert framed_component_count(comp(Kind.GENERIC, 4, -2)) == 1


def test_framed_counts():
    assert framed_component_count(components(S)[0]) == 6
    assert framed_component_count(comp(Kind.GENERIC, 3, 3, -2, -2)) == 2
    assert framed_component_count(comp(Kind.HYPERELLIPTIC, 3, 3, -4, -4)) == 12


def test_partial_examples():
    generic = comp(Kind.GENERIC, 3, 1, -2)
    assert partial_component_count(generic, [0]) == 1
    assert partial_component_count(generic, [0, 1, 2]) == framed_component_count(generic)
    assert partial_component_count(generic, []) == 1
    for spin in components(Signature((6, -2, -2)))[1:]:
        assert partial_component_count(spin, [0, 1, 2]) == framed_component_count(spin) == 1
    with pytest.raises(IndexError):
        partial_component_count(generic, [3])


def test_generators_have_even_parity():
    for sig in enumerate_signatures(4, 7):
        if -1 in sig.degrees:
            continue
        for c in components(sig):
            if c.hyperelliptic is HypFlag.UNKNOWN:
                continue
            for name, g in generator_set(c).elements:
                assert parity(sig, g) == 0, (sig, name)


def test_rho_in_hyperelliptic_is_redundant():
    for degrees in [(3, 3, -4, -4), (2, 2, -3, -3), (4, 4, -5, -5), (2, 2, -6)]:
        c = comp(Kind.HYPERELLIPTIC, *degrees)
        gens = generator_set(c)
        without = [g for name, g in gens.elements if name != "rho"]
        assert rho(c.signature) in brute_force_closure(gens.group.spec, without)


signatures = st.sampled_from(list(enumerate_signatures(4, 6)))


@settings(max_examples=200, deadline=None)
@given(signatures, st.data())
def test_partial_counts_divide_full(sig, data):
    for c in components(sig):
        if c.hyperelliptic is HypFlag.UNKNOWN:
            continue
        marked = data.draw(st.sets(st.integers(0, len(sig) - 1)))
        full = framed_component_count(c)
        part = partial_component_count(c, marked)
        assert full % part == 0
        for extra in set(range(len(sig))) - marked:
            assert partial_component_count(c, marked | {extra}) % part == 0
