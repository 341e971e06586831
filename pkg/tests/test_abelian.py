import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from stratum_atlas.abelian import (
    GroupSpec,
    apply_homomorphism,
    brute_force_closure,
    contains,
    homomorphism_kernel,
    image_by_enumeration,
    projected_subgroup,
    subgroup_from_generators,
    xgcd,
)
from stratum_atlas.errors import BoundExceededError, GroupError


@st.composite
def group_and_gens(draw, max_rank=4, max_modulus=12, max_gens=4):
    moduli = tuple(draw(st.lists(st.integers(1, max_modulus), min_size=1, max_size=max_rank)))
    elem = st.tuples(*[st.integers(0, m - 1) for m in moduli])
    gens = draw(st.lists(elem, max_size=max_gens))
    return GroupSpec(moduli), gens


def test_examples():
    z33 = GroupSpec((3, 3))
    sub = subgroup_from_generators(z33, [(2, 2)])
    assert sub.index == 3
    assert contains(sub, (1, 1)) and not contains(sub, (1, 0)) and (0, 0) in sub
    assert subgroup_from_generators(z33, []).index == 9
    assert subgroup_from_generators(z33, [z33.delta(0), z33.delta(1)]).index == 1
    assert brute_force_closure(GroupSpec((4, 2)), [(1, 1), (2, 0)]) == {(0, 0), (1, 1), (2, 0), (3, 1)}
    assert brute_force_closure(GroupSpec((2,)), [(1,)]) == {(0,), (1,)}
    assert len(brute_force_closure(GroupSpec((3, 3, 2, 2)), [(1, 1, 0, 0), (0, 0, 1, 1)])) == 6


def test_kernel_examples():
    z6, z4, z2 = GroupSpec((6,)), GroupSpec((4,)), GroupSpec((2,))
    assert homomorphism_kernel(z6, z6, [[1]]).index == 6
    ker = homomorphism_kernel(z4, z2, [[1]])
    assert ker.index == 2 and (2,) in ker and (1,) not in ker


def test_ill_defined_homomorphism():
    with pytest.raises(GroupError):
        homomorphism_kernel(GroupSpec((3,)), GroupSpec((2,)), [[1]])
    with pytest.raises(GroupError):
        apply_homomorphism(GroupSpec((4,)), GroupSpec((2,)), [[1, 1]], (1,))


def test_element_checks():
    spec = GroupSpec((3, 4))
    with pytest.raises(GroupError):
        spec.check((3, 0))
    with pytest.raises(GroupError):
        spec.check((1,))
    with pytest.raises(GroupError):
        GroupSpec((0, 2))
    assert spec.element((-1, 9)) == (2, 1)


def test_closure_bound():
    with pytest.raises(BoundExceededError):
        brute_force_closure(GroupSpec((100, 100)), [(1, 0)], bound=1000)


def test_hnf_is_canonical():
    spec = GroupSpec((6, 4))
    a = subgroup_from_generators(spec, [(2, 2), (3, 0)])
    b = subgroup_from_generators(spec, [(5, 2), (3, 0), (1, 2), (0, 0)])
    assert a == b
    assert a.to_json() == b.to_json()


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_xgcd(a, b):
    x, y, g = xgcd(a, b)
    assert g == math.gcd(a, b) and x * a + y * b == g


@given(group_and_gens())
def test_index_times_closure_is_order(data):
    spec, gens = data
    sub = subgroup_from_generators(spec, gens)
    closure = brute_force_closure(spec, gens)
    assert sub.index * len(closure) == spec.order
    assert sub.order == len(closure)


@given(group_and_gens(max_rank=3, max_modulus=8))
def test_membership_agrees_with_closure(data):
    spec, gens = data
    sub = subgroup_from_generators(spec, gens)
    closure = brute_force_closure(spec, gens)
    for x in spec.elements():
        assert contains(sub, x) == (x in closure)


@given(group_and_gens(), st.randoms())
def test_generator_order_irrelevant(data, rnd):
    spec, gens = data
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert subgroup_from_generators(spec, gens) == subgroup_from_generators(spec, shuffled)


@given(group_and_gens(), st.data())
def test_redundant_generators_irrelevant(data, draw):
    spec, gens = data
    assume(gens)
    k = draw.draw(st.integers(-5, 5))
    extra = spec.add(spec.scale(k, gens[0]), gens[-1])
    assert subgroup_from_generators(spec, gens) == subgroup_from_generators(spec, gens + [extra])


@st.composite
def homomorphisms(draw):
    src = GroupSpec(tuple(draw(st.lists(st.integers(1, 8), min_size=1, max_size=3))))
    dst = GroupSpec(tuple(draw(st.lists(st.integers(1, 8), min_size=1, max_size=3))))
    rows = []
    for n in dst.moduli:
        row = []
        for m in src.moduli:
            # a*m must vanish mod n: a is a multiple of n / gcd(n, m)
            step = n // math.gcd(n, m)
            row.append(step * draw(st.integers(0, 7)))
        rows.append(row)
    return src, dst, rows


@settings(max_examples=150, deadline=None)
@given(homomorphisms())
def test_kernel_index_is_image_size(h):
    src, dst, rows = h
    ker = homomorphism_kernel(src, dst, rows)
    image = image_by_enumeration(src, dst, rows)
    assert ker.index == len(image)
    zero = dst.zero()
    for x in src.elements():
        assert (x in ker) == (apply_homomorphism(src, dst, rows, x) == zero)


@given(group_and_gens(), st.data())
def test_projection_matches_brute_force(data, draw):
    spec, gens = data
    coords = sorted(draw.draw(st.sets(st.integers(0, spec.rank - 1), min_size=1)))
    proj = projected_subgroup(subgroup_from_generators(spec, gens), coords)
    closure = brute_force_closure(spec, gens)
    assert proj.order == len({tuple(x[i] for i in coords) for x in closure})


@settings(max_examples=60, deadline=None)
@given(group_and_gens(max_rank=4, max_modulus=30, max_gens=5))
def test_index_against_sympy_smith_form(data):
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form

    spec, gens = data
    rows = [list(g) for g in gens] + [[m if i == j else 0 for j in range(spec.rank)] for i, m in enumerate(spec.moduli)]
    snf = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    diag = [abs(snf[i, i]) for i in range(min(snf.shape))]
    assert math.prod(diag) == subgroup_from_generators(spec, gens).index
