import random

import pytest
from hypothesis import given, strategies as st

from sumgraphs import magmas as M
from oracles import mask_to_set, set_op

FINITE = [M.mod_add(7), M.mod_add(12), M.mod_mul_units(11), M.abelian(2, 4), M.abelian(3, 3, 2)] + [
    M.set_magma(s, o) for s in (2, 3, 4) for o in M.SET_OPS]


@pytest.mark.parametrize("spec", FINITE, ids=M.spec_name)
def test_commutative(spec):
    rng = random.Random(1)
    carrier = list(M.enumerate_carrier(spec))
    for _ in range(10_000 // len(FINITE)):
        a, b = rng.choice(carrier), rng.choice(carrier)
        assert M.op(spec, a, b) == M.op(spec, b, a)


@pytest.mark.parametrize("spec", [M.mod_add(9), M.mod_mul_units(15), M.abelian(4, 2),
                                  M.set_magma(4, "symdiff")], ids=M.spec_name)
def test_group_kinds_associative(spec):
    rng = random.Random(2)
    carrier = list(M.enumerate_carrier(spec))
    for _ in range(500):
        a, b, c = (rng.choice(carrier) for _ in range(3))
        assert M.op(spec, M.op(spec, a, b), c) == M.op(spec, a, M.op(spec, b, c))


@given(st.integers(0, 15))
def test_symdiff_self_inverse(a):
    assert M.op(M.set_magma(4, "symdiff"), a, a) == 0


@pytest.mark.parametrize("s", range(5))
@pytest.mark.parametrize("pair", [("union", "intersection"),
                                  ("complement_union", "complement_intersection")])
def test_complement_is_isomorphism(s, pair):
    f, g = (M.set_magma(s, o) for o in pair)
    for a in range(1 << s):
        for b in range(1 << s):
            assert M.complement(f, M.op(f, a, b)) == M.op(g, M.complement(f, a), M.complement(f, b))


@pytest.mark.parametrize("o", M.SET_OPS)
def test_set_ops_match_frozensets(o):
    spec = M.set_magma(4, o)
    for a in range(16):
        for b in range(16):
            assert mask_to_set(M.op(spec, a, b)) == set_op(o, 4, mask_to_set(a), mask_to_set(b))


def _partition_number(k):
    p = [1] + [0] * k
    for part in range(1, k + 1):
        for i in range(part, k + 1):
            p[i] += p[i - part]
    return p[k]


@pytest.mark.parametrize("n", range(1, 65))
def test_abelian_groups_count_and_order(n):
    groups = M.abelian_groups_of_order(n)
    expected, m, p = 1, n, 2
    while m > 1:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        expected *= _partition_number(e)
        p += 1
    assert len(groups) == expected
    for spec in groups:
        assert M.carrier_size(spec) == n


@pytest.mark.parametrize("text", ["z", "n", "absdiff", "z11", "mod:11", "units:11", "ab:4x4", "set:4:union"])
def test_parse_spec(text):
    spec = M.parse_spec(text)
    assert M.spec_from_json(M.spec_to_json(spec)) == spec


@pytest.mark.parametrize("spec,text", [(M.abelian(4, 4), "(1,3)"), (M.set_magma(4, "union"), "{1,3}"),
                                       (M.mod_add(11), "7"), (M.int_add(), "-3")])
def test_element_round_trip(spec, text):
    a = M.parse_element(spec, text)
    assert M.parse_element(spec, M.render_element(spec, a)) == a
    assert M.element_from_json(spec, M.element_to_json(spec, a)) == a


def test_bad_elements():
    with pytest.raises(M.MagmaError):
        M.check_element(M.mod_add(5), 5)
    with pytest.raises(M.MagmaError):
        M.check_element(M.mod_mul_units(10), 2)
    with pytest.raises(M.MagmaError):
        M.check_element(M.nat_add(), 0)
    with pytest.raises(M.MagmaError):
        M.parse_element(M.set_magma(4, "union"), "{0,2}")
