import random

import pytest

from constakit import build_field, elem_order, find_element_of_order
from constakit.field import FieldElem


def field_axioms(field, sample):
    zero, one = field.zero(), field.one()
    for a in sample:
        assert a + zero == a
        assert a * one == a
        assert a - a == zero
        assert a + (-a) == zero
        if not a.is_zero:
            assert a * a.inverse() == one
    for a in sample:
        for b in sample:
            assert a + b == b + a
            assert a * b == b * a
    a, b, c = sample[0], sample[len(sample) // 2], sample[-1]
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("p,degrees", [(2, []), (3, []), (5, []), (2, [2]), (3, [2]), (2, [4]), (5, [2])])
def test_axioms_exhaustive(p, degrees):
    field = build_field(p, degrees)
    field_axioms(field, list(field.elements()))


def test_axioms_sampled_tower():
    field = build_field(3, [2, 2])
    assert field.cardinality == 81
    rng = random.Random(7)
    sample = [field.elem(rng.randrange(81)) for _ in range(12)]
    field_axioms(field, sample)


def test_build_field_caches_prefixes():
    tower = build_field(2, [2, 3])
    assert tower.subfield is build_field(2, [2])
    assert tower.subfield.subfield is build_field(2, [])


def test_modulus_scan_is_deterministic():
    f9a = build_field(3, [2])
    f9b = build_field(3, [2])
    assert f9a is f9b
    # the canonical F_9 modulus is y^2 + 1, the first irreducible in scan order
    assert f9a.describe() == {"p": 3, "degrees": [2], "moduli": [[1, 0, 1]]}


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_field(4, [])
    with pytest.raises(ValueError):
        build_field(2, [0])
    with pytest.raises(ValueError):
        build_field(2, [200])  # cardinality cap


def test_index_round_trip():
    field = build_field(2, [3])
    for i in range(field.cardinality):
        e = field.elem(i)
        assert field.rep_to_index(e.rep) == i
        nested = field.rep_to_nested(e.rep)
        assert field.elem(nested) == e


def test_lift_and_project():
    f3 = build_field(3, [])
    f9 = f3.extend(2)
    for i in range(3):
        a = f3.elem(i)
        lifted = a.lift(f9)
        assert lifted.ctx is f9
        assert lifted.project(f3) == a
    y = f9.elem([0, 1])
    with pytest.raises(ValueError):
        y.project(f3)


def test_cross_field_operations_refuse():
    f4 = build_field(2, [2])
    f9 = build_field(3, [2])
    with pytest.raises(ValueError):
        f4.one() + f9.one()


def test_scalar_action_matches_lifted_multiplication():
    f2 = build_field(2, [])
    f16 = build_field(2, [4])
    rng = random.Random(3)
    for _ in range(20):
        a = f16.elem(rng.randrange(16))
        s = f2.elem(rng.randrange(2))
        scaled = FieldElem(f16, f16.scale(a.rep, s.rep))
        assert scaled == a * s.lift(f16)


def test_elem_order():
    f9 = build_field(3, [2])
    orders = sorted(elem_order(a) for a in f9.elements() if not a.is_zero)
    # multiplicative group is cyclic of order 8
    assert orders.count(8) == 4
    assert max(orders) == 8


@pytest.mark.parametrize("order", [1, 2, 4, 8])
def test_find_element_of_order(order):
    f9 = build_field(3, [2])
    a = find_element_of_order(f9, order)
    assert elem_order(a) == order


def test_find_element_of_order_impossible():
    f9 = build_field(3, [2])
    with pytest.raises(ValueError):
        find_element_of_order(f9, 3)


def test_pow_rep_negative_exponent():
    f5 = build_field(5, [])
    a = f5.elem(2)
    assert a**-1 == a.inverse()
    assert a**-3 == (a * a * a).inverse()


def test_elem_rejects_foreign_and_junk():
    f4 = build_field(2, [2])
    with pytest.raises(TypeError):
        f4.elem(1.5)
    with pytest.raises(ValueError):
        f4.elem(4)
    with pytest.raises(ValueError):
        f4.elem([1])  # wrong coefficient count


def test_str_forms():
    f9 = build_field(3, [2])
    assert f9.rep_to_str(f9.elem([1, 1]).rep) == "y + 1"
    assert f9.rep_to_str(f9.zero_rep) == "0"
    f3 = build_field(3, [])
    assert f3.rep_to_str(f3.elem(2).rep) == "2"


def test_elements_are_hashable_and_slotless():
    f4 = build_field(2, [2])
    seen = {a for a in f4.elements()}
    assert len(seen) == 4
    with pytest.raises(AttributeError):
        f4.one().stray = 1
    assert isinstance(f4.one(), FieldElem)
