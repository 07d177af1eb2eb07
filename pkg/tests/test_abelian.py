import pytest
from hypothesis import given, strategies as st

from knotcolour import abelian
from knotcolour.errors import (
    BadParameters,
    FixedPoints,
    GroupMismatch,
    NotOrderM,
)


class TestMakeGroup:
    def test_rejects_bad_m(self):
        with pytest.raises(BadParameters):
            abelian.make_group(0, (3,), ((2,),))
        with pytest.raises(BadParameters):
            abelian.make_group("2", (3,), ((2,),))

    def test_rejects_bad_orders(self):
        with pytest.raises(BadParameters):
            abelian.make_group(2, (), ())
        with pytest.raises(BadParameters):
            abelian.make_group(2, (1,), ((0,),))

    def test_rejects_wrong_shape(self):
        with pytest.raises(BadParameters):
            abelian.make_group(2, (3, 3), ((2, 0),))

    def test_rejects_incompatible_entry(self):
        # entry (0, 1) maps a Z/2 generator into Z/4 with odd coefficient
        with pytest.raises(BadParameters):
            abelian.make_group(2, (4, 2), ((1, 1), (0, 1)))

    def test_rejects_wrong_order(self):
        with pytest.raises(NotOrderM):
            abelian.make_group(2, (5,), ((2,),))

    def test_rejects_fixed_points(self):
        # -1 on Z/4 x Z/6 fixes (2, 0)
        with pytest.raises(FixedPoints):
            abelian.make_group(2, (4, 6), ((3, 0), (0, 5)))

    def test_action_reduced_mod_row_order(self, d6):
        spec = abelian.make_group(2, (3,), ((-1,),))
        assert spec == d6

    def test_a4_convention(self, a4):
        # column convention: act(s1) = s2, act(s2) = s1 + s2
        s1 = abelian.element(a4, (1, 0))
        s2 = abelian.element(a4, (0, 1))
        assert abelian.act(s1).coords == (0, 1)
        assert abelian.act(s2).coords == (1, 1)


class TestElements:
    def test_coords_reduced(self, d10):
        assert abelian.element(d10, (7,)).coords == (2,)
        assert abelian.element(d10, (-1,)).coords == (4,)

    def test_wrong_length(self, d10):
        with pytest.raises(BadParameters):
            abelian.element(d10, (1, 2))

    def test_arithmetic(self, c2_35):
        a = abelian.element(c2_35, (2, 3))
        b = abelian.element(c2_35, (2, 4))
        assert abelian.add(a, b).coords == (1, 2)
        assert abelian.sub(a, b).coords == (0, 4)
        assert abelian.neg(a).coords == (1, 2)
        assert abelian.mul(7, a).coords == (2, 1)

    def test_mixing_specs_raises(self, d6, d10):
        with pytest.raises(GroupMismatch):
            abelian.add(abelian.zero(d6), abelian.zero(d10))

    def test_act_pow(self, c3z7):
        e = abelian.element(c3z7, (3,))
        assert abelian.act_pow(e, 1).coords == (6,)
        assert abelian.act_pow(e, 2).coords == (12 % 7,)
        assert abelian.act_pow(e, 3).coords == (3,)
        assert abelian.act_pow(e, -1) == abelian.act_pow(e, 2)

    def test_elements_lex(self, a4):
        assert [e.coords for e in abelian.elements(a4)] == \
            [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_group_order(self, c3_55):
        assert abelian.group_order(c3_55) == 25


class TestGenerates:
    def test_basis_generates(self, a4):
        assert abelian.generates([abelian.element(a4, (1, 0)),
                                  abelian.element(a4, (0, 1))])

    def test_diagonal_does_not(self, a4):
        assert not abelian.generates([abelian.element(a4, (1, 1))])

    def test_empty(self, a4):
        assert not abelian.generates([], a4)

    def test_spec_mismatch(self, d6, a4):
        with pytest.raises(GroupMismatch):
            abelian.generates([abelian.zero(d6)], a4)

    def test_smith_path_on_large_group(self):
        spec = abelian.unsafe_spec((101, 103))
        e1 = abelian.element(spec, (1, 0))
        e2 = abelian.element(spec, (0, 1))
        assert abelian.generates([e1, e2])
        assert not abelian.generates([e1])
        assert abelian.generates([abelian.element(spec, (1, 1))])


class TestWedge:
    def test_pair_indices(self, z333):
        assert abelian.pair_indices(z333) == ((0, 1), (0, 2), (1, 2))
        assert abelian.triple_indices(z333) == ((0, 1, 2),)
        assert abelian.pair_orders(z333) == (3, 3, 3)
        assert abelian.triple_orders(z333) == (3,)

    def test_mixed_orders(self, z46):
        assert abelian.pair_orders(z46) == (2,)

    def test_antisymmetry(self, c3_55):
        a = abelian.element(c3_55, (2, 3))
        b = abelian.element(c3_55, (1, 4))
        assert abelian.wedge2(a, b) == -abelian.wedge2(b, a)
        assert abelian.wedge2(a, a).is_zero()

    @given(st.lists(st.integers(-9, 9), min_size=6, max_size=6))
    def test_bilinearity(self, flat):
        spec = abelian.unsafe_spec((3, 4))
        a = abelian.element(spec, flat[0:2])
        b = abelian.element(spec, flat[2:4])
        c = abelian.element(spec, flat[4:6])
        left = abelian.wedge2(abelian.add(a, b), c)
        assert left == abelian.wedge2(a, c) + abelian.wedge2(b, c)

    def test_wedge3_alternates(self, z333):
        a = abelian.element(z333, (1, 0, 2))
        b = abelian.element(z333, (0, 1, 1))
        c = abelian.element(z333, (2, 2, 0))
        w = abelian.wedge3(a, b, c)
        assert abelian.wedge3(b, a, c) == -w
        assert abelian.wedge3(a, b, a).is_zero()

    def test_scales(self, z333):
        a = abelian.element(z333, (1, 0, 0))
        b = abelian.element(z333, (0, 1, 0))
        w = abelian.wedge2(a, b)
        assert abelian.wedge2_scale(3, w).is_zero()
        assert abelian.wedge2_scale(2, w) == w + w

    def test_wrong_coord_count(self, z333):
        with pytest.raises(BadParameters):
            abelian.WedgeElement2(z333, (1,))

    def test_spec_mismatch(self, z333, a4):
        with pytest.raises(GroupMismatch):
            abelian.wedge2_zero(z333) + abelian.wedge2_zero(a4)


class TestH3:
    def test_cyclic(self):
        for n in (3, 5, 7):
            assert abelian.h3_order((n,)) == n

    def test_rank_two(self):
        assert abelian.h3_order((2, 2)) == 8
        assert abelian.h3_order((4, 6)) == 48
        assert abelian.h3_order((3, 5)) == 15
        assert abelian.h3_order((3, 3)) == 27

    def test_rank_three(self):
        assert abelian.h3_order((2, 2, 2)) == 128

    def test_accepts_spec(self, a4):
        assert abelian.h3_order(a4) == 8

    def test_additive_order(self):
        assert abelian.additive_order(2, 7) == 7
        assert abelian.additive_order(0, 7) == 1
        assert abelian.additive_order(6, 9) == 3
        with pytest.raises(BadParameters):
            abelian.additive_order(1, 0)


class TestJson:
    def test_round_trip(self, c3_55):
        obj = abelian.group_to_json(c3_55)
        assert obj == {"m": 3, "orders": [5, 5], "action": [[0, 4], [1, 4]]}
        assert abelian.group_from_json(obj) == c3_55

    def test_from_json_validates(self):
        with pytest.raises(NotOrderM):
            abelian.group_from_json(
                {"m": 2, "orders": [5], "action": [[2]]})
