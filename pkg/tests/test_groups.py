"""Group construction: parsing, builders, validation, quotients."""

import numpy as np
import pytest

from groupdom.errors import CapExceeded, SpecError
from groupdom.groups import (Permutation, build_group, is_normal,
                             parse_group_spec, quotient_group)
from groupdom.lattice import enumerate_subgroups


def build(text, **kw):
    return build_group(parse_group_spec(text), **kw)


class TestParsing:
    def test_dihedral_token_means_order(self):
        spec = parse_group_spec("D8")
        assert spec.kind == "dihedral" and spec.n == 8

    def test_abelian_factors(self):
        spec = parse_group_spec("C2xC2xC3")
        assert spec.kind == "abelian" and spec.factors == (2, 2, 3)

    def test_perm_spec_gives_s3(self):
        G = build("perm:3:(1,2);(1,2,3)")
        assert G.order == 6 and not G.is_abelian()

    def test_odd_dihedral_rejected(self):
        with pytest.raises(SpecError):
            parse_group_spec("D7")

    def test_semidirect_divisibility_checked(self):
        with pytest.raises(SpecError):
            parse_group_spec("SD(7,5)")  # 5 does not divide 6
        with pytest.raises(SpecError):
            parse_group_spec("SD(9,2)")  # 9 not prime

    def test_syntax_error_carries_position(self):
        with pytest.raises(SpecError):
            parse_group_spec("Cx2")
        with pytest.raises(SpecError):
            parse_group_spec("perm:3:(1,4)")  # point out of range

    def test_q8_and_sd(self):
        assert parse_group_spec("Q8").kind == "quaternion8"
        sd = parse_group_spec("SD(7,3)")
        assert (sd.p, sd.q) == (7, 3)


class TestBuilders:
    def test_cyclic_6_element_orders_in_power_order(self):
        G = build("C6")
        assert G.order == 6
        assert G.elem_order.tolist() == [1, 6, 3, 2, 3, 6]

    def test_quaternion_order_profile(self):
        # by hand: Q8 = {1, -1, i, -i, j, -j, k, -k}; -1 is the only
        # involution and the six imaginary units have order 4
        G = build("Q8")
        assert G.order == 8
        assert sorted(G.elem_order.tolist()) == [1, 2, 4, 4, 4, 4, 4, 4]

    def test_symmetric_4(self):
        assert build("S4").order == 24

    def test_alternating_orders(self):
        for n, expected in [(3, 3), (4, 12), (5, 60)]:
            assert build(f"A{n}").order == expected

    def test_closed_form_orders(self):
        for text, expected in [("C9", 9), ("C2xC3x4", 24), ("D14", 14),
                               ("S5", 120), ("A4", 12), ("Q8", 8),
                               ("SD(5,2)", 10), ("SD(13,3)", 39)]:
            assert build(text).order == expected

    def test_dihedral_4_is_klein(self):
        G = build("D4")
        assert G.order == 4 and G.is_abelian()
        assert sorted(G.elem_order.tolist()) == [1, 2, 2, 2]

    def test_semidirect_is_nonabelian_frobenius_shape(self):
        G = build("SD(7,3)")
        assert G.order == 21 and not G.is_abelian()
        assert sorted(set(G.elem_order.tolist())) == [1, 3, 7]

    def test_identity_is_index_zero(self):
        for text in ["C12", "D10", "S4", "Q8", "SD(3,2)"]:
            G = build(text)
            assert np.array_equal(G.mul[0], np.arange(G.order))

    def test_element_cap(self):
        with pytest.raises(CapExceeded):
            build("S6", cap=100)

    def test_determinism(self):
        a = build("S4")
        b = build("S4")
        assert np.array_equal(a.mul, b.mul)
        c = build("SD(13,3)")
        d = build("SD(13,3)")
        assert np.array_equal(c.mul, d.mul)


class TestPermutation:
    def test_compose_and_inverse(self):
        p = Permutation.from_cycles([[0, 1, 2]], 4)
        q = p.inverse()
        assert (p * q).images == tuple(range(4))

    def test_rejects_non_bijection(self):
        with pytest.raises(SpecError):
            Permutation((0, 0, 1))


class TestQuotients:
    def test_q8_by_center_is_klein(self):
        # hand computation on the 8-element table: Q8/{1,-1} has
        # exponent 2 and order 4
        G = build("Q8")
        L = enumerate_subgroups(G)
        center = next(s for s in L.subgroups if s.order == 2)
        Q, proj = quotient_group(G, center.mask)
        assert Q.order == 4
        assert sorted(Q.elem_order.tolist()) == [1, 2, 2, 2]
        assert proj[0] == 0

    def test_s4_by_v4_is_s3(self):
        G = build("S4")
        L = enumerate_subgroups(G)
        v4 = next(s for s in L.subgroups
                  if s.order == 4 and is_normal(G, s.mask))
        Q, proj = quotient_group(G, v4.mask)
        assert Q.order == 6 and not Q.is_abelian()
        # projection is a surjective homomorphism
        assert sorted(set(proj.tolist())) == list(range(6))

    def test_quotient_by_whole_group_is_trivial(self):
        G = build("C6")
        Q, proj = quotient_group(G, (1 << 6) - 1)
        assert Q.order == 1 and set(proj.tolist()) == {0}

    def test_quotient_by_trivial_is_isomorphic_copy(self):
        G = build("D8")
        Q, proj = quotient_group(G, 1)
        assert Q.order == 8
        assert np.array_equal(proj, np.arange(8))

    def test_non_normal_rejected(self):
        G = build("S3")
        L = enumerate_subgroups(G)
        c2 = next(s for s in L.subgroups if s.order == 2)
        with pytest.raises(SpecError):
            quotient_group(G, c2.mask)

    def test_order_multiplicativity(self):
        for text in ["D12", "C2xC2xC3", "Q8", "S4"]:
            G = build(text)
            L = enumerate_subgroups(G)
            for s in L.subgroups:
                if is_normal(G, s.mask):
                    Q, _ = quotient_group(G, s.mask)
                    assert Q.order * s.order == G.order

    def test_quotient_spec_kind(self):
        # the kernel is the normal closure of the seed: for an involution
        # of S4 that is either the Klein four (double transpositions) or
        # the whole group (transpositions)
        from groupdom.groups import GroupSpec
        base = parse_group_spec("S4")
        G = build_group(base)
        quotient_orders = set()
        for i in range(1, 24):
            if G.elem_order[i] != 2:
                continue
            spec = GroupSpec(kind="quotient", base=base, kernel_seed=(i,),
                             text="S4/N")
            Q = build_group(spec)
            assert Q.label == "S4/N"
            quotient_orders.add(Q.order)
        assert quotient_orders == {1, 6}
