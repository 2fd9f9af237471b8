import numpy as np
import pytest

from masseybrauer.catalog import builtin_group
from masseybrauer.cochain_dga import get_ring
from masseybrauer.group_core import (
    Character,
    FiniteGroup,
    Subgroup,
    close_generators,
    cyclic_group,
    dihedral_group,
    direct_product,
    elementary_abelian,
    frattini_p_quotient,
    kernel_of_characters,
    quaternion_group,
    subgroup_closure,
    whole_group,
)


class TestCloseGenerators:
    def test_transposition(self):
        g = close_generators([[1, 0]])
        assert g.order == 2

    def test_disjoint_three_cycles(self):
        g = close_generators([[1, 2, 0, 3, 4, 5], [0, 1, 2, 4, 5, 3]])
        assert g.order == 9

    def test_u3_transvections(self):
        # the two transvection generators of U_3(F_2), acting on the group
        # itself by right translation (Cayley permutations)
        u3 = builtin_group("unipotent:2:2")
        perms = [u3.mul[:, g].tolist() for g in u3.generators]
        g = close_generators(perms)
        assert g.order == 8
        assert sorted(g.element_orders().tolist()) == sorted(
            u3.element_orders().tolist()
        )

    def test_malformed(self):
        with pytest.raises(ValueError):
            close_generators([[0, 0]])


class TestConstructors:
    def test_cyclic(self):
        g = cyclic_group(6)
        assert g.order == 6
        assert g.power(1, 6) == g.identity

    def test_dihedral(self):
        g = dihedral_group(4)
        assert g.order == 8
        orders = sorted(g.element_orders().tolist())
        assert orders == [1, 2, 2, 2, 2, 2, 4, 4]

    def test_quaternion(self):
        g = quaternion_group()
        assert g.order == 8
        orders = sorted(g.element_orders().tolist())
        assert orders == [1, 2, 4, 4, 4, 4, 4, 4]

    def test_elementary_abelian(self):
        g = elementary_abelian(3, 2)
        assert g.order == 9
        assert all(o in (1, 3) for o in g.element_orders())

    def test_direct_product(self):
        g = direct_product(cyclic_group(2), cyclic_group(3))
        assert g.order == 6
        assert 6 in g.element_orders()

    def test_bad_table_rejected(self):
        with pytest.raises(ValueError):
            FiniteGroup(np.asarray([[0, 1], [0, 1]]))


class TestKernelOfCharacters:
    def test_single_projection(self):
        g = elementary_abelian(2, 2)
        chi = get_ring(g, 2).h1_characters()[0]
        assert kernel_of_characters([chi]).order == 2

    def test_both_projections(self):
        g = elementary_abelian(2, 2)
        chars = get_ring(g, 2).h1_characters()
        assert kernel_of_characters(chars).order == 1

    def test_zero_character(self):
        g = elementary_abelian(2, 2)
        zero = Character(g, 2, np.zeros(4, dtype=np.int64))
        assert kernel_of_characters([zero]).order == 4

    def test_empty_list(self):
        g = cyclic_group(3)
        assert kernel_of_characters([], group=g).order == 3
        with pytest.raises(ValueError):
            kernel_of_characters([])

    def test_depends_only_on_span(self):
        g = elementary_abelian(2, 3)
        c1, c2, c3 = get_ring(g, 2).h1_characters()
        c12 = Character(g, 2, (c1.values + c2.values) % 2)
        a = kernel_of_characters([c1, c2])
        b = kernel_of_characters([c1, c12])
        c = kernel_of_characters([c1, c2, c12])
        assert a.members == b.members == c.members


class TestFrattiniQuotient:
    def test_cyclic4(self):
        q, proj = frattini_p_quotient(cyclic_group(4), 2)
        assert q.order == 2
        assert proj.shape == (4,)

    def test_elab_already_elementary(self):
        g = elementary_abelian(3, 2)
        q, _ = frattini_p_quotient(g, 3)
        assert q.order == 9

    def test_quaternion(self):
        q, _ = frattini_p_quotient(quaternion_group(), 2)
        assert q.order == 4

    def test_projection_is_hom(self):
        g = dihedral_group(4)
        q, proj = frattini_p_quotient(g, 2)
        for a in range(g.order):
            for b in range(g.order):
                assert proj[g.times(a, b)] == q.times(int(proj[a]), int(proj[b]))

    def test_pairing_perfect(self):
        # the evaluation pairing G/G^p[G,G] x H^1(G) -> F_p has full rank
        for name, p in [
            ("cyclic:4", 2),
            ("dihedral:4", 2),
            ("quaternion8", 2),
            ("elab:3:2", 3),
            ("unipotent:2:2", 2),
        ]:
            g = builtin_group(name)
            q, proj = frattini_p_quotient(g, p)
            chars = get_ring(g, p).h1_characters()
            reps = []
            for x in range(q.order):
                reps.append(int(np.nonzero(proj == x)[0][0]))
            mat = np.asarray([[c(r) for c in chars] for r in reps], dtype=np.int64)
            from masseybrauer.fp_linalg import row_space_basis

            rank = row_space_basis(mat, p).shape[0]
            assert rank == len(chars)
            assert q.order == p ** len(chars)


class TestSubgroup:
    def test_closure_validated(self):
        g = cyclic_group(4)
        with pytest.raises(ValueError):
            Subgroup(g, (0, 1))

    def test_as_group(self):
        g = cyclic_group(6)
        sub = Subgroup(g, tuple(subgroup_closure(g, [2])))
        k, emb = sub.as_group()
        assert k.order == 3
        for i in range(3):
            for j in range(3):
                assert int(emb[k.times(i, j)]) == g.times(int(emb[i]), int(emb[j]))

    def test_whole_group(self):
        g = cyclic_group(5)
        assert whole_group(g).is_whole_group()


class TestCharacter:
    def test_additivity_enforced(self):
        g = cyclic_group(3)
        with pytest.raises(ValueError):
            Character(g, 3, np.asarray([0, 1, 1]))

    def test_valid(self):
        g = cyclic_group(3)
        chi = Character(g, 3, np.asarray([0, 1, 2]))
        assert chi(1) == 1 and chi(2) == 2
