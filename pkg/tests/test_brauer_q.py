import random

import pytest

from masseybrauer.brauer_q import (
    HALF,
    REAL,
    BrauerClass2,
    FactorBoundExceeded,
    Place,
    classes_equal,
    factorize,
    hilbert_symbol,
    is_local_square,
    reciprocity_holds,
    splits_in_multiquadratic,
)

from oracles import hilbert_oracle, is_square_oracle


class TestPlace:
    def test_parse_and_str(self):
        assert str(Place.parse("inf")) == "inf"
        assert str(Place.parse("17")) == "17"
        assert Place.parse("2") == Place.prime(2)

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            Place.prime(6)

    def test_ordering(self):
        places = [Place.prime(5), REAL, Place.prime(2)]
        assert [str(v) for v in sorted(places)] == ["inf", "2", "5"]


class TestFactorize:
    def test_small(self):
        assert factorize(360) == {2: 3, 3: 2, 5: 1}
        assert factorize(-7) == {7: 1}
        assert factorize(1) == {}

    def test_bound_exceeded(self):
        with pytest.raises(FactorBoundExceeded):
            factorize((10**9 + 7) * (10**9 + 9), bound=10**3)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factorize(0)


class TestHilbertSymbol:
    def test_one_splits_everywhere(self):
        for b in (2, -3, 15, -1):
            for v in (REAL, Place.prime(2), Place.prime(3), Place.prime(5)):
                assert hilbert_symbol(1, b, v) == 1

    def test_minus_one_minus_one_real(self):
        assert hilbert_symbol(-1, -1, REAL) == -1

    def test_2_3_table(self):
        c = BrauerClass2([(2, 3)])
        got = {str(v): hilbert_symbol(2, 3, v) for v in c.candidate_support()}
        assert got == {"inf": 1, "2": -1, "3": -1}

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            hilbert_symbol(0, 3, REAL)

    def test_bimultiplicative(self):
        rng = random.Random(11)
        places = [REAL] + [Place.prime(q) for q in (2, 3, 5, 7, 13)]
        for _ in range(200):
            a = rng.choice([n for n in range(-30, 31) if n])
            a2 = rng.choice([n for n in range(-30, 31) if n])
            b = rng.choice([n for n in range(-30, 31) if n])
            v = rng.choice(places)
            assert hilbert_symbol(a * a2, b, v) == hilbert_symbol(
                a, b, v
            ) * hilbert_symbol(a2, b, v)

    def test_symmetry_and_norm_identity(self):
        rng = random.Random(5)
        places = [REAL] + [Place.prime(q) for q in (2, 3, 7, 11)]
        for _ in range(100):
            a = rng.choice([n for n in range(-25, 26) if n])
            b = rng.choice([n for n in range(-25, 26) if n])
            v = rng.choice(places)
            assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
            assert hilbert_symbol(a, -a, v) == 1

    def test_against_solvability_oracle_sample(self):
        rng = random.Random(3)
        for _ in range(40):
            a = rng.choice([n for n in range(-20, 21) if n])
            b = rng.choice([n for n in range(-20, 21) if n])
            for v in BrauerClass2([(a, b)]).candidate_support():
                assert hilbert_symbol(a, b, v) == hilbert_oracle(a, b, v)

    def test_reciprocity_sample(self):
        rng = random.Random(9)
        for _ in range(100):
            a = rng.choice([n for n in range(-40, 41) if n])
            b = rng.choice([n for n in range(-40, 41) if n])
            assert reciprocity_holds(a, b)


class TestIsLocalSquare:
    def test_examples(self):
        assert not is_local_square(-1, REAL)
        assert is_local_square(2, Place.prime(7))  # 2 = 3^2 mod 7
        assert is_local_square(17, Place.prime(2))  # 17 = 1 mod 8
        assert not is_local_square(2, Place.prime(2))
        assert not is_local_square(12, Place.prime(3))
        assert is_local_square(9, Place.prime(5))

    def test_against_oracle(self):
        places = [REAL] + [Place.prime(q) for q in (2, 3, 5, 7, 11)]
        for a in [n for n in range(-30, 31) if n]:
            for v in places:
                assert is_local_square(a, v) == is_square_oracle(a, v)


class TestBrauerClass:
    def test_empty_class(self):
        assert BrauerClass2([]).local_invariants() == {}
        assert BrauerClass2([]).is_trivial()

    def test_split_symbol(self):
        assert BrauerClass2([(1, 5)]).local_invariants() == {}

    def test_2_3_invariants(self):
        inv = BrauerClass2([(2, 3)]).local_invariants()
        assert inv == {Place.prime(2): HALF, Place.prime(3): HALF}

    def test_classes_equal(self):
        assert classes_equal(BrauerClass2([]), BrauerClass2([(1, 7)]))
        assert classes_equal(BrauerClass2([(6, 5)]), BrauerClass2([(2, 5), (3, 5)]))
        assert not classes_equal(BrauerClass2([(2, 3)]), BrauerClass2([]))

    def test_addition(self):
        a = BrauerClass2([(2, 3)])
        twice = a + a
        assert twice.is_trivial()

    def test_reciprocity_of_invariants(self):
        rng = random.Random(1)
        for _ in range(50):
            syms = [
                (rng.choice([n for n in range(-30, 31) if n]),
                 rng.choice([n for n in range(-30, 31) if n]))
                for _ in range(rng.randint(0, 3))
            ]
            inv = BrauerClass2(syms).local_invariants()
            assert len(inv) % 2 == 0  # sum of invariants is 0 in (1/2)Z/Z


class TestSplitsInMultiquadratic:
    def test_trivial_class(self):
        assert splits_in_multiquadratic(BrauerClass2([]), [10])

    def test_2_3_splits_over_sqrt2(self):
        assert splits_in_multiquadratic(BrauerClass2([(2, 3)]), [2])

    def test_minus1_minus1_not_over_sqrt2(self):
        assert not splits_in_multiquadratic(BrauerClass2([(-1, -1)]), [2])

    def test_zero_entry_rejected(self):
        with pytest.raises(ValueError):
            splits_in_multiquadratic(BrauerClass2([]), [0])
