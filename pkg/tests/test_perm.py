import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from revpal.perm import (
    Permutation,
    compose,
    conjugate,
    cycle_string,
    find_conjugator,
    lines_for_degree,
    one_line,
    parse_permutation,
)


def random_perm(rng, degree):
    image = list(range(degree))
    rng.shuffle(image)
    return Permutation(image)


@st.composite
def permutations(draw, max_degree=16):
    degree = draw(st.integers(min_value=1, max_value=max_degree))
    return Permutation(draw(st.permutations(list(range(degree)))))


@st.composite
def permutation_pairs(draw, max_degree=16):
    degree = draw(st.integers(min_value=1, max_value=max_degree))
    p = Permutation(draw(st.permutations(list(range(degree)))))
    q = Permutation(draw(st.permutations(list(range(degree)))))
    return p, q


class TestBasics:
    def test_identity(self):
        assert Permutation.identity(4).image == (0, 1, 2, 3)
        p8 = Permutation.identity(8)
        assert p8.num_cycles() == 8
        assert p8.cycle_type() == (1,) * 8

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])
        with pytest.raises(ValueError):
            Permutation([1, 2, 3])
        with pytest.raises(ValueError):
            Permutation([])

    def test_rejects_huge_degree(self):
        with pytest.raises(ValueError):
            Permutation.identity((1 << 16) + 1)

    def test_compose_is_right_to_left(self):
        # Oracle: hand-traced table.  q = t(1 2) first, then p = t(0 1):
        # 0 -> q 0 -> p 1;  1 -> q 2 -> p 2;  2 -> q 1 -> p 0;  3 -> 3.
        p = Permutation.transposition(4, 0, 1)
        q = Permutation.transposition(4, 1, 2)
        assert compose(p, q).image == (1, 2, 0, 3)
        assert compose(p, q).cycles()[0] == (0, 1, 2)

    def test_compose_identity_and_inverse(self):
        rng = random.Random(7)
        for _ in range(20):
            p = random_perm(rng, 8)
            assert compose(p, Permutation.identity(8)) == p
            assert compose(Permutation.identity(8), p) == p
            assert compose(p, p.inverse()).is_identity()
            assert compose(p.inverse(), p).is_identity()

    def test_compose_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose(Permutation.identity(4), Permutation.identity(8))


class TestCycles:
    def test_worked_example(self):
        p = Permutation([4, 2, 6, 0, 3, 1, 5, 7])
        # Canonical: longest first, ties by smallest first element.
        assert p.cycles() == ((1, 2, 6, 5), (0, 4, 3), (7,))
        assert p.num_cycles() == 3
        assert p.cycle_type() == (4, 3, 1)
        assert not p.is_involution()

    def test_identity_cycles(self):
        assert Permutation.identity(4).cycles() == ((0,), (1,), (2,), (3,))

    def test_from_cycles(self):
        p = Permutation.from_cycles([(0, 1), (2, 3)], 4)
        assert p.image == (1, 0, 3, 2)

    def test_from_cycles_fixpoints_omitted(self):
        p = Permutation.from_cycles([(0, 4, 3)], 8)
        assert p(7) == 7 and p(0) == 4 and p(3) == 0

    def test_from_cycles_errors(self):
        with pytest.raises(ValueError):
            Permutation.from_cycles([(0, 1), (1, 2)], 4)
        with pytest.raises(ValueError):
            Permutation.from_cycles([(0, 9)], 4)

    @given(permutations())
    def test_cycle_round_trip(self, p):
        assert Permutation.from_cycles(p.cycles(), p.degree) == p

    @given(permutations())
    def test_cycles_partition_domain(self, p):
        elements = [x for c in p.cycles() for x in c]
        assert sorted(elements) == list(range(p.degree))

    @given(permutations())
    def test_canonical_form(self, p):
        cycles = p.cycles()
        assert all(c[0] == min(c) for c in cycles)
        keys = [(-len(c), c[0]) for c in cycles]
        assert keys == sorted(keys)


class TestInvolutions:
    def test_worked_non_involution(self):
        assert not Permutation([4, 2, 6, 0, 3, 1, 5, 7]).is_involution()

    def test_three_transpositions(self):
        p = Permutation.from_cycles([(0, 1), (3, 5), (2, 7)], 8)
        assert p.is_involution()
        assert p.size() == 3
        assert p.transpositions() == {(0, 1), (2, 7), (3, 5)}

    def test_identity_is_involution(self):
        p = Permutation.identity(8)
        assert p.is_involution()
        assert p.size() == 0
        assert p.transpositions() == frozenset()

    def test_transpositions_rejects_non_involution(self):
        p = Permutation.from_cycles([(0, 1, 2)], 4)
        with pytest.raises(ValueError):
            p.transpositions()
        with pytest.raises(ValueError):
            p.size()

    def test_involution_iff_parts_at_most_two_exhaustive_s4(self):
        import itertools

        for image in itertools.permutations(range(4)):
            p = Permutation(image)
            expected = all(part <= 2 for part in p.cycle_type())
            assert p.is_involution() == expected

    def test_involution_iff_parts_at_most_two_random(self):
        rng = random.Random(11)
        for degree in (8, 16):
            for _ in range(200):
                p = random_perm(rng, degree)
                expected = all(part <= 2 for part in p.cycle_type())
                assert p.is_involution() == expected

    def test_cycle_count_plus_size_is_degree(self):
        from revpal.census import iter_involutions

        for p in iter_involutions(8):
            assert p.num_cycles() + p.size() == 8


class TestConjugation:
    def test_conjugate_by_identity(self):
        p = Permutation([4, 2, 6, 0, 3, 1, 5, 7])
        assert conjugate(Permutation.identity(8), p) == p

    def test_relabeling_rule(self):
        # sigma = t(0 4) relabels t(0 1) into t(4 1) = t(1 4).
        sigma = Permutation.transposition(8, 0, 4)
        p = Permutation.transposition(8, 0, 1)
        assert conjugate(sigma, p).transpositions() == {(1, 4)}

    def test_type_preserved_random(self):
        rng = random.Random(23)
        for _ in range(1000):
            degree = rng.choice((4, 8, 16))
            sigma = random_perm(rng, degree)
            p = random_perm(rng, degree)
            assert conjugate(sigma, p).cycle_type() == p.cycle_type()

    def test_conjugate_matches_explicit_composition(self):
        rng = random.Random(5)
        for _ in range(50):
            sigma = random_perm(rng, 8)
            p = random_perm(rng, 8)
            assert conjugate(sigma, p) == compose(compose(sigma, p), sigma.inverse())

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            conjugate(Permutation.identity(4), Permutation.identity(8))


class TestFindConjugator:
    def test_same_operand_gives_identity(self):
        p = Permutation([4, 2, 6, 0, 3, 1, 5, 7])
        assert find_conjugator(p, p).is_identity()

    def test_two_transpositions(self):
        p = Permutation.transposition(4, 0, 1)
        q = Permutation.transposition(4, 2, 3)
        sigma = find_conjugator(p, q)
        assert sigma.image == (2, 3, 0, 1)
        assert sigma(2) == 0 and sigma(3) == 1
        assert conjugate(sigma, q) == p

    def test_worked_pair(self):
        p = Permutation.from_cycles([(0, 1), (3, 5), (2, 7)], 8)
        q = Permutation.from_cycles([(1, 5), (2, 6), (3, 7)], 8)
        sigma = find_conjugator(p, q)
        assert conjugate(sigma, q) == p

    def test_type_mismatch(self):
        with pytest.raises(ValueError):
            find_conjugator(
                Permutation.transposition(4, 0, 1),
                Permutation.from_cycles([(0, 1, 2)], 4),
            )

    def test_random_relabelings(self):
        rng = random.Random(31)
        for _ in range(500):
            degree = rng.choice((4, 8, 16))
            p = random_perm(rng, degree)
            tau = random_perm(rng, degree)
            q = conjugate(tau, p)
            sigma = find_conjugator(p, q)
            assert conjugate(sigma, q) == p

    def test_deterministic(self):
        rng = random.Random(37)
        p = random_perm(rng, 16)
        q = conjugate(random_perm(rng, 16), p)
        assert find_conjugator(p, q) == find_conjugator(p, q)


class TestGroupLaws:
    @given(permutation_pairs())
    def test_closure_and_degree(self, pq):
        p, q = pq
        assert compose(p, q).degree == p.degree

    @given(st.data())
    def test_associativity(self, data):
        degree = data.draw(st.integers(min_value=1, max_value=16))
        perm = st.permutations(list(range(degree))).map(Permutation)
        p, q, r = data.draw(perm), data.draw(perm), data.draw(perm)
        assert compose(compose(p, q), r) == compose(p, compose(q, r))

    @given(permutations())
    def test_identity_laws(self, p):
        e = Permutation.identity(p.degree)
        assert compose(p, e) == p
        assert compose(e, p) == p

    @given(permutations())
    def test_inverse_laws(self, p):
        assert compose(p, p.inverse()).is_identity()
        assert compose(p.inverse(), p).is_identity()
        assert p.inverse().inverse() == p


class TestParsing:
    def test_one_line(self):
        p = parse_permutation("4 2 6 0 3 1 5 7")
        assert p.image == (4, 2, 6, 0, 3, 1, 5, 7)

    def test_one_line_commas(self):
        assert parse_permutation("1, 0, 3, 2").image == (1, 0, 3, 2)

    def test_cycle_form(self):
        p = parse_permutation("(0 4 3)(1 2 6 5)")
        assert p.degree == 8
        assert p.image == (4, 2, 6, 0, 3, 1, 5, 7)

    def test_cycle_form_whitespace_and_commas(self):
        a = parse_permutation("(0, 4, 3)( 1 2 6 5 )")
        b = parse_permutation("(0 4 3)(1 2 6 5)")
        assert a == b

    def test_degree_inference_rounds_to_power_of_two(self):
        assert parse_permutation("(0 2)").degree == 4
        assert parse_permutation("(0 1)").degree == 2
        assert parse_permutation("(0 8)").degree == 16

    def test_degree_override(self):
        assert parse_permutation("(0 1)", degree=8).degree == 8

    def test_one_line_degree_mismatch(self):
        with pytest.raises(ValueError):
            parse_permutation("0 1 2 3", degree=8)

    def test_malformed(self):
        with pytest.raises(ValueError):
            parse_permutation("(0 1")
        with pytest.raises(ValueError):
            parse_permutation("(0 a)")
        with pytest.raises(ValueError):
            parse_permutation("")
        with pytest.raises(ValueError):
            parse_permutation("()")

    def test_round_trip_text_forms(self):
        p = Permutation([4, 2, 6, 0, 3, 1, 5, 7])
        assert parse_permutation(one_line(p)) == p
        assert parse_permutation(cycle_string(p), degree=8) == p
        assert cycle_string(Permutation.identity(4)) == "()"


class TestLinesForDegree:
    def test_powers(self):
        assert lines_for_degree(2) == 1
        assert lines_for_degree(8) == 3
        assert lines_for_degree(16) == 4

    @pytest.mark.parametrize("bad", [0, 1, 3, 6, 12])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            lines_for_degree(bad)
