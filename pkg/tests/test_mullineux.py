from fractions import Fraction

import pytest

from regcrystals import abacus as ab
from regcrystals.ladders import LadderParams, fingerprint
from regcrystals.mullineux import (
    classify_hooks,
    hook_class,
    james_regularise,
    lyle_check,
    mullineux,
    mullineux_oracle,
    mullineux_steps,
    slopes,
)
from regcrystals.partitions import Partition, enumerate_partitions, parse_partition

P = parse_partition


def all_up_to(n):
    for s in range(n + 1):
        yield from enumerate_partitions(s)


class TestSlopes:
    def test_worked_example(self):
        assert slopes(P("3,2,1,1,1,1"), 3) == {Fraction(2), Fraction(1)}

    def test_second_diagram(self):
        got = slopes(P("4,1,1,1,1,1"), 3)
        assert Fraction(4, 3) in got and Fraction(3) in got

    def test_empty(self):
        assert slopes(Partition(), 4) == set()


class TestMullineux:
    def test_worked_example(self):
        assert mullineux(P("6,2,1"), 3) == P("5,2,2")

    def test_worked_example_trace(self):
        steps = [(y, mu) for y, mu in mullineux_steps(P("6,2,1"), 3)]
        assert [(str(y), mu.parts) for y, mu in steps] == [
            ("2", (4, 1, 1, 1, 1, 1)),
            ("4/3", (5, 1, 1, 1, 1)),
            ("1", (5, 2, 2)),
        ]

    def test_small_values(self):
        assert mullineux(P("3,1"), 2) == P("3,1")
        assert mullineux(P("3"), 3) == P("2,1")
        assert mullineux(Partition(), 4) == Partition()

    def test_e_1_convention(self):
        assert mullineux(Partition(), 1) == Partition()
        with pytest.raises(ValueError):
            mullineux(P("1"), 1)

    def test_rejects_singular_input(self):
        with pytest.raises(ValueError):
            mullineux(P("2,2,2"), 3)

    def test_matches_oracle(self):
        for e in (2, 3, 4):
            for la in all_up_to(11):
                if la.is_e_regular(e):
                    assert mullineux(la, e) == mullineux_oracle(la, e)

    def test_involution_and_regularity(self):
        for e in (3, 4):
            for la in all_up_to(10):
                if not la.is_e_regular(e):
                    continue
                image = mullineux(la, e)
                assert image.size == la.size and image.is_e_regular(e)
                assert mullineux(image, e) == la

    def test_identity_for_e_2(self):
        for la in all_up_to(12):
            if la.is_e_regular(2):
                assert mullineux(la, 2) == la

    def test_composite_preserves_content(self):
        for e in (2, 3):
            for la in all_up_to(9):
                if la.is_e_restricted(e):
                    image = mullineux(la.conjugate(), e)
                    assert image.e_content(e) == la.e_content(e)
                    assert ab.e_core(image, e) == ab.e_core(la, e)


class TestOracle:
    def test_residue_choice_is_irrelevant(self):
        for e in (2, 3, 4):
            for la in all_up_to(9):
                if la.is_e_regular(e):
                    assert mullineux_oracle(la, e, "min") == mullineux_oracle(la, e, "max")

    def test_rejects_singular_input(self):
        with pytest.raises(ValueError):
            mullineux_oracle(P("1,1"), 2)


class TestJamesRegularise:
    def test_examples(self):
        assert james_regularise(P("1^4"), 3) == P("2,2")
        assert james_regularise(P("2,2"), 2) == P("3,1")

    def test_regular_fixed(self):
        for la in all_up_to(10):
            if la.is_e_regular(3):
                assert james_regularise(la, 3) == la

    def test_is_class_maximum(self):
        params = LadderParams(3, 1)
        for n in range(9):
            groups = {}
            for la in enumerate_partitions(n):
                groups.setdefault(frozenset(fingerprint(la, params).items()), []).append(la)
            for cls in groups.values():
                top = james_regularise(cls[0], 3)
                assert all(james_regularise(la, 3) == top for la in cls)
                assert all(top.dominates(la) for la in cls)


class TestHookClassification:
    def test_forced_cases(self):
        assert hook_class(0, 2, 3) == "steep"
        assert hook_class(2, 0, 3) == "shallow"
        assert hook_class(1, 1, 2) == "both"
        assert hook_class(2, 3, 4) == "neither"

    def test_diagram_examples(self):
        [(hk, cls)] = classify_hooks(P("1,1,1"), 3)
        assert (hk.length, cls) == (3, "steep")
        [(hk, cls)] = classify_hooks(P("3"), 3)
        assert (hk.length, cls) == (3, "shallow")
        classes = dict()
        for hk, cls in classify_hooks(P("4,2,1,1,1"), 4):
            classes[hk.corner] = (hk.length, cls)
        assert classes[(1, 1)] == (8, "neither")

    def test_only_divisible_lengths(self):
        for la in all_up_to(9):
            for hk, _ in classify_hooks(la, 3):
                assert hk.length % 3 == 0


class TestLyle:
    def test_staircase_example(self):
        report = lyle_check(P("1,1,1"), 3)
        assert report.regularised == P("2,1")
        assert report.mullineux_image == P("3")
        assert report.conjugate_regularised == P("3")
        assert report.equal and report.dominates
        assert report.all_steep_or_shallow and report.criterion_matches

    def test_empty(self):
        report = lyle_check(Partition(), 4)
        assert report.equal and report.dominates and report.criterion_matches

    def test_exhaustive_small(self):
        for e in (2, 3, 4):
            for la in all_up_to(9):
                report = lyle_check(la, e)
                assert report.dominates
                assert report.criterion_matches
