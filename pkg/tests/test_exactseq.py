"""Tests for long exact sequence bookkeeping, the solver and splicing."""
import numpy as np
import pytest

from kblowup.core import linalg
from kblowup.core.exceptions import InconsistentSequenceError, SpliceConflictError, ValidationError
from kblowup.exactseq import (
    DimensionValue,
    LESInstance,
    require_known,
    sequence_from_dimensions,
    solve,
    splice,
)


def labels(count: int, prefix: str = "s") -> list[str]:
    return [f"{prefix}{k}" for k in range(count)]


class TestDimensionValue:
    def test_known_zero_is_zero(self):
        assert DimensionValue.known(0) == DimensionValue.zero()
        assert DimensionValue.known(0).is_zero

    def test_negative_dimension_rejected(self):
        with pytest.raises(ValidationError):
            DimensionValue.known(-1)

    def test_direct_sum(self):
        assert DimensionValue.direct_sum(DimensionValue.known(2), DimensionValue.known(3)).value == 5
        assert DimensionValue.direct_sum(DimensionValue.known(2), DimensionValue.unknown()).is_unknown
        mixed = DimensionValue.direct_sum(DimensionValue.symbolic("A"), DimensionValue.known(1))
        assert mixed.is_symbolic

    def test_text(self):
        assert str(DimensionValue.known(4)) == "4"
        assert str(DimensionValue.unknown()) == "?"
        assert str(DimensionValue.symbolic("A")) == "sym(A)"


def test_duplicate_labels_rejected():
    with pytest.raises(ValidationError):
        sequence_from_dimensions(["a", "a"], [0, 1])


def test_isomorphism_between_zeros():
    outcome = solve(sequence_from_dimensions(labels(4), [0, None, 5, 0]))
    assert outcome.instance.value("s1") == DimensionValue.known(5)
    assert [d.rule for d in outcome.log if d.rule != "R5"] == ["R2"]


def test_short_exact_sequence():
    outcome = solve(sequence_from_dimensions(labels(5), [0, None, 3, 1, 0]))
    assert require_known(outcome.instance, "s1") == 2


def test_slot_between_zeros_vanishes():
    outcome = solve(sequence_from_dimensions(labels(3), [0, None, 0]))
    assert outcome.instance.value("s1").is_zero
    assert outcome.log[0].rule == "R1"


def test_longer_window_alternating_sum():
    outcome = solve(sequence_from_dimensions(labels(6), [0, 1, 4, None, 2, 0]))
    assert require_known(outcome.instance, "s3") == 5


def test_two_unknowns_stay_unknown():
    outcome = solve(sequence_from_dimensions(labels(5), [0, 3, None, None, 0]))
    assert outcome.instance.value("s2").is_unknown
    with pytest.raises(ValidationError):
        require_known(outcome.instance, "s2")


def test_solver_leaves_input_untouched():
    les = sequence_from_dimensions(labels(4), [0, None, 5, 0])
    solve(les)
    assert les.value("s1").is_unknown


@pytest.mark.parametrize("dims", [[0, 5, 6, 0], [0, 1, 0], [0, None, 1, 5, 0]])
def test_inconsistent_sequences(dims):
    with pytest.raises(InconsistentSequenceError):
        solve(sequence_from_dimensions(labels(len(dims)), dims))


def test_surjection_and_injection_annotations():
    outcome = solve(sequence_from_dimensions(labels(5), [0, 2, None, 1, 0]))
    notes = {(d.slot, d.result) for d in outcome.log if d.rule == "R5"}
    assert ("s1 -> s2", "injective") in notes
    assert ("s2 -> s3", "surjective") in notes


def test_symbolic_values_propagate_across_isomorphisms():
    les = LESInstance.build([
        ("a", DimensionValue.zero()),
        ("b", DimensionValue.symbolic("A")),
        ("c", DimensionValue.unknown()),
        ("d", DimensionValue.zero()),
    ])
    assert solve(les).instance.value("c") == DimensionValue.symbolic("A")


def test_cyclic_sequence_wraps():
    les = sequence_from_dimensions(labels(6), [0, None, 3, 2, 0, 0], cyclic=True)
    assert require_known(solve(les).instance, "s1") == 1


def test_splice_propagates_shared_terms():
    first = sequence_from_dimensions(["a0", "x", "y", "a3"], [0, None, None, 0], name="first")
    second = sequence_from_dimensions(["b0", "y2", "z", "b3"], [0, None, 4, 0], name="second")
    diagram = splice(first, second, {"y": "y2"})
    assert require_known(diagram.first, "x") == 4
    assert any("splice" in line for line in diagram.log)


def test_splice_conflict():
    first = sequence_from_dimensions(["a0", "x", "y", "a3"], [0, 2, 2, 0], name="first")
    second = sequence_from_dimensions(["b0", "y2", "z", "b3"], [0, None, 4, 0], name="second")
    with pytest.raises(SpliceConflictError):
        splice(first, second, {"y": "y2"})


def test_splice_validates_labels():
    first = sequence_from_dimensions(["a0", "x", "a2"], [0, None, 0])
    with pytest.raises(ValidationError):
        splice(first, first.copy(), {"missing": "x"})


def test_records():
    records = sequence_from_dimensions(["a", "b"], [0, None]).to_records()
    assert records[1] == {"label": "b", "state": "unknown", "value": "?", "provenance": ""}


def random_invertible(rng, n: int):
    """Unit lower times unit upper triangular: invertible over QQ."""
    lower = linalg.from_columns(
        [{j: 1, **{i: int(rng.integers(-3, 4)) for i in range(j + 1, n)}} for j in range(n)], n
    )
    upper = linalg.from_columns(
        [{j: 1, **{i: int(rng.integers(-3, 4)) for i in range(j)}} for j in range(n)], n
    )
    return linalg.matmul(lower, upper)


def random_exact_sequence(rng, length: int):
    """
    Dimensions and maps of a random exact sequence 0 -> V_0 -> ... -> V_{length-1} -> 0.

    In adapted bases f_j kills the image of f_{j-1} and sends the complement
    onto the first rank(f_j) basis vectors of V_{j+1}; random base changes
    hide the block form.
    """
    ranks = [0, *(int(r) for r in rng.integers(0, 4, size=length - 1)), 0]
    dims = [ranks[j] + ranks[j + 1] for j in range(length)]
    bases = [random_invertible(rng, d) for d in dims]
    maps = []
    for j in range(length - 1):
        block = linalg.from_columns(
            [{k - ranks[j]: 1} if k >= ranks[j] else {} for k in range(dims[j])], dims[j + 1]
        )
        if dims[j] and dims[j + 1]:
            block = linalg.matmul(linalg.matmul(bases[j + 1], block), bases[j].inv())
        maps.append(block)
    return dims, maps


def assert_exact(dims, maps):
    for first, second in zip(maps, maps[1:]):
        assert linalg.is_zero(linalg.matmul(second, first))
    ranks = [0, *(linalg.rank(f) for f in maps), 0]
    assert dims == [ranks[j] + ranks[j + 1] for j in range(len(dims))]


class TestRandomExactSequences:
    def test_single_hidden_slot_is_recovered(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            dims, maps = random_exact_sequence(rng, int(rng.integers(2, 7)))
            assert_exact(dims, maps)
            truth = [0, *dims, 0]
            hidden = int(rng.integers(1, len(truth) - 1))
            given = [None if k == hidden else d for k, d in enumerate(truth)]
            outcome = solve(sequence_from_dimensions(labels(len(truth)), given))
            assert [require_known(outcome.instance, s) for s in labels(len(truth))] == truth

    def test_deductions_never_contradict_truth(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            dims, maps = random_exact_sequence(rng, int(rng.integers(3, 8)))
            assert_exact(dims, maps)
            truth = [0, *dims, 0]
            hidden = set(rng.choice(np.arange(1, len(truth) - 1), size=2, replace=False).tolist())
            given = [None if k in hidden else d for k, d in enumerate(truth)]
            outcome = solve(sequence_from_dimensions(labels(len(truth)), given))
            for label, d in zip(labels(len(truth)), truth):
                value = outcome.instance.value(label)
                assert value.is_unknown or value == DimensionValue.known(d)
