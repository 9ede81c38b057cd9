import pytest

from cycles.signed_sets import SignedEdgeSet, check_orthogonality, compose, compose_all


def test_parts_must_be_disjoint():
    with pytest.raises(ValueError):
        SignedEdgeSet.of([1, 2], [2])


def test_rendering():
    assert str(SignedEdgeSet.of([3, 1, 2], [6, 4])) == "+{1,2,3}/-{4,6}"
    assert str(SignedEdgeSet.of()) == "+{}/-{}"


def test_sign_and_support():
    signed = SignedEdgeSet.of([4, 6], [3])
    assert signed.support == {3, 4, 6}
    assert signed.sorted_support == (3, 4, 6)
    assert (signed.sign(4), signed.sign(3), signed.sign(1)) == (1, -1, 0)
    assert 3 in signed and 1 not in signed
    assert len(signed) == 3
    assert signed.min_element() == 3
    assert not signed.is_positive()


def test_negation_and_orientation():
    signed = SignedEdgeSet.of([2], [3])
    assert -signed == SignedEdgeSet.of([3], [2])
    assert signed.oriented_positive_on(3) == -signed
    assert signed.oriented_positive_on(2) == signed
    with pytest.raises(ValueError):
        signed.oriented_positive_on(7)


def test_restriction():
    signed = SignedEdgeSet.of([1, 2], [3, 4])
    assert signed.restricted_to({2, 3, 9}) == SignedEdgeSet.of([2], [3])
    assert signed.without({1, 4}) == SignedEdgeSet.of([2], [3])


def test_composition_keeps_first_signs_on_overlap():
    first = SignedEdgeSet.of([1], [2])
    second = SignedEdgeSet.of([2, 3])
    assert compose(first, second) == SignedEdgeSet.of([1, 3], [2])
    assert compose(first, first) == first
    assert compose_all([first, second, SignedEdgeSet.of([], [4])]) == SignedEdgeSet.of([1, 3], [2, 4])
    assert compose_all([]) is None


def test_orthogonality():
    cycle = SignedEdgeSet.of([2, 3], [1])
    assert check_orthogonality(cycle, SignedEdgeSet.of([1, 2]))
    assert check_orthogonality(cycle, SignedEdgeSet.of([5]))
    assert not check_orthogonality(cycle, SignedEdgeSet.of([2, 3]))
