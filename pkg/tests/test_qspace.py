from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qzeta.errors import EnumerationBoundError, NotSemiInvariant, QZetaError
from qzeta.germ import Germ
from qzeta.qspace import (
    DiagonalGroup,
    QuotientType,
    ell,
    from_type,
    group_order,
    is_normalized,
    make_faithful,
    min_power,
    normalize_cyclic,
    normalize_dim2,
    reduce_projective_weights,
    semi_invariant_weight,
    stabilizer_order,
)


def X(d, *w):
    return QuotientType.cyclic(d, *w)


def test_canonical_rows_and_equality():
    assert X(2, -1, 1) == X(2, 1, 1)
    assert X(5, -1, 2).A == ((4, 2),)
    assert QuotientType.trivial(2).to_str() == "C^2"
    assert X(6, 3, 2).to_str() == "X(6;3,2)"
    assert QuotientType((2, 3), ((1, 1), (1, 2))).to_str() == "X(2,3;1,1|1,2)"


def test_invalid_types():
    with pytest.raises(QZetaError):
        QuotientType((0,), ((1, 1),))
    with pytest.raises(QZetaError):
        QuotientType((2, 3), ((1, 1),))


def test_from_type_orders():
    assert from_type(X(6, 3, 2)).order == 6
    assert group_order(X(4, 2, 2)) == 2  # the action factors through mu_2
    assert group_order(QuotientType((2, 3), ((1, 1), (1, 2)))) == 6


def test_enumeration_bound():
    with pytest.raises(EnumerationBoundError):
        from_type(X(50, 1, 1), bound=10)


def test_ell_examples():
    q1, p1 = 5, 3
    assert ell(X(q1, -1, p1), 0) == q1
    assert ell(QuotientType((2, 3), ((1, 0), (1, 0))), 0) == 6
    assert ell(X(6, 3, 2), 0) == 2
    assert ell(X(6, 3, 2), 1) == 3


def test_stabilizer_examples():
    q = X(6, 3, 2)
    assert stabilizer_order(q, {0}) == 2
    assert stabilizer_order(q, {1}) == 3
    assert stabilizer_order(X(2, 1, 1), {0}) == 1
    assert stabilizer_order(q, {0, 1}) == 6


def test_stabilizer_noncyclic_matches_group():
    q = QuotientType((2, 3), ((1, 0), (1, 2)))
    g = from_type(q)
    for zeros in ({0}, {1}, set()):
        # faithful here, so the abstract and geometric counts agree
        assert stabilizer_order(q, zeros) == g.stabilizer(zeros).order


def test_is_normalized():
    assert is_normalized(X(2, 1, 1))
    assert not is_normalized(X(6, 3, 2))
    assert is_normalized(X(5, 4, 1))
    assert is_normalized(QuotientType.trivial(3))


def test_normalize_dim2_examples():
    assert normalize_dim2(X(6, 3, 2)) == (QuotientType.trivial(2), (Fraction(1, 2), Fraction(1, 3)))
    assert normalize_dim2(X(2, 1, 1)) == (X(2, 1, 1), (1, 1))
    target, transport = normalize_dim2(X(4, 2, 1))
    assert target == X(2, 1, 1) and transport == (1, Fraction(1, 2))
    assert is_normalized(target)


def test_normalize_requires_faithful():
    with pytest.raises(QZetaError):
        normalize_cyclic(X(4, 2, 2))
    assert make_faithful(X(4, 2, 2)) == X(2, 1, 1)


def test_semi_invariant_weight():
    q = X(6, 3, 2)
    f = Germ.from_factors((2, 3), [(Germ({(2, 0): 1, (0, 3): 1}, 2), 1)], 1, q)
    assert semi_invariant_weight(f) == (0,)
    assert semi_invariant_weight(Germ.monomial((1, 0), 1, X(2, 1, 1))) == (1,)
    g = Germ({(2, 0): 1, (0, 1): 1}, 2) * Germ({(2, 0): 1, (0, 1): -1}, 2) ** 3
    with pytest.raises(NotSemiInvariant):
        semi_invariant_weight(g.with_ambient(X(2, 1, 1)))


def test_min_power():
    assert min_power((0,), (6,)) == 1
    assert min_power((1,), (2,)) == 2
    assert min_power((3,), (12,)) == 4
    assert min_power((Fraction(5, 2),), (6,)) == 12


def test_reduce_projective_weights():
    assert reduce_projective_weights((3, 5)) == (1, 1)
    assert reduce_projective_weights((1, 1, 1)) == (1, 1, 1)
    assert reduce_projective_weights((6, 10, 15)) == (1, 1, 1)
    assert reduce_projective_weights((2, 3, 4)) == (1, 3, 2)


def test_diagonal_group_closure():
    g = DiagonalGroup.generated_by([(Fraction(1, 2), 0), (0, Fraction(1, 3))])
    assert g.order == 6
    assert (Fraction(-1, 2), Fraction(2, 3)) in g
    assert g.character_order(0) == 2


types = st.integers(1, 3).flatmap(
    lambda r: st.tuples(
        st.lists(st.integers(1, 12), min_size=r, max_size=r),
        st.integers(1, 3),
    ).flatmap(
        lambda t: st.tuples(
            st.just(tuple(t[0])),
            st.lists(
                st.lists(st.integers(-12, 12), min_size=t[1], max_size=t[1]),
                min_size=len(t[0]),
                max_size=len(t[0]),
            ),
        )
    )
).map(lambda t: QuotientType(t[0], tuple(tuple(r) for r in t[1])))


@settings(max_examples=150, deadline=None)
@given(types)
def test_ell_by_lcm_equals_character_order(q):
    g = from_type(q)
    for j in range(q.n):
        assert ell(q, j) == g.character_order(j)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 60), st.integers(-60, 60), st.integers(-60, 60))
def test_normalization_is_normalized(d, a, b):
    q = make_faithful(X(d, a, b))
    target, (tx, ty) = normalize_dim2(q)
    assert is_normalized(target)
    # orders multiply back: |G| = |G'| * (d,a)(d,b)
    assert q.d[0] == target.d[0] * tx.denominator * ty.denominator


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 30), st.integers(-30, 30), st.integers(-30, 30))
def test_cyclic_stabilizer_closed_form_matches_enumeration(d, a, b):
    q = X(d, a, b)
    for zeros in (set(), {0}, {1}):
        free = [j for j in range(2) if j not in zeros]
        count = sum(
            1 for k in range(d) if all((k * q.A[0][j]) % d == 0 for j in free)
        )
        assert stabilizer_order(q, zeros) == count
