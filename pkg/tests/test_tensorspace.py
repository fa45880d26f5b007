import random
from fractions import Fraction
from itertools import product

import pytest

from superimm.symgroup import Permutation, symmetric_group
from superimm.tensorspace import (
    MultiIndex,
    TensorOperator,
    action_sign,
    apply_group_algebra_to_state,
    apply_permutation_to_state,
    bilinear_form,
    composed_tuple,
    composition_to_multiset,
    comodule_sign,
    extraction_sign,
    immanant_prefactor,
    permuted_tuple,
    sorted_multisets,
    tuple_parities,
    weak_compositions,
)


def test_action_sign_examples():
    s = Permutation.transposition(1, 2, 2)
    assert action_sign((2, 2), 1, s) == -1  # two odd slots swapped
    assert action_sign((1, 2), 1, s) == 1
    assert action_sign((2, 2), 1, Permutation.identity(2)) == 1


def test_permutation_operators_compose():
    for m, n in [(1, 1), (2, 1)]:
        for r in (2, 3):
            for s in symmetric_group(r):
                for t in symmetric_group(r):
                    op = TensorOperator.from_permutation(s, m, n).compose(
                        TensorOperator.from_permutation(t, m, n)
                    )
                    assert op == TensorOperator.from_permutation(s * t, m, n)


def test_action_on_states_matches_operator():
    rng = random.Random(7)
    for _ in range(20):
        r = rng.choice((2, 3))
        perm = rng.choice(symmetric_group(r))
        key = tuple(rng.choice((1, 2)) for _ in range(r))
        state = {key: Fraction(3)}
        direct = apply_permutation_to_state(perm, state, 1)
        via_op = TensorOperator.from_permutation(perm, 1, 1).apply(state)
        assert direct == via_op


def test_contravariance_of_the_pairing():
    # <P_s u, w> = <u, P_{s^-1} w> on all basis pairs
    for m, n in [(1, 1), (2, 1)]:
        for r in (2, 3):
            for s in symmetric_group(r):
                s_inv = s.inverse()
                for u in product(range(1, m + n + 1), repeat=r):
                    for w in product(range(1, m + n + 1), repeat=r):
                        lhs = bilinear_form(
                            apply_permutation_to_state(s, {u: Fraction(1)}, m), {w: Fraction(1)}
                        )
                        rhs = bilinear_form(
                            {u: Fraction(1)}, apply_permutation_to_state(s_inv, {w: Fraction(1)}, m)
                        )
                        assert lhs == rhs


def test_extraction_sign_properties():
    # no sign on diagonal coefficients, none on all-even tuples
    for m, n in [(1, 1), (2, 1), (1, 2)]:
        for r in (1, 2, 3):
            for key in product(range(1, m + n + 1), repeat=r):
                assert extraction_sign(key, key, m) == 1
    assert extraction_sign((1,), (1,), 1) == 1
    assert extraction_sign((2,), (1,), 1) == -1  # odd out, even in at r=1


def test_comodule_sign_values():
    assert comodule_sign((2, 1), (1, 2), 1) == -1
    assert comodule_sign((1, 2), (1, 2), 1) == 1
    assert comodule_sign((1, 1), (1, 1), 1) == 1


def test_immanant_prefactor():
    assert immanant_prefactor((1, 2), (1, 2), 1) == -1
    assert immanant_prefactor((1, 1), (1, 1), 1) == 1
    assert immanant_prefactor((2,), (1,), 1) == 1


def test_supertrace_of_flip_counts_dimension():
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        flip = TensorOperator.from_permutation(Permutation.transposition(1, 2, 2), m, n)
        assert flip.supertrace() == m - n
        # partial contraction agrees with the full one
        twice = flip.contract_slots([1]).contract_slots([1])
        assert twice.coeffs.get(((), ()), Fraction(0)) == m - n


def test_weight_projector():
    proj = TensorOperator.weight_projector((1, 1), 1, 1)
    assert proj.apply({(1, 2): Fraction(1)}) == {(1, 2): Fraction(1)}
    assert proj.apply({(1, 1): Fraction(1)}) == {}


def test_group_algebra_operator_matches_state_action():
    from superimm.symgroup import GroupAlgebraElement

    r, m, n = 3, 1, 1
    s = Permutation.transposition(1, 2, 3)
    t = Permutation((2, 3, 1))
    elem = GroupAlgebraElement(r, {s: Fraction(1, 2), t: Fraction(-2)})
    op = TensorOperator.from_group_algebra(elem, m, n)
    ident = TensorOperator.identity(m, n, r)
    for key in product(range(1, m + n + 1), repeat=r):
        state = {key: Fraction(1)}
        assert op.apply(state) == apply_group_algebra_to_state(elem, state, m)
        assert ident.apply(state) == state


def test_multi_index():
    idx = MultiIndex((1, 2, 2), 1, 1)
    assert idx.parities == (0, 1, 1)
    assert idx.total_parity == 0
    assert idx.multiplicities() == (1, 2)
    assert idx.repetition_factor() == 2
    assert idx.is_sorted
    assert not MultiIndex((2, 1), 1, 1).is_sorted
    with pytest.raises(ValueError):
        MultiIndex((0, 1), 1, 1)


def test_index_helpers():
    s = Permutation((2, 3, 1))
    key = (5, 6, 7)
    assert permuted_tuple(key, s) == (7, 5, 6)
    assert composed_tuple(key, s) == (6, 7, 5)
    assert tuple_parities((1, 2, 3), 2) == (0, 0, 1)
    assert len(sorted_multisets(1, 1, 3)) == 4
    assert len(weak_compositions(3, 2)) == 4
    assert composition_to_multiset((2, 0, 1)) == (1, 1, 3)
