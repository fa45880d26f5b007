import json
from fractions import Fraction
from itertools import product

import pytest

from superimm.immanants import (
    DegenerateSpectrumError,
    SuperMatrix,
    SuperMatrixError,
    berezinian,
    chain_coefficient,
    chain_coefficient_slotwise,
    characteristic_coefficients,
    classical_immanant,
    complete_invariant,
    diagonalize,
    elementary_invariant,
    generator_matrix,
    idempotent_chain_supertrace,
    immanant_via_idempotent,
    load_supermatrix,
    normalized_immanant_sum,
    power_trace,
    schur_weyl_norm_report,
    star_power,
    star_product,
    star_product_slotwise,
    super_immanant,
    supertrace,
    weight_space_supertrace,
)
from superimm.superring import GrassmannPoint, TruncatedSeries, grassmann_algebra
from superimm.symgroup import primitive_idempotent
from superimm.tableaux import hook_product, partitions, standard_tableaux
from superimm.tensorspace import MultiIndex, composition_to_multiset, sorted_multisets, weak_compositions


def gens(m, n):
    x = generator_matrix(m, n)
    return x, {f"x{i}_{j}": x.algebra.gen(f"x{i}_{j}") for i in range(1, m + n + 1) for j in range(1, m + n + 1)}


def test_parity_pattern_enforced():
    x, g = gens(1, 1)
    bad = [[g["x1_2"], g["x1_1"]], [g["x2_2"], g["x2_1"]]]
    with pytest.raises(SuperMatrixError):
        SuperMatrix(1, 1, bad)


def test_supertrace_definition():
    x, g = gens(2, 1)
    assert supertrace(x) == g["x1_1"] + g["x2_2"] - g["x3_3"]
    ident = SuperMatrix.identity(2, 1, x.algebra)
    assert supertrace(ident) == 1


def test_chain_coefficient_r1_and_all_even():
    x, g = gens(1, 1)
    assert chain_coefficient(x, (1,), (2,)) == g["x1_2"]
    y, h = gens(2, 0)
    assert chain_coefficient(y, (1, 2), (2, 1)) == h["x1_2"] * h["x2_1"]


def test_chain_oracle_exhaustive():
    for m, n in [(1, 1), (2, 1)]:
        x = generator_matrix(m, n)
        for r in (1, 2, 3):
            for out_key in product(range(1, m + n + 1), repeat=r):
                for in_key in product(range(1, m + n + 1), repeat=r):
                    assert chain_coefficient(x, out_key, in_key) == chain_coefficient_slotwise(
                        x, out_key, in_key
                    )


def test_classical_determinant():
    x, g = gens(2, 0)
    det = super_immanant((1, 1), x, (1, 2))
    assert det == g["x1_1"] * g["x2_2"] - g["x1_2"] * g["x2_1"]


def test_single_entry_immanants():
    x, g = gens(1, 1)
    assert super_immanant((1,), x, (1,)) == g["x1_1"]
    assert super_immanant((1,), x, (2,)) == -g["x2_2"]
    total = super_immanant((1,), x, (1,)) + super_immanant((1,), x, (2,))
    assert total == supertrace(x)


def test_vanishing_off_hook():
    x, _ = gens(1, 1)
    for indices in sorted_multisets(1, 1, 4):
        assert super_immanant((2, 2), x, indices).is_zero
    # one degree beyond the acceptance sweep
    for indices in sorted_multisets(1, 1, 5):
        assert super_immanant((3, 2), x, indices).is_zero


def test_idempotent_route_matches_character_route():
    for m, n in [(1, 1)]:
        x = generator_matrix(m, n)
        for r in (1, 2, 3):
            for lam in partitions(r):
                for indices in sorted_multisets(m, n, r):
                    want = super_immanant(lam, x, indices)
                    for tab in standard_tableaux(lam):
                        assert immanant_via_idempotent(lam, x, indices, tab) == want


def test_idempotent_route_requires_sorted():
    x, _ = gens(1, 1)
    with pytest.raises(SuperMatrixError):
        immanant_via_idempotent((1, 1), x, (2, 1))


def test_classical_degeneration_against_oracle():
    for m in (2, 3):
        x = generator_matrix(m, 0)
        for r in (1, 2, 3):
            for lam in partitions(r):
                for indices in sorted_multisets(m, 0, r):
                    assert super_immanant(lam, x, indices) == classical_immanant(
                        x.entries, lam, indices
                    )


def test_invariants_cross_checked_and_commuting():
    x, g = gens(1, 1)
    assert elementary_invariant(x, 0) == 1
    assert elementary_invariant(x, -2).is_zero
    assert elementary_invariant(x, 1) == supertrace(x)
    assert complete_invariant(x, 1) == supertrace(x)
    alphas = [elementary_invariant(x, k) for k in range(4)]
    for a in alphas:
        for b in alphas:
            assert a * b == b * a


def test_star_product_against_slot_oracle():
    for m, n in [(1, 1), (2, 1)]:
        x = generator_matrix(m, n)
        assert star_product(x, x) == star_product_slotwise(x, x)
    y = generator_matrix(2, 0)
    assert star_product(y, y) == y @ y  # no odd signs at n=0
    x = generator_matrix(1, 1)
    assert star_power(x, 1) == x
    assert power_trace(x, 0) == 0  # supertrace of the identity at m=n


def test_berezinian_block_diagonal():
    lam = grassmann_algebra(2)
    x = SuperMatrix(1, 1, [[lam.scalar(6), lam.zero()], [lam.zero(), lam.scalar(2)]])
    assert berezinian(x) == 3


def test_berezinian_lambda2_example():
    lam = grassmann_algebra(2)
    th1, th2 = lam.gen("th1"), lam.gen("th2")
    x = SuperMatrix(1, 1, [[lam.scalar(2), th1], [th2, lam.scalar(1)]])
    assert berezinian(x) == lam.scalar(2) - th1 * th2


def test_berezinian_singular_lower_block():
    from superimm.immanants import SingularMatrixError

    lam = grassmann_algebra(2)
    th1, th2 = lam.gen("th1"), lam.gen("th2")
    x = SuperMatrix(1, 1, [[lam.scalar(2), th1], [th2, th1 * th2]])
    with pytest.raises(SingularMatrixError):
        berezinian(x)


def test_characteristic_series_matches_invariants():
    for m, n, order in [(1, 1, 4), (2, 1, 3), (1, 2, 3), (2, 0, 3), (0, 2, 3)]:
        x = generator_matrix(m, n)
        coeffs = characteristic_coefficients(x, order)
        for k in range(order + 1):
            assert coeffs[k] == elementary_invariant(x, k)


def test_diagonalize_lambda2_example():
    lam = grassmann_algebra(2)
    th1, th2 = lam.gen("th1"), lam.gen("th2")
    x = SuperMatrix(1, 1, [[lam.scalar(2), th1], [th2, lam.scalar(1)]])
    result = diagonalize(x)
    assert result["residual_zero"]
    assert result["even_eigenvalues"] == [lam.scalar(2) + th1 * th2]
    assert result["odd_eigenvalues"] == [lam.scalar(1) + th1 * th2]
    # the Berezinian of tI - X factors through the eigenvalues
    om, vp = result["even_eigenvalues"][0], result["odd_eigenvalues"][0]
    series = TruncatedSeries.from_polys(lam, [lam.one(), -om], 3) * TruncatedSeries.from_polys(
        lam, [lam.one(), -vp], 3
    ).invert()
    x_gen = generator_matrix(1, 1)
    pt = GrassmannPoint(
        x_gen.algebra,
        {"x1_1": lam.scalar(2), "x1_2": th2, "x2_1": th1, "x2_2": lam.scalar(1)},
        n_units=2,
    )
    got = [pt.evaluate(c) for c in characteristic_coefficients(x_gen, 3)]
    assert TruncatedSeries(lam, [got[k] * (-1) ** k for k in range(4)], 3) == series


def test_diagonalize_block_diagonal_trivial():
    lam = grassmann_algebra(2)
    x = SuperMatrix(1, 1, [[lam.scalar(3), lam.zero()], [lam.zero(), lam.scalar(1)]])
    result = diagonalize(x)
    assert result["residual_zero"]
    assert result["u"] == SuperMatrix.identity(1, 1, lam)


def test_diagonalize_rejects_degenerate_bodies():
    lam = grassmann_algebra(2)
    x = SuperMatrix(1, 1, [[lam.scalar(1), lam.gen("th1")], [lam.gen("th2"), lam.scalar(1)]])
    with pytest.raises(DegenerateSpectrumError):
        diagonalize(x)


def test_weight_space_supertrace_matches_immanants():
    for m, n, r in [(1, 1, 1), (1, 1, 2), (1, 1, 3), (2, 1, 1), (2, 1, 2)]:
        x = generator_matrix(m, n)
        for lam in partitions(r):
            for weight in weak_compositions(r, m + n):
                indices = composition_to_multiset(weight)
                alpha = MultiIndex(indices, m, n).repetition_factor()
                lhs = super_immanant(lam, x, indices) * Fraction(1, alpha)
                assert weight_space_supertrace(lam, weight, x) == lhs


def test_weight_space_supertrace_empty_weight_space():
    x = generator_matrix(1, 1)
    # weight (3,0) has no vectors in the (2,1)-isotypic image
    value = weight_space_supertrace((2, 1), (3, 0), x)
    assert value.is_zero
    assert super_immanant((2, 1), x, (1, 1, 1)).is_zero


def test_weight_space_supertrace_off_hook_shape():
    x = generator_matrix(1, 1)
    for weight in weak_compositions(4, 2):
        assert weight_space_supertrace((2, 2), weight, x).is_zero


def test_diagonalize_with_mixed_body():
    # integer shear keeps the spectrum but moves the block bodies off diagonal
    lam = grassmann_algebra(4)
    th = [lam.gen(f"th{i}") for i in range(1, 5)]
    raw = [
        [lam.scalar(2) + th[0] * th[1], lam.scalar(1), th[0] + th[2]],
        [lam.zero(), lam.scalar(-1) + th[2] * th[3], th[1]],
        [th[3], th[0] - th[1], lam.scalar(5) + th[0] * th[3]],
    ]
    x = SuperMatrix(2, 1, raw)
    result = diagonalize(x)
    assert result["residual_zero"]
    bodies = sorted(v.constant_term() for v in result["even_eigenvalues"])
    assert bodies == [Fraction(-1), Fraction(2)]
    assert result["odd_eigenvalues"][0].constant_term() == 5
    assert (result["u"] @ result["u_inv"]) == SuperMatrix.identity(2, 1, lam)


def test_schur_weyl_identity_filling():
    rep = schur_weyl_norm_report((2, 1), standard_tableaux((2, 1))[0], (1, 1, 1), 2, 1)
    assert rep["semistandard"] and not rep["vector_zero"]
    assert rep["norm"] == Fraction(1, hook_product((2, 1)))


def test_idempotent_chain_supertrace_equals_immanant_sum():
    for m, n in [(1, 1), (2, 1)]:
        x = generator_matrix(m, n)
        for r in (1, 2, 3):
            for lam in partitions(r):
                for tab in standard_tableaux(lam):
                    assert idempotent_chain_supertrace(
                        primitive_idempotent(tab), x, r
                    ) == normalized_immanant_sum(lam, x)


def test_load_supermatrix_round_trip(tmp_path):
    doc = {
        "m": 1,
        "n": 1,
        "generators": {"a": "even", "d": "even", "beta": "odd", "gamma": "odd"},
        "entries": [["a", "2*beta"], ["gamma - beta", "d"]],
    }
    x = load_supermatrix(json.dumps(doc))
    assert x.m == 1 and x.n == 1
    assert str(x[1, 2]) == "2*beta"
    bad = dict(doc, entries=[["beta", "a"], ["d", "gamma"]])
    with pytest.raises(SuperMatrixError):
        load_supermatrix(json.dumps(bad))
