"""Constructions tests: chain, Cartan staircase, basis change, Lie preset."""

from __future__ import annotations

import dataclasses
import random

import pytest

from clusterkit.constructions import (
    CartanMatrix,
    acyclic_seed_from_cartan,
    acyclic_staircase,
    bfz_basis_change,
    eval_expr,
    expr_to_json,
    lie_matrix,
    lie_preset,
    staircase_intermediate_matrix,
    type_a_chain,
    type_a_seed,
    verify_polynomial_generators,
)
from clusterkit.laurent import LaurentPoly, exact_div
from clusterkit.seeds import (
    apply_word,
    gamma_quiver,
    is_acyclic,
    parse_matrix,
    seed_mutate,
    skew_symmetrizer,
    validate,
)
from oracles import random_cartan

N3_CARTAN = CartanMatrix([[2, -2, 0], [-2, 2, -1], [0, -1, 2]])


def var(i, m):
    return LaurentPoly.variable(m, i)


# -- tridiagonal chain seeds -----------------------------------------------------


def test_type_a_seed_smallest():
    assert type_a_seed(2).matrix.entries == ((0,), (1,))


def test_type_a_seed_path_quiver():
    q = gamma_quiver(type_a_seed(4).matrix)
    assert q.arrows == (((2, 1), 1), ((3, 2), 1), ((4, 3), 1))


def test_type_a_seed_validates():
    for m in range(2, 11):
        assert validate(type_a_seed(m).matrix) == ()
    with pytest.raises(ValueError):
        type_a_seed(1)


def test_chain_head_formula():
    res = type_a_chain(3)
    one = LaurentPoly.const(3, 1)
    assert res.chain[1] == exact_div(one + var(2, 3), var(1, 3))


def test_chain_m3_recovers_third_variable():
    res = type_a_chain(3)
    assert var(3, 3) == res.chain[2] * var(2, 3) - var(1, 3)


def test_chain_triangular_support():
    for m in (4, 6):
        res = type_a_chain(m)
        for i, head in enumerate(res.chain):
            sup = head.support_vars()
            assert i + 1 in sup
            assert not sup & set(range(i + 2, m + 1))


def test_chain_certificates_verify():
    for m in range(3, 7):
        res = type_a_chain(m)
        out = verify_polynomial_generators(res.certificate, res.disjoint_pair)
        assert out.ok, out.failures


def test_corrupted_certificate_fails_naming_target():
    res = type_a_chain(4)
    exprs = list(res.certificate.expressions)
    label, target, _ = exprs[2]
    exprs[2] = (label, target, ("int", 5))
    bad = dataclasses.replace(res.certificate, expressions=tuple(exprs))
    out = verify_polynomial_generators(bad, res.disjoint_pair)
    assert not out.ok
    assert any(label in f for f in out.failures)


def test_tampered_jacobian_detected():
    res = type_a_chain(3)
    bad = dataclasses.replace(res.certificate, jacobian_det=res.certificate.jacobian_det + 1)
    out = verify_polynomial_generators(bad, res.disjoint_pair)
    assert not out.ok


# -- Cartan-built acyclic seeds ----------------------------------------------------


def test_cartan_validation():
    with pytest.raises(ValueError):
        CartanMatrix([[1, 0], [0, 2]])  # diagonal must be 2
    with pytest.raises(ValueError):
        CartanMatrix([[2, 1], [0, 2]])  # off-diagonal must be <= 0
    with pytest.raises(ValueError):
        CartanMatrix([[2, -1], [0, 2]])  # not symmetrizable
    CartanMatrix([[2, -1], [-2, 2]])  # symmetrizable, fine


def test_cartan_seed_two_by_two():
    seed = acyclic_seed_from_cartan(CartanMatrix([[2, -2], [-2, 2]]))
    assert seed.matrix.entries == ((0, 2), (-2, 0), (1, -2), (0, 1))


def test_cartan_seed_matches_printed_rank3_matrix():
    seed = acyclic_seed_from_cartan(N3_CARTAN)
    expected = parse_matrix("3 3 6\n0 2 0; -2 0 1; 0 -1 0; 1 -2 0; 0 1 -1; 0 0 1")
    assert seed.matrix == expected


def test_cartan_seeds_are_acyclic():
    rng = random.Random(314)
    for _ in range(10):
        seed = acyclic_seed_from_cartan(random_cartan(rng))
        assert is_acyclic(seed.matrix)
        assert validate(seed.matrix) == ()


def test_staircase_rank3_printed_formulas():
    st = acyclic_staircase(N3_CARTAN)
    x = lambda i: var(i, 6)
    assert st.mutated.cluster[0] == exact_div(x(2) ** 2 + x(4), x(1))
    assert st.mutated.cluster[1] == exact_div(
        x(2) ** 4 * x(3) + 2 * x(2) ** 2 * x(3) * x(4) + x(3) * x(4) ** 2 + x(1) ** 2 * x(5),
        x(1) ** 2 * x(2),
    )
    assert st.mutated.cluster[2] == exact_div(
        x(2) ** 4 * x(3)
        + 2 * x(2) ** 2 * x(3) * x(4)
        + x(3) * x(4) ** 2
        + x(1) ** 2 * x(5)
        + x(1) ** 2 * x(2) * x(6),
        x(1) ** 2 * x(2) * x(3),
    )


def test_staircase_coefficient_recovery_example():
    st = acyclic_staircase(N3_CARTAN)
    x = lambda i: var(i, 6)
    assert x(4) == st.mutated.cluster[0] * x(1) - x(2) ** 2


def test_staircase_intermediate_blocks_match_mutation():
    seed = acyclic_seed_from_cartan(N3_CARTAN)
    b1 = parse_matrix("3 3 6\n0 -2 0; 2 0 1; 0 -1 0; -1 0 0; 0 1 -1; 0 0 1")
    b2 = parse_matrix("3 3 6\n0 2 0; -2 0 -1; 0 1 0; -1 0 0; 2 -1 0; 0 0 1")
    b3 = parse_matrix("3 3 6\n0 2 0; -2 0 1; 0 -1 0; -1 0 0; 2 -1 0; 0 1 -1")
    cur = seed
    for i, expected in enumerate((b1, b2, b3), start=1):
        cur = seed_mutate(cur, i)
        assert cur.matrix == expected
        assert staircase_intermediate_matrix(seed.matrix, i) == expected
    # principal part returns to the original after the full staircase
    assert cur.matrix.principal() == seed.matrix.principal()


def test_staircase_certificates_on_random_cartans():
    rng = random.Random(2718)
    for _ in range(5):
        C = random_cartan(rng, max_n=3)
        st = acyclic_staircase(C)
        out = verify_polynomial_generators(st.certificate, st.disjoint_pair)
        assert out.ok, out.failures


def test_certificate_json_shape():
    st = acyclic_staircase(CartanMatrix([[2, -1], [-1, 2]]))
    data = st.certificate.to_json()
    assert set(data) == {"generators", "sample_point", "jacobian_det", "expressions"}
    for entry in data["expressions"]:
        tree = entry["tree"]
        assert isinstance(tree, list) and tree[0] in {"gen", "int", "add", "sub", "mul", "pow"}


def test_expression_tree_round_trip():
    tree = ("sub", ("mul", ("gen", "a"), ("pow", ("gen", "b"), 2)), ("int", 3))
    env = {"a": var(1, 2), "b": var(2, 2)}
    value = eval_expr(tree, env, 2)
    assert value == var(1, 2) * var(2, 2) ** 2 - LaurentPoly.const(2, 3)
    assert expr_to_json(tree) == ["sub", ["mul", ["gen", "a"], ["pow", ["gen", "b"], 2]], ["int", 3]]


# -- change of basis ------------------------------------------------------------


def test_bfz_smallest_example():
    table = bfz_basis_change(CartanMatrix([[2, -1], [-1, 2]]), degree_bound=2)
    x = lambda i: var(i, 4)
    assert table.primed[0] == exact_div(x(3) + x(2), x(1))
    # the first one-step mutation coincides with the first staircase generator
    g = lambda i: var(i, 4)  # formal generator ring also has 4 = 2n variables
    assert table.primed_in_generators[0] == g(3)
    assert table.primed_in_generators[1] == g(1) * g(4) - LaurentPoly.const(4, 1)


def test_bfz_pure_monomial_rows_are_identities():
    table = bfz_basis_change(CartanMatrix([[2, -2], [-2, 2]]), degree_bound=2)
    n = 2
    for row in table.rows:
        if not any(row.exponents[n:]):
            assert len(row.combination) == 1
            mexp, coeff = row.combination[0]
            assert coeff == 1
            assert mexp[:n] == row.exponents[:n] and not any(mexp[n:])


def test_bfz_constraint_excludes_mixed_monomials():
    table = bfz_basis_change(CartanMatrix([[2, -1], [-1, 2]]), degree_bound=3)
    n = 2
    for row in table.rows:
        assert sum(row.exponents) <= 3
        for k in range(n):
            assert row.exponents[k] == 0 or row.exponents[2 * n + k] == 0


def test_bfz_divisibility_on_random_cartans():
    rng = random.Random(1618)
    for _ in range(5):
        bfz_basis_change(random_cartan(rng, max_n=3), degree_bound=1)


# -- the rank-2 Kac-Moody preset ----------------------------------------------------


def test_lie_matrix_shape():
    B = lie_matrix()
    assert (B.profile.n, B.profile.p, B.profile.m) == (6, 6, 8)
    for i in range(1, 7):
        for j in range(1, 7):
            assert B.entry(i, j) == -B.entry(j, i)
    assert skew_symmetrizer(B) == (1,) * 6


def test_lie_preset_schedule():
    lp = lie_preset()
    assert lp.disjoint
    assert lp.full_word == (1, 3, 5, 2, 4, 6, 1, 3, 2, 4, 1, 2)
    assert len(lp.stages) == 7
    assert apply_word(lp.initial, lp.full_word) == lp.final
    # coefficients never move
    for stage in lp.stages:
        assert stage.cluster[6:] == lp.initial.cluster[6:]
    table = lp.variable_table()
    assert table["x1[0]"] == "x1"
    assert set(table) == {f"x{j}[{k}]" for j in range(1, 9) for k in range(0, 7)}


def test_lie_preset_integer_laurent_entries():
    lp = lie_preset()
    for stage in lp.stages:
        for entry in stage.cluster:
            assert isinstance(entry, LaurentPoly)
            assert all(isinstance(c, int) for _, c in entry.terms)
