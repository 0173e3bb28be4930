import pytest

from helpers import random_scalar
from qact import (
    Mat,
    MalformedExpression,
    Scalar,
    as_scalar,
    build_model,
    combine_units,
    eval_gamma_expr,
    express_in_units,
    parse_gamma_expr,
    selftest,
)

E4 = Mat.identity(4)


def ev(text, model):
    return eval_gamma_expr(parse_gamma_expr(text), model)


def test_selftest_passes(model):
    report = selftest(model)
    assert report.ok
    names = [c.name for c in report.checks]
    assert names == ["anticommutators", "unit_products", "unit_resolution", "units_are_standard"]


def test_metric_relations(model):
    g = model.gamma
    assert g[0] * g[0] == E4
    for k in (1, 2, 3):
        assert g[k] * g[k] == E4.scale(-1)
    assert (g[1] * g[2] + g[2] * g[1]).is_zero
    assert (g[0] * g[3] + g[3] * g[0]).is_zero


def test_units_equal_standard_units(model):
    for i in range(1, 5):
        for j in range(1, 5):
            assert model.unit(i, j) == Mat.unit(4, i, j)


def test_unit_products_exhaustive(model):
    for i in range(1, 5):
        for j in range(1, 5):
            for k in range(1, 5):
                for l in range(1, 5):
                    expected = model.unit(i, l) if j == k else Mat.zero(4)
                    assert model.unit(i, j) * model.unit(k, l) == expected


def test_e11_product_expression(model):
    g0, g1, g2, _ = model.gamma
    g12 = g1 * g2
    lhs = (E4 + g0) * (E4 + g12.scale(Scalar(0, 1)))
    assert lhs.scale(Scalar(1, 0, 4)) == Mat.unit(4, 1, 1)


def test_eval_examples(model):
    assert ev("(1-g0)*(1-i*g12)", model) == Mat.unit(4, 4, 4).scale(4)
    assert ev("(1+g0)*(1+i*g12)", model) == Mat.unit(4, 1, 1).scale(4)
    assert ev("1", model) == E4


INVARIANT_FORMS = [
    ("(1-g0)*(-g1+i*g2)*g3", (4, 3)),
    ("(1-g0)*(1-i*g12)", (4, 4)),
    ("(1-g0)*(1+i*g12)", (3, 3)),
    ("(1+g0)*(1-i*g12)", (2, 2)),
    ("(1+g0)*(g1+i*g2)*g3", (1, 2)),
    ("(1+g0)*(1+i*g12)", (1, 1)),
    ("(1-g0)*(g1+i*g2)*g3", (3, 4)),
]


@pytest.mark.parametrize("text,unit", INVARIANT_FORMS)
def test_invariant_forms_hit_single_units(text, unit, model):
    assert ev(text, model) == model.unit(*unit).scale(4)


def test_all_sixteen_unit_expressions(model):
    from qact.clifford import UNIT_EXPRESSIONS

    for (i, j), text in UNIT_EXPRESSIONS.items():
        assert ev(text, model) == Mat.unit(4, i, j), (i, j)


def test_express_in_units(model):
    coeffs = express_in_units(E4, model)
    for i in range(1, 5):
        for j in range(1, 5):
            assert coeffs[(i, j)] == (as_scalar(1) if i == j else as_scalar(0))
    coeffs = express_in_units(Mat.unit(4, 4, 3).scale(4), model)
    assert coeffs[(4, 3)] == as_scalar(4)
    assert sum(1 for v in coeffs.values() if v) == 1
    coeffs = express_in_units(ev("(1-g0)*(-g1+i*g2)*g3", model), model)
    assert coeffs[(4, 3)] == as_scalar(4)
    assert sum(1 for v in coeffs.values() if v) == 1


def test_express_combine_round_trip(model, rng):
    for _ in range(20):
        coeffs = {
            (rng.randint(1, 4), rng.randint(1, 4)): random_scalar(rng)
            for _ in range(rng.randint(1, 6))
        }
        m = combine_units(coeffs, model)
        back = express_in_units(m, model)
        assert combine_units(back, model) == m


def test_scalar_coefficients_in_grammar(model):
    assert ev("3/2*g0", model) == model.gamma[0].scale(Scalar(3, 0, 2))
    assert ev("2*g1*g2 - 2*g12", model).is_zero
    assert ev("i*i", model) == E4.scale(-1)
    assert ev("(1-g0)*(1-g0)", model) == ev("2*(1-g0)", model)


@pytest.mark.parametrize("bad", ["", "(1-g0", "g4", "1++2", "g12*", "2/0i", "g 1", "*g0"])
def test_parser_errors(bad, model):
    with pytest.raises(MalformedExpression):
        parse_gamma_expr(bad)


def test_build_model_is_deterministic(model):
    other = build_model()
    assert other.gamma == model.gamma
    assert other.units == model.units
