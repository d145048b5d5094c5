from fractions import Fraction

import pytest

from ncbinom import (AlgebraContext, ContextError, Unitized, embed, u_delta,
                     u_delta_power, u_delta_power_closed, unit,
                     verify_unitized_binomial, verify_unitized_power)
from conftest import random_element, seeded


@pytest.fixture
def uctx():
    return AlgebraContext(("a", "b", "c"), ("beta", "gamma"))


def test_part_must_have_no_constant_term(uctx):
    with pytest.raises(ValueError):
        Unitized(uctx.one(), 0)
    with pytest.raises(ValueError):
        Unitized(uctx.gen("a") + 1)


def test_linear_structure(uctx):
    a, b, _ = uctx.gens()
    assert Unitized(a, 0) + Unitized(uctx.zero(), 1) == Unitized(a, 1)
    assert Unitized(a, 3).scale(2) == Unitized(2 * a, 6)
    u = Unitized(a, Fraction(1, 2))
    assert u - u == Unitized(uctx.zero(), 0)
    assert -u == Unitized(-a, Fraction(-1, 2))


def test_multiplication_rule(uctx):
    a, b, _ = uctx.gens()
    assert Unitized(a, 1) * Unitized(b, 2) == Unitized(a * b + b + 2 * a, 2)
    assert Unitized(a, 0) * Unitized(b, 0) == Unitized(a * b, 0)


def test_unit_is_identity(uctx):
    a, _, _ = uctx.gens()
    one = unit(uctx)
    u = Unitized(a, Fraction(2, 3))
    assert one * u == u
    assert u * one == u
    assert one * one == one


def test_associativity_random(uctx):
    rng = seeded(808)
    for _ in range(12):
        def pick():
            part = random_element(rng, uctx)
            part = part - part.coefficient(())  # strip any constant term
            return Unitized(part, rng.randint(-2, 2))
        u, v, w = pick(), pick(), pick()
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w


def test_embedding_is_multiplicative(uctx):
    rng = seeded(809)
    for _ in range(8):
        x = random_element(rng, uctx, max_len=2)
        x = x - x.coefficient(())
        y = random_element(rng, uctx, max_len=2)
        y = y - y.coefficient(())
        assert embed(x) * embed(y) == embed(x * y)
        assert embed(x) + embed(y) == embed(x + y)


def test_power_and_flatten(uctx):
    a, _, _ = uctx.gens()
    u = Unitized(a, 1)
    assert u ** 0 == unit(uctx)
    assert u ** 2 == u * u
    assert u.flatten() == a + 1
    assert (u ** 2).flatten() == (a + 1) * (a + 1)


def test_embedded_power_scalar_is_zero(uctx):
    a, b, _ = uctx.gens()
    x = embed(a + 2 * b)
    for n in range(1, 7):
        assert (x ** n).scalar.is_zero


def test_delta_examples(uctx):
    a, b, c = uctx.gens()
    one = unit(uctx)
    d = u_delta(Unitized(a, 0), Unitized(b, 2), one)
    assert d == Unitized(a - b, -2)
    assert u_delta(embed(a), embed(a), embed(c)) == embed(a * c - c * a)
    same = Unitized(a, 1)
    assert u_delta(same, same, one) == Unitized(uctx.zero(), 0)


def test_delta_closed_form_matches_iteration(uctx):
    rng = seeded(810)
    for _ in range(8):
        def pick():
            part = random_element(rng, uctx, max_len=2)
            part = part - part.coefficient(())
            return Unitized(part, rng.randint(-1, 2))
        left, right, x = pick(), pick(), pick()
        for n in range(5):
            assert (u_delta_power_closed(left, right, x, n)
                    == u_delta_power(left, right, x, n))


def test_verify_unitized_power_grid(uctx):
    a, b, _ = uctx.gens()
    for n in range(5):
        for beta in (0, 1, -2, Fraction(3, 5)):
            report = verify_unitized_power(a, b, beta, n)
            assert report.equal, (n, beta)
            assert report.identity == "unitized-power"


def test_verify_unitized_power_symbolic(uctx):
    a, b, _ = uctx.gens()
    beta = uctx.param("beta")
    assert verify_unitized_power(a, b, beta, 4).equal
    # nonzero weight on the left element too
    alpha = uctx.param("gamma")
    assert verify_unitized_power(a, b, beta, 4, alpha=alpha).equal


def test_verify_unitized_binomial_grid(uctx):
    a, b, c = uctx.gens()
    for n in range(4):
        for gamma in (0, 1, -2, Fraction(3, 5)):
            assert verify_unitized_binomial(a, b, c, gamma, n).equal


def test_reports_carry_weights(uctx):
    a, b, _ = uctx.gens()
    report = verify_unitized_power(a, b, Fraction(3, 5), 2)
    assert report.params["beta"] == "3/5"
    assert report.params["alpha"] == "0"


def test_mixed_context_rejected(uctx):
    other = AlgebraContext(("a", "b"), ("beta",))
    with pytest.raises(ContextError):
        Unitized(uctx.gen("a"), 0) + Unitized(other.gen("a"), 0)


def test_undeclared_scalar_rejected(uctx):
    from ncbinom import CoefPoly
    with pytest.raises(ContextError):
        Unitized(uctx.gen("a"), CoefPoly.parameter("zeta"))
