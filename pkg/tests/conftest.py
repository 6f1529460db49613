import random

import pytest

from qlorentz.expr import Atom, Power, Product, Rational, Sum

_LEAVES = ("x", "t", "p", "H", "hbar", "c", "m", "i")


def make_tree(rng: random.Random, depth: int = 2):
    """Random expression tree sized to keep normal forms small."""
    roll = rng.random()
    if depth == 0 or roll < 0.35:
        kind = rng.random()
        if kind < 0.55:
            return Atom(rng.choice(_LEAVES))
        if kind < 0.8:
            return Rational(rng.randint(-4, 4), rng.randint(1, 3))
        name = rng.choice(("p", "H", "x", "t"))
        if name in ("x", "t"):
            exp = rng.choice((2, 3))
        else:
            exp = rng.choice((-2, -1, 2, 3))
        return Power(Atom(name), exp)
    if roll < 0.7:
        return Sum(tuple(make_tree(rng, depth - 1) for _ in range(2)))
    return Product(tuple(make_tree(rng, depth - 1) for _ in range(2)))


def make_poly_tree(rng: random.Random, max_degree: int = 5):
    """Random polynomial in p with small rational coefficients.

    Returns (tree, coeffs) where coeffs[k] is the Rational on p^k, so
    callers can build the derivative independently of the algebra engine.
    """
    degree = rng.randint(1, max_degree)
    coeffs = {}
    for k in range(degree + 1):
        num = rng.randint(-5, 5)
        if num or k == degree:
            coeffs[k] = Rational(num if num else 1, rng.randint(1, 4))
    terms = []
    for k, q in sorted(coeffs.items()):
        if k == 0:
            terms.append(q)
        elif k == 1:
            terms.append(Product((q, Atom("p"))))
        else:
            terms.append(Product((q, Power(Atom("p"), k))))
    tree = terms[0] if len(terms) == 1 else Sum(tuple(terms))
    return tree, coeffs


@pytest.fixture
def tree_maker():
    return make_tree


@pytest.fixture
def poly_maker():
    return make_poly_tree
