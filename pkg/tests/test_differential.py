import random

import pytest
from hypothesis import given, strategies as st

from helpers import random_diff_word
from opgroups.differential import (
    DiffLetter,
    DiffTarget,
    DiffWord,
    derive,
    derive_power,
    diff_gen,
    evaluate,
    format_diff_word,
    inverse_power_formula,
    parse_diff_word,
    product_formula,
    shift_orders,
)
from opgroups.finite import Law, constant_operator, cyclic, enumerate_operators, symmetric
from opgroups.operated import UnassignedGeneratorError
from opgroups.words import WordSyntaxError

x0 = diff_gen("x")
y0 = diff_gen("y")


def L(sym, order, sign=1):
    return DiffLetter(sym, order, sign)


# --- the derivation -----------------------------------------------------------

def test_derive_single_letter():
    assert derive(x0) == diff_gen("x", 1)
    assert derive(diff_gen("x", 4)) == diff_gen("x", 5)


def test_derive_inverse_letter():
    # D(z^-1) = z^-1 D(z)^-1 z for a letter z
    assert derive(x0.inverse()) == DiffWord([L("x", 0, -1), L("x", 1, -1), L("x", 0, 1)])


def test_derive_identity():
    assert derive(DiffWord()) == DiffWord()


def test_derive_two_letters():
    # hand recursion: D(x y) = D(x) x D(y) x^-1
    got = derive(x0 * y0)
    expected = DiffWord([L("x", 1), L("x", 0), L("y", 1), L("x", 0, -1)])
    assert got == expected


def test_derive_matches_product_rule_random():
    rng = random.Random(3)
    for _ in range(400):
        g = random_diff_word(rng)
        h = random_diff_word(rng)
        assert derive(g * h) == derive(g) * g * derive(h) * g.inverse()


def test_three_factor_expansion():
    # D(g h k) = D(g) g D(h) h D(k) h^-1 g^-1
    rng = random.Random(5)
    for _ in range(200):
        g, h, k = (random_diff_word(rng) for _ in range(3))
        lhs = derive(g * h * k)
        rhs = derive(g) * g * derive(h) * h * derive(k) * h.inverse() * g.inverse()
        assert lhs == rhs


def test_derive_power():
    assert derive_power(x0, 3) == diff_gen("x", 3)
    w = x0 * y0.inverse()
    assert derive_power(w, 0) == w
    assert derive_power(x0 * y0, 2) == derive(derive(x0 * y0))
    with pytest.raises(ValueError):
        derive_power(w, -1)


# --- closed formulas as oracles ------------------------------------------------

def test_product_formula_single_factor_collapses():
    rng = random.Random(7)
    for _ in range(50):
        g = random_diff_word(rng)
        assert product_formula([g]) == derive(g)


def test_product_formula_matches_derive():
    rng = random.Random(11)
    for n in (2, 3, 4, 5):
        for _ in range(100):
            gs = [random_diff_word(rng, max_len=4) for _ in range(n)]
            prod = DiffWord()
            for g in gs:
                prod = prod * g
            assert product_formula(gs) == derive(prod)


def test_product_formula_rejects_empty():
    with pytest.raises(ValueError):
        product_formula([])


def test_inverse_power_formula_base_case():
    assert inverse_power_formula(x0, 1) == DiffWord(
        [L("x", 0, -1), L("x", 1, -1), L("x", 0, 1)])
    assert inverse_power_formula(x0, 1) == derive(x0.inverse())


def test_inverse_power_formula_matches_derive():
    rng = random.Random(13)
    for n in (1, 2, 3, 4):
        for _ in range(100):
            g = random_diff_word(rng, max_len=4)
            assert inverse_power_formula(g, n) == derive(g.inverse() ** n)


def test_inverse_power_formula_rejects_zero():
    with pytest.raises(ValueError):
        inverse_power_formula(x0, 0)


# --- order shift ----------------------------------------------------------------

def test_shift_orders_examples():
    w = x0 * diff_gen("y", 2, -1)
    assert shift_orders(w) == diff_gen("x", 1) * diff_gen("y", 3, -1)
    assert shift_orders(DiffWord()) == DiffWord()


def test_shift_orders_is_endomorphism():
    rng = random.Random(17)
    for _ in range(200):
        u, v = random_diff_word(rng), random_diff_word(rng)
        assert shift_orders(u * v) == shift_orders(u) * shift_orders(v)
        assert shift_orders(u.inverse()) == shift_orders(u).inverse()


def test_shift_orders_violates_product_rule():
    # the order shift is an endomorphism but not a derivation
    g, h = x0, y0
    assert shift_orders(g * h) != shift_orders(g) * g * shift_orders(h) * g.inverse()


# --- evaluation ------------------------------------------------------------------

def diff_targets():
    out = []
    for g in (cyclic(2), cyclic(4), symmetric(3)):
        for op in enumerate_operators(g, Law.DIFF_PLUS):
            out.append((g, DiffTarget(g, lambda i, op=op: op[i])))
    return out


def test_difftarget_rejects_bad_operator():
    g = symmetric(3)
    with pytest.raises(ValueError, match="product rule"):
        DiffTarget(g, lambda i: i)  # identity map is not a derivation on S3


def test_difftarget_requires_enumerable_carrier_unless_trusted():
    class Procedural:
        def identity(self):
            return 0

        def mul(self, a, b):
            return (a + b) % 5

        def inv(self, a):
            return (-a) % 5

    with pytest.raises(ValueError, match="trusted"):
        DiffTarget(Procedural(), lambda a: 0)
    DiffTarget(Procedural(), lambda a: 0, trusted=True)


def test_eval_letter_iterates_operator():
    g = cyclic(4)
    ops = enumerate_operators(g, Law.DIFF_PLUS)
    op = next(o for o in ops if o != constant_operator(g))
    t = DiffTarget(g, lambda i: op[i])
    a = g.index("a")
    v = a
    for n in range(4):
        assert evaluate(diff_gen("x", n), {"x": a}, t) == v
        v = op[v]


def test_eval_identity_and_missing_generator():
    g = cyclic(2)
    t = DiffTarget(g, lambda i: g.identity_index)
    assert evaluate(DiffWord(), {}, t) == g.identity_index
    with pytest.raises(UnassignedGeneratorError, match="'y'"):
        evaluate(y0, {"x": 0}, t)


def test_eval_homomorphism_and_intertwining():
    rng = random.Random(19)
    for g, t in diff_targets():
        assignment = {s: rng.randrange(len(g)) for s in "xyz"}
        for _ in range(40):
            u = random_diff_word(rng)
            v = random_diff_word(rng)
            eu, ev = evaluate(u, assignment, t), evaluate(v, assignment, t)
            assert evaluate(u * v, assignment, t) == g.mul(eu, ev)
            assert evaluate(derive(u), assignment, t) == t.op(eu)


def test_eval_constant_identity_annihilates_derivatives():
    g = symmetric(3)
    t = DiffTarget(g, lambda i: g.identity_index)
    rng = random.Random(23)
    assignment = {s: rng.randrange(len(g)) for s in "xyz"}
    for _ in range(50):
        w = random_diff_word(rng)
        assert evaluate(derive(w), assignment, t) == g.identity_index


# --- text form --------------------------------------------------------------------

def test_parse_examples():
    assert parse_diff_word("x.0 x.0^-1") == DiffWord()
    assert parse_diff_word("x") == x0
    assert parse_diff_word("x.3^-1") == diff_gen("x", 3, -1)
    assert parse_diff_word("1") == DiffWord()
    assert parse_diff_word("x y.2") == x0 * diff_gen("y", 2)


def test_format_always_prints_order():
    w = derive(x0 * y0)
    assert format_diff_word(w) == "x.1 x.0 y.1 x.0^-1"
    assert format_diff_word(DiffWord()) == "1"


@pytest.mark.parametrize("text,offset", [
    ("", 0),
    ("x 1", 2),
    ("x.y", 0),
    ("x.", 0),
    ("<x>", 0),
    ("x^2", 0),
])
def test_parse_errors(text, offset):
    with pytest.raises(WordSyntaxError) as err:
        parse_diff_word(text)
    assert err.value.position == offset


def test_round_trip_random():
    rng = random.Random(29)
    for _ in range(300):
        w = random_diff_word(rng, max_len=8, max_order=3)
        s = format_diff_word(w)
        assert parse_diff_word(s) == w
        assert format_diff_word(parse_diff_word(s)) == s


letters = st.builds(DiffLetter, st.sampled_from(["x", "y"]),
                    st.integers(0, 3), st.sampled_from([1, -1]))
diff_words = st.builds(DiffWord, st.lists(letters, max_size=6))


@given(diff_words, diff_words)
def test_weight_one_rule_hypothesis(g, h):
    assert derive(g * h) == derive(g) * g * derive(h) * g.inverse()


@given(diff_words)
def test_round_trip_hypothesis(w):
    assert parse_diff_word(format_diff_word(w)) == w
