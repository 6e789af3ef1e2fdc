"""The free differential group of weight 1.

Elements are reduced words over the derived letters ``x.n`` (generator ``x``
taken ``n`` derivatives deep); the derivation sends ``x.n`` to ``x.n+1`` and
extends to words through the weight-1 product rule

    D(g h) = D(g) g D(h) g^-1.

The module also exposes the two closed formulas that follow from that rule
(the n-fold product and the inverse-power formula), the order-shift
endomorphism, and the evaluator into any finite group carrying a validated
weight-1 differential operator.

Text syntax: ``x.n`` is the n-th derived letter, ``x`` abbreviates ``x.0``,
inverses are written ``x.n^-1``; letters are whitespace separated and ``1``
denotes the identity.  Brackets do not exist in this theory.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .operated import UnassignedGeneratorError
from .words import WordSyntaxError, free_reduce

__all__ = [
    "DiffLetter",
    "DiffTarget",
    "DiffWord",
    "derive",
    "derive_power",
    "diff_gen",
    "evaluate",
    "format_diff_word",
    "inverse_power_formula",
    "parse_diff_word",
    "product_formula",
    "shift_orders",
]


class DiffLetter:
    """A signed derived letter: generator symbol, derivative order, sign."""

    __slots__ = ("symbol", "order", "sign", "_hash")

    def __init__(self, symbol: str, order: int = 0, sign: int = 1):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", symbol):
            raise ValueError(f"invalid generator name {symbol!r}")
        if order < 0:
            raise ValueError("derivative order must be >= 0")
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        self.symbol = symbol
        self.order = order
        self.sign = sign
        self._hash = hash((symbol, order, sign))

    def inverse(self) -> "DiffLetter":
        return DiffLetter(self.symbol, self.order, -self.sign)

    def cancels(self, other: "DiffLetter") -> bool:
        return (self.sign == -other.sign and self.order == other.order
                and self.symbol == other.symbol)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffLetter):
            return NotImplemented
        return (self.symbol == other.symbol and self.order == other.order
                and self.sign == other.sign)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return _format_letter(self)


class DiffWord:
    """A reduced word in derived letters; ``DiffWord()`` is the identity."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[DiffLetter] = ()):
        self.letters = free_reduce(letters)
        self._hash = hash(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[DiffLetter]:
        return iter(self.letters)

    def __mul__(self, other: "DiffWord") -> "DiffWord":
        if not isinstance(other, DiffWord):
            return NotImplemented
        return DiffWord(self.letters + other.letters)

    def inverse(self) -> "DiffWord":
        return DiffWord(a.inverse() for a in reversed(self.letters))

    def __invert__(self) -> "DiffWord":
        return self.inverse()

    def __pow__(self, n: int) -> "DiffWord":
        base = self if n >= 0 else self.inverse()
        out = DiffWord()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffWord):
            return NotImplemented
        return self._hash == other._hash and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return format_diff_word(self)


def diff_gen(symbol: str, order: int = 0, sign: int = 1) -> DiffWord:
    """The one-letter word for a derived generator."""
    return DiffWord((DiffLetter(symbol, order, sign),))


def _derive_letter(a: DiffLetter) -> DiffWord:
    up = DiffLetter(a.symbol, a.order + 1, 1)
    if a.sign > 0:
        return DiffWord((up,))
    # D(z^-1) = z^-1 D(z)^-1 z for a single letter z
    z = DiffLetter(a.symbol, a.order, 1)
    return DiffWord((z.inverse(), up.inverse(), z))


def derive(w: DiffWord) -> DiffWord:
    """The derivation: x.n -> x.n+1 on letters, extended by the weight-1 rule.

    A word of length >= 2 is split at its first letter z, giving
    D(z rest) = D(z) z D(rest) z^-1; the result is re-reduced.
    """
    if not w.letters:
        return DiffWord()
    out = _derive_letter(w.letters[-1])
    for a in reversed(w.letters[:-1]):
        head = DiffWord((a,))
        out = _derive_letter(a) * head * out * head.inverse()
    return out


def derive_power(w: DiffWord, n: int) -> DiffWord:
    """n-fold derivation; n = 0 returns the word unchanged."""
    if n < 0:
        raise ValueError("derivative order must be >= 0")
    for _ in range(n):
        w = derive(w)
    return w


def product_formula(factors: Sequence[DiffWord]) -> DiffWord:
    """Closed form for the derivative of a product:

        D(g_1 ... g_n) = (D(g_1) g_1) ... (D(g_n) g_n) (g_1 ... g_n)^-1.

    Serves as an independent cross-check of :func:`derive`.
    """
    gs = list(factors)
    if not gs:
        raise ValueError("need at least one factor")
    acc = DiffWord()
    total = DiffWord()
    for g in gs:
        acc = acc * derive(g) * g
        total = total * g
    return acc * total.inverse()


def inverse_power_formula(g: DiffWord, n: int) -> DiffWord:
    """Closed form D(g^-n) = (g^-1 D(g)^-1)^n g^n, for n >= 1."""
    if n < 1:
        raise ValueError("need n >= 1 (the derivative of the identity is the identity)")
    step = g.inverse() * derive(g).inverse()
    return step ** n * g ** n


def shift_orders(w: DiffWord) -> DiffWord:
    """The endomorphism sending every letter x.n to x.n+1 (signs kept).

    Unlike :func:`derive` it is a plain group endomorphism and does not
    satisfy the weight-1 product rule.
    """
    return DiffWord(DiffLetter(a.symbol, a.order + 1, a.sign) for a in w.letters)


# --- evaluation into differential groups -------------------------------------

class DiffTarget:
    """A group with a weight-1 differential operator, validated exhaustively.

    ``group`` must expose ``identity()``, ``mul``, ``inv`` and, for
    validation, ``iter_elements()``.  Carriers that cannot be enumerated are
    refused unless ``trusted=True`` attests that ``op`` satisfies the law.
    """

    def __init__(self, group, op: Callable, *, trusted: bool = False):
        self.group = group
        self.op = op
        if not trusted:
            try:
                elems = list(group.iter_elements())
            except AttributeError:
                raise ValueError(
                    "cannot enumerate the carrier to validate the differential law; "
                    "pass trusted=True to attest it") from None
            _check_weight1(group, op, elems)


def _check_weight1(group, op, elems) -> None:
    mul, inv = group.mul, group.inv
    for a in elems:
        for b in elems:
            if op(mul(a, b)) != mul(mul(mul(op(a), a), op(b)), inv(a)):
                raise ValueError(
                    f"not a weight-1 differential operator: the product rule fails "
                    f"at the pair ({a!r}, {b!r})")


def evaluate(w: DiffWord, assignment: Mapping[str, object], target: DiffTarget):
    """Image of ``w`` under the homomorphism sending x.n to the n-th
    derivative of the element assigned to x."""
    g, d = target.group, target.op
    cache: dict[tuple[str, int], object] = {}

    def image(symbol: str, order: int):
        key = (symbol, order)
        if key not in cache:
            if order == 0:
                try:
                    cache[key] = assignment[symbol]
                except KeyError:
                    raise UnassignedGeneratorError(symbol) from None
            else:
                cache[key] = d(image(symbol, order - 1))
        return cache[key]

    acc = g.identity()
    for a in w:
        val = image(a.symbol, a.order)
        if a.sign < 0:
            val = g.inv(val)
        acc = g.mul(acc, val)
    return acc


# --- text form ---------------------------------------------------------------

_LETTER_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\.(\d+))?(\^-1)?\Z")


def parse_diff_word(text: str) -> DiffWord:
    """Parse whitespace-separated derived letters into a reduced DiffWord."""
    tokens = [(m.group(), m.start()) for m in re.finditer(r"\S+", text)]
    if not tokens:
        raise WordSyntaxError("empty word (write '1' for the identity)", len(text))
    if any(tok == "1" for tok, _ in tokens):
        if len(tokens) > 1:
            raise WordSyntaxError("'1' must stand alone",
                                  next(pos for tok, pos in tokens if tok == "1"))
        return DiffWord()
    letters = []
    for tok, pos in tokens:
        m = _LETTER_RE.fullmatch(tok)
        if not m:
            raise WordSyntaxError(f"invalid letter {tok!r}", pos)
        name, order, inv = m.groups()
        letters.append(DiffLetter(name, int(order) if order else 0, -1 if inv else 1))
    return DiffWord(letters)


def _format_letter(a: DiffLetter) -> str:
    return f"{a.symbol}.{a.order}" + ("" if a.sign > 0 else "^-1")


def format_diff_word(w: DiffWord) -> str:
    """Canonical text form; the order suffix is always printed (x.0, not x)."""
    if not w.letters:
        return "1"
    return " ".join(_format_letter(a) for a in w.letters)
