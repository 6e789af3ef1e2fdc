"""The free operated group on bracketed words and its universal evaluator.

Bracketing is the free operator: applying it to a word ``w`` yields the
one-atom word ``<w>``.  Given any target group carrying an arbitrary self-map
``op`` and an assignment of the generators, :func:`evaluate` computes the
image of a word under the unique operated-group homomorphism extending the
assignment: generators go to their assigned elements, concatenation to the
carrier product, and a bracket to ``op`` applied to the evaluated body.
"""

from __future__ import annotations

from typing import Callable, Mapping

from .words import Atom, Word

__all__ = [
    "OperatedTarget",
    "UnassignedGeneratorError",
    "bracket",
    "evaluate",
]


class UnassignedGeneratorError(LookupError):
    """A word mentions a generator the assignment does not cover."""

    def __init__(self, symbol: str):
        super().__init__(f"no image assigned for generator {symbol!r}")
        self.symbol = symbol


def bracket(w: Word) -> Word:
    """The one-atom word ``<w>``.  Note ``bracket(Word())`` is ``<1>``, not 1."""
    return Word((Atom(w, 1),))


class OperatedTarget:
    """A group together with an arbitrary self-map.

    ``group`` must expose ``identity()``, ``mul(a, b)`` and ``inv(a)`` over
    opaque carrier elements; ``op`` is any total map on those elements.  No
    law is required of ``op``.
    """

    def __init__(self, group, op: Callable):
        self.group = group
        self.op = op


def evaluate(w: Word, assignment: Mapping[str, object], target: OperatedTarget):
    """Image of ``w`` under the homomorphism sending each generator to its
    assigned carrier element and each bracket to ``target.op`` of its body."""
    g, op = target.group, target.op
    acc = g.identity()
    for atom in w:
        if atom.is_bracket:
            val = op(evaluate(atom.base, assignment, target))
        else:
            try:
                val = assignment[atom.base]
            except KeyError:
                raise UnassignedGeneratorError(atom.base) from None
        if atom.sign < 0:
            val = g.inv(val)
        acc = g.mul(acc, val)
    return acc
