"""Seeded random generators for words of the three theories, shared by the
unit tests and the acceptance suite."""

from __future__ import annotations

import random

from opgroups.differential import DiffLetter, DiffWord
from opgroups.words import Atom, Word

ALPHABET = ("x", "y", "z")


def random_word(rng: random.Random, *, max_depth: int = 2, max_breadth: int = 4,
                alphabet=ALPHABET, nonempty: bool = False) -> Word:
    """A random reduced bracketed word (general operated theory)."""
    k = rng.randint(1 if nonempty else 0, max_breadth)
    atoms: list[Atom] = []
    tries = 0
    while len(atoms) < k and tries < 100:
        tries += 1
        a = _random_atom(rng, max_depth, max_breadth, alphabet, rb=False)
        if atoms and atoms[-1].cancels(a):
            continue
        atoms.append(a)
    return Word(atoms)


def random_rb_word(rng: random.Random, *, max_depth: int = 3, max_breadth: int = 4,
                   alphabet=ALPHABET, nonempty: bool = False) -> Word:
    """A random Rota-Baxter word: additionally no adjacent same-sign brackets
    and no empty bracket bodies."""
    k = rng.randint(1 if nonempty else 0, max_breadth)
    atoms: list[Atom] = []
    tries = 0
    while len(atoms) < k and tries < 100:
        tries += 1
        a = _random_atom(rng, max_depth, max_breadth, alphabet, rb=True)
        if atoms:
            prev = atoms[-1]
            if prev.cancels(a):
                continue
            if prev.is_bracket and a.is_bracket and prev.sign == a.sign:
                continue
        atoms.append(a)
    return Word(atoms)


def _random_atom(rng, max_depth, max_breadth, alphabet, *, rb: bool) -> Atom:
    sign = rng.choice((1, -1))
    if max_depth == 0 or rng.random() < 0.6:
        return Atom(rng.choice(alphabet), sign)
    if rb:
        body = random_rb_word(rng, max_depth=max_depth - 1, max_breadth=max_breadth,
                              alphabet=alphabet, nonempty=True)
    else:
        body = random_word(rng, max_depth=max_depth - 1, max_breadth=max_breadth,
                           alphabet=alphabet)
    return Atom(body, sign)


def random_diff_word(rng: random.Random, *, max_len: int = 6, max_order: int = 2,
                     alphabet=ALPHABET) -> DiffWord:
    """A random reduced word in derived letters."""
    k = rng.randint(0, max_len)
    letters: list[DiffLetter] = []
    tries = 0
    while len(letters) < k and tries < 100:
        tries += 1
        a = DiffLetter(rng.choice(alphabet), rng.randint(0, max_order), rng.choice((1, -1)))
        if letters and letters[-1].cancels(a):
            continue
        letters.append(a)
    return DiffWord(letters)
