"""Reduced bracketed group words.

A word is a finite sequence of atoms, each atom being a signed generator or a
signed bracket ``<...>`` enclosing another word.  Words are kept *reduced* (no
adjacent mutually-inverse atoms), so two words are equal as Python values
exactly when they are equal in the free operated group.  The empty word is the
group identity and prints as ``"1"``.

Canonical text grammar (whitespace separated)::

    word   := "1" | term (SP term)*
    term   := ident | ident "^-1" | "<" word ">" | "<" word ">^-1"
    ident  := [A-Za-z_][A-Za-z0-9_]*

``B(...)`` is accepted as an input alias for ``<...>``; the printer always
emits angle brackets.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Union

__all__ = [
    "Atom",
    "Word",
    "WordSyntaxError",
    "free_reduce",
    "gen",
    "parse_word",
    "format_word",
]

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class WordSyntaxError(ValueError):
    """Malformed word text; ``position`` is the byte offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


def free_reduce(letters: Iterable) -> tuple:
    """Cancel adjacent mutually-inverse letters until none remain.

    Works for any letter type with a ``cancels`` method.  Deleting the
    leftmost cancelling pair first is confluent, so the result does not
    depend on the order of cancellation.
    """
    out: list = []
    for a in letters:
        if out and out[-1].cancels(a):
            out.pop()
        else:
            out.append(a)
    return tuple(out)


class Atom:
    """One letter of a word: a generator name or a bracketed word, with a sign."""

    __slots__ = ("base", "sign", "_hash")

    def __init__(self, base: Union[str, "Word"], sign: int = 1):
        if sign not in (1, -1):
            raise ValueError(f"atom sign must be +1 or -1, got {sign!r}")
        if isinstance(base, str):
            if not _IDENT_RE.fullmatch(base):
                raise ValueError(f"invalid generator name {base!r}")
        elif not isinstance(base, Word):
            raise TypeError(f"atom base must be a generator name or a Word, got {type(base)!r}")
        self.base = base
        self.sign = sign
        self._hash = hash((base, sign))

    @property
    def is_bracket(self) -> bool:
        return not isinstance(self.base, str)

    @property
    def name(self) -> str:
        """Generator name; only valid for generator atoms."""
        if self.is_bracket:
            raise ValueError("bracket atom has no generator name")
        return self.base

    @property
    def body(self) -> "Word":
        """Enclosed word; only valid for bracket atoms."""
        if not self.is_bracket:
            raise ValueError("generator atom has no bracket body")
        return self.base

    def inverse(self) -> "Atom":
        return Atom(self.base, -self.sign)

    def cancels(self, other: "Atom") -> bool:
        return self.sign == -other.sign and self.base == other.base

    def depth(self) -> int:
        return self.base.depth() + 1 if self.is_bracket else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Atom):
            return NotImplemented
        return self._hash == other._hash and self.sign == other.sign and self.base == other.base

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return _format_atom(self)


class Word:
    """A reduced sequence of atoms.  ``Word()`` is the group identity.

    The constructor reduces its input, so every Word is reduced by
    construction; this realizes the group multiplication as plain
    concatenation::

        u * v   ==  Word(u.atoms + v.atoms)
    """

    __slots__ = ("atoms", "_hash")

    def __init__(self, atoms: Iterable[Atom] = ()):
        self.atoms = free_reduce(atoms)
        self._hash = hash(self.atoms)

    @property
    def is_identity(self) -> bool:
        return not self.atoms

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.atoms + other.atoms)

    def inverse(self) -> "Word":
        return Word(a.inverse() for a in reversed(self.atoms))

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        out = Word()
        for _ in range(abs(n)):
            out = out * base
        return out

    def depth(self) -> int:
        """Maximal bracket nesting; 0 for bracket-free words and the identity."""
        return max((a.depth() for a in self.atoms), default=0)

    def breadth(self) -> int:
        """Number of atoms in the standard (reduced) factorization."""
        return len(self.atoms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._hash == other._hash and self.atoms == other.atoms

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return format_word(self)


def gen(name: str, sign: int = 1) -> Word:
    """The one-atom word for a generator (or its inverse, with sign=-1)."""
    return Word((Atom(name, sign),))


# --- parsing ---------------------------------------------------------------

_OPEN, _CLOSE, _OPEN_B, _CLOSE_B, _GEN, _ONE = range(6)


def _read_sign(text: str, i: int) -> tuple[int, int]:
    # optional "^-1" immediately after an ident or a closing bracket
    if i < len(text) and text[i] == "^":
        if text[i : i + 3] != "^-1":
            raise WordSyntaxError("expected '^-1'", i)
        return -1, i + 3
    return 1, i


def _tokenize(text: str) -> list[tuple[int, object, int]]:
    toks: list[tuple[int, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "<":
            toks.append((_OPEN, None, i))
            i += 1
            continue
        if c == ">":
            sign, j = _read_sign(text, i + 1)
            toks.append((_CLOSE, sign, i))
            i = j
            continue
        if c == ")":
            sign, j = _read_sign(text, i + 1)
            toks.append((_CLOSE_B, sign, i))
            i = j
            continue
        if c == "1":
            if i + 1 < n and (text[i + 1].isalnum() or text[i + 1] == "_"):
                raise WordSyntaxError(f"invalid token {text[i:i + 2]!r}...", i)
            toks.append((_ONE, None, i))
            i += 1
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            name, j = m.group(), m.end()
            if name == "B" and j < n and text[j] == "(":
                toks.append((_OPEN_B, None, i))
                i = j + 1
                continue
            sign, j = _read_sign(text, j)
            toks.append((_GEN, (name, sign), i))
            i = j
            continue
        raise WordSyntaxError(f"invalid token {c!r}", i)
    return toks


def _parse_level(toks, i: int, closer, open_pos: int, end: int):
    # one grammar level: "1", or a nonempty run of terms, ended by `closer`
    # (a token kind) or by end of input when closer is None
    atoms: list[Atom] = []
    saw_one = False
    while True:
        if i == len(toks):
            if closer is None:
                break
            raise WordSyntaxError("unbalanced bracket: missing closer", open_pos)
        kind, val, pos = toks[i]
        if kind == closer:
            break
        if kind in (_CLOSE, _CLOSE_B):
            if closer is None:
                raise WordSyntaxError("unbalanced bracket: unexpected closer", pos)
            raise WordSyntaxError("mismatched bracket closer", pos)
        if kind == _ONE:
            if atoms or saw_one:
                raise WordSyntaxError("'1' must stand alone", pos)
            saw_one = True
            i += 1
            continue
        if saw_one:
            raise WordSyntaxError("'1' must stand alone", pos)
        if kind == _GEN:
            name, sign = val
            atoms.append(Atom(name, sign))
            i += 1
            continue
        # kind is _OPEN or _OPEN_B: recurse
        want = _CLOSE if kind == _OPEN else _CLOSE_B
        body, i = _parse_level(toks, i + 1, want, pos, end)
        sign = toks[i][1]
        atoms.append(Atom(body, sign))
        i += 1
    if not atoms and not saw_one:
        raise WordSyntaxError("empty word (write '1' for the identity)", open_pos if closer else end)
    return Word(atoms), i


def parse_word(text: str) -> Word:
    """Parse text into a reduced Word.

    Unreduced input such as ``"x x^-1"`` is accepted and silently reduced.
    Raises :class:`WordSyntaxError` with a byte offset on malformed input.
    """
    toks = _tokenize(text)
    word, i = _parse_level(toks, 0, None, 0, len(text))
    assert i == len(toks)
    return word


def _format_atom(a: Atom) -> str:
    suffix = "" if a.sign > 0 else "^-1"
    if a.is_bracket:
        return f"<{format_word(a.base)}>{suffix}"
    return a.base + suffix


def format_word(w: Word) -> str:
    """Canonical text form; ``parse_word(format_word(w)) == w`` exactly."""
    if not w.atoms:
        return "1"
    return " ".join(_format_atom(a) for a in w.atoms)
