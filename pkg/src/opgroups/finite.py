"""Finite groups given by Cayley tables, and operator identities on them.

This is the brute-force laboratory: load/validate a multiplication table,
check a self-map against one of the operator laws (endomorphism, weight +-1
differential, weight +-1 Rota-Baxter, crossed homomorphism), enumerate all
maps satisfying a law, convert between the two Rota-Baxter weights, and build
the projection operator of an exact factorization.

Carrier elements are the indices ``0..n-1`` of the element-name list; an
operator map is a length-n tuple of image indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

import yaml

__all__ = [
    "EnumerationBudgetError",
    "FiniteGroup",
    "GroupData",
    "GroupTableError",
    "Law",
    "alternating",
    "check_identity",
    "constant_operator",
    "convert_weight",
    "cyclic",
    "dihedral",
    "dump_group_file",
    "enumerate_operators",
    "identity_operator",
    "inversion_operator",
    "klein_four",
    "load_group_file",
    "operator_from_names",
    "operator_to_names",
    "projection_operator",
    "quaternion",
    "symmetric",
    "validate_action",
    "validate_group",
]

DEFAULT_CHECK_BOUND = 64
DEFAULT_ENUM_BOUND = 12
DEFAULT_ENUM_BUDGET = 10**8


class GroupTableError(ValueError):
    """The raw table fails one of the group axioms (the message says which)."""


class EnumerationBudgetError(ValueError):
    """The operator search space exceeds the configured budget."""


class FiniteGroup:
    """A finite group backed by an exhaustively validated Cayley table.

    ``elements`` are the element names; all arithmetic is on indices into
    that list.  Construction checks closure, identity, inverses and full
    associativity, so an instance is always a genuine group.
    """

    def __init__(self, elements: Sequence[str], table: Sequence[Sequence[int]], *,
                 max_size: int = DEFAULT_CHECK_BOUND):
        names = tuple(elements)
        n = len(names)
        if n == 0:
            raise GroupTableError("empty table")
        if n > max_size:
            raise GroupTableError(f"group order {n} exceeds the checking bound {max_size}")
        if len(set(names)) != n:
            raise GroupTableError("element names are not unique")
        if any(not isinstance(s, str) or not s for s in names):
            raise GroupTableError("element names must be nonempty strings")
        rows = tuple(tuple(row) for row in table)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise GroupTableError(f"table is not {n}x{n}")
        for row in rows:
            for x in row:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise GroupTableError(f"table is not closed: entry {x!r} is not an element index")

        self.elements = names
        self._table = rows
        self._index = {s: i for i, s in enumerate(names)}

        ident = None
        for e in range(n):
            if all(rows[e][j] == j and rows[j][e] == j for j in range(n)):
                ident = e
                break
        if ident is None:
            raise GroupTableError("no identity element")
        self.identity_index = ident

        inv = [None] * n
        for i in range(n):
            for j in range(n):
                if rows[i][j] == ident and rows[j][i] == ident:
                    inv[i] = j
                    break
            if inv[i] is None:
                raise GroupTableError(f"element {names[i]!r} has no inverse")
        self._inv = tuple(inv)

        for a in range(n):
            for b in range(n):
                ab = rows[a][b]
                for c in range(n):
                    if rows[ab][c] != rows[a][rows[b][c]]:
                        raise GroupTableError(
                            f"associativity fails at ({names[a]}, {names[b]}, {names[c]})")

        self._abelian = all(rows[a][b] == rows[b][a] for a in range(n) for b in range(a))

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteGroup({len(self)} elements: {', '.join(self.elements[:6])}{'...' if len(self) > 6 else ''})"

    # carrier interface used by the evaluators (elements are indices)
    def identity(self) -> int:
        return self.identity_index

    def mul(self, a: int, b: int) -> int:
        return self._table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def iter_elements(self) -> range:
        return range(len(self.elements))

    @property
    def is_abelian(self) -> bool:
        return self._abelian

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown element name {name!r}") from None

    def name(self, i: int) -> str:
        return self.elements[i]


def validate_group(elements: Sequence[str], table: Sequence[Sequence[str]], *,
                   max_size: int = DEFAULT_CHECK_BOUND) -> FiniteGroup:
    """Build a FiniteGroup from a table of element *names*, checking all axioms."""
    names = list(elements)
    pos = {s: i for i, s in enumerate(names)}
    if len(pos) != len(names):
        raise GroupTableError("element names are not unique")
    rows = []
    for row in table:
        out = []
        for entry in row:
            if entry not in pos:
                raise GroupTableError(f"table is not closed: {entry!r} is not a declared element")
            out.append(pos[entry])
        rows.append(out)
    return FiniteGroup(names, rows, max_size=max_size)


# --- operator maps ----------------------------------------------------------

def operator_from_names(group: FiniteGroup, images: Sequence[str]) -> tuple[int, ...]:
    if len(images) != len(group):
        raise ValueError(f"operator must list {len(group)} images, got {len(images)}")
    return tuple(group.index(s) for s in images)


def operator_to_names(group: FiniteGroup, op: Sequence[int]) -> tuple[str, ...]:
    return tuple(group.name(i) for i in op)


def identity_operator(group: FiniteGroup) -> tuple[int, ...]:
    return tuple(range(len(group)))


def inversion_operator(group: FiniteGroup) -> tuple[int, ...]:
    return tuple(group.inv(i) for i in group.iter_elements())


def constant_operator(group: FiniteGroup, value: Optional[int] = None) -> tuple[int, ...]:
    v = group.identity_index if value is None else value
    return (v,) * len(group)


class Law(str, Enum):
    """Operator identities checkable on a finite group."""

    ENDO = "endo"            # P(ab) = P(a) P(b)
    DIFF_PLUS = "diff1"      # D(ab) = D(a) a D(b) a^-1
    DIFF_MINUS = "diff-1"    # D(ab) = (a D(b) a^-1) D(a)
    RB_PLUS = "rb1"          # B(a) B(b) = B(a B(a) b B(a)^-1)
    RB_MINUS = "rb-1"        # C(a) C(b) = C((C(a) b C(a)^-1) a)
    CROSSED = "crossed"      # f(ab) = f(a) act(a, f(b))


def validate_action(group: FiniteGroup, action: Sequence[Sequence[int]]) -> None:
    """Check the left-action axioms act(e, x) = x and act(ab, x) = act(a, act(b, x))."""
    n = len(group)
    if len(action) != n or any(len(row) != n for row in action):
        raise ValueError(f"action must be an {n}x{n} matrix")
    e = group.identity_index
    for x in range(n):
        if action[e][x] != x:
            raise ValueError(f"action of the identity moves {group.name(x)!r}")
    for a in range(n):
        for b in range(n):
            ab = group.mul(a, b)
            for x in range(n):
                if action[ab][x] != action[a][action[b][x]]:
                    raise ValueError(
                        f"action is not compatible with multiplication at "
                        f"({group.name(a)}, {group.name(b)}, {group.name(x)})")


def adjoint_action(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """The conjugation action act(g, x) = g x g^-1."""
    return tuple(
        tuple(group.mul(group.mul(g, x), group.inv(g)) for x in group.iter_elements())
        for g in group.iter_elements()
    )


def _pair_status(group: FiniteGroup, images: Sequence[Optional[int]], law: Law,
                 action, a: int, b: int) -> Optional[bool]:
    # True = law holds at (a, b); False = violated; None = some needed image
    # is still unassigned (only during enumeration).
    m = group.mul
    va, vb = images[a], images[b]
    if va is None or vb is None:
        return None
    if law is Law.ENDO:
        vab = images[m(a, b)]
        return None if vab is None else vab == m(va, vb)
    if law is Law.DIFF_PLUS:
        vab = images[m(a, b)]
        return None if vab is None else vab == m(m(m(va, a), vb), group.inv(a))
    if law is Law.DIFF_MINUS:
        vab = images[m(a, b)]
        return None if vab is None else vab == m(m(m(a, vb), group.inv(a)), va)
    if law is Law.RB_PLUS:
        arg = m(a, m(m(va, b), group.inv(va)))
        varg = images[arg]
        return None if varg is None else m(va, vb) == varg
    if law is Law.RB_MINUS:
        arg = m(m(m(va, b), group.inv(va)), a)
        varg = images[arg]
        return None if varg is None else m(va, vb) == varg
    if law is Law.CROSSED:
        vab = images[m(a, b)]
        return None if vab is None else vab == m(va, action[a][vb])
    raise ValueError(f"unknown law {law!r}")


def check_identity(group: FiniteGroup, op: Sequence[int], law: Law,
                   action: Optional[Sequence[Sequence[int]]] = None
                   ) -> Optional[tuple[str, str]]:
    """Test the law over all ordered pairs.

    Returns None when the law holds everywhere, else the first violating
    pair of element names in element order.
    """
    law = Law(law)
    n = len(group)
    if len(op) != n:
        raise ValueError(f"operator must have {n} images, got {len(op)}")
    if law is Law.CROSSED:
        if action is None:
            raise ValueError("the crossed-homomorphism law needs an action")
        validate_action(group, action)
    for a in range(n):
        for b in range(n):
            if _pair_status(group, op, law, action, a, b) is False:
                return (group.name(a), group.name(b))
    return None


def enumerate_operators(group: FiniteGroup, law: Law,
                        action: Optional[Sequence[Sequence[int]]] = None, *,
                        max_size: int = DEFAULT_ENUM_BOUND,
                        budget: int = DEFAULT_ENUM_BUDGET) -> list[tuple[int, ...]]:
    """All operator maps satisfying the law, in lexicographic image order.

    Backtracks over partial maps, pruning as soon as an assigned triple of
    images violates the law, so the practical cost is far below the |G|^|G|
    candidate bound enforced by ``budget``.
    """
    law = Law(law)
    n = len(group)
    if n > max_size:
        raise EnumerationBudgetError(f"group order {n} exceeds the enumeration bound {max_size}")
    if n ** n > budget:
        raise EnumerationBudgetError(f"{n}^{n} candidate maps exceed the budget {budget}")
    if law is Law.CROSSED:
        if action is None:
            raise ValueError("the crossed-homomorphism law needs an action")
        validate_action(group, action)

    images: list[Optional[int]] = [None] * n
    found: list[tuple[int, ...]] = []

    def consistent(k: int) -> bool:
        for a in range(k + 1):
            for b in range(k + 1):
                if _pair_status(group, images, law, action, a, b) is False:
                    return False
        return True

    def extend(k: int) -> None:
        if k == n:
            found.append(tuple(images))  # type: ignore[arg-type]
            return
        for img in range(n):
            images[k] = img
            if consistent(k):
                extend(k + 1)
        images[k] = None

    extend(0)
    return found


def convert_weight(op: Sequence[int], group: FiniteGroup) -> tuple[int, ...]:
    """g -> P(g^-1): swaps a weight +1 Rota-Baxter operator with a weight -1
    one; applying it twice gives back the original map."""
    return tuple(op[group.inv(i)] for i in group.iter_elements())


def _as_index_set(group: FiniteGroup, members: Iterable) -> set[int]:
    out = set()
    for x in members:
        out.add(group.index(x) if isinstance(x, str) else int(x))
    for i in out:
        if not 0 <= i < len(group):
            raise ValueError(f"element index {i} out of range")
    return out


def _require_subgroup(group: FiniteGroup, s: set[int], which: str) -> None:
    if group.identity_index not in s:
        raise ValueError(f"{which} subgroup does not contain the identity")
    for a in s:
        if group.inv(a) not in s:
            raise ValueError(f"{which} subgroup is not closed under inverse at {group.name(a)!r}")
        for b in s:
            if group.mul(a, b) not in s:
                raise ValueError(
                    f"{which} subgroup is not closed under product at "
                    f"({group.name(a)}, {group.name(b)})")


def projection_operator(group: FiniteGroup, first: Iterable, second: Iterable) -> tuple[int, ...]:
    """Projection to the first factor of an exact factorization.

    ``first`` and ``second`` are subgroups (given by names or indices) with
    trivial intersection whose pairwise products cover the whole group; every
    g then factors uniquely as g = g1 g2 and the returned map sends g to g1.
    The result satisfies the weight -1 Rota-Baxter law.
    """
    s1 = _as_index_set(group, first)
    s2 = _as_index_set(group, second)
    _require_subgroup(group, s1, "first")
    _require_subgroup(group, s2, "second")
    if s1 & s2 != {group.identity_index}:
        raise ValueError("subgroups have nontrivial intersection")
    images: list[Optional[int]] = [None] * len(group)
    for a in sorted(s1):
        for b in sorted(s2):
            p = group.mul(a, b)
            if images[p] is not None:
                raise ValueError(f"factorization of {group.name(p)!r} is not unique")
            images[p] = a
    missing = [group.name(i) for i, v in enumerate(images) if v is None]
    if missing:
        raise ValueError(f"factorization is not exhaustive: no factorization for {missing}")
    return tuple(images)  # type: ignore[arg-type]


# --- standard groups --------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    """The cyclic group of order n with elements e, a, a2, ..."""
    if n < 1:
        raise ValueError("order must be positive")
    names = ["e"] + [f"a{i}" if i > 1 else "a" for i in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(names, table)


def klein_four() -> FiniteGroup:
    """The Klein four-group (Z/2 x Z/2) with elements e, a, b, c."""
    return FiniteGroup(["e", "a", "b", "c"], [[i ^ j for j in range(4)] for i in range(4)])


def dihedral(n: int) -> FiniteGroup:
    """The dihedral group of order 2n: rotations r^i and reflections r^i s."""
    if n < 2:
        raise ValueError("need n >= 2")

    def nm(i, f):
        r = "e" if i == 0 else "r" if i == 1 else f"r{i}"
        if not f:
            return r
        return "s" if i == 0 else r + "s"

    elems = [(i, f) for f in (0, 1) for i in range(n)]
    names = [nm(i, f) for i, f in elems]
    pos = {e: k for k, e in enumerate(elems)}

    def mul(x, y):
        (i, f), (j, g) = x, y
        return ((i + (j if f == 0 else -j)) % n, f ^ g)

    table = [[pos[mul(x, y)] for y in elems] for x in elems]
    return FiniteGroup(names, table)


def _perm_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[i]] for i in range(len(p)))


def _cycle_name(p: tuple[int, ...]) -> str:
    seen: set[int] = set()
    parts = []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc = [s]
        seen.add(s)
        x = p[s]
        while x != s:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        parts.append("(" + "".join(str(v + 1) for v in cyc) + ")")
    return "".join(parts) or "e"


def _perm_group(perms: list[tuple[int, ...]]) -> FiniteGroup:
    perms = sorted(perms)
    pos = {p: k for k, p in enumerate(perms)}
    names = [_cycle_name(p) for p in perms]
    table = [[pos[_perm_mul(p, q)] for q in perms] for p in perms]
    return FiniteGroup(names, table)


def _parity(p: tuple[int, ...]) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def symmetric(n: int) -> FiniteGroup:
    """The symmetric group on n points (n <= 4), named in cycle notation."""
    from itertools import permutations

    if not 1 <= n <= 4:
        raise ValueError("only n <= 4 is supported as an explicit table")
    return _perm_group([tuple(p) for p in permutations(range(n))])


def alternating(n: int) -> FiniteGroup:
    """The alternating group on n points (n <= 4)."""
    from itertools import permutations

    if not 1 <= n <= 4:
        raise ValueError("only n <= 4 is supported as an explicit table")
    return _perm_group([tuple(p) for p in permutations(range(n)) if _parity(tuple(p)) == 0])


def quaternion() -> FiniteGroup:
    """The quaternion group {1, -1, i, -i, j, -j, k, -k}."""
    units = "1ijk"
    prod = {("1", u): (1, u) for u in units}
    prod.update({(u, "1"): (1, u) for u in units})
    for u in "ijk":
        prod[(u, u)] = (-1, "1")
    prod[("i", "j")] = (1, "k")
    prod[("j", "i")] = (-1, "k")
    prod[("j", "k")] = (1, "i")
    prod[("k", "j")] = (-1, "i")
    prod[("k", "i")] = (1, "j")
    prod[("i", "k")] = (-1, "j")

    elems = [(s, u) for u in units for s in (1, -1)]
    names = [("" if s == 1 else "-") + u for s, u in elems]
    pos = {e: k for k, e in enumerate(elems)}

    def mul(x, y):
        s, u = prod[(x[1], y[1])]
        return (s * x[0] * y[0], u)

    table = [[pos[mul(x, y)] for y in elems] for x in elems]
    return FiniteGroup(names, table)


# --- group files ------------------------------------------------------------

_FILE_KEYS = {"elements", "table", "operator", "action", "subgroups"}


@dataclass
class GroupData:
    """Contents of a group file: the validated group plus optional extras."""

    group: FiniteGroup
    operator: Optional[tuple[int, ...]] = None
    action: Optional[tuple[tuple[int, ...], ...]] = None
    subgroups: dict[str, tuple[int, ...]] = field(default_factory=dict)


def load_group_file(path, *, max_size: int = DEFAULT_CHECK_BOUND) -> GroupData:
    """Read and validate a group file (YAML/JSON mapping).

    Required keys: ``elements`` (list of names) and ``table`` (list of rows
    of names).  Optional: ``operator`` (list of names parallel to elements),
    ``action`` (matrix of names) and ``subgroups`` (mapping of name ->
    element list).  Unknown keys are rejected.
    """
    with open(path, encoding="utf-8") as fh:
        raw = yaml.safe_load(fh)
    if not isinstance(raw, dict):
        raise ValueError("group file must be a mapping")
    unknown = set(raw) - _FILE_KEYS
    if unknown:
        raise ValueError(f"unknown group file keys: {', '.join(sorted(map(str, unknown)))}")
    for key in ("elements", "table"):
        if key not in raw:
            raise ValueError(f"group file is missing the {key!r} key")
    elements = [str(s) for s in raw["elements"]]
    group = validate_group(elements, [[str(s) for s in row] for row in raw["table"]],
                           max_size=max_size)

    operator = None
    if "operator" in raw:
        operator = operator_from_names(group, [str(s) for s in raw["operator"]])

    action = None
    if "action" in raw:
        rows = [[group.index(str(s)) for s in row] for row in raw["action"]]
        action = tuple(tuple(row) for row in rows)
        validate_action(group, action)

    subgroups: dict[str, tuple[int, ...]] = {}
    if "subgroups" in raw:
        if not isinstance(raw["subgroups"], dict):
            raise ValueError("subgroups must be a mapping of name -> element list")
        for key, members in raw["subgroups"].items():
            subgroups[str(key)] = tuple(group.index(str(s)) for s in members)

    return GroupData(group, operator, action, subgroups)


def dump_group_file(path, group: FiniteGroup, *, operator: Optional[Sequence[int]] = None,
                    action: Optional[Sequence[Sequence[int]]] = None,
                    subgroups: Optional[dict[str, Sequence[int]]] = None) -> None:
    """Write a group file readable by :func:`load_group_file`."""
    data: dict = {
        "elements": list(group.elements),
        "table": [[group.name(x) for x in row] for row in group._table],
    }
    if operator is not None:
        data["operator"] = list(operator_to_names(group, operator))
    if action is not None:
        data["action"] = [[group.name(x) for x in row] for row in action]
    if subgroups is not None:
        data["subgroups"] = {k: [group.name(i) for i in v] for k, v in subgroups.items()}
    with open(path, "w", encoding="utf-8") as fh:
        yaml.safe_dump(data, fh, sort_keys=False, default_flow_style=None)
