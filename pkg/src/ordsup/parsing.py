"""Group spec strings and permutation cycle notation.

Grammar::

    spec    := "cyclic:N" | "dihedral:N" | "dicyclic:N" | "sym:N" | "alt:N"
             | "perm:" cycles ("," cycles)*
             | "product:" spec ("*" spec)+
    cycles  := ("(" point (ws point)* ")")+

Points are 1-based; fixed points are omitted.  Products are flat: every
``*`` at the top level separates a factor.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from . import groups as g

FAMILIES = ("cyclic", "dihedral", "dicyclic", "sym", "alt", "perm", "product")

# Above this degree S_n and A_n are only ever handled through their profiles.
PROFILE_ONLY_DEGREE = 8


class SpecParseError(ValueError):
    """Malformed spec text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
        self.text = text


def _byte_offset(text: str, char_index: int) -> int:
    return len(text[:char_index].encode("utf-8"))


def parse_cycles(text: str, base: int = 0) -> list[list[tuple[int, ...]]]:
    """Parse ``"(1 2 3)(4 5), (1 2)"`` into generators, each a list of 1-based cycles.

    ``base`` is added to reported offsets so nested callers can point into
    their own input.
    """
    gens: list[list[tuple[int, ...]]] = []
    pos = 0
    n = len(text)

    def fail(msg, i):
        raise SpecParseError(msg, base + _byte_offset(text, i), text)

    while True:
        cycles: list[tuple[int, ...]] = []
        while pos < n and text[pos].isspace():
            pos += 1
        while pos < n and text[pos] == "(":
            close = text.find(")", pos)
            if close < 0:
                fail("unclosed '('", pos)
            body = text[pos + 1:close]
            points = []
            for m in re.finditer(r"\S+", body):
                tok = m.group()
                if not tok.isdigit() or int(tok) < 1:
                    fail(f"bad point {tok!r}", pos + 1 + m.start())
                points.append(int(tok))
            if not points:
                fail("empty cycle", pos)
            if len(set(points)) != len(points):
                fail("repeated point in cycle", pos)
            cycles.append(tuple(points))
            pos = close + 1
            while pos < n and text[pos].isspace():
                pos += 1
        if not cycles:
            fail("expected '('", pos)
        gens.append(cycles)
        if pos == n:
            return gens
        if text[pos] != ",":
            fail(f"unexpected character {text[pos]!r}", pos)
        pos += 1


def cycles_to_permutations(gens: list[list[tuple[int, ...]]]) -> list[tuple[int, ...]]:
    """Turn parsed generators into 0-based image tuples on a common degree."""
    degree = max((max(c) for cycles in gens for c in cycles), default=1)
    perms = []
    for cycles in gens:
        img = list(range(degree))
        touched: set[int] = set()
        for cyc in cycles:
            if touched & set(cyc):
                raise ValueError(f"cycles {cycles} are not disjoint")
            touched |= set(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        perms.append(tuple(img))
    return perms


def parse_permutations(text: str) -> list[tuple[int, ...]]:
    return cycles_to_permutations(parse_cycles(text))


@dataclass(frozen=True)
class GroupSpec:
    """A parsed group spec string.

    ``kind`` is one of :data:`FAMILIES`.  ``n`` is the family parameter,
    ``generators`` holds 0-based permutations for ``perm``, ``factors`` the
    parsed factors for ``product``.
    """

    raw: str
    kind: str
    n: int | None = None
    generators: tuple[tuple[int, ...], ...] = ()
    factors: tuple["GroupSpec", ...] = ()

    def order(self) -> int | None:
        """Group order when known without building the group (None for ``perm``)."""
        if self.kind == "cyclic":
            return self.n
        if self.kind == "dihedral":
            return 2 * self.n
        if self.kind == "dicyclic":
            return 4 * self.n
        if self.kind == "sym":
            return math.factorial(self.n)
        if self.kind == "alt":
            return max(1, math.factorial(self.n) // 2)
        if self.kind == "product":
            sizes = [f.order() for f in self.factors]
            return None if None in sizes else math.prod(sizes)
        return None

    def build(self, cap: int | None = None) -> g.Group:
        if self.kind == "cyclic":
            return g.make_cyclic(self.n, cap)
        if self.kind == "dihedral":
            return g.make_dihedral(self.n, cap)
        if self.kind == "dicyclic":
            return g.make_dicyclic(self.n, cap)
        if self.kind == "sym":
            return g.make_symmetric(self.n, cap)
        if self.kind == "alt":
            return g.make_alternating(self.n, cap)
        if self.kind == "perm":
            return g.group_from_permutation_generators(self.generators, cap, name=self.raw)
        size = self.order()
        if size is not None:
            g._check_cap(size, cap, self.raw)
        out = self.factors[0].build(cap)
        for f in self.factors[1:]:
            out = g.make_direct_product(out, f.build(cap), cap)
        return out

    def profile(self, cap: int | None = None) -> g.OrderProfile:
        """Order profile, computed without materializing elements where possible."""
        if self.kind == "cyclic":
            return g.cyclic_profile(self.n)
        if self.kind == "sym":
            return g.symmetric_profile(self.n)
        if self.kind == "alt":
            return g.alternating_profile(self.n)
        if self.kind == "product":
            prof = self.factors[0].profile(cap)
            for f in self.factors[1:]:
                prof = g.product_profile(prof, f.profile(cap))
            return prof
        return g.element_orders(self.build(cap))

    @property
    def profile_only(self) -> bool:
        """True when the group should not be materialized at all."""
        if self.kind in ("sym", "alt"):
            return self.n >= PROFILE_ONLY_DEGREE
        return any(f.profile_only for f in self.factors)


_BOUNDS = {"cyclic": 1, "dihedral": 3, "dicyclic": 2, "sym": 1, "alt": 1}


def parse_group_spec(text: str, base: int = 0) -> GroupSpec:
    """Parse a spec string; raises :class:`SpecParseError` with a byte offset."""

    def fail(msg, i):
        raise SpecParseError(msg, base + _byte_offset(text, i), text)

    head, sep, rest = text.partition(":")
    kind = head.strip()
    if not sep:
        fail("expected '<family>:'", len(text))
    if kind not in FAMILIES:
        fail(f"unknown family {kind!r}", 0)
    start = len(head) + 1
    if kind == "perm":
        gens = parse_cycles(rest, base + _byte_offset(text, start))
        try:
            perms = cycles_to_permutations(gens)
        except ValueError as exc:
            fail(str(exc), start)
        return GroupSpec(text, "perm", generators=tuple(perms))
    if kind == "product":
        pieces = rest.split("*")
        if len(pieces) < 2:
            fail("a product needs at least two factors joined by '*'", start)
        factors = []
        offset = start
        for piece in pieces:
            factors.append(parse_group_spec(piece, base + _byte_offset(text, offset)))
            offset += len(piece) + 1
        return GroupSpec(text, "product", factors=tuple(factors))
    token = rest.strip()
    if not token.isdigit():
        fail(f"expected a non-negative integer after '{kind}:'", start)
    n = int(token)
    if n < _BOUNDS[kind]:
        fail(f"{kind} needs parameter >= {_BOUNDS[kind]}, got {n}", start)
    return GroupSpec(text, kind, n=n)
