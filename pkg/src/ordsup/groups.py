"""Concrete finite groups, element orders and Sylow data.

Groups are materialized as full element lists.  Element 0 is always the
identity.  The dihedral and dicyclic families use normal-form pairs
``(i, j)`` standing for ``a^i b^j``; permutation groups use 0-based image
tuples.  Symmetric and alternating groups can also be handled without
materializing elements, through cycle-type combinatorics
(:func:`symmetric_profile`, :func:`alternating_profile`).

EPPO means every element has prime-power order; EPO means every
non-identity element has prime order.  These are the usual meanings; they
are adopted here as definitions.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Sequence

DEFAULT_ELEMENT_CAP = 10**6


class GroupTooLargeError(ValueError):
    """Raised when a construction would exceed the element cap."""


def element_cap() -> int:
    """The active element cap (``ORDSUP_ELEMENT_CAP`` overrides the default)."""
    raw = os.environ.get("ORDSUP_ELEMENT_CAP")
    if raw is None:
        return DEFAULT_ELEMENT_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"ORDSUP_ELEMENT_CAP must be positive, got {raw!r}")
    return cap


def _check_cap(size: int, cap: int | None, what: str) -> None:
    cap = element_cap() if cap is None else cap
    if size > cap:
        raise GroupTooLargeError(f"{what} has {size} elements, above the cap of {cap}")


# ---------------------------------------------------------------------------
# Number theory helpers
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as ``{p: exponent}``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def is_prime_power(n: int) -> bool:
    """True for p^k with k >= 0 (so 1 counts)."""
    return len(factorize(n)) <= 1


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def euler_phi(m: int) -> int:
    """Euler's totient."""
    if m < 1:
        raise ValueError(f"euler_phi needs m >= 1, got {m}")
    result = m
    for p in factorize(m):
        result -= result // p
    return result


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


# ---------------------------------------------------------------------------
# Order profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderProfile:
    """Multiplicity of each element order in a group.

    ``counts`` maps an order ``d`` to the number of elements of order ``d``.
    The order supergraph of a group depends on nothing else.
    """

    counts: Mapping[int, int]

    def __post_init__(self):
        items = sorted((int(d), int(m)) for d, m in dict(self.counts).items())
        if any(d < 1 or m < 1 for d, m in items):
            raise ValueError(f"orders and multiplicities must be positive: {items}")
        if dict(items).get(1) != 1:
            raise ValueError("an order profile has exactly one element of order 1")
        object.__setattr__(self, "counts", dict(items))

    @property
    def group_order(self) -> int:
        return sum(self.counts.values())

    @property
    def orders(self) -> list[int]:
        return list(self.counts)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.counts)

    def __getitem__(self, d: int) -> int:
        return self.counts.get(d, 0)

    def __iter__(self):
        return iter(self.counts)

    def items(self):
        return self.counts.items()

    def to_json(self) -> dict[str, int]:
        return {str(d): m for d, m in self.counts.items()}

    def check(self) -> None:
        """Raise ``ValueError`` if a structural invariant of real groups fails."""
        n = self.group_order
        exp = self.exponent
        for d, m in self.counts.items():
            if n % d or exp % d:
                raise ValueError(f"order {d} does not divide |G| = {n}")
            if m % euler_phi(d):
                raise ValueError(f"{m} elements of order {d} is not a multiple of phi({d})")


def product_profile(a: OrderProfile, b: OrderProfile) -> OrderProfile:
    """Profile of a direct product: o((x, y)) = lcm(o(x), o(y))."""
    out: Counter[int] = Counter()
    for d1, m1 in a.items():
        for d2, m2 in b.items():
            out[math.lcm(d1, d2)] += m1 * m2
    return OrderProfile(out)


def cyclic_profile(n: int) -> OrderProfile:
    return OrderProfile({d: euler_phi(d) for d in range(1, n + 1) if n % d == 0})


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def conjugacy_class_size(n: int, cycle_type: Iterable[tuple[int, int]]) -> int:
    """Size of the conjugacy class of S_n with the given cycle type.

    ``cycle_type`` is a list of ``(r, m_r)`` pairs: ``m_r`` cycles of length
    ``r``, fixed points included as ``(1, m_1)``.  Returns
    ``n! / prod(r**m_r * m_r!)``.
    """
    merged: Counter[int] = Counter()
    for pair in cycle_type:
        try:
            r, m = pair
        except (TypeError, ValueError):
            raise ValueError(f"malformed cycle type entry {pair!r}") from None
        if not (isinstance(r, int) and isinstance(m, int)) or r < 1 or m < 0:
            raise ValueError(f"malformed cycle type entry {pair!r}")
        merged[r] += m
    if n < 0 or sum(r * m for r, m in merged.items()) != n:
        raise ValueError(f"cycle type {sorted(merged.items())} does not partition {n}")
    denom = 1
    for r, m in merged.items():
        denom *= r**m * math.factorial(m)
    return math.factorial(n) // denom


def _cycle_type_profile(n: int, even_only: bool) -> OrderProfile:
    counts: Counter[int] = Counter()
    for part in _partitions(n):
        if even_only and (n - len(part)) % 2:
            continue
        size = conjugacy_class_size(n, Counter(part).items())
        counts[math.lcm(*part)] += size
    return OrderProfile(counts)


def symmetric_profile(n: int) -> OrderProfile:
    """Order profile of S_n from cycle types, without building S_n."""
    if n < 1:
        raise ValueError(f"symmetric group needs n >= 1, got {n}")
    return _cycle_type_profile(n, even_only=False)


def alternating_profile(n: int) -> OrderProfile:
    """Order profile of A_n from even cycle types, without building A_n."""
    if n < 1:
        raise ValueError(f"alternating group needs n >= 1, got {n}")
    return _cycle_type_profile(n, even_only=True)


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class Group:
    """A finite group given by its element list and multiplication rule.

    ``elements[0]`` is the identity.  ``multiply`` acts on element handles;
    :meth:`mul` is the same operation on indices.
    """

    name: str
    elements: Sequence[Hashable]
    multiply: Callable[[Hashable, Hashable], Hashable]
    labels: Sequence[str] | None = None
    _index: dict = field(init=False, repr=False)
    _orders: list[int] | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        self.elements = tuple(self.elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError(f"{self.name}: duplicate element handles")
        if self.labels is None:
            self.labels = tuple(str(x) for x in self.elements)
        else:
            self.labels = tuple(self.labels)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Hashable:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x: Hashable) -> int:
        return self._index[x]

    def mul(self, i: int, j: int) -> int:
        return self._index[self.multiply(self.elements[i], self.elements[j])]

    def element_order(self, i: int) -> int:
        return self.orders()[i]

    def orders(self) -> list[int]:
        """Order of every element, by index."""
        if self._orders is None:
            e = self.identity
            out = []
            for x in self.elements:
                k, y = 1, x
                while y != e:
                    y = self.multiply(y, x)
                    k += 1
                out.append(k)
            self._orders = out
        return self._orders

    def table(self):
        """Full multiplication table as an index array (intended for small groups)."""
        import numpy as np

        n = self.order
        t = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                t[i, j] = self.mul(i, j)
        return t


def check_group_axioms(G: Group, samples: int | None = None, seed: int = 0) -> None:
    """Raise ``ValueError`` unless ``G`` is closed, associative, unital and has inverses.

    Associativity is checked on all triples, or on ``samples`` random triples
    when given.
    """
    import random

    n = G.order
    idx = range(n)
    for i in idx:
        for j in idx:
            try:
                G.mul(i, j)
            except KeyError:
                raise ValueError(f"{G.name}: product of {G.labels[i]} and {G.labels[j]} leaves the group") from None
    for i in idx:
        if G.mul(0, i) != i or G.mul(i, 0) != i:
            raise ValueError(f"{G.name}: element 0 is not a two-sided identity")
        if not any(G.mul(i, j) == 0 and G.mul(j, i) == 0 for j in idx):
            raise ValueError(f"{G.name}: {G.labels[i]} has no inverse")
    if samples is None:
        triples = itertools.product(idx, repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
    for i, j, k in triples:
        if G.mul(G.mul(i, j), k) != G.mul(i, G.mul(j, k)):
            raise ValueError(f"{G.name}: not associative on ({i}, {j}, {k})")


def _ab_label(i: int, j: int) -> str:
    if i == 0 and j == 0:
        return "e"
    a = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
    return a + ("b" if j else "")


def make_cyclic(n: int, cap: int | None = None) -> Group:
    if n < 1:
        raise ValueError(f"cyclic group needs n >= 1, got {n}")
    _check_cap(n, cap, f"Z{n}")
    return Group(
        name=f"Z{n}",
        elements=range(n),
        multiply=lambda x, y: (x + y) % n,
        labels=[_ab_label(i, 0) for i in range(n)],
    )


def make_dihedral(n: int, cap: int | None = None) -> Group:
    """D_{2n} = <a, b | a^n = b^2 = e, ab = ba^-1>, of order 2n."""
    if n < 3:
        raise ValueError(f"dihedral group needs n >= 3, got {n}")
    _check_cap(2 * n, cap, f"D{2 * n}")

    def mul(x, y):
        (i, j), (k, l) = x, y
        return ((i + (k if j == 0 else -k)) % n, (j + l) % 2)

    elements = [(i, j) for j in (0, 1) for i in range(n)]
    return Group(f"D{2 * n}", elements, mul, [_ab_label(i, j) for i, j in elements])


def make_dicyclic(n: int, cap: int | None = None) -> Group:
    """Q_{4n} = <a, b | a^{2n} = e, a^n = b^2, ab = ba^-1>, of order 4n."""
    if n < 2:
        raise ValueError(f"dicyclic group needs n >= 2, got {n}")
    _check_cap(4 * n, cap, f"Q{4 * n}")
    m = 2 * n

    def mul(x, y):
        (i, j), (k, l) = x, y
        if j == 0:
            return ((i + k) % m, l)
        # a^i b a^k b^l = a^(i-k) b^(1+l), and b^2 = a^n
        if l == 0:
            return ((i - k) % m, 1)
        return ((i - k + n) % m, 0)

    elements = [(i, j) for j in (0, 1) for i in range(m)]
    return Group(f"Q{4 * n}", elements, mul, [_ab_label(i, j) for i, j in elements])


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """``p * q`` as maps on points: apply ``q`` first, then ``p``."""
    return tuple(p[x] for x in q)


def cycle_string(p: Sequence[int]) -> str:
    """Cycle notation on points 1..n, fixed points omitted; ``e`` for the identity."""
    seen = set()
    parts = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "e"


def _perm_group(name: str, elements: list[tuple[int, ...]]) -> Group:
    return Group(name, elements, compose, [cycle_string(p) for p in elements])


def _is_even(p: Sequence[int]) -> bool:
    seen = [False] * len(p)
    transpositions = 0
    for s in range(len(p)):
        if seen[s]:
            continue
        length = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        transpositions += length - 1
    return transpositions % 2 == 0


def make_symmetric(n: int, cap: int | None = None) -> Group:
    if n < 1:
        raise ValueError(f"symmetric group needs n >= 1, got {n}")
    _check_cap(math.factorial(n), cap, f"S{n}")
    return _perm_group(f"S{n}", list(itertools.permutations(range(n))))


def make_alternating(n: int, cap: int | None = None) -> Group:
    if n < 1:
        raise ValueError(f"alternating group needs n >= 1, got {n}")
    _check_cap(max(1, math.factorial(n) // 2), cap, f"A{n}")
    return _perm_group(f"A{n}", [p for p in itertools.permutations(range(n)) if _is_even(p)])


def make_direct_product(G: Group, H: Group, cap: int | None = None) -> Group:
    _check_cap(G.order * H.order, cap, f"{G.name} x {H.name}")

    def mul(x, y):
        return (G.multiply(x[0], y[0]), H.multiply(x[1], y[1]))

    elements = [(g, h) for g in G.elements for h in H.elements]
    labels = [f"({lg}, {lh})" for lg in G.labels for lh in H.labels]
    labels[0] = "e"
    return Group(f"{G.name} x {H.name}", elements, mul, labels)


def group_from_permutation_generators(
    generators: Sequence[Sequence[int]], cap: int | None = None, name: str | None = None
) -> Group:
    """Closure of 0-based permutations under composition, by breadth-first search.

    All generators must act on the same number of points.
    """
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("at least one generator is required")
    degree = len(gens[0])
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise ValueError(f"{g} is not a permutation of {degree} points")
    cap = element_cap() if cap is None else cap
    identity = tuple(range(degree))
    seen = {identity: None}
    order = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen[y] = None
                order.append(y)
                if len(order) > cap:
                    raise GroupTooLargeError(f"permutation closure exceeds the cap of {cap}")
                queue.append(y)
    if name is None:
        name = "<" + ", ".join(cycle_string(g) for g in gens) + ">"
    return _perm_group(name, order)


# ---------------------------------------------------------------------------
# Orders, Sylow data, classification
# ---------------------------------------------------------------------------

def element_orders(G: Group) -> OrderProfile:
    return OrderProfile(Counter(G.orders()))


def order_class(G: Group, x: int) -> list[int]:
    """Indices of all elements with the same order as element ``x``."""
    orders = G.orders()
    return [i for i, o in enumerate(orders) if o == orders[x]]


@dataclass(frozen=True)
class SylowFacts:
    """Sylow ``p``-data read off an order profile.

    ``p_element_count`` counts elements of ``p``-power order, identity
    included.  When ``p`` does not divide the group order, ``present`` is
    False and the remaining fields are those of the trivial subgroup.
    """

    prime: int
    sylow_order: int
    exponent: int
    p_element_count: int
    is_normal: bool
    present: bool = True

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "present": self.present,
            "sylow_order": self.sylow_order,
            "exponent": self.exponent,
            "p_element_count": self.p_element_count,
            "is_normal": self.is_normal,
        }


def _profile_of(G: Group | OrderProfile) -> OrderProfile:
    return G if isinstance(G, OrderProfile) else element_orders(G)


def sylow_facts(G: Group | OrderProfile, p: int) -> SylowFacts:
    """Sylow facts for ``p``; accepts a group or just its order profile.

    The Sylow ``p``-subgroup is normal exactly when the ``p``-elements number
    ``p^a``: every ``p``-element lies in some Sylow subgroup, and the union
    of those subgroups has ``p^a`` elements only when there is one of them.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    prof = _profile_of(G)
    sylow = p_part(prof.group_order, p)
    if sylow == 1:
        return SylowFacts(p, 1, 1, 1, True, present=False)
    p_orders = [d for d in prof if d > 1 and p_part(d, p) == d]
    count = 1 + sum(prof[d] for d in p_orders)
    exponent = max(p_orders, default=1)
    return SylowFacts(p, sylow, exponent, count, count == sylow)


def all_sylow_facts(G: Group | OrderProfile) -> list[SylowFacts]:
    prof = _profile_of(G)
    return [sylow_facts(prof, p) for p in prime_factors(prof.group_order)]


def is_eppo(G: Group | OrderProfile) -> bool:
    return all(is_prime_power(d) for d in _profile_of(G))


def is_epo(G: Group | OrderProfile) -> bool:
    return all(d == 1 or is_prime(d) for d in _profile_of(G))


def nilpotent_by_sylow(G: Group | OrderProfile) -> bool:
    """All Sylow subgroups normal."""
    return all(f.is_normal for f in all_sylow_facts(G))


def nilpotent_by_commuting(G: Group) -> bool:
    """Elements of coprime orders commute.

    Only elements of prime-power order are compared: each element is a
    product of commuting prime-power powers of itself, so this suffices.
    """
    orders = G.orders()
    by_prime: dict[int, list[int]] = {}
    for i, o in enumerate(orders):
        if o > 1 and is_prime_power(o):
            by_prime.setdefault(prime_factors(o)[0], []).append(i)
    primes = sorted(by_prime)
    for a, b in itertools.combinations(primes, 2):
        for i in by_prime[a]:
            for j in by_prime[b]:
                if G.mul(i, j) != G.mul(j, i):
                    return False
    return True


def is_nilpotent(G: Group | OrderProfile) -> bool:
    """Nilpotency, computed two ways and cross-checked when a group is given."""
    by_sylow = nilpotent_by_sylow(G)
    if isinstance(G, OrderProfile):
        return by_sylow
    by_commuting = nilpotent_by_commuting(G)
    if by_commuting != by_sylow:
        raise RuntimeError(
            f"{G.name}: nilpotency criteria disagree (commuting={by_commuting}, sylow={by_sylow})"
        )
    return by_commuting
