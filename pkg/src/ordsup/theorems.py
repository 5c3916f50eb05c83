"""Right-hand sides of the cyclic-separability characterizations.

Each predicate returns a :class:`Prediction`: the truth value plus the
truth value of every numbered condition, keyed by its roman numeral.
Conditions about a Sylow subgroup for a prime that does not divide |G|
are false.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import (
    Group,
    OrderProfile,
    element_orders,
    is_eppo,
    is_epo,
    is_nilpotent,
    is_power_of_two,
    prime_factors,
    sylow_facts,
)


class HypothesisError(ValueError):
    """The group does not satisfy the theorem's standing hypothesis."""


@dataclass(frozen=True)
class Prediction:
    holds: bool
    clauses: dict[str, bool]
    # clauses that can never be true under the theorem's hypothesis
    vacuous: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.holds


def dihedral_predicate(n: int) -> Prediction:
    if n < 3:
        raise ValueError(f"dihedral family needs n >= 3, got {n}")
    clauses = {"i": not is_power_of_two(n), "ii": n >= 5, "iii": n not in (6, 12)}
    return Prediction(all(clauses.values()), clauses)


def dicyclic_predicate(n: int) -> Prediction:
    if n < 2:
        raise ValueError(f"dicyclic family needs n >= 2, got {n}")
    clauses = {"not_power_of_2": not is_power_of_two(n)}
    return Prediction(clauses["not_power_of_2"], clauses)


def symmetric_predicate(n: int) -> Prediction:
    if n < 2:
        raise ValueError(f"symmetric family needs n >= 2, got {n}")
    return Prediction(n >= 4, {"n>=4": n >= 4})


def alternating_predicate(n: int) -> Prediction:
    if n < 3:
        raise ValueError(f"alternating family needs n >= 3, got {n}")
    return Prediction(n >= 4, {"n>=4": n >= 4})


def _profile(G: Group | OrderProfile) -> OrderProfile:
    return G if isinstance(G, OrderProfile) else element_orders(G)


def _two_large_primes(primes: list[int]) -> bool:
    return sum(1 for p in primes if p >= 5) >= 2


def _sylow_not_prime_or_not_normal(prof: OrderProfile, q: int) -> bool:
    f = sylow_facts(prof, q)
    return f.present and (f.sylow_order != q or not f.is_normal)


def _two_of_three(prof: OrderProfile) -> Prediction:
    primes = prime_factors(prof.group_order)
    clauses = {
        "pq": _two_large_primes(primes),
        "i": any(p >= 5 for p in primes),
        "ii": _sylow_not_prime_or_not_normal(prof, 3),
        "iii": _sylow_not_prime_or_not_normal(prof, 2),
    }
    holds = clauses["pq"] or sum((clauses["i"], clauses["ii"], clauses["iii"])) >= 2
    return Prediction(holds, clauses)


def eppo_predicate(G: Group | OrderProfile) -> Prediction:
    """Separability criterion for groups whose elements all have prime-power order."""
    prof = _profile(G)
    if not is_eppo(prof):
        raise HypothesisError("group is not EPPO")
    return _two_of_three(prof)


def epo_predicate(G: Group | OrderProfile) -> Prediction:
    """Criterion for groups whose non-identity elements all have prime order.

    "Not cyclic" for a Sylow q-subgroup is read as "order is not q": in
    such a group the Sylow subgroups have exponent q.
    """
    prof = _profile(G)
    if not is_epo(prof):
        raise HypothesisError("group is not EPO")
    return _two_of_three(prof)


NILPOTENT_CLAUSES = ("three_primes", "i", "ii", "iii", "iv", "v", "vi", "vii")


def nilpotent_predicate(G: Group | OrderProfile) -> Prediction:
    """Criterion for nilpotent groups, every clause evaluated as written.

    Clauses are reported as raw truth values; only the two-prime branch
    consults them.  Clause (v) asks for a non-normal Sylow 2-subgroup, which a nilpotent
    group never has; it is reported in ``vacuous``.
    """
    if not is_nilpotent(G):
        raise HypothesisError("group is not nilpotent")
    prof = _profile(G)
    primes = prime_factors(prof.group_order)
    syl = {p: sylow_facts(prof, p) for p in {2, 3, *primes}}
    large = [p for p in primes if p >= 5]
    small_present = [q for q in (2, 3) if syl[q].present]

    def not_prime_or_not_normal(q):
        return syl[q].present and (syl[q].sylow_order != q or not syl[q].is_normal)

    two = len(primes) == 2
    clauses = {
        "three_primes": len(primes) >= 3,
        "i": _two_large_primes(primes),
        "ii": any(syl[p].exponent >= p * p for p in large) and bool(small_present),
        "iii": any(syl[p].exponent == p for p in large)
        and any(not_prime_or_not_normal(q) for q in (2, 3)),
        "iv": not_prime_or_not_normal(2) and not_prime_or_not_normal(3),
        "v": syl[2].present and syl[2].exponent >= 4 and not syl[2].is_normal and syl[3].present,
        "vi": syl[2].present and syl[2].exponent >= 8 and syl[3].present,
        "vii": syl[3].present and syl[3].exponent >= 9 and syl[2].present,
    }
    holds = clauses["three_primes"] or (
        two and any(clauses[k] for k in ("i", "ii", "iii", "iv", "v", "vi", "vii"))
    )
    return Prediction(holds, clauses, vacuous=("v",))
