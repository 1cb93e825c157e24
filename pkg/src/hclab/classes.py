"""Group-class membership: nilpotent, p-nilpotent, solvable, supersolvable,
Sylow towers, quasinilpotent, minimal nonnilpotent, and the two formations."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .group import Group, Subgroup, as_group, exponent, is_normal, quotient
from .lattice import (
    frattini,
    is_p_power,
    is_prime,
    maximal_subgroups,
    normal_subgroups,
    p_part,
    prime_factors,
    sylow_subgroup,
    sylow_subgroups,
)
from .series import (
    chief_series,
    derived_series,
    generalized_fitting,
    is_chief_factor,
    lower_central_series,
)


class Formation(str, enum.Enum):
    SUPERSOLVABLE = "supersolvable"
    SOLVABLE = "solvable"


def is_abelian(X: Group | Subgroup) -> bool:
    return as_group(X).is_abelian


def is_p_group(X: Group | Subgroup, p: int | None = None) -> bool:
    n = X.order if isinstance(X, Group) else X.size
    ps = prime_factors(n)
    return len(ps) <= 1 and (p is None or not ps or ps == [p])


def is_cyclic(X: Group | Subgroup) -> bool:
    G = as_group(X)
    return max(G.element_orders) == G.order


def is_nilpotent(X: Group | Subgroup) -> bool:
    G = as_group(X)
    return lower_central_series(G).last.is_trivial


def is_nilpotent_by_sylows(X: Group | Subgroup) -> bool:
    """Nilpotency as 'every Sylow subgroup is normal'."""
    G = as_group(X)
    return all(len(sylow_subgroups(G, p)) == 1 for p in prime_factors(G.order))


def is_p_nilpotent(X: Group | Subgroup, p: int) -> bool:
    """G has a normal p-complement."""
    G = as_group(X)
    target = G.order // p_part(G.order, p)
    return any(N.size == target for N in normal_subgroups(G))


def is_solvable(X: Group | Subgroup) -> bool:
    G = as_group(X)
    return derived_series(G).last.is_trivial


def is_supersolvable(X: Group | Subgroup) -> bool:
    G = as_group(X)
    return all(is_prime(k) for k in chief_series(G).factor_orders())


def has_sylow_tower_supersolvable_type(X: Group | Subgroup) -> bool:
    """Normal Sylow subgroups taken for primes in descending order, through quotients."""
    G = as_group(X)
    for p in sorted(prime_factors(G.order), reverse=True):
        P = sylow_subgroup(G, p)
        if not is_normal(G, P):
            return False
        G, _ = quotient(G, P)
    return True


def is_quasinilpotent(X: Group | Subgroup) -> bool:
    G = as_group(X)
    return generalized_fitting(G).is_whole


@dataclass
class SchmidtDecomposition:
    """G = P x| Q with P a normal Sylow p-subgroup and Q a cyclic Sylow q-subgroup."""

    p: int
    q: int
    P: Subgroup
    Q: Subgroup
    frattini_P: Subgroup
    exponent_P: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.checks.values())


def schmidt_decomposition(G: Group) -> SchmidtDecomposition | None:
    primes = prime_factors(G.order)
    if len(primes) != 2:
        return None
    normal_sylow = [p for p in primes if is_normal(G, sylow_subgroup(G, p))]
    if len(normal_sylow) != 1:
        return None
    p = normal_sylow[0]
    q = next(r for r in primes if r != p)
    P, Q = sylow_subgroup(G, p), sylow_subgroup(G, q)
    phi = frattini(P)
    exp_p = exponent(G, P)
    checks = {
        "P normal Sylow": True,
        "Q cyclic": is_cyclic(Q),
        "Q not normal": not is_normal(G, Q),
        "P/Phi(P) chief factor": is_normal(G, phi) and is_chief_factor(G, phi, P),
        "exponent bound": exp_p == p if p > 2 else exp_p <= 4,
    }
    return SchmidtDecomposition(p, q, P, Q, phi, exp_p, checks)


def is_minimal_nonnilpotent(X: Group | Subgroup) -> tuple[bool, SchmidtDecomposition | None]:
    """Nonnilpotent with every proper subgroup nilpotent; returns the verified structure."""
    G = as_group(X)
    if is_nilpotent(G):
        return False, None
    if not all(is_nilpotent(M) for M in maximal_subgroups(G)):
        return False, None
    return True, schmidt_decomposition(G)


def in_formation(X: Group | Subgroup, formation: Formation) -> bool:
    if Formation(formation) is Formation.SUPERSOLVABLE:
        return is_supersolvable(X)
    return is_solvable(X)


def is_p_power_order(X: Group | Subgroup, p: int) -> bool:
    n = X.order if isinstance(X, Group) else X.size
    return is_p_power(n, p)
