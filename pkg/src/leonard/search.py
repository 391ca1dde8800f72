"""Certified corpus generation.

Two modes: exhaustive lexicographic enumeration over a small odd prime
field, and seeded random search over the rationals with entries drawn from
a small box.  A candidate is a (theta, theta*, varphi) triple; those data
already determine the defining matrices, and the second split sequence is
read off the built system (any independently guessed value either matches
it or fails the round trip).  Every emitted array is oracle-certified.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product as iproduct

from .duality import is_self_dual
from .errors import BudgetExceeded, DegenerateSplit, ExhaustedTrials, NotALeonardPair
from .fields import Field, PrimeFieldElement
from .linalg import Matrix, is_irreducible_tridiagonal
from .systems import LeonardSystem, ParameterArray, certify, extract_parameter_array

DEFAULT_BUDGET = 10**8
DEFAULT_MAX_TRIALS = 10**6


@dataclass(frozen=True)
class SearchConfig:
    field: Field
    d: int
    self_dual_only: bool = False
    limit: int = 1
    seed: int = 0
    max_trials: int = DEFAULT_MAX_TRIALS
    budget: int | None = None  # None: LEONARD_BUDGET env var, else 10^8

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("diameter must be >= 0")
        if self.limit < 1:
            raise ValueError("limit must be >= 1")

    def effective_budget(self) -> int:
        if self.budget is not None:
            return self.budget
        env = os.environ.get("LEONARD_BUDGET")
        return int(env) if env else DEFAULT_BUDGET


def _bidiagonal_pair(field: Field, theta, theta_star, varphi):
    d = len(theta) - 1
    zero, one = field.zero(), field.one()
    A = [[zero] * (d + 1) for _ in range(d + 1)]
    As = [[zero] * (d + 1) for _ in range(d + 1)]
    for i in range(d + 1):
        A[i][i] = theta[i]
        As[i][i] = theta_star[i]
    for i in range(1, d + 1):
        A[i][i - 1] = one
        As[i - 1][i] = varphi[i - 1]
    return Matrix(field, A), Matrix(field, As)


def _pair_certifies(field: Field, theta, theta_star, varphi) -> bool:
    """Cheap exact test of both tridiagonality axioms.

    The eigenvectors of the bidiagonal pair come from two-term recurrences,
    so the eigenbases are triangular; the zero pattern of a conjugated
    matrix does not depend on the eigenvector scaling, hence this test
    agrees exactly with the idempotent-based axiom verifier.
    """
    d = len(theta) - 1
    A, As = _bidiagonal_pair(field, theta, theta_star, varphi)
    zero, one = field.zero(), field.one()

    cols = []
    for j in range(d + 1):
        w = [zero] * (d + 1)
        w[j] = one
        for i in range(j + 1, d + 1):
            w[i] = -w[i - 1] / (theta[i] - theta[j])
        cols.append(w)
    W = Matrix(field, zip(*cols))
    if not is_irreducible_tridiagonal(W.solve(As * W)):
        return False

    cols = []
    for j in range(d + 1):
        u = [zero] * (d + 1)
        u[j] = one
        for i in range(j - 1, -1, -1):
            u[i] = -(varphi[i] * u[i + 1]) / (theta_star[i] - theta_star[j])
        cols.append(u)
    U = Matrix(field, zip(*cols))
    return is_irreducible_tridiagonal(U.solve(A * U))


def _certified_array(field: Field, theta, theta_star, varphi) -> ParameterArray | None:
    """Extract the full array from a surviving candidate and certify it."""
    if not _pair_certifies(field, theta, theta_star, varphi):
        return None
    A, As = _bidiagonal_pair(field, theta, theta_star, varphi)
    try:
        pa = extract_parameter_array(LeonardSystem.from_pair(A, As, theta, theta_star))
        certify(pa)
    except (DegenerateSplit, NotALeonardPair, ValueError):
        return None
    return pa


def enumerate_prime_field(cfg: SearchConfig) -> list[ParameterArray]:
    """Deterministic lexicographic enumeration over GF(p), p odd.

    Candidates are scanned in lexicographic (theta, theta*, varphi, phi)
    order; for a fixed prefix at most one phi can certify (the round trip
    pins it), so the scan walks (theta, theta*, varphi) and derives phi.
    """
    field = cfg.field
    if field.is_rational:
        raise ValueError("enumerate_prime_field needs a prime field")
    p = field.p
    if p == 2:
        raise ValueError("enumeration requires an odd prime")
    d = cfg.d

    n_theta = 1
    for k in range(d + 1):
        n_theta *= p - k
    n_phi = (p - 1) ** d
    if cfg.self_dual_only:
        space = n_theta * n_phi * (p - 1) ** ((d + 1) // 2)
    else:
        space = n_theta * n_theta * n_phi * n_phi
    budget = cfg.effective_budget()
    if space > budget:
        raise BudgetExceeded(f"candidate space {space} exceeds budget {budget}")

    found = []
    nonzero = range(1, p)
    for th_res in permutations(range(p), d + 1):
        theta = tuple(PrimeFieldElement(p, r) for r in th_res)
        if cfg.self_dual_only:
            star_iter = (theta,)
        else:
            star_iter = (
                tuple(PrimeFieldElement(p, r) for r in res)
                for res in permutations(range(p), d + 1)
            )
        for theta_star in star_iter:
            for vp_res in iproduct(nonzero, repeat=d):
                varphi = tuple(PrimeFieldElement(p, r) for r in vp_res)
                pa = _certified_array(field, theta, theta_star, varphi)
                if pa is None:
                    continue
                if cfg.self_dual_only and not is_self_dual(pa):
                    continue
                found.append(pa)
                if len(found) >= cfg.limit:
                    return found
    return found


def _draw_scalar(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def _draw_distinct(rng: random.Random, n: int) -> tuple:
    out = []
    while len(out) < n:
        x = _draw_scalar(rng)
        if x not in out:
            out.append(x)
    return tuple(out)


def _draw_nonzero(rng: random.Random, n: int) -> tuple:
    out = []
    while len(out) < n:
        x = _draw_scalar(rng)
        if x:
            out.append(x)
    return tuple(out)


def random_rational(cfg: SearchConfig) -> list[ParameterArray]:
    """Seeded random search over the rationals; deterministic for a fixed seed.

    Raises ExhaustedTrials (carrying the arrays found so far) when the
    trial cap is reached before the limit.
    """
    field = cfg.field
    if not field.is_rational:
        raise ValueError("random_rational needs the rational field")
    rng = random.Random(cfg.seed)
    found: list[ParameterArray] = []
    for _ in range(cfg.max_trials):
        theta = _draw_distinct(rng, cfg.d + 1)
        theta_star = theta if cfg.self_dual_only else _draw_distinct(rng, cfg.d + 1)
        varphi = _draw_nonzero(rng, cfg.d)
        pa = _certified_array(field, theta, theta_star, varphi)
        if pa is None:
            continue
        if cfg.self_dual_only and not is_self_dual(pa):
            continue
        found.append(pa)
        if len(found) >= cfg.limit:
            return found
    raise ExhaustedTrials(
        f"found {len(found)} of {cfg.limit} within {cfg.max_trials} trials", found
    )


def run_search(cfg: SearchConfig) -> list[ParameterArray]:
    if cfg.field.is_rational:
        return random_rational(cfg)
    return enumerate_prime_field(cfg)
