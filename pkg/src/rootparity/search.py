"""Reference-table reproduction and prime search.

Builds rows (T, p, ord_T(2), smallest Mersenne factor, ratio, quality
flags), regenerates the two published tables against an embedded fixture,
and scans prime ranges for candidates without undesirable features.
"""

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from importlib import resources
from typing import Iterator

from .numtheory import (
    euler_phi,
    is_mersenne_prime,
    is_prime,
    multiplicative_order,
    smallest_mersenne_factor,
    verify_mersenne_factor,
)

FLAG_SMALL_LOG2Q = "SMALL_LOG2Q"
FLAG_SMALL_ORD = "SMALL_ORD"
FLAG_LARGE_RATIO = "LARGE_RATIO"

DEFAULT_FACTOR_K_MAX = 10 ** 6
DEFAULT_SCAN_FACTOR_K_MAX = 10 ** 4


@dataclass(frozen=True)
class SearchRow:
    T: int
    p: int
    ord_T_2: int | None  # only when T is prime
    q: int | None  # smallest known prime factor of 2^T - 1
    log2q: int | None
    ratio: Fraction  # phi(p-1)/p = (T+1)/p
    mersenne: bool
    flags: frozenset[str]
    q_source: str | None = None  # "discovered" or "verified"


@dataclass(frozen=True)
class Discrepancy:
    T: int
    field: str
    expected: object
    actual: object


def _expected_tables() -> dict:
    text = resources.files("rootparity").joinpath("data/tables_expected.json")
    return json.loads(text.read_text())


def default_p_cap(T: int) -> int:
    """Search ceiling for the largest p with a given period; configurable."""
    return int(10 * T * math.log(T))


def _phi_sieve(limit: int) -> list[int]:
    phi = list(range(limit + 1))
    for i in range(2, limit + 1):
        if phi[i] == i:  # i prime
            for j in range(i, limit + 1, i):
                phi[j] -= phi[j] // i
    return phi


def largest_p_for_T(T: int, p_cap: int | None = None) -> int | None:
    """Largest prime p <= p_cap with phi(p-1) = T + 1, by descending scan."""
    if T < 3 or T % 2 == 0:
        raise ValueError(f"T must be odd and >= 3, got {T}")
    if p_cap is None:
        p_cap = default_p_cap(T)
    phi = _phi_sieve(p_cap)
    for p in range(p_cap if p_cap % 2 else p_cap - 1, 10, -2):
        if phi[p - 1] == T + 1 and is_prime(p):
            return p
    return None


def flag_row(row: SearchRow) -> SearchRow:
    """Attach the three undesirable-feature flags, compared exactly."""
    flags = set()
    if row.log2q is not None and 10 * row.log2q < row.T:
        flags.add(FLAG_SMALL_LOG2Q)
    if row.ord_T_2 is not None and 4 * row.ord_T_2 < row.T:
        flags.add(FLAG_SMALL_ORD)
    if row.ratio >= Fraction(1, 3):
        flags.add(FLAG_LARGE_RATIO)
    return replace(row, flags=frozenset(flags))


def build_row(p: int, factor_k_max: int = DEFAULT_SCAN_FACTOR_K_MAX) -> SearchRow:
    """Full quality row for one prime p, factor hunt within budget."""
    T = euler_phi(p - 1) - 1
    ord_t = q = log2q = None
    q_source = None
    mersenne = False
    if is_prime(T):
        ord_t = multiplicative_order(2, T)
        mersenne = is_mersenne_prime(T)
        if not mersenne:
            q = smallest_mersenne_factor(T, factor_k_max)
            if q is not None:
                log2q = q.bit_length() - 1
                q_source = "discovered"
    row = SearchRow(
        T=T,
        p=p,
        ord_T_2=ord_t,
        q=q,
        log2q=log2q,
        ratio=Fraction(T + 1, p),
        mersenne=mersenne,
        flags=frozenset(),
        q_source=q_source,
    )
    return flag_row(row)


def reproduce_table1(
    p_cap: int | None = None,
) -> tuple[list[SearchRow], list[Discrepancy]]:
    """Recompute the Mersenne-period table and diff it against the fixture."""
    rows: list[SearchRow] = []
    issues: list[Discrepancy] = []
    for exp in _expected_tables()["table1"]:
        T = exp["T"]
        p = largest_p_for_T(T, p_cap)
        mersenne = is_mersenne_prime(T)
        ord_t = multiplicative_order(2, T)
        ratio = Fraction(T + 1, p) if p else None
        if p != exp["p"]:
            issues.append(Discrepancy(T, "p", exp["p"], p))
        if ord_t != exp["ord"]:
            issues.append(Discrepancy(T, "ord", exp["ord"], ord_t))
        if ratio != Fraction(exp["ratio"]):
            issues.append(Discrepancy(T, "ratio", exp["ratio"], ratio))
        if not mersenne:
            issues.append(Discrepancy(T, "mersenne", True, False))
        rows.append(
            flag_row(
                SearchRow(
                    T=T,
                    p=p if p is not None else 0,
                    ord_T_2=ord_t,
                    q=None,
                    log2q=None,
                    ratio=ratio if ratio is not None else Fraction(0),
                    mersenne=mersenne,
                    flags=frozenset(),
                )
            )
        )
    return rows, issues


def reproduce_table2(
    factor_k_max: int = DEFAULT_FACTOR_K_MAX, p_cap: int | None = None
) -> tuple[list[SearchRow], list[Discrepancy]]:
    """Recompute the composite-Mersenne table; oversized factors are verified
    against the fixture value instead of rediscovered."""
    rows: list[SearchRow] = []
    issues: list[Discrepancy] = []
    for exp in _expected_tables()["table2"]:
        T = exp["T"]
        p = largest_p_for_T(T, p_cap)
        ord_t = multiplicative_order(2, T)
        ratio = Fraction(T + 1, p) if p else None
        q = smallest_mersenne_factor(T, factor_k_max)
        q_source = "discovered" if q is not None else None
        if q is None and verify_mersenne_factor(T, exp["q"]):
            q = exp["q"]
            q_source = "verified"
        if p != exp["p"]:
            issues.append(Discrepancy(T, "p", exp["p"], p))
        if ord_t != exp["ord"]:
            issues.append(Discrepancy(T, "ord", exp["ord"], ord_t))
        if ratio != Fraction(exp["ratio"]):
            issues.append(Discrepancy(T, "ratio", exp["ratio"], ratio))
        if q != exp["q"]:
            issues.append(Discrepancy(T, "q", exp["q"], q))
        log2q = q.bit_length() - 1 if q is not None else None
        if log2q != exp["log2q"]:
            issues.append(Discrepancy(T, "log2q", exp["log2q"], log2q))
        rows.append(
            flag_row(
                SearchRow(
                    T=T,
                    p=p if p is not None else 0,
                    ord_T_2=ord_t,
                    q=q,
                    log2q=log2q,
                    ratio=ratio if ratio is not None else Fraction(0),
                    mersenne=False,
                    flags=frozenset(),
                    q_source=q_source,
                )
            )
        )
    return rows, issues


@dataclass(frozen=True)
class ScanCriteria:
    require_t_prime: bool = False
    require_no_flags: bool = False
    require_two_primitive_root_mod_t: bool = False
    factor_k_max: int = DEFAULT_SCAN_FACTOR_K_MAX
    workers: int = 1


def _passes(row: SearchRow, criteria: ScanCriteria) -> bool:
    if criteria.require_t_prime and row.ord_T_2 is None:
        return False
    if criteria.require_no_flags and row.flags:
        return False
    if criteria.require_two_primitive_root_mod_t:
        if row.ord_T_2 is None or row.ord_T_2 != row.T - 1:
            return False
    return True


def scan(
    p_min: int, p_max: int, criteria: ScanCriteria = ScanCriteria()
) -> Iterator[SearchRow]:
    """Rows for every prime in [p_min, p_max] passing the criteria filter.

    Deterministic and order-stable: rows are emitted in ascending p even
    when the per-prime work is spread over multiple workers.
    """
    if p_min < 11:
        raise ValueError(f"p_min must be >= 11, got {p_min}")
    primes = [p for p in range(p_min | 1, p_max + 1, 2) if is_prime(p)]
    if criteria.workers > 1:
        with ProcessPoolExecutor(max_workers=criteria.workers) as pool:
            rows = pool.map(
                build_row,
                primes,
                [criteria.factor_k_max] * len(primes),
                chunksize=16,
            )
            for row in rows:
                if _passes(row, criteria):
                    yield row
    else:
        for p in primes:
            row = build_row(p, criteria.factor_k_max)
            if _passes(row, criteria):
                yield row
