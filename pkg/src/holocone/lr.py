"""Exact Littlewood-Richardson coefficients for U(n).

Weights may have negative parts; everything is reduced to partitions by
shifting with multiples of (1,...,1), which leaves all multiplicities
unchanged.  Coefficients are counted by enumerating skew semistandard
tableaux whose reverse reading word is a lattice word.

The memo caches are plain dicts guarded by a lock so concurrent callers
are safe; results never depend on interleaving.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Dict, Iterator, List, Tuple

GLWeight = Tuple[int, ...]

_lock = threading.RLock()
_lr_cache: Dict[Tuple[GLWeight, GLWeight, GLWeight], int] = {}
_expand_cache: Dict[Tuple[GLWeight, GLWeight], Dict[GLWeight, int]] = {}

CACHE_FORMAT_VERSION = 1


def is_weakly_decreasing(w) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def _check(lam: GLWeight, *others: GLWeight) -> None:
    if not is_weakly_decreasing(lam):
        raise ValueError(f"not weakly decreasing: {lam}")
    for o in others:
        if len(o) != len(lam):
            raise ValueError("mismatched lengths")
        if not is_weakly_decreasing(o):
            raise ValueError(f"not weakly decreasing: {o}")


def shift(lam: GLWeight, a: int) -> GLWeight:
    return tuple(x + a for x in lam)


def normalize_pair(lam: GLWeight, mu: GLWeight):
    """Shift both weights to partitions; returns (lam0, mu0, a, b)."""
    a = -min(lam) if lam and min(lam) < 0 else 0
    b = -min(mu) if mu and min(mu) < 0 else 0
    return shift(lam, a), shift(mu, b), a, b


def _strip_zeros(lam: GLWeight) -> GLWeight:
    out = list(lam)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def lr_count_tableaux(lam: GLWeight, mu: GLWeight, nu: GLWeight) -> int:
    """Number of LR skew tableaux of shape nu/lam and content mu.

    All three must be partitions (nonnegative, weakly decreasing).  Cells
    are filled in reverse reading order (each row right to left, top row
    first) so the lattice condition can be checked incrementally.
    """
    lam = _strip_zeros(lam)
    mu = _strip_zeros(mu)
    nu = _strip_zeros(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if len(nu) < len(lam) or any(n < l for n, l in zip(nu, lam)):
        return 0
    if not mu:
        return 1 if nu == lam else 0
    lam_pad = lam + (0,) * (len(nu) - len(lam))

    # Cells in reverse reading order.
    cells: List[Tuple[int, int]] = []
    for r in range(len(nu)):
        for c in range(nu[r] - 1, lam_pad[r] - 1, -1):
            cells.append((r, c))
    nletters = len(mu)
    remaining = list(mu)
    counts = [0] * (nletters + 1)  # counts[v] = #v placed so far
    counts[0] = sum(mu) + 1  # sentinel: letter 1 always allowed
    filled: Dict[Tuple[int, int], int] = {}

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        total = 0
        right = filled.get((r, c + 1))  # filled before, same row
        above = filled.get((r - 1, c)) if r > 0 and c < nu[r - 1] else None
        hi = right if right is not None else nletters
        lo = (above + 1) if above is not None else 1
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0 or counts[v] + 1 > counts[v - 1]:
                continue
            filled[(r, c)] = v
            remaining[v - 1] -= 1
            counts[v] += 1
            total += place(k + 1)
            counts[v] -= 1
            remaining[v - 1] += 1
            del filled[(r, c)]
        return total

    return place(0)


def lr_coefficient(lam: GLWeight, mu: GLWeight, nu: GLWeight) -> int:
    """c^nu_{lam,mu} for U(n) weights of equal length n."""
    _check(lam, mu, nu)
    lam0, mu0, a, b = normalize_pair(lam, mu)
    nu0 = shift(nu, a + b)
    if min(nu0, default=0) < 0:
        return 0
    key = (lam0, mu0, nu0)
    with _lock:
        hit = _lr_cache.get(key)
    if hit is not None:
        return hit
    val = lr_count_tableaux(lam0, mu0, nu0)
    with _lock:
        _lr_cache[key] = val
    return val


def _candidate_nus(lam: GLWeight, mu: GLWeight, n: int) -> Iterator[GLWeight]:
    """Partitions nu with lam <= nu, |nu| = |lam| + |mu|, at most n rows."""
    total = sum(lam) + sum(mu)
    lam_pad = tuple(lam) + (0,) * (n - len(lam))
    mu1 = mu[0] if mu else 0

    def rec(row: int, prev: int, left: int, acc: List[int]):
        if row == n:
            if left == 0:
                yield tuple(acc)
            return
        low = lam_pad[row]
        # each row gains at most mu_1 boxes (content has mu_1 ones at most
        # per horizontal strip; crude but safe: lam_row + |mu| works too)
        high = min(prev, low + mu1 if row == 0 else prev, left + low)
        for v in range(high, low - 1, -1):
            acc.append(v)
            yield from rec(row + 1, v, left - (v - low), acc)
            acc.pop()

    yield from rec(0, total, sum(mu), [])


def tensor_expand(lam: GLWeight, mu: GLWeight) -> Dict[GLWeight, int]:
    """Full decomposition of V_lam (x) V_mu for U(n), n = len(lam)."""
    _check(lam, mu)
    n = len(lam)
    lam0, mu0, a, b = normalize_pair(lam, mu)
    key = (lam0, mu0)
    with _lock:
        hit = _expand_cache.get(key)
    if hit is None:
        # Smaller second factor keeps the tableau search shallow.
        l0, m0 = (lam0, mu0) if sum(mu0) <= sum(lam0) else (mu0, lam0)
        out: Dict[GLWeight, int] = {}
        for nu0 in _candidate_nus(_strip_zeros(l0), m0, n):
            c = lr_coefficient(l0, m0, nu0)
            if c:
                out[nu0] = c
        hit = out
        with _lock:
            _expand_cache[key] = hit
    s = a + b
    return {shift(nu0, -s): c for nu0, c in hit.items()}


def triple_multiplicity(
    lam: GLWeight, mu: GLWeight, delta: GLWeight, nu: GLWeight
) -> int:
    """Multiplicity of V_nu in V_lam (x) V_mu (x) V_delta."""
    _check(lam, mu, delta, nu)
    if sum(lam) + sum(mu) + sum(delta) != sum(nu):
        return 0
    total = 0
    for kappa, c in tensor_expand(lam, mu).items():
        c2 = lr_coefficient(kappa, delta, nu)
        if c2:
            total += c * c2
    return total


def weyl_dim(lam: GLWeight) -> int:
    """dim V^{U(n)}_lam = prod_{i<j} (lam_i - lam_j + j - i)/(j - i)."""
    _check(lam)
    n = len(lam)
    d = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            d *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert d.denominator == 1
    return int(d)


def partitions(total: int, max_parts: int, max_part: int | None = None):
    """All partitions of `total` into at most `max_parts` parts."""
    if max_part is None:
        max_part = total
    out: List[GLWeight] = []

    def rec(left: int, bound: int, parts: int, acc: List[int]):
        if left == 0:
            out.append(tuple(acc))
            return
        if parts == 0:
            return
        for v in range(min(left, bound), 0, -1):
            acc.append(v)
            rec(left - v, v, parts - 1, acc)
            acc.pop()

    rec(total, max_part, max_parts, [])
    return out


def clear_caches() -> None:
    with _lock:
        _lr_cache.clear()
        _expand_cache.clear()


# ---------------------------------------------------------------------------
# Optional cache persistence (advisory: absence never changes results).


def save_cache(path) -> None:
    with _lock:
        items = sorted(_lr_cache.items())
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"holocone-lr-cache {CACHE_FORMAT_VERSION}\n")
        for (lam, mu, nu), c in items:
            fh.write(
                "{}|{}|{} {}\n".format(
                    ",".join(map(str, lam)),
                    ",".join(map(str, mu)),
                    ",".join(map(str, nu)),
                    c,
                )
            )


def load_cache(path) -> int:
    """Merge a persisted cache; returns the number of entries loaded."""
    loaded = 0
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if header[:1] != ["holocone-lr-cache"] or int(header[1]) != CACHE_FORMAT_VERSION:
            raise ValueError("unrecognized cache file")
        for line in fh:
            keypart, val = line.rsplit(" ", 1)
            lam, mu, nu = (
                tuple(int(x) for x in block.split(",") if x != "")
                for block in keypart.split("|")
            )
            with _lock:
                _lr_cache[(lam, mu, nu)] = int(val)
            loaded += 1
    return loaded


def sym_power_dimension(space_dim: int, degree: int) -> int:
    """dim Sym^d(C^m) = C(m+d-1, d); used in dimension bookkeeping."""
    return comb(space_dim + degree - 1, degree)
