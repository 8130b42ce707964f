"""Tensor multiplicities twisted by the symmetric algebra of M_{p,q}.

Sym(M_{p,q}) decomposes (Cauchy) as the sum over partitions delta with at
most q parts of S^delta(C^p) (x) S^delta(C^q)^*; the U(q) factor enters
through the negated-reversed weight delta^nat.  Every weight of M_{p,q}
has coordinate sum zero, so for a fixed triple exactly one Cauchy degree
can contribute.
"""

from __future__ import annotations

from typing import Dict, List, NamedTuple, Sequence, Tuple

from . import lr
from .weights import Shape, blocks, is_dominant

Vector = Tuple[int, ...]


class CauchyComponent(NamedTuple):
    delta: Tuple[int, ...]  # partition, at most q parts
    up_weight: Tuple[int, ...]  # delta padded to length p
    uq_weight: Tuple[int, ...]  # (-delta_q, ..., -delta_1), length q
    degree: int


def natural_negation(delta: Sequence[int], q: int) -> Tuple[int, ...]:
    """delta^nat = (-delta_q, ..., -delta_1) after padding to q parts."""
    padded = tuple(delta) + (0,) * (q - len(delta))
    return tuple(-v for v in reversed(padded))


def q_module_weights(shape: Shape) -> List[Vector]:
    """T-weights e_i - e_{p+j} of M_{p,q}; pq of them, coordinate sum 0."""
    n = shape.rank
    out = []
    for i in range(shape.p):
        for j in range(shape.q):
            v = [0] * n
            v[i] = 1
            v[shape.p + j] = -1
            out.append(tuple(v))
    return out


def cauchy_components(shape: Shape, degree: int) -> List[CauchyComponent]:
    """The Cauchy pieces of Sym^degree(M_{p,q}), ordered deterministically."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return [
            CauchyComponent((), (0,) * shape.p, (0,) * shape.q, 0)
        ]
    out = []
    for delta in lr.partitions(degree, shape.q):
        up = tuple(delta) + (0,) * (shape.p - len(delta))
        out.append(
            CauchyComponent(tuple(delta), up, natural_negation(delta, shape.q), degree)
        )
    return sorted(out)


def _split_dominant(x: Sequence[int], shape: Shape):
    if not is_dominant(x, shape):
        raise ValueError(f"weight not dominant: {x}")
    if any(int(v) != v for v in x):
        raise ValueError("integral weight required")
    pb, qb = blocks(tuple(int(v) for v in x), shape)
    return pb, qb


def holomorphic_multiplicity(
    lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], shape: Shape
) -> int:
    """m(lam, mu, nu) = [V_nu : V_lam (x) V_mu (x) Sym(M_{p,q})]."""
    lp, lq = _split_dominant(lam, shape)
    mp, mq = _split_dominant(mu, shape)
    np_, nq = _split_dominant(nu, shape)
    d = sum(np_) - sum(lp) - sum(mp)
    if d < 0 or d != (sum(lq) + sum(mq)) - sum(nq):
        return 0
    total = 0
    for comp in cauchy_components(shape, d):
        t_p = lr.triple_multiplicity(lp, mp, comp.up_weight, np_)
        if not t_p:
            continue
        t_q = lr.triple_multiplicity(lq, mq, comp.uq_weight, nq)
        if t_q:
            total += t_p * t_q
    return total


def horn_membership(
    lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], shape: Shape
) -> bool:
    return holomorphic_multiplicity(lam, mu, nu, shape) > 0


def _pair_decomposition(
    a: Tuple[Vector, Vector], b: Tuple[Vector, Vector], degree: int, shape: Shape
) -> Dict[Tuple[Vector, Vector], int]:
    """Decompose V_a (x) V_b (x) Sym^degree(M_{p,q}) over U(p) x U(q)."""
    out: Dict[Tuple[Vector, Vector], int] = {}
    base_p = lr.tensor_expand(a[0], b[0])
    base_q = lr.tensor_expand(a[1], b[1])
    for comp in cauchy_components(shape, degree):
        exp_p: Dict[Vector, int] = {}
        for kp, cp in base_p.items():
            for np_, c2 in lr.tensor_expand(kp, comp.up_weight).items():
                exp_p[np_] = exp_p.get(np_, 0) + cp * c2
        exp_q: Dict[Vector, int] = {}
        for kq, cq in base_q.items():
            for nq, c2 in lr.tensor_expand(kq, comp.uq_weight).items():
                exp_q[nq] = exp_q.get(nq, 0) + cq * c2
        for np_, cp in exp_p.items():
            for nq, cq in exp_q.items():
                key = (np_, nq)
                out[key] = out.get(key, 0) + cp * cq
    return out


def s_fold_multiplicity(
    lams: Sequence[Sequence[int]], nu: Sequence[int], shape: Shape
) -> int:
    """[V_nu : V_{lam_1} (x) ... (x) V_{lam_s} (x) Sym(M_{p,q})^{(x)(s-1)}].

    Computed by a left fold: contract the first two factors with one
    Sym(M_{p,q}), then recurse.  The contraction order does not change the
    result; tests exercise this.
    """
    if len(lams) < 2:
        raise ValueError("need at least two summand weights (s >= 2)")
    split = [_split_dominant(l, shape) for l in lams]
    np_, nq = _split_dominant(nu, shape)
    d_total = sum(np_) - sum(sum(s[0]) for s in split)
    if d_total < 0 or d_total != sum(sum(s[1]) for s in split) - sum(nq):
        return 0

    def rec(parts: List[Tuple[Vector, Vector]], budget: int) -> int:
        if len(parts) == 1:
            kp, kq = parts[0]
            # no Sym factor left: exact match required
            return 1 if budget == 0 and (kp, kq) == (np_, nq) else 0
        if len(parts) == 2:
            # final contraction must consume the whole remaining budget
            dec = _pair_decomposition(parts[0], parts[1], budget, shape)
            return dec.get((np_, nq), 0)
        total = 0
        for d1 in range(budget + 1):
            dec = _pair_decomposition(parts[0], parts[1], d1, shape)
            for kappa, c in sorted(dec.items()):
                sub = rec([kappa] + parts[2:], budget - d1)
                if sub:
                    total += c * sub
        return total

    return rec(list(split), d_total)
