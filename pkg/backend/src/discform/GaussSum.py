"""
Exact Gauss sums of finite quadratic forms.

The sum ``Σ exp(πi q(x))`` is accumulated as an integer coefficient vector
over the ``K``-th roots of unity and compared with ``√|A|·ζ_8^σ`` modulo the
``K``-th cyclotomic polynomial, so no floating point is involved.
"""
import logging
from collections import Counter
from math import gcd
from typing import Dict, Optional

import numpy as np
from sympy import Poly, ZZ, cyclotomic_poly, factorint, symbols

from core.Errors import BoundExceededError, InputError
from discform.FiniteQuadraticForm import FiniteQuadraticForm
from utils.GlobalVarGetter import GlobalVarGetter

logger = logging.getLogger(__name__)

_x = symbols("x")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _multiply(a: Dict[int, int], b: Dict[int, int], K: int) -> Dict[int, int]:
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[(ea + eb) % K] += ca * cb
    return {e: c for e, c in out.items() if c}


def _sqrt_element(N: int, K: int) -> Dict[int, int]:
    """``√N`` as an element of ``Z[ζ_K]`` (``K`` must contain 8 and every odd prime of ``N``)."""
    s = 1
    element = {0: 1}
    for p, e in factorint(N).items():
        s *= p ** (e // 2)
        if e % 2 == 0:
            continue
        if p == 2:
            root = {K // 8: 1, 7 * K // 8: 1}
        else:
            root = dict(Counter((a * a % p) * (K // p) for a in range(p)))
            if p % 4 == 3:
                root = {(e_ + 3 * K // 4) % K: c for e_, c in root.items()}
        element = _multiply(element, root, K)
    return {e: c * s for e, c in element.items()}


def _conductor(q: FiniteQuadraticForm, den: int) -> int:
    K = _lcm(2 * den, 8)
    for p, e in factorint(q.order).items():
        if p != 2 and e % 2:
            K = _lcm(K, 4 * p)
    return K


def gauss_sum(q: FiniteQuadraticForm) -> Dict[int, int]:
    """The Gauss sum as ``{exponent: count}`` over the ``2·den``-th roots of unity."""
    values, den = q.value_table()
    counts = np.bincount(values, minlength=2 * den)
    return {int(e): int(c) for e, c in enumerate(counts) if c}


def _signature_of(q: FiniteQuadraticForm) -> int:
    N = q.order
    if N == 1:
        return 0
    sums = gauss_sum(q)
    den = q.denominator
    K = _conductor(q, den)
    stretch = K // (2 * den)
    total = Counter({e * stretch: c for e, c in sums.items()})
    root = _sqrt_element(N, K)
    phi = cyclotomic_poly(K, _x, polys=True)
    for sigma in range(8):
        shift = sigma * K // 8
        diff = Counter(total)
        for e, c in root.items():
            diff[(e + shift) % K] -= c
        coeffs = [0] * K
        for e, c in diff.items():
            coeffs[e] += c
        poly = Poly(list(reversed(coeffs)), _x, domain=ZZ)
        if poly.rem(phi).is_zero:
            return sigma
    raise InputError(f"{q} is degenerate: its Gauss sum does not have absolute value √{N}")


def milgram_signature(q: FiniteQuadraticForm, bound: Optional[int] = None, decompose: bool = False) -> int:
    """
    ``σ mod 8`` with ``Σ_{x∈A} exp(πi q(x)) = √|A|·exp(2πi σ/8)``.

    With ``decompose`` the sum is split over the p-primary parts, which only
    needs each part to be within ``bound``.
    """
    if bound is None:
        bound = GlobalVarGetter.option("milgram_bound")
    if decompose:
        total = 0
        for part in q.primary_parts():
            total += milgram_signature(part, bound, decompose=False)
        return total % 8
    if q.order > bound:
        raise BoundExceededError(
            f"|A| = {q.order} exceeds the Milgram bound {bound}; "
            f"retry with decompose=True to sum over the p-primary parts", size=q.order, bound=bound)
    sigma = _signature_of(q)
    logger.debug("Milgram signature of %s is %d", q, sigma)
    return sigma


def lattice_signature_mod8(L) -> int:
    pos, neg = L.signature
    return (pos - neg) % 8
