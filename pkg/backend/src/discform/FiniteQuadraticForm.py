"""Finite quadratic forms and the discriminant forms of even lattices."""
import itertools
import logging
from collections import Counter
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from core.Errors import DegenerateLatticeError, InputError, OddLatticeError
from linalg.MatrixTools import lcm_denominator, mat_mul
from linalg.NormalForms import snf

logger = logging.getLogger(__name__)

Element = Tuple[int, ...]


def mod2(x: Fraction) -> Fraction:
    x = Fraction(x)
    return x - 2 * (x // 2)


def mod1(x: Fraction) -> Fraction:
    x = Fraction(x)
    return x - (x // 1)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class FiniteQuadraticForm:
    """
    A finite abelian group ``⊕ Z/d_i`` with a ``Q/2Z``-valued quadratic form.

    ``q[i][i]`` is ``q(g_i)`` mod 2 and ``q[i][j]`` (``i != j``) is ``b(g_i, g_j)``
    mod 1 on the generators ``g_i`` of order ``d_i``.
    """

    def __init__(self, factors: Sequence[int], q: Sequence[Sequence]):
        self.factors = [int(d) for d in factors]
        k = len(self.factors)
        if any(d <= 1 for d in self.factors):
            raise InputError("invariant factors must exceed 1")
        if len(q) != k or any(len(row) != k for row in q):
            raise InputError("q matrix does not match the invariant factors")
        self.q = [[mod2(q[i][j]) if i == j else mod1(q[i][j]) for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(i):
                if self.q[i][j] != self.q[j][i]:
                    raise InputError("q matrix must be symmetric")
        for i, d in enumerate(self.factors):
            if mod2(d * d * self.q[i][i]) != 0 or any(mod1(d * self.q[i][j]) != 0 for j in range(k) if j != i):
                raise InputError(f"q is not well defined on generator {i} of order {d}")
        self._values = None

    # -- group structure --------------------------------------------------

    @property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.factors, 1)

    @property
    def length(self) -> int:
        """Minimal number of generators ``l(A)``."""
        primes = set()
        for d in self.factors:
            primes.update(factorint(d).keys())
        return max((sum(1 for d in self.factors if d % p == 0) for p in primes), default=0)

    @property
    def primes(self) -> List[int]:
        primes = set()
        for d in self.factors:
            primes.update(factorint(d).keys())
        return sorted(primes)

    def elements(self):
        return itertools.product(*(range(d) for d in self.factors))

    def normalize(self, a: Sequence[int]) -> Element:
        return tuple(int(x) % d for x, d in zip(a, self.factors))

    def add(self, a: Sequence[int], b: Sequence[int]) -> Element:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def scale(self, c: int, a: Sequence[int]) -> Element:
        return tuple((c * x) % d for x, d in zip(a, self.factors))

    def element_order(self, a: Sequence[int]) -> int:
        return reduce(_lcm, (d // gcd(x, d) for x, d in zip(a, self.factors)), 1)

    # -- form -------------------------------------------------------------

    def value(self, a: Sequence[int]) -> Fraction:
        k = len(self.factors)
        total = Fraction(0)
        for i in range(k):
            if a[i]:
                total += a[i] * a[i] * self.q[i][i]
                for j in range(i + 1, k):
                    if a[j]:
                        total += 2 * a[i] * a[j] * self.q[i][j]
        return mod2(total)

    def bilinear(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        k = len(self.factors)
        total = Fraction(0)
        for i in range(k):
            if a[i]:
                for j in range(k):
                    if b[j]:
                        total += a[i] * b[j] * self.q[i][j]
        return mod1(total)

    @property
    def denominator(self) -> int:
        """Common denominator of the values ``q(x)``."""
        entries = [[self.q[i][i]] + [2 * self.q[i][j] for j in range(i + 1, len(self.factors))]
                   for i in range(len(self.factors))]
        return lcm_denominator(entries) if entries else 1

    def value_table(self) -> Tuple[np.ndarray, int]:
        """
        Values of ``q`` on every element as integers ``v`` meaning ``v/den mod 2``.

        Elements are listed in ``itertools.product`` order.
        """
        if self._values is None:
            den = self.denominator
            modulus = 2 * den
            k = len(self.factors)
            if k == 0:
                self._values = (np.zeros(1, dtype=np.int64), den)
                return self._values
            grid = np.indices(self.factors, dtype=np.int64).reshape(k, -1)
            values = np.zeros(grid.shape[1], dtype=np.int64)
            for i in range(k):
                diag = int(self.q[i][i] * den) % modulus
                if diag:
                    values = (values + (grid[i] * grid[i] % modulus) * diag) % modulus
                for j in range(i + 1, k):
                    off = int(2 * self.q[i][j] * den) % modulus
                    if off:
                        values = (values + (grid[i] * grid[j] % modulus) * off) % modulus
            self._values = (values, den)
        return self._values

    def value_multiset(self) -> Counter:
        values, den = self.value_table()
        return Counter(Fraction(int(v), den) for v in values)

    def negate(self) -> "FiniteQuadraticForm":
        return FiniteQuadraticForm(self.factors, [[-x for x in row] for row in self.q])

    def primary_part(self, p: int) -> "PrimaryPart":
        """The ``p``-primary summand, with its generators in the coordinates of ``self``."""
        gens, factors = [], []
        for i, d in enumerate(self.factors):
            pa = 1
            while d % (pa * p) == 0:
                pa *= p
            if pa > 1:
                element = [0] * len(self.factors)
                element[i] = d // pa
                gens.append(tuple(element))
                factors.append(pa)
        k = len(gens)
        q = [[self.value(gens[i]) if i == j else self.bilinear(gens[i], gens[j]) for j in range(k)]
             for i in range(k)]
        return PrimaryPart(factors, q, p, gens, self)

    def primary_parts(self) -> List["PrimaryPart"]:
        return [self.primary_part(p) for p in self.primes]

    def is_trivial(self) -> bool:
        return not self.factors

    # -- records ----------------------------------------------------------

    def to_record(self) -> Dict:
        return {
            "factors": list(self.factors),
            "q": [[[x.numerator, x.denominator] for x in row] for row in self.q],
        }

    @staticmethod
    def from_record(record: Dict) -> "FiniteQuadraticForm":
        try:
            q = [[Fraction(int(x[0]), int(x[1])) for x in row] for row in record["q"]]
            return FiniteQuadraticForm(record["factors"], q)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise InputError(f"malformed finite quadratic form record: {e}")

    def __repr__(self):
        return f"FiniteQuadraticForm(factors={self.factors})"


class PrimaryPart(FiniteQuadraticForm):
    """A ``p``-primary summand remembering where its generators live."""

    def __init__(self, factors, q, p, embedding, parent):
        super().__init__(factors, q)
        self.p = p
        self.embedding = embedding
        self.parent = parent

    def to_parent(self, a: Sequence[int]) -> Element:
        out = [0] * len(self.parent.factors)
        for c, g in zip(a, self.embedding):
            for i, x in enumerate(g):
                out[i] += c * x
        return self.parent.normalize(out)


class DiscriminantForm(FiniteQuadraticForm):
    """
    ``A_L = L^∨/L`` of an even lattice with its generators as rational
    coordinate rows in the basis of ``L``.
    """

    def __init__(self, factors, q, lattice, generators, transform):
        super().__init__(factors, q)
        self.lattice = lattice
        self.generators = generators
        self._transform = transform

    def class_of(self, y: Sequence) -> Element:
        """Class in ``A_L`` of a dual vector ``y`` (rational, ``L`` coordinates)."""
        G = self.lattice.gram
        yG = [sum(Fraction(y[i]) * G[i][j] for i in range(len(y))) for j in range(len(G))]
        if any(Fraction(x).denominator != 1 for x in yG):
            raise InputError("vector is not in the dual lattice")
        out = []
        for col, d in zip(self._transform, self.factors):
            a = sum(int(x) * v for x, v in zip(yG, col))
            out.append(a % d)
        return tuple(out)

    def lift(self, a: Sequence[int]) -> List[Fraction]:
        """Canonical dual representative ``sum a_i g_i``."""
        out = [Fraction(0)] * self.lattice.rank
        for c, g in zip(a, self.generators):
            if c:
                out = [x + c * y for x, y in zip(out, g)]
        return out


def discriminant_form(L) -> DiscriminantForm:
    """Discriminant form of an even nondegenerate lattice via the SNF of its Gram."""
    if not L.is_even:
        raise OddLatticeError(f"{L.name} is odd; its discriminant quadratic form is not defined mod 2")
    if L.determinant == 0:
        raise DegenerateLatticeError(f"{L.name} is degenerate")
    G = L.gram
    n = L.rank
    if n == 0:
        return DiscriminantForm([], [], L, [], [])
    D, U, V = snf(G)
    idx = [i for i in range(n) if D[i][i] > 1]
    factors = [D[i][i] for i in idx]
    generators = [[Fraction(U[i][j], D[i][i]) for j in range(n)] for i in idx]
    UG = mat_mul([U[i] for i in idx], G)
    k = len(idx)
    q = [[None] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            raw = sum(UG[a][j] * U[idx[b]][j] for j in range(n))
            q[a][b] = Fraction(raw, factors[a] * factors[b])
    transform = [[V[r][i] for r in range(n)] for i in idx]
    logger.debug("Discriminant form of %s: factors %s", L.name, factors)
    return DiscriminantForm(factors, q, L, generators, transform)


def group_structure(q: FiniteQuadraticForm) -> Dict[int, List[int]]:
    """Elementary divisors grouped by prime, e.g. ``{2: [2, 2], 3: [9]}``."""
    out = {}
    for p in q.primes:
        part = []
        for d in q.factors:
            pa = 1
            while d % (pa * p) == 0:
                pa *= p
            if pa > 1:
                part.append(pa)
        out[p] = sorted(part)
    return out


def is_isotropic_subgroup(q: FiniteQuadraticForm, gens: Sequence[Element]) -> bool:
    return all(q.value(g) == 0 for g in gens) and all(
        q.bilinear(a, b) == 0 for a, b in itertools.combinations(gens, 2))


def subgroup_elements(q: FiniteQuadraticForm, gens: Sequence[Element]) -> set:
    H = {tuple([0] * len(q.factors))}
    for g in gens:
        new = set(H)
        x = q.normalize(g)
        multiple = x
        while multiple not in H:
            new.update(q.add(h, multiple) for h in H)
            multiple = q.add(multiple, x)
        H = new
    return H


def optional_element(values: Optional[Sequence[int]]) -> Optional[Element]:
    return None if values is None else tuple(values)
