"""Polynomials over the symmetric-quotient coefficient rings.

Everything downstream works over S = Q[x_1, ..., x_n] / (x_1 + ... + x_n)
with every variable in internal degree 2.  We eliminate x_n once and for
all, x_n = -(x_1 + ... + x_{n-1}), so elements of S are ordinary
polynomials in the first n-1 variables and equality is literal equality
of coefficient dicts.  Bimodule constructions also need the two-sided
ring S (x) S whose right copy uses variables y_1, ..., y_{n-1} with y_n
eliminated the same way.

A Poly is a sparse mapping {exponent tuple: Fraction}; exponent tuples
have length n-1 (one-sided) or 2(n-1) (two-sided, x-block then y-block).
For n = 1 the only monomial is the empty tuple and polys are constants.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


class Poly:
    """Sparse polynomial with exact rational coefficients."""

    __slots__ = ("n", "two_sided", "terms")

    def __init__(self, n: int, terms=None, two_sided: bool = False):
        self.n = n
        self.two_sided = two_sided
        m = self.nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    mono = tuple(mono)
                    assert len(mono) == m, (mono, m)
                    clean[mono] = c
        self.terms = clean

    @property
    def nvars(self) -> int:
        return 2 * (self.n - 1) if self.two_sided else self.n - 1

    # --- constructors ---

    @classmethod
    def zero(cls, n: int, two_sided: bool = False) -> "Poly":
        return cls(n, {}, two_sided)

    @classmethod
    def const(cls, n: int, c, two_sided: bool = False) -> "Poly":
        m = 2 * (n - 1) if two_sided else n - 1
        return cls(n, {(0,) * m: Fraction(c)}, two_sided)

    @classmethod
    def one(cls, n: int, two_sided: bool = False) -> "Poly":
        return cls.const(n, 1, two_sided)

    @classmethod
    def x(cls, n: int, i: int, two_sided: bool = False) -> "Poly":
        """The class of x_i (1-based); x_n comes out as -(x_1+...+x_{n-1})."""
        assert 1 <= i <= n
        m = 2 * (n - 1) if two_sided else n - 1
        if i < n:
            e = [0] * m
            e[i - 1] = 1
            return cls(n, {tuple(e): Fraction(1)}, two_sided)
        terms = {}
        for j in range(n - 1):
            e = [0] * m
            e[j] = 1
            terms[tuple(e)] = Fraction(-1)
        return cls(n, terms, two_sided)

    @classmethod
    def y(cls, n: int, i: int) -> "Poly":
        """Right-copy variable y_i in the two-sided ring."""
        assert 1 <= i <= n
        m = 2 * (n - 1)
        if i < n:
            e = [0] * m
            e[n - 1 + i - 1] = 1
            return cls(n, {tuple(e): Fraction(1)}, True)
        terms = {}
        for j in range(n - 1):
            e = [0] * m
            e[n - 1 + j] = 1
            terms[tuple(e)] = Fraction(-1)
        return cls(n, terms, True)

    # --- ring structure ---

    def _compat(self, other: "Poly"):
        assert self.n == other.n and self.two_sided == other.two_sided

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other, self.two_sided)
        self._compat(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return Poly(self.n, terms, self.two_sided)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.n, {m: -c for m, c in self.terms.items()}, self.two_sided)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.n, {m: c * other for m, c in self.terms.items()},
                        self.two_sided)
        self._compat(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return Poly(self.n, terms, self.two_sided)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        assert k >= 0
        out = Poly.one(self.n, self.two_sided)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other, self.two_sided)
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.n == other.n and self.two_sided == other.two_sided
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.n, self.two_sided, frozenset(self.terms.items())))

    # --- grading ---

    def degree(self):
        """Internal degree of the top term (every variable has degree 2)."""
        if not self.terms:
            return None
        return max(2 * sum(m) for m in self.terms)

    def homogeneous_degree(self):
        """Degree if homogeneous (None for 0); raises otherwise."""
        if not self.terms:
            return None
        degs = {2 * sum(m) for m in self.terms}
        if len(degs) != 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    # --- one-sided <-> two-sided ---

    def lift(self) -> "Poly":
        """Embed a one-sided poly p(x) into the two-sided ring."""
        assert not self.two_sided
        pad = (0,) * (self.n - 1)
        return Poly(self.n, {m + pad: c for m, c in self.terms.items()}, True)

    def right_lift(self) -> "Poly":
        """Send a one-sided poly p(x) to p(y) in the two-sided ring."""
        assert not self.two_sided
        pad = (0,) * (self.n - 1)
        return Poly(self.n, {pad + m: c for m, c in self.terms.items()}, True)

    def split_xy(self):
        """Write a two-sided poly as [(y-monomial, x-part Poly)] pairs.

        Used to apply p(x, y) as an operator on a bimodule: the x-part
        multiplies on the left and the y-monomial goes through the right
        action matrices.  Terms are grouped by y-monomial, sorted.
        """
        assert self.two_sided
        k = self.n - 1
        grouped: dict = {}
        for mono, c in self.terms.items():
            xm, ym = mono[:k], mono[k:]
            grouped.setdefault(ym, {})[xm] = c
        return [(ym, Poly(self.n, xterms, False))
                for ym, xterms in sorted(grouped.items())]

    # --- linear algebra over graded pieces ---

    def mult_matrix(self, src: "GradedPiece", tgt: "GradedPiece") -> dict:
        """Sparse matrix {(row, col): coeff} of multiplication by self.

        Columns are indexed by src monomials, rows by tgt monomials.  The
        poly must be homogeneous of degree tgt.degree - src.degree.
        """
        out: dict = {}
        if not self.terms:
            return out
        for c_idx, mono in enumerate(src.basis):
            for e, coef in self.terms.items():
                target = tuple(a + b for a, b in zip(e, mono))
                out_key = (tgt.index(target), c_idx)
                out[out_key] = out.get(out_key, Fraction(0)) + coef
        return {k: v for k, v in out.items() if v}

    def __repr__(self):
        if not self.terms:
            return "0"
        k = self.n - 1
        names = [f"x{i+1}" for i in range(k)]
        if self.two_sided:
            names += [f"y{i+1}" for i in range(k)]
        bits = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            vs = "*".join(f"{names[i]}^{e}" if e > 1 else names[i]
                          for i, e in enumerate(mono) if e)
            if vs:
                bits.append(f"{c}*{vs}" if c != 1 else vs)
            else:
                bits.append(str(c))
        return " + ".join(bits)


def monomials(nvars: int, total: int):
    """All exponent tuples of length nvars summing to total, lex order."""
    if nvars == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in monomials(nvars - 1, total - first):
            yield (first,) + rest


def monomial_count(nvars: int, total: int) -> int:
    if total < 0:
        return 0
    return comb(total + nvars - 1, nvars - 1) if nvars else (1 if total == 0 else 0)


class GradedPiece:
    """Ordered monomial basis of one internal degree of the coefficient ring."""

    __slots__ = ("n", "degree", "two_sided", "basis", "_index")

    def __init__(self, n: int, degree: int, two_sided: bool = False):
        self.n, self.degree, self.two_sided = n, degree, two_sided
        m = 2 * (n - 1) if two_sided else n - 1
        if degree < 0 or degree % 2:
            self.basis = []
        else:
            self.basis = list(monomials(m, degree // 2))
        self._index = {mono: k for k, mono in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, mono) -> int:
        return self._index[mono]

    def vector(self, p: Poly) -> list:
        """Coefficient vector of a homogeneous poly in this piece's basis."""
        v = [Fraction(0)] * self.dim
        for mono, c in p.terms.items():
            v[self._index[mono]] = c
        return v

    def poly(self, vec) -> Poly:
        terms = {mono: c for mono, c in zip(self.basis, vec) if c}
        return Poly(self.n, terms, self.two_sided)


def phi(n: int, i: int) -> Poly:
    """x_i - y_i in the two-sided ring."""
    return Poly.x(n, i, True) - Poly.y(n, i)


def psi_quotient(n: int, i: int, N: int) -> Poly:
    """(x_i^N - y_i^N) / (x_i - y_i) = sum over a+b = N-1 of x_i^a y_i^b."""
    xi, yi = Poly.x(n, i, True), Poly.y(n, i)
    out = Poly.zero(n, True)
    for a in range(N):
        out = out + xi ** a * yi ** (N - 1 - a)
    return out


def power_sum_difference(n: int, N: int) -> Poly:
    """sum_i (x_i^N - y_i^N) over all n variables, canonicalized."""
    out = Poly.zero(n, True)
    for i in range(1, n + 1):
        out = out + Poly.x(n, i, True) ** N - Poly.y(n, i) ** N
    return out
