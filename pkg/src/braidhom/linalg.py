"""Exact sparse linear algebra over Q.

Everything the homology pipeline needs reduces to ranks, kernels, and
solves of sparse matrices with Fraction entries.  Rows are cleared to
integers and eliminated fraction-free (cross-multiplication followed by
a gcd reduction), which keeps entries small without ever leaving exact
arithmetic.  Row operations are recorded so a factored matrix can be
reused for many right-hand sides.

Matrices enter as lists of sparse rows {col: coeff}; vectors are plain
lists of Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def rows_from_entries(entries: dict, nrows: int) -> list:
    """Turn a {(row, col): coeff} dict into a list of sparse row dicts."""
    rows = [dict() for _ in range(nrows)]
    for (r, c), v in entries.items():
        if v:
            rows[r][c] = Fraction(v)
    return rows


def _scaled_int_row(row: dict):
    """Clear denominators and divide out the content; returns (irow, scale).

    scale is the Fraction s with irow = s * row.
    """
    if not row:
        return {}, Fraction(1)
    denom = 1
    for v in row.values():
        denom = denom * v.denominator // gcd(denom, v.denominator)
    nums = {c: int(v * denom) for c, v in row.items()}
    g = 0
    for v in nums.values():
        g = gcd(g, v)
    if g > 1:
        nums = {c: v // g for c, v in nums.items()}
    else:
        g = 1
    return nums, Fraction(denom, g)


class Echelon:
    """Fraction-free row echelon form with replayable row operations.

    Pivoting is deterministic: columns are scanned left to right and the
    first remaining row with a nonzero entry is promoted.  The recorded
    operation log lets solve() transform arbitrary right-hand sides
    exactly as the matrix rows were transformed.
    """

    def __init__(self, rows, ncols: int):
        self.ncols = ncols
        self.nrows = len(rows)
        self.scales = []
        work = []
        for row in rows:
            irow, s = _scaled_int_row(row)
            work.append(irow)
            self.scales.append(s)
        self.ops = []  # ("swap", i, j) | ("axpy", i, r, piv, v, g)
        self.rows = work
        self.pivots = []  # list of (row, col)
        self._eliminate()

    def _eliminate(self):
        work = self.rows
        r = 0
        for col in range(self.ncols):
            sel = None
            for i in range(r, len(work)):
                if work[i].get(col):
                    sel = i
                    break
            if sel is None:
                continue
            if sel != r:
                work[r], work[sel] = work[sel], work[r]
                self.ops.append(("swap", r, sel))
            piv = work[r][col]
            for i in range(r + 1, len(work)):
                v = work[i].get(col)
                if not v:
                    continue
                new = {}
                for c, val in work[i].items():
                    new[c] = piv * val
                for c, val in work[r].items():
                    new[c] = new.get(c, 0) - v * val
                new = {c: val for c, val in new.items() if val}
                g = 0
                for val in new.values():
                    g = gcd(g, val)
                g = max(g, 1)
                if g > 1:
                    new = {c: val // g for c, val in new.items()}
                work[i] = new
                self.ops.append(("axpy", i, r, piv, v, g))
            self.pivots.append((r, col))
            r += 1
            if r == len(work):
                break

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _transform_rhs(self, b):
        """Replay the recorded row operations on a right-hand side."""
        w = [Fraction(v) * s for v, s in zip(b, self.scales)]
        for op in self.ops:
            if op[0] == "swap":
                _, i, j = op
                w[i], w[j] = w[j], w[i]
            else:
                _, i, r, piv, v, g = op
                w[i] = (piv * w[i] - v * w[r]) / g
        return w

    def solve(self, b):
        """A particular solution x of A x = b, or None if inconsistent.

        Free variables are set to zero, so the answer is deterministic.
        """
        assert len(b) == self.nrows
        w = self._transform_rhs(b)
        for i in range(self.rank, self.nrows):
            if w[i]:
                return None
        x = [Fraction(0)] * self.ncols
        for r, col in reversed(self.pivots):
            row = self.rows[r]
            acc = w[r]
            for c, val in row.items():
                if c > col:
                    acc -= val * x[c]
            x[col] = acc / row[col]
        return x

    def kernel_basis(self):
        """Deterministic basis of the null space, one vector per free column."""
        pivot_cols = {col for _, col in self.pivots}
        basis = []
        for f in range(self.ncols):
            if f in pivot_cols:
                continue
            x = [Fraction(0)] * self.ncols
            x[f] = Fraction(1)
            for r, col in reversed(self.pivots):
                row = self.rows[r]
                acc = Fraction(0)
                for c, val in row.items():
                    if c > col:
                        acc -= val * x[c]
                x[col] = acc / row[col]
            basis.append(x)
        return basis


def matrix_rank(entries: dict, nrows: int, ncols: int) -> int:
    return Echelon(rows_from_entries(entries, nrows), ncols).rank


def mat_vec(entries: dict, vec, nrows: int):
    out = [Fraction(0)] * nrows
    for (r, c), v in entries.items():
        if vec[c]:
            out[r] += v * vec[c]
    return out


class RowSpace:
    """Incrementally built row space with exact membership reduction."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows = []  # integer echelon rows, sorted by pivot column
        self.pivcols = []

    def _reduce(self, vec):
        """Reduce a Fraction vector against the stored rows (copy returned)."""
        w = list(vec)
        for row, pc in zip(self.rows, self.pivcols):
            if w[pc]:
                factor = w[pc] / row[pc]
                for c, val in row.items():
                    w[c] -= factor * val
        return w

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec) -> bool:
        """Insert a vector; True if it enlarged the span."""
        w = self._reduce(vec)
        pc = next((c for c, v in enumerate(w) if v), None)
        if pc is None:
            return False
        irow, _ = _scaled_int_row({c: v for c, v in enumerate(w) if v})
        pos = 0
        while pos < len(self.pivcols) and self.pivcols[pos] < pc:
            pos += 1
        self.rows.insert(pos, irow)
        self.pivcols.insert(pos, pc)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


class SubquotientBasis:
    """A basis of (span of cycles)/(span of boundaries) with coordinates.

    Representatives are chosen greedily from the cycle list in order, so
    the basis is deterministic.  express() writes any vector of
    span(cycles) + span(boundaries) in the representative basis modulo
    boundaries.
    """

    def __init__(self, ambient_dim: int, cycles, boundaries):
        self.ambient_dim = ambient_dim
        space = RowSpace(ambient_dim)
        self.boundary_basis = []
        for b in boundaries:
            if space.add(b):
                self.boundary_basis.append(list(b))
        self.reps = []
        for z in cycles:
            if space.add(z):
                self.reps.append(list(z))
        cols = self.boundary_basis + self.reps
        entries = {}
        for j, v in enumerate(cols):
            for i, val in enumerate(v):
                if val:
                    entries[(i, j)] = val
        self._solver = Echelon(rows_from_entries(entries, ambient_dim),
                               len(cols))

    @property
    def dim(self) -> int:
        return len(self.reps)

    def express(self, vec):
        """Coordinates of vec in the representative basis, mod boundaries."""
        x = self._solver.solve(list(vec))
        if x is None:
            raise ValueError("vector is not in cycles + boundaries")
        nb = len(self.boundary_basis)
        return x[nb:]
