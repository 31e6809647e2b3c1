"""Triply graded homology of braid closures from degreewise Koszul slices.

For each term M of a braid-word complex, the self-tensor homology of M
is computed from its contraction column: the free module M (x) Lambda
on n-1 exterior directions, with differential contracting one direction
at a time against the commuting operators x_j - (right action of x_j).
Every internal degree j of that column is a finite-dimensional exact
linear-algebra problem, so the homology is assembled slice by slice:

  stage 1: per (term k, exterior weight p, internal degree j), a
           subquotient basis (cycles of the outgoing contraction modulo
           boundaries of the incoming one);
  stage 2: the word differentials, extended by the identity on the
           exterior directions, push stage-1 representatives forward;
           expressing the images in the target subquotients gives
           induced maps whose k-direction homology is the answer.

The result is a triply graded dimension table in (k, i, j).  Reported
gradings are normalized so that one-crossing presentations of the
unknot sit at the origin: k and i both shift by (writhe + 1 - n)/2,
which is an integer exactly when the closure is a knot; for links the
shift is floored and flagged.  The graded Euler characteristic then
matches the two-variable skein polynomial of the closure under the
fixed change of variables recorded in conventions.py.

Internal degrees are scanned upward from the lowest generator degree
until a configurable run of degrees contributes no homology past the
highest generator degree (knots have finite-dimensional homology, so
the scan terminates; links may be truncated, which is reported).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .bimodule import (Bimodule, GradedFreeBasis, graded_map_entries,
                       identity_bimodule)
from .braid import Word
from .complexes import rouquier_complex
from .diffobj import DiffObject, conjugate
from .laurent import Laurent2
from .linalg import Echelon, SubquotientBasis, mat_vec, matrix_rank, \
    rows_from_entries
from .poly import GradedPiece, phi


class DegreeWindow:
    """Internal-degree scan bounds: top degree and stabilization margin."""

    __slots__ = ("max_degree", "margin")

    def __init__(self, max_degree: int = 60, margin: int = 6):
        if max_degree < 0 or max_degree % 2:
            raise ValueError("max_degree must be even and nonnegative")
        if margin < 1:
            raise ValueError("margin must be at least 1")
        self.max_degree = max_degree
        self.margin = margin

    def __repr__(self):
        return f"DegreeWindow(max_degree={self.max_degree}, margin={self.margin})"


class TriGradedSpace:
    """Finitely supported dimension table over three integer gradings."""

    __slots__ = ("dims",)

    def __init__(self, dims=None):
        self.dims = {}
        if dims:
            for (k, i, j), d in dims.items():
                self.add(k, i, j, d)

    def add(self, k: int, i: int, j: int, d: int = 1):
        if d:
            key = (k, i, j)
            new = self.dims.get(key, 0) + d
            assert new >= 0, f"negative dimension at {key}"
            if new:
                self.dims[key] = new
            else:
                del self.dims[key]

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def table(self) -> list:
        """Sorted rows [k, i, j, dim]."""
        return [[k, i, j, self.dims[(k, i, j)]]
                for (k, i, j) in sorted(self.dims)]

    @classmethod
    def from_table(cls, rows) -> "TriGradedSpace":
        out = cls()
        for k, i, j, d in rows:
            out.add(k, i, j, d)
        return out

    def euler(self) -> Laurent2:
        """Sum of (-1)^k a^i q^j over the table."""
        out = Laurent2.zero()
        for (k, i, j), d in self.dims.items():
            out = out + Laurent2.monomial(i, j, -d if k % 2 else d)
        return out

    def shifted(self, dk: int, di: int, dj: int) -> "TriGradedSpace":
        return TriGradedSpace({(k + dk, i + di, j + dj): d
                               for (k, i, j), d in self.dims.items()})

    def mirror(self) -> "TriGradedSpace":
        """All three gradings negated."""
        return TriGradedSpace({(-k, -i, -j): d
                               for (k, i, j), d in self.dims.items()})

    def match_up_to_shift(self, other: "TriGradedSpace"):
        """Uniform (dk, di, dj) with self.shifted(...) == other, else None."""
        if len(self.dims) != len(other.dims):
            return None
        if not self.dims:
            return (0, 0, 0)
        a, b = min(self.dims), min(other.dims)
        delta = (b[0] - a[0], b[1] - a[1], b[2] - a[2])
        return delta if self.shifted(*delta) == other else None

    def __eq__(self, other):
        return isinstance(other, TriGradedSpace) and self.dims == other.dims

    def __bool__(self):
        return bool(self.dims)

    def __repr__(self):
        return f"TriGradedSpace(total_dim={self.total_dim}, support={len(self.dims)})"


# ---------------------------------------------------------------------------
# columns


def koszul_column(M: Bimodule) -> DiffObject:
    """Contraction column of a bimodule: M (x) Lambda(n-1 directions).

    Generators are labelled (a, J) with a a generator index of M and J a
    sorted tuple of directions from {1..n-1}; hdeg |J|, internal degree
    g_a + 2|J|.  The differential removes directions with alternating
    signs through the operators x_j - (right action of x_j), so it drops
    hdeg by one and preserves the internal degree.
    """
    n = M.n
    phis = {}
    cols_of = {}
    for j in range(1, n):
        m = M.action_difference(j)
        phis[j] = m
        by_col: dict = {}
        for (r, c), p in m.items():
            by_col.setdefault(c, []).append((r, p))
        cols_of[j] = by_col
    gens, labels, index = [], [], {}
    for p in range(n):
        for J in itertools.combinations(range(1, n), p):
            for a in range(M.rank):
                index[(a, J)] = len(gens)
                gens.append((p, M.gens[a] + 2 * p))
                labels.append((a, J))
    diff: dict = {}
    for (a, J), c in index.items():
        for t, jdir in enumerate(J):
            jred = J[:t] + J[t + 1:]
            for b, q in cols_of[jdir].get(a, ()):
                key = (index[(b, jred)], c)
                add = q if t % 2 == 0 else -q
                cur = diff.get(key)
                tot = add if cur is None else cur + add
                if tot:
                    diff[key] = tot
                elif cur is not None:
                    del diff[key]
    return DiffObject(n, gens, diff, labels)


def column_map(dmat: dict, src_col: DiffObject, tgt_col: DiffObject) -> dict:
    """Extend a map of bimodules to their columns, identity on the
    exterior directions.  Works for any columns labelled (a, J)."""
    by_gen: dict = {}
    for i, (a, J) in enumerate(src_col.labels):
        by_gen.setdefault(a, []).append((J, i))
    tgt_pos = {lab: i for i, lab in enumerate(tgt_col.labels)}
    out: dict = {}
    for (b, a), p in dmat.items():
        for J, ci in by_gen.get(a, ()):
            out[(tgt_pos[(b, J)], ci)] = p
    return out


class ColumnSlices:
    """Cached finite-dimensional graded slices of one column.

    Generators are grouped by hdeg when split=True (contraction columns)
    or lumped into group 0 when split=False (folded factorizations,
    where the differential moves the internal degree instead).
    """

    __slots__ = ("col", "groups", "two_sided", "_bases", "_mats", "_pos")

    def __init__(self, col: DiffObject, split: bool = True,
                 two_sided: bool = False):
        self.col = col
        self.two_sided = two_sided
        self.groups: dict = {}
        for idx, (h, _q) in enumerate(col.gens):
            self.groups.setdefault(h if split else 0, []).append(idx)
        self._pos = {h: {g: i for i, g in enumerate(ids)}
                     for h, ids in self.groups.items()}
        self._bases: dict = {}
        self._mats: dict = {}

    def basis(self, h: int, j: int):
        key = (h, j)
        if key not in self._bases:
            ids = self.groups.get(h)
            if not ids:
                self._bases[key] = None
            else:
                gens = [self.col.gens[i][1] for i in ids]
                self._bases[key] = GradedFreeBasis(self.col.n, gens, j,
                                                   self.two_sided)
        return self._bases[key]

    def restricted(self, h_src: int, h_tgt: int, mat: dict) -> dict:
        """Entries of mat between two hdeg groups, reindexed locally."""
        pos_s, pos_t = self._pos.get(h_src), self._pos.get(h_tgt)
        if pos_s is None or pos_t is None:
            return {}
        return {(pos_t[r], pos_s[c]): p for (r, c), p in mat.items()
                if c in pos_s and r in pos_t}

    def matrix(self, h_src: int, j_src: int, h_tgt: int, j_tgt: int) -> dict:
        """Scalar matrix of the column differential between two slices."""
        key = (h_src, j_src, h_tgt, j_tgt)
        if key not in self._mats:
            bs, bt = self.basis(h_src, j_src), self.basis(h_tgt, j_tgt)
            if bs is None or bt is None or bs.dim == 0 or bt.dim == 0:
                self._mats[key] = {}
            else:
                loc = self.restricted(h_src, h_tgt, self.col.diff)
                self._mats[key] = graded_map_entries(loc, bs, bt)
        return self._mats[key]


def cross_matrix(mat: dict, src: ColumnSlices, tgt: ColumnSlices,
                 h: int, j_src: int, j_tgt: int) -> dict:
    """Scalar slice of a degree-0 map between two columns at one hdeg."""
    bs, bt = src.basis(h, j_src), tgt.basis(h, j_tgt)
    if bs is None or bt is None or bs.dim == 0 or bt.dim == 0:
        return {}
    pos_s, pos_t = src._pos.get(h), tgt._pos.get(h)
    loc = {(pos_t[r], pos_s[c]): p for (r, c), p in mat.items()
           if c in pos_s and r in pos_t}
    return graded_map_entries(loc, bs, bt)


def slice_subquotient(sl: ColumnSlices, h: int, j: int, dh: int, dj: int):
    """Homology basis at one slice: kernel of the outgoing differential
    (to slice (h+dh, j+dj)) modulo the image of the incoming one."""
    b = sl.basis(h, j)
    if b is None or b.dim == 0:
        return None
    down = sl.matrix(h, j, h + dh, j + dj)
    if down:
        tdim = sl.basis(h + dh, j + dj).dim
        cycles = Echelon(rows_from_entries(down, tdim), b.dim).kernel_basis()
    else:
        cycles = [[Fraction(1) if t == s else Fraction(0)
                   for t in range(b.dim)] for s in range(b.dim)]
    up = sl.matrix(h - dh, j - dj, h, j)
    cols: dict = {}
    for (r, c), v in up.items():
        cols.setdefault(c, [Fraction(0)] * b.dim)[r] = v
    return SubquotientBasis(b.dim, cycles, list(cols.values()))


def induced_matrix(kmap: dict, src_sl: ColumnSlices, tgt_sl: ColumnSlices,
                   sq_src: SubquotientBasis, sq_tgt: SubquotientBasis,
                   h: int, j: int) -> dict:
    """Map induced on slice homology by a degree-0 column map: push each
    representative forward and express it in the target subquotient."""
    cm = cross_matrix(kmap, src_sl, tgt_sl, h, j, j)
    out: dict = {}
    tdim = tgt_sl.basis(h, j).dim
    for c, rep in enumerate(sq_src.reps):
        img = mat_vec(cm, rep, tdim)
        try:
            coords = sq_tgt.express(img)
        except ValueError as e:
            raise AssertionError(
                "pushed representative left the target subquotient") from e
        for r, v in enumerate(coords):
            if v:
                out[(r, c)] = v
    return out


def _compose(m2: dict, m1: dict) -> dict:
    by_col: dict = {}
    for (r, c), v in m2.items():
        by_col.setdefault(c, []).append((r, v))
    out: dict = {}
    for (r1, c1), v1 in m1.items():
        for r2, v2 in by_col.get(r1, ()):
            key = (r2, c1)
            out[key] = out.get(key, Fraction(0)) + v2 * v1
    return {k: v for k, v in out.items() if v}


def tower_homology(dims: dict, mats: dict) -> dict:
    """Homology dimensions of a finite sequence of spaces and maps.

    dims = {k: dim V_k}, mats = {k: matrix V_k -> V_{k+1}}; asserts that
    consecutive maps compose to zero, then applies rank-nullity.
    """
    for k in mats:
        if k + 1 in mats:
            assert not _compose(mats[k + 1], mats[k]), \
                f"induced maps do not square to zero at {k}"
    ranks = {k: matrix_rank(m, dims.get(k + 1, 0), dims[k])
             for k, m in mats.items()}
    out = {}
    for k, d in dims.items():
        h = d - ranks.get(k, 0) - ranks.get(k - 1, 0)
        assert h >= 0
        if h:
            out[k] = h
    return out


# ---------------------------------------------------------------------------
# pipelines


def word_columns(word: Word, simplify: bool = True):
    """Contraction columns and extended word differentials of a braid word.

    Returns (degrees, {k: DiffObject}, {k: poly matrix}).  With simplify,
    each column is reduced by cancelling constant pivots (a strict chain
    homotopy equivalence of the column, so every (p, j) slice keeps its
    homology) and the word maps are conjugated onto the reduced models.

    Left-module Gaussian elimination of the bimodule complex itself is
    deliberately NOT applied here: its pivots need not respect bimodule
    summands, and cancelling them moves homology classes along the
    (k - 1, p - 1) diagonal, which changes the bigraded table even
    though it preserves the collapsed k - p grading.
    """
    C = rouquier_complex(word)
    degrees = C.degrees
    cols = {k: koszul_column(C.objs[k]) for k in degrees}
    kmaps = {k: column_map(C.diff_mat(k), cols[k], cols[k + 1])
             for k in degrees if k + 1 in C.objs and C.diff_mat(k)}
    if simplify:
        F, G = {}, {}
        for k in degrees:
            cols[k], F[k], G[k] = cols[k].eliminate()
        kmaps = {k: conjugate(F[k + 1], m, G[k]) for k, m in kmaps.items()}
    for k in degrees:
        cols[k].check(dh=-1, dq=0)
    return degrees, cols, kmaps


def _scan_range(cols: dict, window: DegreeWindow):
    """(j_lo, j_hi, q_top) for the internal-degree scan of a column set."""
    qs = [q for c in cols.values() for (_h, q) in c.gens]
    if not qs:
        return 0, -1, 0
    j_lo, q_top = min(qs), max(qs)
    j_hi = max(window.max_degree, j_lo + window.max_degree)
    return j_lo, j_hi, q_top


def _slice_dims(degrees, slicers, kmaps, j, dh, dj, raw, key_of):
    """One internal degree of the two-stage pipeline; returns the total
    homology dimension found and extends the raw table in place."""
    bases = {}
    hs = set()
    for k in degrees:
        for h in slicers[k].groups:
            sq = slice_subquotient(slicers[k], h, j, dh, dj)
            if sq is not None and sq.dim:
                bases[(k, h)] = sq
                hs.add(h)
    total = 0
    for h in sorted(hs):
        dims = {k: bases[(k, h)].dim for k in degrees if (k, h) in bases}
        mats = {}
        for k in dims:
            if (k + 1, h) in bases and k in kmaps:
                mats[k] = induced_matrix(kmaps[k], slicers[k],
                                         slicers[k + 1], bases[(k, h)],
                                         bases[(k + 1, h)], h, j)
        for k, d in tower_homology(dims, mats).items():
            raw[key_of(k, h, j)] = d
            total += d
    return total


def grading_shift(word_writhe: int, n: int):
    """The common k- and i-normalization shift (writhe + 1 - n)/2,
    floored; the flag reports whether flooring lost a half."""
    num = word_writhe + 1 - n
    return num // 2, bool(num % 2)


def homfly_homology(word: Word, window: DegreeWindow = None,
                    simplify: bool = True):
    """Triply graded homology table of a braid closure, with scan report.

    Returns (TriGradedSpace, report dict).  Report keys: stabilized,
    j_range, shift, warnings, raw (unnormalized {(k, p, j): dim}).
    """
    window = window or DegreeWindow()
    degrees, cols, kmaps = word_columns(word, simplify)
    slicers = {k: ColumnSlices(cols[k], split=True) for k in degrees}
    raw: dict = {}
    j_lo, j_hi, q_top = _scan_range(cols, window)
    zero_run, stabilized, j_last = 0, False, j_lo - 1
    for j in range(j_lo, j_hi + 1):
        total = _slice_dims(degrees, slicers, kmaps, j, -1, 0, raw,
                            lambda k, p, jj: (k, p, jj))
        j_last = j
        if total == 0 and j > q_top:
            zero_run += 1
            if zero_run >= window.margin:
                stabilized = True
                break
        else:
            zero_run = 0
    shift, lost_half = grading_shift(word.writhe, word.n)
    warnings = []
    if not word.is_knot_closure:
        warnings.append("closure is not a knot: homology may be "
                        "infinite-dimensional and the degree window "
                        "truncates it")
    if lost_half:
        warnings.append("half-integral grading normalization floored")
    if not stabilized:
        warnings.append("internal-degree scan hit the window bound "
                        "before stabilizing")
    space = TriGradedSpace()
    for (k, p, j), d in raw.items():
        space.add(k + shift, p + shift, j, d)
    report = {"stabilized": stabilized, "j_range": (j_lo, j_last),
              "shift": shift, "warnings": warnings, "raw": raw,
              "simplify": simplify}
    return space, report


def hochschild_bimodule(M: Bimodule, window: DegreeWindow = None) -> dict:
    """Graded self-tensor homology table {(p, j): dim} of one bimodule.

    Scans internal degrees from the lowest generator degree up to the
    window bound; each slice is exact.  The answer is typically
    infinite-dimensional in total (e.g. the identity bimodule), so no
    stabilization is attempted: the window is the truncation.
    """
    window = window or DegreeWindow()
    col = koszul_column(M)
    col.check(dh=-1, dq=0)
    sl = ColumnSlices(col, split=True)
    out: dict = {}
    if not col.gens:
        return out
    j_lo = min(q for _h, q in col.gens)
    j_hi = max(window.max_degree, j_lo + window.max_degree)
    for j in range(j_lo, j_hi + 1):
        for p in sorted(sl.groups):
            sq = slice_subquotient(sl, p, j, -1, 0)
            if sq is not None and sq.dim:
                out[(p, j)] = sq.dim
    return out


def hochschild_closed_form(n: int, p: int, j: int) -> int:
    """Known answer for the identity bimodule: an exterior algebra on
    n-1 degree-(1, 2) generators tensored with the base ring."""
    from math import comb
    piece = GradedPiece(n, j - 2 * p)
    return comb(n - 1, p) * piece.dim


# ---------------------------------------------------------------------------
# resolution property of the two-sided contraction complex


def two_sided_koszul(n: int) -> DiffObject:
    """Free contraction complex on x_j - y_j over the two-sided ring."""
    gens, labels, index = [], [], {}
    for p in range(n):
        for J in itertools.combinations(range(1, n), p):
            index[J] = len(gens)
            gens.append((p, 2 * p))
            labels.append(J)
    diff = {}
    for J, c in index.items():
        for t, jdir in enumerate(J):
            jred = J[:t] + J[t + 1:]
            q = phi(n, jdir)
            diff[(index[jred], c)] = q if t % 2 == 0 else -q
    return DiffObject(n, gens, diff, labels)


def koszul_resolution_check(n: int, j_max: int = 12):
    """Assert the contraction complex resolves the one-sided ring:
    degree-j homology has dim S_j at exterior weight 0 and vanishes at
    positive weights, for all internal degrees up to j_max."""
    col = two_sided_koszul(n)
    col.check(dh=-1, dq=0)
    sl = ColumnSlices(col, split=True, two_sided=True)
    for j in range(0, j_max + 1, 2):
        for p in sorted(sl.groups):
            sq = slice_subquotient(sl, p, j, -1, 0)
            got = sq.dim if sq is not None else 0
            want = GradedPiece(n, j).dim if p == 0 else 0
            assert got == want, \
                f"resolution fails at n={n}, p={p}, j={j}: {got} != {want}"
