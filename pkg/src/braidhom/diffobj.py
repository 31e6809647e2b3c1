"""Free graded differential objects over S, with tracked exact reduction.

Once the Hochschild/Koszul or matrix-factorization functor has been
applied to one homological column of a braid-word complex, right actions
no longer matter: each column is a finite free graded module over S
carrying a square-zero differential with polynomial entries.  This
module reduces such objects by cancelling invertible constant entries of
the differential, tracking the homotopy equivalence so that maps between
columns can be conjugated onto the reduced models.

Generators carry a pair (hdeg, qdeg): an auxiliary homological index
(exterior weight for Koszul columns, unused for folded factorizations)
and the internal degree, which includes any shift the generator inherits
from the bimodule side.
"""

from __future__ import annotations

from .bimodule import mat_clean, mat_mul
from .poly import Poly


class DiffObject:
    """A free graded module with a square-zero sparse differential."""

    __slots__ = ("n", "gens", "diff", "labels")

    def __init__(self, n: int, gens, diff, labels=None):
        self.n = n
        self.gens = list(gens)  # (hdeg, qdeg)
        self.diff = mat_clean(diff)
        self.labels = list(labels) if labels is not None else None

    @property
    def rank(self) -> int:
        return len(self.gens)

    def check(self, dh=None, dq: int = 0, square: bool = True):
        """Assert homogeneity (and optionally d^2 = 0).

        dh: required hdeg drop of the differential (None = don't check);
        dq: required internal degree of the differential.
        """
        for (r, c), p in self.diff.items():
            hr, qr = self.gens[r]
            hc, qc = self.gens[c]
            if dh is not None:
                assert hr == hc + dh, f"hdeg mismatch at {(r, c)}"
            assert p.homogeneous_degree() == dq + qc - qr, \
                f"qdeg mismatch at {(r, c)}: {p.homogeneous_degree()} != {dq + qc - qr}"
        if square:
            assert not mat_mul(self.diff, self.diff), "d^2 != 0"

    def square(self) -> dict:
        """d composed with itself, for callers that must inspect curvature."""
        return mat_mul(self.diff, self.diff)

    def eliminate(self):
        """Cancel constant pivots of the differential.

        Returns (reduced, F, G) where F: original -> reduced and
        G: reduced -> original are chain maps with F G = id.  Pivots are
        chosen deterministically, smallest fill first.
        """
        n = self.n
        rows: dict = {}
        cols: dict = {}
        for (r, c), p in self.diff.items():
            rows.setdefault(r, {})[c] = p
            cols.setdefault(c, {})[r] = p
        const = {key for key, p in self.diff.items() if p.degree() == 0}
        alive = set(range(self.rank))
        Fmap = {i: {i: Poly.one(n)} for i in alive}
        Gmap = {j: {j: Poly.one(n)} for j in alive}

        def entry_set(i, j, p):
            if p:
                rows.setdefault(i, {})[j] = p
                cols.setdefault(j, {})[i] = p
                if p.degree() == 0:
                    const.add((i, j))
                else:
                    const.discard((i, j))
            else:
                rows.get(i, {}).pop(j, None)
                cols.get(j, {}).pop(i, None)
                const.discard((i, j))

        while const:
            r0, c0 = min(const, key=lambda rc: (
                len(rows.get(rc[0], ())) * len(cols.get(rc[1], ())),
                rc))
            alpha = rows[r0][c0]
            inv = Poly.const(n, 1 / alpha.terms[(0,) * (n - 1)])
            row = {j: p for j, p in rows[r0].items() if j != c0}
            col = {i: p for i, p in cols[c0].items() if i != r0}
            # differential update d[i, j] -= col[i] inv row[j]
            for i, pi in col.items():
                coeff = pi * inv
                for j, pj in row.items():
                    cur = rows.get(i, {}).get(j, Poly.zero(n))
                    entry_set(i, j, cur - coeff * pj)
            # homotopy equivalence update
            fr0 = Fmap[r0]
            for i, pi in col.items():
                coeff = pi * inv
                fi = Fmap[i]
                for o, q in fr0.items():
                    v = fi.get(o, Poly.zero(n)) - coeff * q
                    if v:
                        fi[o] = v
                    else:
                        fi.pop(o, None)
            gc0 = Gmap[c0]
            for j, pj in row.items():
                coeff = inv * pj
                gj = Gmap[j]
                for o, q in gc0.items():
                    v = gj.get(o, Poly.zero(n)) - q * coeff
                    if v:
                        gj[o] = v
                    else:
                        gj.pop(o, None)
            # retire the two generators and every entry touching them
            for g in (r0, c0):
                for j in list(rows.get(g, ())):
                    cols.get(j, {}).pop(g, None)
                    const.discard((g, j))
                rows.pop(g, None)
                for i in list(cols.get(g, ())):
                    rows.get(i, {}).pop(g, None)
                    const.discard((i, g))
                cols.pop(g, None)
                alive.discard(g)
                Fmap.pop(g, None)
                Gmap.pop(g, None)

        order = sorted(alive)
        index = {old: new for new, old in enumerate(order)}
        gens = [self.gens[i] for i in order]
        labels = [self.labels[i] for i in order] if self.labels else None
        diff = {}
        for i in order:
            for j, p in rows.get(i, {}).items():
                diff[(index[i], index[j])] = p
        F = {}
        for i in order:
            for o, p in Fmap[i].items():
                F[(index[i], o)] = p
        G = {}
        for j in order:
            for o, p in Gmap[j].items():
                G[(o, index[j])] = p
        return DiffObject(self.n, gens, diff, labels), F, G

    def __repr__(self):
        return f"DiffObject(rank={self.rank}, nnz={len(self.diff)})"


def conjugate(F_tgt: dict, mat: dict, G_src: dict) -> dict:
    """Transport a map between original spaces onto the reduced models."""
    return mat_mul(F_tgt, mat_mul(mat, G_src))
