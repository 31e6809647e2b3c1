"""Bounded complexes of bimodules: crossing complexes, tensors, cones.

Cochain convention: differentials raise the homological index by one and
are internal-degree 0.  A positive crossing of strands i, i+1 is the
two-term complex S{2} -> S_i{1} in degrees {-1, 0}; a negative crossing
is S_i{-1} -> S{-2} in degrees {0, 1}.  The complex of a braid word is
the tensor product of its letter complexes (left fold, Koszul signs).

The crossing-change short exact sequence realizes the positive letter
complex as a subcomplex of an acyclic-looking two-term extension complex
whose quotient is the shifted negative letter complex; its connecting
map is the wall-crossing morphism computed in wallcross.py.
"""

from __future__ import annotations

from .bimodule import (Bimodule, BimoduleMap, aux_bimodules,
                       identity_bimodule, identity_map, mat_clean, mat_eq,
                       mat_mul, merge_projection, split_inclusion)
from .braid import NEG, POS, Word
from .poly import Poly


def bimodule_sum(parts):
    """Direct sum; returns (sum bimodule, offsets of the parts)."""
    assert parts
    n = parts[0].n
    gens, offsets, off = [], [], 0
    for m in parts:
        offsets.append(off)
        gens.extend(m.gens)
        off += m.rank
    actions = []
    for k in range(1, n + 1):
        a = {}
        for m, o in zip(parts, offsets):
            for (r, c), p in m.action(k).items():
                a[(o + r, o + c)] = p
        actions.append(a)
    return Bimodule(n, gens, actions), offsets


class BComplex:
    """Bounded complex of bimodules with degree-raising differential."""

    __slots__ = ("n", "objs", "diffs")

    def __init__(self, n: int, objs: dict, diffs: dict):
        self.n = n
        self.objs = dict(objs)
        self.diffs = {k: d for k, d in diffs.items() if not d.is_zero}
        for k, d in self.diffs.items():
            assert d.src.gens == self.objs[k].gens
            assert d.tgt.gens == self.objs[k + 1].gens

    @classmethod
    def identity(cls, n: int) -> "BComplex":
        return cls(n, {0: identity_bimodule(n)}, {})

    @property
    def degrees(self):
        return sorted(self.objs)

    def obj(self, k: int) -> Bimodule:
        return self.objs[k]

    def diff_mat(self, k: int):
        d = self.diffs.get(k)
        return d.mat if d is not None else {}

    @property
    def total_rank(self) -> int:
        return sum(m.rank for m in self.objs.values())

    def shift_internal(self, a: int) -> "BComplex":
        if a == 0:
            return self
        objs = {k: m.shift(a) for k, m in self.objs.items()}
        diffs = {k: BimoduleMap(objs[k], objs[k + 1], d.mat)
                 for k, d in self.diffs.items()}
        return BComplex(self.n, objs, diffs)

    def shift_homological(self, s: int) -> "BComplex":
        """C[s]^k = C^(k+s); odd shifts negate the differential."""
        if s == 0:
            return self
        objs = {k - s: m for k, m in self.objs.items()}
        sign = -1 if s % 2 else 1
        diffs = {}
        for k, d in self.diffs.items():
            diffs[k - s] = d if sign == 1 else -d
        return BComplex(self.n, objs, diffs)

    def check(self, deep: bool = False):
        for k, d in self.diffs.items():
            assert d.degree in (None, 0), f"differential at {k} has degree {d.degree}"
            if k + 1 in self.diffs:
                assert (self.diffs[k + 1] @ d).is_zero, f"d^2 != 0 at {k}"
        if deep:
            for m in self.objs.values():
                m.check()
            for d in self.diffs.values():
                d.check()

    def __repr__(self):
        shape = {k: self.objs[k].rank for k in self.degrees}
        return f"BComplex(n={self.n}, ranks={shape})"


def tensor(X: BComplex, Y: BComplex) -> BComplex:
    """X (x) Y with differential d_X (x) 1 + (-1)^a 1 (x) d_Y.

    Degree-m term is the sum over a + b = m of X^a (x) Y^b, with a
    ascending; that fixed enumeration is shared by tensor_chain_maps.
    """
    n = X.n
    pairs: dict = {}
    for a in X.degrees:
        for b in Y.degrees:
            pairs[(a, b)] = X.objs[a].tensor(Y.objs[b])
    layout: dict = {}
    objs: dict = {}
    for a in X.degrees:
        for b in Y.degrees:
            layout.setdefault(a + b, []).append((a, b))
    for m, keys in layout.items():
        keys.sort()
        total, offsets = bimodule_sum([pairs[key] for key in keys])
        objs[m] = total
        layout[m] = {key: off for key, off in zip(keys, offsets)}
    diffs = {}
    for m in sorted(objs):
        if m + 1 not in objs:
            continue
        mat = {}
        src_off, tgt_off = layout[m], layout[m + 1]
        for (a, b), so in src_off.items():
            # horizontal: d_X (x) id
            if (a + 1, b) in tgt_off and a in X.diffs:
                to = tgt_off[(a + 1, b)]
                blk = X.diffs[a].tensor(identity_map(Y.objs[b]),
                                        src=pairs[(a, b)], tgt=pairs[(a + 1, b)])
                for (r, c), p in blk.mat.items():
                    mat[(to + r, so + c)] = p
            # vertical: (-1)^a id (x) d_Y
            if (a, b + 1) in tgt_off and b in Y.diffs:
                to = tgt_off[(a, b + 1)]
                blk = identity_map(X.objs[a]).tensor(Y.diffs[b],
                                                     src=pairs[(a, b)],
                                                     tgt=pairs[(a, b + 1)])
                sign = -1 if a % 2 else 1
                for (r, c), p in blk.mat.items():
                    mat[(to + r, so + c)] = p if sign == 1 else -p
        d = BimoduleMap(objs[m], objs[m + 1], mat)
        if not d.is_zero:
            diffs[m] = d
    return BComplex(n, objs, diffs)


class ChainMap:
    """Degree-0 termwise map of complexes (commuting with differentials)."""

    __slots__ = ("src", "tgt", "comps")

    def __init__(self, src: BComplex, tgt: BComplex, comps: dict):
        self.src, self.tgt = src, tgt
        self.comps = {k: f for k, f in comps.items() if not f.is_zero}

    @classmethod
    def identity(cls, X: BComplex) -> "ChainMap":
        return cls(X, X, {k: identity_map(m) for k, m in X.objs.items()})

    def comp_mat(self, k: int):
        f = self.comps.get(k)
        return f.mat if f is not None else {}

    def check(self):
        for k in set(self.src.degrees) | set(self.tgt.degrees):
            lhs = mat_mul(self.comp_mat(k + 1), self.src.diff_mat(k))
            rhs = mat_mul(self.tgt.diff_mat(k), self.comp_mat(k))
            assert mat_eq(lhs, rhs), f"square at degree {k} does not commute"
        for k, f in self.comps.items():
            assert f.degree in (None, 0)
            f.check()

    def cone(self) -> BComplex:
        """Mapping cone: degree k is src^(k+1) (+) tgt^k, with the source
        differential negated and the map feeding the target column."""
        X, Y = self.src, self.tgt
        objs, diffs = {}, {}
        degs = sorted({k - 1 for k in X.degrees} | set(Y.degrees))
        parts = {}
        for k in degs:
            ps = []
            if k + 1 in X.objs:
                ps.append(("x", X.objs[k + 1]))
            if k in Y.objs:
                ps.append(("y", Y.objs[k]))
            total, offsets = bimodule_sum([m for _, m in ps])
            objs[k] = total
            parts[k] = {tag: off for (tag, _), off in zip(ps, offsets)}
        for k in degs:
            if k + 1 not in objs:
                continue
            mat = {}
            so, to = parts[k], parts[k + 1]
            if "x" in so and "x" in to:
                for (r, c), p in X.diff_mat(k + 1).items():
                    mat[(to["x"] + r, so["x"] + c)] = -p
            if "x" in so and "y" in to:
                for (r, c), p in self.comp_mat(k + 1).items():
                    mat[(to["y"] + r, so["x"] + c)] = p
            if "y" in so and "y" in to:
                for (r, c), p in Y.diff_mat(k).items():
                    mat[(to["y"] + r, so["y"] + c)] = p
            d = BimoduleMap(objs[k], objs[k + 1], mat)
            if not d.is_zero:
                diffs[k] = d
        return BComplex(X.n, objs, diffs)


def tensor_chain_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    """f (x) g termwise; sources and targets must live in the same degrees
    so the summand enumeration of tensor() matches on both sides."""
    assert f.src.degrees == f.tgt.degrees
    assert g.src.degrees == g.tgt.degrees
    src = tensor(f.src, g.src)
    tgt = tensor(f.tgt, g.tgt)
    comps = {}
    for m in src.degrees:
        keys = sorted((a, m - a) for a in f.src.degrees
                      if m - a in g.src.degrees)
        mat = {}
        soff = toff = 0
        for (a, b) in keys:
            fs = f.src.objs[a].tensor(g.src.objs[b])
            ts = f.tgt.objs[a].tensor(g.tgt.objs[b])
            fa = f.comps.get(a)
            gb = g.comps.get(b)
            if fa is not None and gb is not None:
                blk = fa.tensor(gb, src=fs, tgt=ts)
                for (r, c), p in blk.mat.items():
                    mat[(toff + r, soff + c)] = p
            soff += fs.rank
            toff += ts.rank
        F = BimoduleMap(src.objs[m], tgt.objs[m], mat)
        if not F.is_zero:
            comps[m] = F
    return ChainMap(src, tgt, comps)


def euler_characteristic(C: BComplex):
    """Graded Euler characteristic sum_k (-1)^k q^(gen degrees) as a
    Laurent polynomial in the internal variable (first slot unused).

    Additive along cones: for a chain map f: X -> Y the cone satisfies
    chi(cone f) = chi(Y) - chi(X), since degree k of the cone is
    X^(k+1) (+) Y^k.
    """
    from .laurent import Laurent2
    out = Laurent2.zero()
    for k, m in C.objs.items():
        s = -1 if k % 2 else 1
        for g in m.gens:
            out = out + Laurent2.monomial(0, g, s)
    return out


def positive_crossing_complex(n: int, i: int) -> BComplex:
    f = split_inclusion(n, i)
    return BComplex(n, {-1: f.src, 0: f.tgt}, {-1: f})


def negative_crossing_complex(n: int, i: int) -> BComplex:
    f = merge_projection(n, i)
    return BComplex(n, {0: f.src, 1: f.tgt}, {0: f})


def letter_complex(n: int, i: int, kind: int) -> BComplex:
    return (positive_crossing_complex(n, i) if kind == POS
            else negative_crossing_complex(n, i))


def rouquier_complex(word: Word) -> BComplex:
    """Tensor of the letter complexes of a non-singular braid word."""
    out = BComplex.identity(word.n)
    for i, kind in word.entries:
        assert kind in (POS, NEG), "singular letters need the cube construction"
        out = tensor(out, letter_complex(word.n, i, kind))
    return out


def crossing_change_ses(n: int, i: int):
    """The letter-level exact sequence 0 -> X -> E -> Y[1] -> 0.

    X is the positive letter complex, E the two-term complex on the
    rank-3 extension module with identity differential, and Y[1] the
    negative letter complex shifted into degrees {-1, 0}.  Returns
    (X, E, Y[1], inclusion, projection); both maps are degree-(0,0)
    chain maps and the sequence is exact in every term.
    """
    E_bim, maps = aux_bimodules(n, i)
    X = positive_crossing_complex(n, i)
    E = BComplex(n, {-1: E_bim, 0: E_bim}, {-1: identity_map(E_bim)})
    Y1 = negative_crossing_complex(n, i).shift_homological(1)
    iota = ChainMap(X, E, {-1: maps["uv_inclusion"], 0: maps["u_inclusion"]})
    pi = ChainMap(E, Y1, {-1: -maps["quotient"], 0: maps["evaluation"]})
    return X, E, Y1, iota, pi


def gaussian_eliminate(C: BComplex, verify: bool = True) -> BComplex:
    """Cancel invertible-constant pivots of the differentials.

    Left-module elimination transports the right actions through the
    homotopy equivalence; the result is only guaranteed to be an honest
    complex of bimodules if the transported actions still satisfy the
    axioms, so with verify=True (the default) everything is re-checked
    and a failure raises instead of returning a broken object.
    """
    n = C.n
    gens = {k: list(m.gens) for k, m in C.objs.items()}
    actions = {k: [dict(a) for a in m.actions] for k, m in C.objs.items()}
    diffs = {k: dict(C.diff_mat(k)) for k in C.degrees if C.diff_mat(k)}

    def find_pivot():
        for k in sorted(diffs):
            for (r, c) in sorted(diffs[k]):
                p = diffs[k][(r, c)]
                if p.degree() == 0:
                    return k, r, c, p.terms[(0,) * (n - 1)]
        return None

    while True:
        hit = find_pivot()
        if hit is None:
            break
        k, r0, c0, alpha = hit
        d = diffs[k]
        row = {c: p for (r, c), p in d.items() if r == r0 and c != c0}
        col = {r: p for (r, c), p in d.items() if c == c0 and r != r0}
        inv = Poly.const(n, 1 / alpha)
        # reduced differential at k
        new_d = {key: p for key, p in d.items()
                 if key[0] != r0 and key[1] != c0}
        for r, pr in col.items():
            for c, pc in row.items():
                key = (r, c)
                corr = pr * inv * pc
                if key in new_d:
                    s = new_d[key] - corr
                    if s:
                        new_d[key] = s
                    else:
                        del new_d[key]
                else:
                    new_d[key] = -corr
        # transported right actions: level k via G_k (source correction),
        # level k+1 via F_(k+1) (target correction)
        for a in actions[k]:
            src_corr = {}
            for (i, j), p in a.items():
                if j == c0 and i != c0:
                    for c, pc in row.items():
                        key = (i, c)
                        src_corr[key] = src_corr.get(key, Poly.zero(n)) \
                            - p * inv * pc
            for key, p in src_corr.items():
                a[key] = a.get(key, Poly.zero(n)) + p
        for a in actions[k + 1]:
            tgt_corr = {}
            for (i, j), p in a.items():
                if i == r0 and j != r0:
                    for r, pr in col.items():
                        key = (r, j)
                        tgt_corr[key] = tgt_corr.get(key, Poly.zero(n)) \
                            - pr * inv * p
            for key, p in tgt_corr.items():
                a[key] = a.get(key, Poly.zero(n)) + p
        # afterwards drop the two generators everywhere
        def drop(mat, kill_row, kill_col):
            return {key: p for key, p in mat.items()
                    if key[0] != kill_row and key[1] != kill_col}

        diffs[k] = drop(new_d, r0, c0)
        if not diffs[k]:
            del diffs[k]
        if k - 1 in diffs:
            diffs[k - 1] = {key: p for key, p in diffs[k - 1].items()
                            if key[0] != c0}
            if not diffs[k - 1]:
                del diffs[k - 1]
        if k + 1 in diffs:
            diffs[k + 1] = {key: p for key, p in diffs[k + 1].items()
                            if key[1] != r0}
            if not diffs[k + 1]:
                del diffs[k + 1]
        actions[k] = [drop(a, c0, c0) for a in actions[k]]
        actions[k + 1] = [drop(a, r0, r0) for a in actions[k + 1]]
        # reindex densely
        for lvl, dead in ((k, c0), (k + 1, r0)):
            remap = {}
            new_gens = []
            for idx, g in enumerate(gens[lvl]):
                if idx == dead:
                    continue
                remap[idx] = len(new_gens)
                new_gens.append(g)
            gens[lvl] = new_gens
            actions[lvl] = [{(remap[i], remap[j]): p for (i, j), p in a.items()}
                            for a in actions[lvl]]
            if lvl in diffs:
                diffs[lvl] = {(i, remap[j]): p
                              for (i, j), p in diffs[lvl].items()}
            if lvl - 1 in diffs:
                diffs[lvl - 1] = {(remap[i], j): p
                                  for (i, j), p in diffs[lvl - 1].items()}

    objs = {}
    for k, gl in gens.items():
        if gl:
            objs[k] = Bimodule(n, tuple(gl), [mat_clean(a) for a in actions[k]])
    out_diffs = {}
    for k, mat in diffs.items():
        if k in objs and k + 1 in objs and mat:
            out_diffs[k] = BimoduleMap(objs[k], objs[k + 1], mat)
    out = BComplex(n, objs, out_diffs)
    if verify:
        out.check(deep=True)
    return out
