"""Graded bimodules over the symmetric quotient ring, presented concretely.

A bimodule here is a free left S-module (S as in poly.py) of finite rank
together with commuting right-action matrices, one per variable x_1..x_n,
summing to zero.  Column convention: if m = sum_a m_a e_a then
(m . x_k)_a = sum_b A_k[a, b] m_b, i.e. columns of A_k give the action on
basis vectors.  Homogeneity: entry (a, b) of A_k is homogeneous of degree
2 + g_b - g_a where g are the generator degrees.

The constructors build the three bimodules the crossing calculus needs:
the regular bimodule S, the rank-2 bimodule S_i attached to a crossing
between strands i and i+1 (symmetric-invariant functions act identically
on both sides), and the rank-3 extension module S'_i = S[y]/((y-x_i)^2
(y-x_{i+1})) realizing the nontrivial extension between the two crossing
resolutions; plus the structure maps between them.

Shifts: M.shift(a) raises all generator degrees by a (so elements become
"more positive"); map degrees are always inferred from the entries.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import GradedPiece, Poly

# sparse matrix over S: {(row, col): Poly}
Mat = dict


def mat_clean(m: Mat) -> Mat:
    return {k: v for k, v in m.items() if v}


def mat_add(a: Mat, b: Mat) -> Mat:
    out = dict(a)
    for k, v in b.items():
        if k in out:
            out[k] = out[k] + v
        else:
            out[k] = v
    return mat_clean(out)


def mat_neg(a: Mat) -> Mat:
    return {k: -v for k, v in a.items()}


def mat_scale(p, a: Mat) -> Mat:
    return mat_clean({k: p * v for k, v in a.items()})


def mat_mul(a: Mat, b: Mat) -> Mat:
    """(a . b)[i, j] = sum_k a[i, k] b[k, j]."""
    by_row: dict = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: dict = {}
    for (i, k), u in a.items():
        for j, v in by_row.get(k, ()):
            key = (i, j)
            prod = u * v
            if key in out:
                out[key] = out[key] + prod
            else:
                out[key] = prod
    return mat_clean(out)


def mat_eq(a: Mat, b: Mat) -> bool:
    return mat_clean(a) == mat_clean(b)


def mat_identity(rank: int, n: int) -> Mat:
    one = Poly.one(n)
    return {(i, i): one for i in range(rank)}


class Bimodule:
    """Free left S-module with commuting right-action matrices."""

    __slots__ = ("n", "gens", "actions")

    def __init__(self, n: int, gens, actions):
        self.n = n
        self.gens = tuple(gens)
        self.actions = tuple(mat_clean(a) for a in actions)
        assert len(self.actions) == n

    @property
    def rank(self) -> int:
        return len(self.gens)

    def action(self, k: int) -> Mat:
        """Right action of x_k, 1-based."""
        return self.actions[k - 1]

    def shift(self, a: int) -> "Bimodule":
        if a == 0:
            return self
        return Bimodule(self.n, tuple(g + a for g in self.gens), self.actions)

    def action_difference(self, j: int) -> Mat:
        """x_j . Id  -  (right action of x_j); the Koszul differentials."""
        return mat_add(mat_scale(Poly.x(self.n, j), mat_identity(self.rank, self.n)),
                       mat_neg(self.action(j)))

    def right_mult_matrix(self, p: Poly) -> Mat:
        """Matrix of the right action of a one-sided poly p(x_1..x_{n-1})."""
        assert not p.two_sided and p.n == self.n
        out: Mat = {}
        for mono, c in p.terms.items():
            m = mat_scale(Poly.const(self.n, c), mat_identity(self.rank, self.n))
            for i, e in enumerate(mono):
                for _ in range(e):
                    m = mat_mul(m, self.actions[i])
            out = mat_add(out, m)
        return out

    def two_sided_action(self, p: Poly) -> Mat:
        """Operator of a two-sided poly: x-part acts left, y-part acts right."""
        assert p.two_sided and p.n == self.n
        out: Mat = {}
        for ym, xpart in p.split_xy():
            m = mat_identity(self.rank, self.n)
            for i, e in enumerate(ym):
                for _ in range(e):
                    m = mat_mul(m, self.actions[i])
            out = mat_add(out, mat_scale(xpart, m))
        return out

    def pair_index(self, a: int, b: int, other_rank: int) -> int:
        return a * other_rank + b

    def tensor(self, other: "Bimodule") -> "Bimodule":
        """M (x)_S N: basis e_a (x) f_b ordered with the left factor major.

        Scalars must pass through the left factor from the right:
        e_a (x) p f_b = (e_a . p) (x) f_b.
        """
        assert self.n == other.n
        gens = tuple(g + h for g in self.gens for h in other.gens)
        rn, ro = self.rank, other.rank
        actions = []
        for k in range(1, self.n + 1):
            ak: Mat = {}
            for (bp, b), p in other.action(k).items():
                push = self.right_mult_matrix(p)
                for (ap, a), q in push.items():
                    key = (ap * ro + bp, a * ro + b)
                    if key in ak:
                        ak[key] = ak[key] + q
                    else:
                        ak[key] = q
            actions.append(ak)
        return Bimodule(self.n, gens, actions)

    def check(self):
        """Assert all bimodule axioms (homogeneity, commuting, sum zero)."""
        for k in range(self.n):
            for (a, b), p in self.actions[k].items():
                d = p.homogeneous_degree()
                assert d == 2 + self.gens[b] - self.gens[a], \
                    f"action x_{k+1} entry {(a, b)} degree {d}"
        total: Mat = {}
        for a in self.actions:
            total = mat_add(total, a)
        assert not total, "right actions do not sum to zero"
        for k in range(self.n):
            for l in range(k + 1, self.n):
                assert mat_eq(mat_mul(self.actions[k], self.actions[l]),
                              mat_mul(self.actions[l], self.actions[k])), \
                    f"actions x_{k+1}, x_{l+1} do not commute"

    def __repr__(self):
        return f"Bimodule(n={self.n}, gens={self.gens})"


class BimoduleMap:
    """Left-module map between bimodules, with inferred internal degree.

    Entries follow the same column convention as actions: f(e_b) =
    sum_a mat[a, b] e_a.  Degree d satisfies deg mat[a, b] = d + g_src[b]
    - g_tgt[a]; a zero map has degree None and composes with anything.
    """

    __slots__ = ("src", "tgt", "mat", "degree")

    def __init__(self, src: Bimodule, tgt: Bimodule, mat: Mat):
        assert src.n == tgt.n
        self.src, self.tgt = src, tgt
        self.mat = mat_clean(mat)
        deg = None
        for (a, b), p in self.mat.items():
            d = p.homogeneous_degree() - src.gens[b] + tgt.gens[a]
            if deg is None:
                deg = d
            else:
                assert deg == d, f"mixed degrees {deg} vs {d} at {(a, b)}"
        self.degree = deg

    @property
    def is_zero(self) -> bool:
        return not self.mat

    def __matmul__(self, other: "BimoduleMap") -> "BimoduleMap":
        """self after other."""
        assert other.tgt is self.src or other.tgt.gens == self.src.gens
        return BimoduleMap(other.src, self.tgt, mat_mul(self.mat, other.mat))

    def __add__(self, other: "BimoduleMap") -> "BimoduleMap":
        return BimoduleMap(self.src, self.tgt, mat_add(self.mat, other.mat))

    def __neg__(self) -> "BimoduleMap":
        return BimoduleMap(self.src, self.tgt, mat_neg(self.mat))

    def scale(self, c) -> "BimoduleMap":
        return BimoduleMap(self.src, self.tgt,
                           mat_scale(Poly.const(self.src.n, c), self.mat))

    def tensor(self, other: "BimoduleMap", src: Bimodule = None,
               tgt: Bimodule = None) -> "BimoduleMap":
        """f (x) g on the tensor bimodules (no Koszul signs here).

        Scalars of g's entries pass through the target of f from the
        right.  src/tgt may be passed in to reuse already-built tensor
        bimodules; otherwise they are constructed.
        """
        f, g = self, other
        src = src or f.src.tensor(g.src)
        tgt = tgt or f.tgt.tensor(g.tgt)
        ro_s, ro_t = g.src.rank, g.tgt.rank
        mat: Mat = {}
        for (bp, b), p in g.mat.items():
            push = f.tgt.right_mult_matrix(p)  # rank_tgt x rank_tgt
            blk = mat_mul(push, f.mat)         # tgt_f x src_f
            for (ap, a), q in blk.items():
                key = (ap * ro_t + bp, a * ro_s + b)
                if key in mat:
                    mat[key] = mat[key] + q
                else:
                    mat[key] = q
        return BimoduleMap(src, tgt, mat)

    def check(self):
        """Assert the map intertwines all right actions."""
        for k in range(1, self.src.n + 1):
            lhs = mat_mul(self.mat, self.src.action(k))
            rhs = mat_mul(self.tgt.action(k), self.mat)
            assert mat_eq(lhs, rhs), f"does not intertwine x_{k}"

    def __repr__(self):
        return (f"BimoduleMap({self.src.rank}->{self.tgt.rank}, "
                f"degree={self.degree})")


def identity_map(m: Bimodule) -> BimoduleMap:
    return BimoduleMap(m, m, mat_identity(m.rank, m.n))


def zero_map(src: Bimodule, tgt: Bimodule) -> BimoduleMap:
    return BimoduleMap(src, tgt, {})


def identity_bimodule(n: int) -> Bimodule:
    """The regular bimodule S: rank 1, both actions by multiplication."""
    actions = [{(0, 0): Poly.x(n, k)} for k in range(1, n + 1)]
    return Bimodule(n, (0,), actions)


def bs_bimodule(n: int, i: int) -> Bimodule:
    """Rank-2 bimodule S_i for the crossing of strands i, i+1.

    Basis 1 (x) 1 and 1 (x) x_{i+1} in degrees -1 and +1 (self-dual
    normalization).  Functions symmetric in x_i, x_{i+1} act identically
    on both sides; the right action of x_{i+1} is the companion matrix of
    t^2 - (x_i + x_{i+1}) t + x_i x_{i+1}.
    """
    assert 1 <= i < n
    xi, xj = Poly.x(n, i), Poly.x(n, i + 1)
    a_next = {(0, 1): -(xi * xj), (1, 0): Poly.one(n), (1, 1): xi + xj}
    a_i = mat_add(mat_scale(xi + xj, mat_identity(2, n)), mat_neg(a_next))
    actions = []
    for k in range(1, n + 1):
        if k == i:
            actions.append(a_i)
        elif k == i + 1:
            actions.append(a_next)
        else:
            actions.append(mat_scale(Poly.x(n, k), mat_identity(2, n)))
    return Bimodule(n, (-1, 1), actions)


def extension_bimodule(n: int, i: int) -> Bimodule:
    """Rank-3 bimodule S[y]/((y - x_i)^2 (y - x_{i+1})), basis 1, y, y^2.

    The right action of x_i is multiplication by y (companion matrix of
    the cubic); x_{i+1} acts as x_i + x_{i+1} - y; other variables act by
    their left values.  Generator degrees (0, 2, 4) before shifting.
    """
    assert 1 <= i < n
    xi, xj = Poly.x(n, i), Poly.x(n, i + 1)
    # y^3 = (2 x_i + x_{i+1}) y^2 - (x_i^2 + 2 x_i x_{i+1}) y + x_i^2 x_{i+1}
    a_i = {
        (0, 2): xi * xi * xj,
        (1, 0): Poly.one(n),
        (1, 2): -(xi * xi) - 2 * xi * xj,
        (2, 1): Poly.one(n),
        (2, 2): 2 * xi + xj,
    }
    a_next = mat_add(mat_scale(xi + xj, mat_identity(3, n)), mat_neg(a_i))
    actions = []
    for k in range(1, n + 1):
        if k == i:
            actions.append(a_i)
        elif k == i + 1:
            actions.append(a_next)
        else:
            actions.append(mat_scale(Poly.x(n, k), mat_identity(3, n)))
    return Bimodule(n, (0, 2, 4), actions)


def split_inclusion(n: int, i: int) -> BimoduleMap:
    """S{2} -> S_i{1}: 1 maps to x_i e_0 - e_1 (kernel of the merge)."""
    src = identity_bimodule(n).shift(2)
    tgt = bs_bimodule(n, i).shift(1)
    mat = {(0, 0): Poly.x(n, i), (1, 0): Poly.const(n, -1)}
    return BimoduleMap(src, tgt, mat)


def merge_projection(n: int, i: int) -> BimoduleMap:
    """S_i{-1} -> S{-2}: e_0 to 1, e_1 to x_{i+1} (multiplication map)."""
    src = bs_bimodule(n, i).shift(-1)
    tgt = identity_bimodule(n).shift(-2)
    mat = {(0, 0): Poly.one(n), (0, 1): Poly.x(n, i + 1)}
    return BimoduleMap(src, tgt, mat)


def aux_bimodules(n: int, i: int):
    """The shifted extension module and its four structure maps.

    Returns (E, maps) with E = extension_bimodule{-2} and maps a dict:
      "u_inclusion":  S_i{1}  -> E   (e_0 to y - x_i, e_1 to -(y-x_i)(y-x_i-x_{i+1}))
      "evaluation":   E -> S{-2}     (y to x_i)
      "uv_inclusion": S{2} -> E      (1 to (y - x_i)(y - x_{i+1}))
      "quotient":     E -> S_i{-1}   (kill (y - x_i)(y - x_{i+1}))
    All four are internal-degree 0 and fit in two exact rows:
      0 -> S{2} -> E -> S_i{-1} -> 0   (uv_inclusion then quotient)
      0 -> S_i{1} -> E -> S{-2} -> 0   (u_inclusion then evaluation)
    """
    E = extension_bimodule(n, i).shift(-2)
    S2 = identity_bimodule(n).shift(2)
    Sm2 = identity_bimodule(n).shift(-2)
    Bs1 = bs_bimodule(n, i).shift(1)
    Bsm1 = bs_bimodule(n, i).shift(-1)
    xi, xj = Poly.x(n, i), Poly.x(n, i + 1)
    one = Poly.one(n)

    uv = BimoduleMap(S2, E, {(0, 0): xi * xj, (1, 0): -(xi + xj),
                             (2, 0): one})
    u = BimoduleMap(Bs1, E, {
        (0, 0): -xi, (1, 0): one,
        (0, 1): -(xi * xi + xi * xj), (1, 1): 2 * xi + xj,
        (2, 1): -one,
    })
    ev = BimoduleMap(E, Sm2, {(0, 0): one, (0, 1): xi, (0, 2): xi * xi})
    quot = BimoduleMap(E, Bsm1, {
        (0, 0): one, (0, 1): xi + xj,
        (0, 2): (xi + xj) ** 2 - xi * xj,
        (1, 1): -one, (1, 2): -(xi + xj),
    })
    maps = {"uv_inclusion": uv, "u_inclusion": u,
            "evaluation": ev, "quotient": quot}
    return E, maps


class GradedFreeBasis:
    """Monomial basis of one internal degree of a free graded S-module."""

    __slots__ = ("n", "gens", "j", "pieces", "offsets", "dim")

    def __init__(self, n: int, gens, j: int, two_sided: bool = False):
        self.n, self.gens, self.j = n, tuple(gens), j
        self.pieces = [GradedPiece(n, j - g, two_sided) for g in self.gens]
        self.offsets = []
        total = 0
        for p in self.pieces:
            self.offsets.append(total)
            total += p.dim
        self.dim = total

    def vector(self, polys) -> list:
        """Flatten a list of per-generator polys into one coefficient vector."""
        v = [Fraction(0)] * self.dim
        for a, p in enumerate(polys):
            if not p:
                continue
            off = self.offsets[a]
            for mono, c in p.terms.items():
                v[off + self.pieces[a].index(mono)] = c
        return v

    def decompose(self, vec) -> list:
        """Inverse of vector(): one poly per generator."""
        out = []
        for a, piece in enumerate(self.pieces):
            off = self.offsets[a]
            out.append(piece.poly(vec[off:off + piece.dim]))
        return out


def graded_map_entries(mat: Mat, src: GradedFreeBasis,
                       tgt: GradedFreeBasis) -> dict:
    """Scalar matrix {(row, col): Fraction} of a poly matrix in one degree.

    src and tgt fix the internal degrees; entries whose degree cannot
    connect the two (empty pieces) contribute nothing, but a nonzero
    entry with the wrong homogeneous degree is an error.
    """
    out: dict = {}
    for (a, b), p in mat.items():
        sp, tp = src.pieces[b], tgt.pieces[a]
        if sp.dim == 0:
            continue
        need = (tgt.j - tgt.gens[a]) - (src.j - src.gens[b])
        assert p.homogeneous_degree() == need, \
            f"entry {(a, b)} has degree {p.homogeneous_degree()}, needs {need}"
        if tp.dim == 0:
            continue
        ro, co = tgt.offsets[a], src.offsets[b]
        for (r, c), v in p.mult_matrix(sp, tp).items():
            key = (ro + r, co + c)
            out[key] = out.get(key, Fraction(0)) + v
    return {k: v for k, v in out.items() if v}
