"""Wall-crossing maps and the resolution cube of singular braid words.

A singular (four-valent) crossing stands for the difference between its
positive and negative resolutions.  At the chain level this difference
is realized by a short exact sequence of letter complexes

    0 -> X --iota--> E --pi--> Y[1] -> 0

where X is the positive-crossing complex, Y[1] the negative one shifted
up by one homological step, and E a two-term extension whose terms are
free.  Tensoring the sequence with the complexes of the remaining
letters keeps it termwise exact (all terms are free modules), so after
passing to column homology slice by slice the connecting homomorphism
of each column-level exact sequence is defined: lift a homology class
through the projection, apply the middle column differential, pull the
result back through the inclusion.  That connecting map W is the
wall-crossing map from the homology data of the negative resolution to
the homology data of the positive one.  It commutes with the induced
word-direction differentials; this is asserted exactly, and a failure
is treated as a sign or convention bug, never accepted silently.
Rescaling the inclusion by 1/c rescales W by c, so the normalization of
the extension (distinguished generator to distinguished generator with
coefficient one) pins W down.

A word with s singular letters spans a cube with 2^s resolutions.  Each
vertex carries the column-homology towers of its resolved word, with
negative slots realized by the shifted complex Y[1] so all vertices
live in one homological window; each edge flips one slot from negative
to positive and carries the wall-crossing map computed with that slot's
extension in place, every other slot frozen at its vertex resolution.
Squares of edge maps commute on the nose (asserted), so sprinkling the
sign (-1)^{#earlier plus-slots} on the edges and (-1)^{#minus-slots} on
the internal differentials yields a total differential that squares to
zero.  The homology of the total complex categorifies the alternating
sum over the cube: its graded Euler characteristic equals
sum_eps (-1)^{mu(eps)} P(resolution eps), the finite-difference
derivative of the closure invariant.

Gradings.  Let s0 = (w1 + 1 - n) // 2 where w1 is the writhe counting
singular letters as positive.  A class of the mu-minus-slot resolution
sitting at word degree k, column weight p and internal degree j is
reported at (k - mu + s0, p - mu + s0, j); both parts of the total
differential then have degree (+1, 0, 0).  For finite N the folded
columns are used instead and the table is reported in the collapsed,
weight-blind normalization (k - mu + w1 - n + 1,
q + (N+1)(mu + n - 1 - w1), 0).  The folded extension column exists
only where the potential vanishes on the extension bimodule; elsewhere
folding raises ValueError.

Raw (unsimplified) columns are mandatory throughout: the snake lifts
need termwise exactness of the literal sequence, which elimination
would destroy.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .bimodule import mat_mul
from .braid import NEG, POS, SING, Word
from .complexes import (BComplex, ChainMap, crossing_change_ses,
                        letter_complex, tensor, tensor_chain_maps)
from .homology import (ColumnSlices, DegreeWindow, TriGradedSpace, _compose,
                       _scan_range, column_map, cross_matrix, grading_shift,
                       induced_matrix, koszul_column, slice_subquotient,
                       tower_homology)
from .linalg import Echelon, SubquotientBasis, mat_vec, matrix_rank, \
    rows_from_entries
from .mfact import _FoldedSlices, folded_column


# ---------------------------------------------------------------------------
# the crossing-change exact sequence, checked and normalized


def _graded_dim(gens, j: int, nvars: int) -> int:
    """Dimension at internal degree j of a free module with generators
    in the listed degrees over nvars polynomial variables of degree 2."""
    total = 0
    for g in gens:
        d = j - g
        if d < 0 or d % 2:
            continue
        m = d // 2
        if nvars == 0:
            total += 1 if m == 0 else 0
        else:
            total += math.comb(m + nvars - 1, nvars - 1)
    return total


class ExtensionRealization:
    """One crossing's exact sequence 0 -> X -> E -> Y[1] -> 0 with a
    chosen nonzero scalar on the inclusion.

    The scalar multiplies the downstream connecting map: iota is divided
    by scale, so the snake lift through iota picks up the factor scale.
    """

    __slots__ = ("n", "i", "scale", "X", "E", "Y1", "iota", "pi")

    def __init__(self, n, i, scale, X, E, Y1, iota, pi):
        self.n, self.i, self.scale = n, i, scale
        self.X, self.E, self.Y1 = X, E, Y1
        self.iota, self.pi = iota, pi


def extension_realization(n: int, i: int, scale=1,
                          j_max: int = 12) -> ExtensionRealization:
    """Build and verify the crossing-change sequence at strands i, i+1.

    Checks: both structure maps are chain maps; the composite pi . iota
    vanishes; the ranks are termwise exact in every internal degree up
    to j_max; the inclusion sends the distinguished generator to the
    distinguished extension generator with coefficient one.  Only after
    these checks is the scalar applied.
    """
    scale = Fraction(scale)
    if not scale:
        raise ValueError("extension scale must be nonzero")
    X, E, Y1, iota, pi = crossing_change_ses(n, i)
    iota.check()
    pi.check()
    degrees = sorted(set(X.degrees) | set(E.degrees) | set(Y1.degrees))
    for k in degrees:
        comp = mat_mul(pi.comp_mat(k), iota.comp_mat(k))
        assert not any(p for p in comp.values()), \
            "projection after inclusion is nonzero"
    nvars = n - 1
    for k in degrees:
        for j in range(-4, j_max + 1):
            dx = _graded_dim(X.objs[k].gens, j, nvars) if k in X.objs else 0
            dy = _graded_dim(Y1.objs[k].gens, j, nvars) if k in Y1.objs else 0
            de = _graded_dim(E.objs[k].gens, j, nvars) if k in E.objs else 0
            assert de == dx + dy, \
                f"extension ranks are not exact at step {k}, degree {j}"
    top = iota.comp_mat(-1).get((2, 0))
    assert top is not None and top.homogeneous_degree() == 0 \
        and list(top.terms.values()) == [Fraction(1)], \
        "inclusion does not hit the distinguished generator with coefficient 1"
    if scale != 1:
        inv = Fraction(1, 1) / scale
        iota = ChainMap(X, E, {k: f.scale(inv)
                               for k, f in iota.comps.items()})
        iota.check()
    return ExtensionRealization(n, i, scale, X, E, Y1, iota, pi)


# ---------------------------------------------------------------------------
# column data of one resolved word


def _check_N(N):
    if N is None:
        return None
    N = int(N)
    if N < 1:
        raise ValueError("N must be a positive integer or None")
    return N


def _sigma_next(sigma, N):
    """Slice hit by the column differential (and hence by W)."""
    if N is None:
        p, j = sigma
        return (p - 1, j)
    q, parity = sigma
    return (q + N + 1, 1 - parity)


def _folded_stage(fs: _FoldedSlices, q: int, parity: int):
    """Homology subquotient of one folded parity slice; keeps
    zero-dimensional subquotients so snake targets stay expressible."""
    _blocks, _offsets, dim = fs.ambient(q, parity)
    if dim == 0:
        return None
    down, tdim = fs.diff_entries(q, parity)
    if down and tdim:
        cycles = Echelon(rows_from_entries(down, tdim), dim).kernel_basis()
    else:
        cycles = [[Fraction(int(s == t)) for t in range(dim)]
                  for s in range(dim)]
    up, _ = fs.diff_entries(q - fs.N - 1, 1 - parity)
    cols: dict = {}
    for (r, c), v in up.items():
        cols.setdefault(c, [Fraction(0)] * dim)[r] = v
    return SubquotientBasis(dim, cycles, list(cols.values()))


class _ColumnsData:
    """Raw columns of one word-level complex with slicers and caches.

    Slices are keyed (p, j) of the contraction column when N is None and
    (q, parity) of the folded column for finite N.  Stage caches hold
    the slice homology subquotients and the maps induced on them by the
    word differential.
    """

    __slots__ = ("C", "N", "degrees", "cols", "kmaps", "slicers",
                 "_stage", "_ikm")

    def __init__(self, C: BComplex, N):
        self.C, self.N = C, N
        self.degrees = list(C.degrees)
        if N is None:
            self.cols = {k: koszul_column(C.objs[k]) for k in self.degrees}
            for col in self.cols.values():
                col.check(dh=-1, dq=0)
            self.slicers = {k: ColumnSlices(self.cols[k], split=True)
                            for k in self.degrees}
        else:
            self.cols = {k: folded_column(C.objs[k], N) for k in self.degrees}
            for col in self.cols.values():
                col.check(dh=None, dq=N + 1)
            self.slicers = {k: _FoldedSlices(self.cols[k], N)
                            for k in self.degrees}
        self.kmaps = {k: column_map(C.diff_mat(k), self.cols[k],
                                    self.cols[k + 1])
                      for k in self.degrees
                      if k + 1 in C.objs and C.diff_mat(k)}
        self._stage = {}
        self._ikm = {}

    def sigmas_at(self, deg: int):
        """Slice keys of this complex at one scanned internal degree."""
        if self.N is None:
            out = set()
            for k in self.degrees:
                for p in self.slicers[k].groups:
                    out.add((p, deg))
            return out
        return {(deg, 0), (deg, 1)}

    def amb_dim(self, k, sigma) -> int:
        if k not in self.slicers:
            return 0
        if self.N is None:
            b = self.slicers[k].basis(*sigma)
            return b.dim if b is not None else 0
        return self.slicers[k].ambient(*sigma)[2]

    def stage(self, k, sigma):
        """Slice homology subquotient, or None when the slice is empty."""
        key = (k, sigma)
        if key not in self._stage:
            if k not in self.slicers:
                self._stage[key] = None
            elif self.N is None:
                p, j = sigma
                self._stage[key] = slice_subquotient(self.slicers[k],
                                                     p, j, -1, 0)
            else:
                self._stage[key] = _folded_stage(self.slicers[k], *sigma)
        return self._stage[key]

    def stage_dim(self, k, sigma) -> int:
        sq = self.stage(k, sigma)
        return sq.dim if sq is not None else 0

    def col_diff(self, k, sigma):
        """(entries, target dim) of the column differential at a slice."""
        if self.N is None:
            p, j = sigma
            sl = self.slicers[k]
            ent = sl.matrix(p, j, p - 1, j)
            b = sl.basis(p - 1, j)
            return ent, (b.dim if b is not None else 0)
        return self.slicers[k].diff_entries(*sigma)

    def induced_kmap(self, k, sigma):
        """Matrix induced on slice homology by the word differential."""
        key = (k, sigma)
        if key in self._ikm:
            return self._ikm[key]
        out: dict = {}
        sq_s = self.stage(k, sigma)
        sq_t = self.stage(k + 1, sigma)
        if sq_s is not None and sq_s.dim and k in self.kmaps:
            if sq_t is None:
                assert self.amb_dim(k + 1, sigma) == 0
            elif self.N is None:
                p, j = sigma
                out = induced_matrix(self.kmaps[k], self.slicers[k],
                                     self.slicers[k + 1], sq_s, sq_t, p, j)
            else:
                ent, tdim = _cross(self.kmaps[k], self, self, k, sigma,
                                   tgt_k=k + 1)
                out = _push_express(ent, tdim, sq_s, sq_t)
        self._ikm[key] = out
        return out

    def stage2_at(self, sigma) -> dict:
        """Tower homology over the word direction at one slice."""
        dims = {k: self.stage_dim(k, sigma) for k in self.degrees}
        dims = {k: d for k, d in dims.items() if d}
        mats = {k: self.induced_kmap(k, sigma) for k in dims
                if k in self.kmaps}
        return tower_homology(dims, mats)


def _push_express(entries: dict, tdim: int, sq_src, sq_tgt) -> dict:
    """Push subquotient representatives through an ambient matrix and
    express the images in the target subquotient."""
    out: dict = {}
    for c, rep in enumerate(sq_src.reps):
        img = mat_vec(entries, rep, tdim)
        try:
            coords = sq_tgt.express(img)
        except ValueError as e:
            raise AssertionError(
                "pushed representative left the target subquotient") from e
        for r, v in enumerate(coords):
            if v:
                out[(r, c)] = v
    return out


def _cross(cmap: dict, data_src: _ColumnsData, data_tgt: _ColumnsData,
           k, sigma, tgt_k=None):
    """Ambient slice matrix of a degree-0 column-level map; returns
    (entries, target ambient dim).  Weight-preserving in folded mode."""
    kt = k if tgt_k is None else tgt_k
    if data_src.N is None:
        p, j = sigma
        ent = cross_matrix(cmap, data_src.slicers[k], data_tgt.slicers[kt],
                           p, j, j)
        return ent, data_tgt.amb_dim(kt, sigma)
    fs_s, fs_t = data_src.slicers[k], data_tgt.slicers[kt]
    q, parity = sigma
    src_blocks, src_off, _sdim = fs_s.ambient(q, parity)
    _tb, tgt_off, tdim = fs_t.ambient(q, parity)
    entries: dict = {}
    for p, _b in src_blocks:
        if p not in tgt_off:
            continue
        for (r, c), v in cross_matrix(cmap, fs_s.sl, fs_t.sl, p, q, q).items():
            entries[(tgt_off[p] + r, src_off[p] + c)] = v
    return entries, tdim


# ---------------------------------------------------------------------------
# one cube edge: a crossing-change sequence tensored into a word


def _fold_chain_maps(n: int, factors) -> ChainMap:
    out = ChainMap.identity(BComplex.identity(n))
    for f in factors:
        out = tensor_chain_maps(out, f)
    return out


class _Edge:
    """Wall-crossing data for flipping one singular slot at one vertex:
    the middle word complex, the column-level structure maps, and the
    cached connecting maps per slice."""

    __slots__ = ("slot", "src_key", "tgt_key", "src", "tgt", "mid",
                 "iota_cols", "pi_cols", "_w", "_exact_ok")

    def __init__(self, slot, src_key, tgt_key, src, tgt, mid,
                 iota_cols, pi_cols):
        self.slot, self.src_key, self.tgt_key = slot, src_key, tgt_key
        self.src, self.tgt, self.mid = src, tgt, mid
        self.iota_cols, self.pi_cols = iota_cols, pi_cols
        self._w = {}
        self._exact_ok = set()

    def w(self, k, sigma) -> dict:
        key = (k, sigma)
        if key not in self._w:
            self._w[key] = _edge_snake(self, k, sigma)
        return self._w[key]


def _slice_exactness(edge: _Edge, k, sigma):
    """Assert the tensored sequence stays exact on one column slice."""
    key = (k, sigma)
    if key in edge._exact_ok:
        return
    dx = edge.tgt.amb_dim(k, sigma)
    dy = edge.src.amb_dim(k, sigma)
    de = edge.mid.amb_dim(k, sigma)
    assert de == dx + dy, \
        f"slice ranks are not exact at step {k}, slice {sigma}"
    pi_m, _ = _cross(edge.pi_cols.get(k, {}), edge.mid, edge.src, k, sigma)
    io_m, _ = _cross(edge.iota_cols.get(k, {}), edge.tgt, edge.mid, k, sigma)
    assert Echelon(rows_from_entries(pi_m, dy), de).rank == dy, \
        f"projection is not onto at step {k}, slice {sigma}"
    assert Echelon(rows_from_entries(io_m, de), dx).rank == dx, \
        f"inclusion is not injective at step {k}, slice {sigma}"
    assert not _compose(pi_m, io_m), \
        f"projection after inclusion is nonzero at step {k}, slice {sigma}"
    edge._exact_ok.add(key)


def _edge_snake(edge: _Edge, k, sigma) -> dict:
    """Connecting homomorphism on one slice: lift a class through the
    projection, apply the middle column differential, pull back through
    the inclusion, express in the target slice homology."""
    src, mid, tgt = edge.src, edge.mid, edge.tgt
    sq_y = src.stage(k, sigma)
    if sq_y is None or sq_y.dim == 0:
        return {}
    sigma2 = _sigma_next(sigma, src.N)
    _slice_exactness(edge, k, sigma)
    _slice_exactness(edge, k, sigma2)
    de = mid.amb_dim(k, sigma)
    dy = src.amb_dim(k, sigma)
    pi_m, _ = _cross(edge.pi_cols.get(k, {}), mid, src, k, sigma)
    solver_pi = Echelon(rows_from_entries(pi_m, dy), de)
    dcol, de2 = mid.col_diff(k, sigma)
    assert de2 == mid.amb_dim(k, sigma2)
    io2, _ = _cross(edge.iota_cols.get(k, {}), tgt, mid, k, sigma2)
    dx2 = tgt.amb_dim(k, sigma2)
    solver_io = Echelon(rows_from_entries(io2, de2), dx2)
    sq_x = tgt.stage(k, sigma2)
    out: dict = {}
    for c, rep in enumerate(sq_y.reps):
        b = solver_pi.solve(list(rep))
        assert b is not None, "projection failed to lift a cycle"
        v = mat_vec(dcol, b, de2)
        a = solver_io.solve(v)
        assert a is not None, "connecting image escapes the inclusion"
        if sq_x is None:
            assert not any(a), "connecting image missed the empty slice"
            continue
        try:
            coords = sq_x.express(a)
        except ValueError as e:
            raise AssertionError(
                "connecting image is not a cycle of the target slice") from e
        for r, val in enumerate(coords):
            if val:
                out[(r, c)] = val
    return out


def _edge_chain_check(edge: _Edge):
    """Assert W commutes with the induced word-direction differentials
    on every populated slice.  A failure here is a sign or convention
    inconsistency and is never accepted."""
    keys = [(k, sigma) for (k, sigma), sq in list(edge.src._stage.items())
            if sq is not None and sq.dim]
    for k, sigma in sorted(keys):
        sigma2 = _sigma_next(sigma, edge.src.N)
        lhs = _compose(edge.w(k + 1, sigma), edge.src.induced_kmap(k, sigma))
        rhs = _compose(edge.tgt.induced_kmap(k, sigma2), edge.w(k, sigma))
        assert lhs == rhs, \
            ("wall-crossing map does not commute with the induced "
             f"differentials at step {k}, slice {sigma}")


# ---------------------------------------------------------------------------
# the cube


class _Cube:
    __slots__ = ("word", "N", "window", "slots", "slot_of", "realizations",
                 "vertices", "edges", "resolutions", "stabilized",
                 "scan_lo", "scan_hi", "st2", "warnings")

    def __init__(self):
        self.warnings = []


def _vertex_complex(word: Word, letters: dict, realizations: dict,
                    slot_of: dict, eps) -> BComplex:
    out = BComplex.identity(word.n)
    for m, (i, kind) in enumerate(word.entries):
        if kind == SING:
            r = realizations[slot_of[m]]
            C = r.X if eps[slot_of[m]] == POS else r.Y1
        else:
            C = letters[m]
        out = tensor(out, C)
    return out


def _make_edge(word: Word, letters: dict, realizations: dict, slot_of: dict,
               eps, t: int, vertices: dict, N) -> _Edge:
    n = word.n
    io_f, pi_f = [], []
    for m, (i, kind) in enumerate(word.entries):
        if kind == SING and slot_of[m] == t:
            io_f.append(realizations[t].iota)
            pi_f.append(realizations[t].pi)
            continue
        if kind == SING:
            u = slot_of[m]
            C = realizations[u].X if eps[u] == POS else realizations[u].Y1
        else:
            C = letters[m]
        ident = ChainMap.identity(C)
        io_f.append(ident)
        pi_f.append(ident)
    iota_w = _fold_chain_maps(n, io_f)
    pi_w = _fold_chain_maps(n, pi_f)
    tgt_key = eps[:t] + (POS,) + eps[t + 1:]
    src, tgt = vertices[eps], vertices[tgt_key]
    for k in iota_w.src.degrees:
        assert iota_w.src.objs[k].gens == tgt.C.objs[k].gens
        assert pi_w.tgt.objs[k].gens == src.C.objs[k].gens
        assert iota_w.tgt.objs[k].gens == pi_w.src.objs[k].gens
    iota_w.check()
    pi_w.check()
    try:
        mid = _ColumnsData(iota_w.tgt, N)
    except ValueError as e:
        raise ValueError(
            "the folded wall-crossing columns do not exist here "
            "(the potential must vanish on the extension bimodule): "
            + str(e)) from e
    iota_cols = {k: column_map(iota_w.comp_mat(k), tgt.cols[k], mid.cols[k])
                 for k in mid.degrees if iota_w.comp_mat(k)}
    pi_cols = {k: column_map(pi_w.comp_mat(k), mid.cols[k], src.cols[k])
               for k in mid.degrees if pi_w.comp_mat(k)}
    return _Edge(t, eps, tgt_key, src, tgt, mid, iota_cols, pi_cols)


def _build_cube(word: Word, N, window: DegreeWindow, scales=None) -> _Cube:
    """Vertices, edges and the stabilized internal-degree scan of the
    resolution cube of one singular word."""
    cube = _Cube()
    cube.word, cube.N, cube.window = word, N, window
    slots = word.singular_positions
    if not slots:
        raise ValueError("the word has no singular letters")
    cube.slots = slots
    cube.slot_of = {m: t for t, m in enumerate(slots)}
    scales = dict(scales or {})
    for t in scales:
        if not 0 <= t < len(slots):
            raise ValueError(f"scale given for unknown singular slot {t}")
    cube.realizations = {
        t: extension_realization(word.n, word.entries[m][0],
                                 scale=scales.get(t, 1))
        for t, m in enumerate(slots)}
    letters = {m: letter_complex(word.n, i, kind)
               for m, (i, kind) in enumerate(word.entries) if kind != SING}
    cube.vertices = {}
    cube.resolutions = {}
    for eps in itertools.product((POS, NEG), repeat=len(slots)):
        C = _vertex_complex(word, letters, cube.realizations,
                            cube.slot_of, eps)
        cube.vertices[eps] = _ColumnsData(C, N)
        res = word.resolve(eps)
        cube.resolutions[eps] = res
        if not res.is_knot_closure:
            cube.warnings.append(
                f"resolution {res} closes to a link, not a knot")
    cube.edges = {}
    for eps in cube.vertices:
        for t, e in enumerate(eps):
            if e == NEG:
                cube.edges[(eps, t)] = _make_edge(
                    word, letters, cube.realizations, cube.slot_of,
                    eps, t, cube.vertices, N)

    all_cols = {}
    for data in list(cube.vertices.values()) + \
            [e.mid for e in cube.edges.values()]:
        for col in data.cols.values():
            all_cols[len(all_cols)] = col
    lo, hi, q_top = _scan_range(all_cols, window)
    step = 1 if N is None else N + 1
    needed = (window.margin + len(slots)) * step
    hi = max(hi, q_top + needed)
    cube.st2 = {}
    zero_run = 0
    cube.stabilized = False
    cube.scan_lo = lo
    last = lo - 1
    for deg in range(lo, hi + 1):
        total = 0
        for vkey, data in cube.vertices.items():
            for sigma in sorted(data.sigmas_at(deg)):
                st2 = data.stage2_at(sigma)
                cube.st2[(vkey, sigma)] = st2
                total += sum(st2.values())
        last = deg
        if total == 0 and deg > q_top:
            zero_run += 1
            if zero_run >= needed:
                cube.stabilized = True
                break
        else:
            zero_run = 0
    cube.scan_hi = last
    if not cube.stabilized:
        cube.warnings.append(
            "degree window exhausted before the support stabilized")
    return cube


def _mu(eps) -> int:
    return sum(1 for e in eps if e == NEG)


def _report_grading(word: Word, N, s0: int, eps, k, sigma):
    """(reported word degree, bucket key) of one cube position."""
    mu = _mu(eps)
    if N is None:
        p, j = sigma
        return k - mu + s0, (p - mu + s0, j)
    q, _parity = sigma
    khat = k - mu + (word.writhe_top - word.n + 1)
    qhat = q + (N + 1) * (mu + word.n - 1 - word.writhe_top)
    return khat, (qhat,)


def _check_faces(cube: _Cube):
    """Assert every square of wall-crossing maps commutes before any
    signs are sprinkled on."""
    s = len(cube.slots)
    for eps in cube.vertices:
        minus = [t for t in range(s) if eps[t] == NEG]
        for t, u in itertools.combinations(minus, 2):
            e_t = cube.edges[(eps, t)]
            e_u = cube.edges[(eps, u)]
            e_tu = cube.edges[(e_t.tgt_key, u)]
            e_ut = cube.edges[(e_u.tgt_key, t)]
            keys = [(k, sigma) for (k, sigma), sq
                    in list(cube.vertices[eps]._stage.items())
                    if sq is not None and sq.dim]
            for k, sigma in sorted(keys):
                sigma2 = _sigma_next(sigma, cube.N)
                lhs = _compose(e_tu.w(k, sigma2), e_t.w(k, sigma))
                rhs = _compose(e_ut.w(k, sigma2), e_u.w(k, sigma))
                assert lhs == rhs, \
                    (f"cube face ({t},{u}) fails to commute at step {k}, "
                     f"slice {sigma}")


def _assemble(cube: _Cube, order) -> TriGradedSpace:
    """Total complex of the cube: stage-one classes of all vertices,
    differential = signed induced word maps plus signed wall-crossing
    maps, homology bucket by bucket."""
    word, N = cube.word, cube.N
    s0, lost = grading_shift(word.writhe_top, word.n)
    if lost:
        cube.warnings.append(
            "odd writhe-plus-one parity: the half-step normalization "
            "was rounded down")
    pos_in_order = {t: r for r, t in enumerate(order)}

    buckets: dict = {}
    for vkey, data in cube.vertices.items():
        for (k, sigma), sq in sorted(list(data._stage.items())):
            if sq is None or sq.dim == 0:
                continue
            khat, bucket = _report_grading(word, N, s0, vkey, k, sigma)
            levels = buckets.setdefault(bucket, {})
            levels.setdefault(khat, []).append((vkey, k, sigma, sq.dim))

    space = TriGradedSpace()
    for bucket in sorted(buckets):
        levels = buckets[bucket]
        active = False
        for plist in levels.values():
            for vkey, k, sigma, _d in plist:
                st2 = cube.st2.get((vkey, sigma))
                if st2 is None or st2.get(k, 0):
                    active = True
                    break
            if active:
                break
        if not active:
            continue
        dims, offs, index = {}, {}, {}
        for khat, plist in levels.items():
            plist.sort(key=lambda it: (_mu(it[0]), it[0], it[1], it[2]))
            off = 0
            index[khat] = {}
            for vkey, k, sigma, d in plist:
                offs[(vkey, k, sigma)] = off
                index[khat][(vkey, k, sigma)] = off
                off += d
            dims[khat] = off
        mats: dict = {}
        for khat, plist in levels.items():
            tgt_index = index.get(khat + 1, {})
            ent = mats.setdefault(khat, {})
            for vkey, k, sigma, _d in plist:
                c0 = offs[(vkey, k, sigma)]
                mu = _mu(vkey)
                km = cube.vertices[vkey].induced_kmap(k, sigma)
                if km and (vkey, k + 1, sigma) in tgt_index:
                    r0 = tgt_index[(vkey, k + 1, sigma)]
                    sgn = -1 if mu % 2 else 1
                    for (r, c), v in km.items():
                        ent[(r0 + r, c0 + c)] = sgn * v
                for t in range(len(cube.slots)):
                    if vkey[t] != NEG:
                        continue
                    edge = cube.edges[(vkey, t)]
                    wm = edge.w(k, sigma)
                    sigma2 = _sigma_next(sigma, N)
                    tkey = (edge.tgt_key, k, sigma2)
                    if wm and tkey in tgt_index:
                        r0 = tgt_index[tkey]
                        c_t = sum(1 for u in range(len(cube.slots))
                                  if u != t and vkey[u] == POS
                                  and pos_in_order[u] < pos_in_order[t])
                        sgn = -1 if c_t % 2 else 1
                        for (r, c), v in wm.items():
                            ent[(r0 + r, c0 + c)] = sgn * v
            if not ent:
                del mats[khat]
        hom = tower_homology(dims, mats)
        for khat, h in hom.items():
            if N is None:
                i_hat, j_hat = bucket
                space.add(khat, i_hat, j_hat, h)
            else:
                space.add(khat, bucket[0], 0, h)
    return space


# ---------------------------------------------------------------------------
# public entry points


def wall_crossing_map(word: Word, N=None, window: DegreeWindow = None,
                      scale=1):
    """Connecting map of one crossing change, slice by slice.

    The word must contain exactly one singular letter; that letter marks
    the crossing being changed.  Returns (wmap, report) where wmap holds
    the matrices of W per (word degree, slice) from the homology data of
    the negative resolution to that of the positive one, in stage-one
    coordinates.  The chain-map property and the termwise exactness of
    the tensored sequence are asserted along the way.
    """
    N = _check_N(N)
    window = window or DegreeWindow()
    if len(word.singular_positions) != 1:
        raise ValueError("wall_crossing_map wants exactly one singular "
                         "letter")
    cube = _build_cube(word, N, window, scales={0: scale})
    (edge,) = cube.edges.values()
    slices: dict = {}
    src_dims: dict = {}
    tgt_dims: dict = {}
    rank = 0
    keys = [(k, sigma) for (k, sigma), sq in sorted(edge.src._stage.items())
            if sq is not None and sq.dim]
    for k, sigma in keys:
        wm = edge.w(k, sigma)
        src_dims[(k, sigma)] = edge.src.stage_dim(k, sigma)
        sigma2 = _sigma_next(sigma, N)
        tdim = edge.tgt.stage_dim(k, sigma2)
        if tdim:
            tgt_dims[(k, sigma2)] = tdim
        if wm:
            slices[(k, sigma)] = wm
            rank += matrix_rank(wm, tdim, src_dims[(k, sigma)])
    _edge_chain_check(edge)
    wmap = {
        "slices": slices,
        "rank": rank,
        "scale": Fraction(scale),
        "source_dims": src_dims,
        "target_dims": tgt_dims,
        "source": str(cube.resolutions[(NEG,)]),
        "target": str(cube.resolutions[(POS,)]),
    }
    report = {
        "N": N,
        "stabilized": cube.stabilized,
        "scan_range": (cube.scan_lo, cube.scan_hi),
        "warnings": list(cube.warnings),
    }
    return wmap, report


def vassiliev_complex(word: Word, N=None, window: DegreeWindow = None,
                      scales=None, order=None):
    """Homology of the signed total complex over the resolution cube.

    scales optionally rescales the extension of singular slot t by
    scales[t]; order optionally permutes the slots in the edge sign
    rule.  Neither changes the homology (asserted by the test suite);
    they exist to demonstrate exactly that.  Returns (TriGradedSpace,
    report).
    """
    N = _check_N(N)
    window = window or DegreeWindow()
    cube = _build_cube(word, N, window, scales=scales)
    s = len(cube.slots)
    if order is None:
        order = list(range(s))
    else:
        order = [int(t) for t in order]
        if sorted(order) != list(range(s)):
            raise ValueError("order must be a permutation of the singular "
                             "slots")
    for edge in cube.edges.values():
        keys = [(k, sigma) for (k, sigma), sq
                in sorted(edge.src._stage.items())
                if sq is not None and sq.dim]
        for k, sigma in keys:
            edge.w(k, sigma)
        _edge_chain_check(edge)
    _check_faces(cube)
    space = _assemble(cube, order)
    edge_ranks = {}
    for (eps, t), edge in sorted(cube.edges.items()):
        r = 0
        for (k, sigma), wm in edge._w.items():
            if wm:
                sigma2 = _sigma_next(sigma, N)
                r += matrix_rank(wm, edge.tgt.stage_dim(k, sigma2),
                                 edge.src.stage_dim(k, sigma))
        label = "".join("+" if e == POS else "-" for e in eps)
        edge_ranks[(label, t)] = r
    report = {
        "N": N,
        "order": list(order),
        "scales": {t: str(cube.realizations[t].scale) for t in range(s)},
        "stabilized": cube.stabilized,
        "scan_range": (cube.scan_lo, cube.scan_hi),
        "resolutions": {
            "".join("+" if e == POS else "-" for e in eps): str(res)
            for eps, res in sorted(cube.resolutions.items())},
        "edge_ranks": edge_ranks,
        "warnings": list(cube.warnings),
    }
    return space, report


def finite_dimensionality_check(word: Word, N=None,
                                window: DegreeWindow = None) -> dict:
    """Scan the cube homology of a singular word for a finite table.

    Reports whether the support stabilized inside the degree window and
    the total dimension found.  When some resolution closes to a link
    the finiteness statement does not apply, so an unstabilized scan is
    reported as inconclusive rather than as a failure.
    """
    window = window or DegreeWindow()
    knots = all(res.is_knot_closure for _c, res, _m in word.resolutions())
    space, report = vassiliev_complex(word, N=N, window=window)
    out = {
        "word": str(word),
        "N": "inf" if N is None else int(N),
        "all_resolutions_knots": knots,
        "stabilized": report["stabilized"],
        "finite": bool(report["stabilized"]),
        "inconclusive": not report["stabilized"],
        "total_dimension": space.total_dim,
        "table": space.table(),
    }
    if not knots and not report["stabilized"]:
        out["note"] = ("a resolution closes to a link; an inconclusive "
                       "scan is expected there")
    return out
