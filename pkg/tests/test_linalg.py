import random
from fractions import Fraction

from braidhom.linalg import (Echelon, RowSpace, SubquotientBasis, mat_vec,
                             matrix_rank, rows_from_entries)


def naive_rref_rank(dense):
    """Plain Fraction RREF, as an independent cross-check."""
    mat = [list(map(Fraction, row)) for row in dense]
    if not mat:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [v / pv for v in mat[rank]]
        for i in range(nrows):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def random_dense(rng, nrows, ncols, density=0.6):
    return [[Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
             if rng.random() < density else Fraction(0)
             for _ in range(ncols)] for _ in range(nrows)]


def to_entries(dense):
    return {(r, c): v for r, row in enumerate(dense)
            for c, v in enumerate(row) if v}


def test_rank_matches_naive():
    rng = random.Random(11)
    for _ in range(40):
        nr, nc = rng.randrange(0, 7), rng.randrange(0, 7)
        dense = random_dense(rng, nr, nc)
        assert matrix_rank(to_entries(dense), nr, nc) == naive_rref_rank(dense)


def test_kernel_vectors_annihilate():
    rng = random.Random(5)
    for _ in range(30):
        nr, nc = rng.randrange(1, 7), rng.randrange(1, 7)
        dense = random_dense(rng, nr, nc)
        entries = to_entries(dense)
        ech = Echelon(rows_from_entries(entries, nr), nc)
        basis = ech.kernel_basis()
        assert len(basis) == nc - ech.rank
        for k in basis:
            assert all(v == 0 for v in mat_vec(entries, k, nr))
        # kernel vectors are independent
        space = RowSpace(nc)
        for k in basis:
            assert space.add(k)


def test_solve_consistent_and_inconsistent():
    rng = random.Random(23)
    for _ in range(30):
        nr, nc = rng.randrange(1, 7), rng.randrange(1, 7)
        dense = random_dense(rng, nr, nc)
        entries = to_entries(dense)
        ech = Echelon(rows_from_entries(entries, nr), nc)
        x0 = [Fraction(rng.randrange(-3, 4)) for _ in range(nc)]
        b = mat_vec(entries, x0, nr)
        x = ech.solve(b)
        assert x is not None
        assert mat_vec(entries, x, nr) == b
    # clearly inconsistent system
    ech = Echelon(rows_from_entries({(0, 0): Fraction(1), (1, 0): Fraction(1)}, 2), 1)
    assert ech.solve([Fraction(1), Fraction(2)]) is None


def test_solve_empty_shapes():
    # zero columns: solvable iff rhs is zero
    ech = Echelon(rows_from_entries({}, 2), 0)
    assert ech.solve([Fraction(0), Fraction(0)]) == []
    assert ech.solve([Fraction(1), Fraction(0)]) is None
    # zero rows: everything is kernel
    ech = Echelon([], 3)
    assert len(ech.kernel_basis()) == 3


def test_rowspace_membership():
    space = RowSpace(3)
    assert space.add([Fraction(1), Fraction(2), Fraction(0)])
    assert space.add([Fraction(0), Fraction(1), Fraction(1)])
    assert not space.add([Fraction(1), Fraction(3), Fraction(1)])
    assert space.contains([Fraction(2), Fraction(5), Fraction(1)])
    assert not space.contains([Fraction(0), Fraction(0), Fraction(1)])
    assert space.dim == 2


def test_subquotient_three_term_complex():
    # d2: Q^1 -> Q^3 with image (1,-1,0); d1: Q^3 -> Q^1 summing coordinates.
    # ker d1 is 2-dim, so homology is 1-dim.
    one = Fraction(1)
    cycles = [[one, -one, Fraction(0)], [Fraction(0), one, -one]]
    boundaries = [[one, -one, Fraction(0)]]
    H = SubquotientBasis(3, cycles, boundaries)
    assert H.dim == 1
    # the second cycle is the representative; expressing it gives coord 1
    assert H.express([Fraction(0), one, -one]) == [one]
    # shifting by a boundary must not change the coordinates
    shifted = [one, Fraction(0), -one]
    assert H.express(shifted) == [one]
    # a boundary expresses as zero
    assert H.express([Fraction(2), Fraction(-2), Fraction(0)]) == [Fraction(0)]


def test_subquotient_rejects_foreign_vector():
    H = SubquotientBasis(2, [[Fraction(1), Fraction(0)]], [])
    try:
        H.express([Fraction(0), Fraction(1)])
        assert False
    except ValueError:
        pass


def test_homology_dimension_random_complexes():
    # build random pairs d1 d2 with d1 d2 = 0 by construction: d2 maps into ker d1
    rng = random.Random(99)
    for _ in range(15):
        mid = rng.randrange(2, 6)
        out = rng.randrange(1, 4)
        dense1 = random_dense(rng, out, mid)
        e1 = to_entries(dense1)
        ech1 = Echelon(rows_from_entries(e1, out), mid)
        kb = ech1.kernel_basis()
        # d2 columns: random combinations of kernel vectors
        cols = []
        for _ in range(rng.randrange(0, 3)):
            v = [Fraction(0)] * mid
            for k in kb:
                c = rng.randrange(-2, 3)
                v = [a + c * b for a, b in zip(v, k)]
            cols.append(v)
        H = SubquotientBasis(mid, kb, cols)
        bd_rank = RowSpace(mid)
        img = sum(1 for v in cols if bd_rank.add(v))
        assert H.dim == len(kb) - img
