"""Independent reference computations used to cross-check the package.

Everything here is deliberately naive: dense matrices over Fraction or
modular integers, faces enumerated by brute-force membership tests.  The
only package API the oracles lean on is the facet-based face membership
test, so agreement with the fast paths is meaningful.
"""

from __future__ import annotations

import itertools as it
from fractions import Fraction

# 6-vertex triangulation of the real projective plane: 10 facets, every
# edge in exactly two triangles, Euler characteristic 1, H~_1 = Z/2
RP2_FACETS = (
    (1, 2, 3),
    (1, 2, 4),
    (1, 3, 5),
    (1, 4, 6),
    (1, 5, 6),
    (2, 3, 6),
    (2, 4, 5),
    (2, 5, 6),
    (3, 4, 5),
    (3, 4, 6),
)


def trim(seq):
    """Drop trailing zeros, for comparing Betti vectors of unequal length."""
    out = list(seq)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def dense_rank(rows, p=None):
    """Gaussian elimination rank over Q (p=None) or F_p."""
    if not rows or not rows[0]:
        return 0
    if p is None:
        mat = [[Fraction(v) for v in row] for row in rows]
    else:
        mat = [[v % p for v in row] for row in rows]
    rank = 0
    for c in range(len(mat[0])):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][c] if p is None else pow(mat[rank][c], -1, p)
        if p is None:
            row = [v * inv for v in mat[rank]]
        else:
            row = [v * inv % p for v in mat[rank]]
        mat[rank] = row
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                f = mat[i][c]
                if p is None:
                    mat[i] = [a - f * b for a, b in zip(mat[i], row)]
                else:
                    mat[i] = [(a - f * b) % p for a, b in zip(mat[i], row)]
        rank += 1
    return rank


def faces_by_size(K, verts):
    """Faces of K inside a vertex set, keyed by face cardinality."""
    verts = sorted(verts)
    out = {0: [()]}
    for size in range(1, len(verts) + 1):
        hits = [c for c in it.combinations(verts, size) if K.has_face(c)]
        if not hits:
            break
        out[size] = hits
    return out


def _boundary_dense(upper, lower):
    idx = {f: i for i, f in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for pos in range(len(f)):
            mat[idx[f[:pos] + f[pos + 1 :]]][j] = (-1) ** pos
    return mat


def reduced_betti_within(K, verts, p=None):
    """Reduced Betti numbers of K restricted to a vertex set, by degree.

    Includes degree -1 (rank one exactly when the restriction is the
    empty complex); zero entries are omitted.
    """
    fd = faces_by_size(K, verts)
    ranks = {
        s: dense_rank(_boundary_dense(fd[s], fd[s - 1]), p)
        for s in fd
        if s > 0
    }
    out = {}
    for s, members in fd.items():
        b = len(members) - ranks.get(s, 0) - ranks.get(s + 1, 0)
        if b:
            out[s - 1] = b
    return out


def brute_hochster_betti(K, p=None):
    """Betti numbers of Z_K assembled subset by subset."""
    total = [0] * (K.m + K.dim + 2)
    total[0] = 1  # the empty subset contributes the unit
    for size in range(1, K.m + 1):
        for I in it.combinations(range(1, K.m + 1), size):
            for d, b in reduced_betti_within(K, I, p).items():
                total[size + d + 1] += b
    return tuple(total)


def is_cocycle(K, c, p=None):
    """Whether a Cochain is closed inside K restricted to its subset."""
    verts = [v for v in range(1, K.m + 1) if c.subset >> (v - 1) & 1]
    values = dict(c.values)

    def val(face):
        mask = 0
        for v in face:
            mask |= 1 << (v - 1)
        return values.get(mask, 0)

    for tau in it.combinations(verts, c.degree + 2):
        if not K.has_face(tau):
            continue
        acc = sum(
            (-1) ** pos * val(tau[:pos] + tau[pos + 1 :])
            for pos in range(len(tau))
        )
        if (acc % p if p is not None else acc) != 0:
            return False
    return True


def boundary_squares_to_zero(cc):
    """Compose consecutive sparse boundary maps and test for zero."""
    for i in range(1, len(cc.degrees)):
        lower = cc.boundaries[i - 1]
        for col in cc.boundaries[i]:
            acc = {}
            for r, v in col:
                for r2, v2 in lower[r]:
                    acc[r2] = acc.get(r2, 0) + v * v2
            if any(acc.values()):
                return False
    return True


def matmul(A, B):
    """Dense integer matrix product (for transform checks)."""
    if not A or not B:
        return []
    return [
        [sum(a * b for a, b in zip(row, col)) for col in zip(*B)]
        for row in A
    ]
