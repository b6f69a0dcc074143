"""Combinatorial classification predicates and the theorem harnesses.

Everything here reduces to the tables and product machinery: minimal
non-Golodness deletes one vertex at a time, Gorenstein*-ness inspects
every face link, the join/TFAE checker compares five equivalent
characterizations of cone-vertex subsets, and the recognizer matches the
rational cohomology ring of Z_K against the ring of a connected sum of
sphere products.

The verify_* harnesses evaluate an implication: status CONFIRMED means
hypothesis and conclusion both hold, HYPOTHESIS_NOT_MET means the input
is outside the statement's scope, and VIOLATION flags a counterexample,
which for a proved statement can only be a bug in this package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cellular import RK_MAX_VERTICES, rk_betti
from .complexes import SimplicialComplex, from_facets, mask_of, vertices_of
from .errors import EmptySubset, FieldMismatch, OutOfRange
from .hochster import DEFAULT_MAX_VERTICES, hochster_table
from .linalg import INT, RAT, field_ops, reduced_homology, rref
from .products import (
    CUP_CAVEAT,
    GolodReport,
    is_cup_golod,
    product_table,
)

# -- minimal non-Golodness ----------------------------------------------------


@dataclass(frozen=True)
class MNGReport:
    """Outcome of the minimally-non-Golod test (None = undecided)."""

    value: bool | None
    witness_vertex: int | None = None
    witness: dict | None = None
    caveats: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "minimally_non_golod": self.value,
            "witness_vertex": self.witness_vertex,
            "witness": self.witness,
            "caveats": list(self.caveats),
        }


def is_minimally_non_golod(
    K: SimplicialComplex, *, max_vertices: int = DEFAULT_MAX_VERTICES
) -> MNGReport:
    """K has a nonzero cup product but every vertex deletion has none.

    False comes with a witness: either K itself is product-free, or some
    deletion still carries a product (witness_vertex names it).
    """
    own = is_cup_golod(K, max_vertices=max_vertices)
    caveats = own.caveats
    if own.verdict == "UNKNOWN":
        return MNGReport(None, caveats=caveats)
    if own.verdict == "CUP_GOLOD":
        return MNGReport(
            False,
            witness={"reason": "no nonzero cup products in K itself"},
            caveats=caveats,
        )
    undecided = False
    for v in range(1, K.m + 1):
        sub = K.delete_vertex(v)
        rep = is_cup_golod(sub, max_vertices=max_vertices)
        if rep.verdict == "NON_GOLOD":
            return MNGReport(
                False,
                witness_vertex=K.label_of(v),
                witness=rep.witness,
                caveats=caveats,
            )
        if rep.verdict == "UNKNOWN":
            undecided = True
    if undecided:
        return MNGReport(None, caveats=caveats)
    return MNGReport(True, witness=own.witness, caveats=caveats)


# -- Gorenstein* ---------------------------------------------------------------


@dataclass(frozen=True)
class GorensteinReport:
    value: bool
    reason: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {
            "gorenstein_star": self.value,
            "reason": self.reason,
            "witness": self.witness,
        }


def is_gorenstein_star(K: SimplicialComplex) -> GorensteinReport:
    """K equals its core and every face link is an integral homology sphere.

    The link of a face sigma must look like S^(dim K - |sigma|); the empty
    face is included, so K itself must be a homology sphere of its own
    dimension.
    """
    cone_verts, _ = K.core()
    if cone_verts:
        return GorensteinReport(
            False,
            "K has cone vertices, so K != core(K)",
            {"cone_vertices": list(cone_verts)},
        )
    n = K.dim
    for face in sorted(K.faces(), key=lambda f: (f.bit_count(), vertices_of(f))):
        size = face.bit_count()
        prof = reduced_homology(K.link(vertices_of(face)), INT)
        if not prof.is_sphere(n - size):
            return GorensteinReport(
                False,
                "a face link is not a homology sphere of the right dimension",
                {
                    "face": list(vertices_of(face)),
                    "expected_sphere": n - size,
                    "ranks": [list(r) for r in prof.ranks],
                    "torsion": [
                        [d, list(t)] for d, t in prof.torsion
                    ],
                },
            )
    return GorensteinReport(True, "all face links are homology spheres")


# -- cone-vertex subsets: five equivalent conditions ----------------------------


@dataclass(frozen=True)
class TFAEReport:
    """Truth values of the five characterizations for one subset I.

    a: all subset homology is carried by subsets of I
    b: the core vertices lie in I
    c: every vertex outside I has star equal to K
    d: every vertex outside I has link equal to its deletion
    e: K is the join of the simplex on [m]-I with K_I
    """

    subset: tuple[int, ...]
    conditions: tuple[tuple[str, bool], ...]

    @property
    def agree(self) -> bool:
        vals = {v for _, v in self.conditions}
        return len(vals) == 1

    @property
    def value(self) -> bool:
        return self.conditions[0][1]

    def to_dict(self) -> dict:
        d = {name: val for name, val in self.conditions}
        d["subset"] = list(self.subset)
        d["agree"] = self.agree
        return d


def tfae_check(
    K: SimplicialComplex,
    subset,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> TFAEReport:
    """Evaluate all five cone-vertex characterizations for the subset.

    The five answers are provably equal; a disagreement in the report
    would expose an implementation bug, so callers treat it as an
    internal invariant violation.
    """
    I = tuple(sorted(set(subset)))
    if not I:
        raise EmptySubset("the subset of retained vertices must be nonempty")
    for v in I:
        if not 1 <= v <= K.m:
            raise OutOfRange(f"vertex {v} outside 1..{K.m}")
    imask = mask_of(I)
    outside = [v for v in range(1, K.m + 1) if v not in set(I)]

    table = hochster_table(K, INT, max_vertices=max_vertices)
    a = all(mask & ~imask == 0 for mask, _ in table.subsets)

    core_verts, _ = K.core()
    core_mask = mask_of(
        v for v in range(1, K.m + 1) if v not in set(core_verts)
    )
    b = core_mask & ~imask == 0

    c = all(K.star(v) == K for v in outside)

    d = all(
        K.link([v]) == K.delete_vertex(v) for v in outside
    )

    smask = ((1 << K.m) - 1) & ~imask
    restricted = {f & imask for f in K.facets}
    keep = [
        g
        for g in restricted
        if not any(g != h and g & ~h == 0 for h in restricted)
    ]
    cand = from_facets(K.m, [vertices_of(smask | g) for g in keep])
    e = cand == K

    return TFAEReport(
        I,
        (("a", a), ("b", b), ("c", c), ("d", d), ("e", e)),
    )


# -- connected sums of sphere products -------------------------------------------


@dataclass(frozen=True)
class RecognitionReport:
    """Ring-level match against a connected sum of sphere products.

    kind is SPHERE, CONNECTED_SUM, or NONE; for a connected sum, pairs
    lists one (a, b) sphere-product block per summand.
    """

    kind: str
    top_degree: int | None = None
    pairs: tuple[tuple[int, int], ...] = ()
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "top_degree": self.top_degree,
            "pairs": [list(p) for p in self.pairs],
            "reason": self.reason,
        }


def recognize_connected_sum(
    K: SimplicialComplex,
    coeffs=RAT,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> RecognitionReport:
    """Match H*(Z_K; Q) against a sphere or a connected sum of S^a x S^b.

    Necessary and sufficient ring conditions: Betti numbers 1, .., 1 with
    a palindromic middle away from the top, no products dropping below
    the top degree, and nondegenerate complementary pairings.  The
    verdict is about the cohomology ring, not the homeomorphism type.
    """
    if coeffs != RAT:
        raise FieldMismatch("recognition is defined over the rationals")
    table = hochster_table(K, RAT, max_vertices=max_vertices)
    b = table.betti
    N = max((k for k, v in enumerate(b) if v), default=0)
    if N == 0:
        return RecognitionReport(
            "NONE", reason="the moment-angle complex is contractible"
        )
    if b[N] != 1:
        return RecognitionReport(
            "NONE", N, reason=f"top Betti number is {b[N]}, not 1"
        )
    if all(v == 0 for v in b[1:N]):
        return RecognitionReport("SPHERE", N)
    if N < 6:
        return RecognitionReport(
            "NONE", N, reason="no room for complementary middle classes"
        )
    if b[N - 1] or b[N - 2]:
        return RecognitionReport(
            "NONE", N, reason="classes immediately below the top degree"
        )
    if any(b[k] != b[N - k] for k in range(N + 1)):
        return RecognitionReport(
            "NONE", N, reason="Betti numbers are not palindromic"
        )
    if N % 2 == 0 and b[N // 2] % 2:
        return RecognitionReport(
            "NONE",
            N,
            reason="odd-rank middle degree cannot split into products",
        )
    pt = product_table(K, RAT, max_vertices=max_vertices)
    classes = pt.classes
    for i, j, coords in pt.products:
        if classes[i].total_degree + classes[j].total_degree < N:
            return RecognitionReport(
                "NONE",
                N,
                reason="a product of middle classes lands below the top",
            )
    by_degree: dict[int, list[int]] = {}
    for t, c in enumerate(classes):
        by_degree.setdefault(c.total_degree, []).append(t)
    lookup = {(i, j): coords for i, j, coords in pt.products}
    ops = field_ops(RAT)

    def gram_rank(k: int) -> int:
        rows_idx = by_degree.get(k, [])
        cols_idx = by_degree.get(N - k, [])
        mat = []
        for i in rows_idx:
            row = []
            for j in cols_idx:
                coords = lookup.get((min(i, j), max(i, j)), ())
                row.append(coords[0][1] if coords else ops.zero)
            mat.append(row)
        _, pivots = rref(mat, ops)
        return len(pivots)

    half = N // 2 if N % 2 == 0 else (N - 1) // 2
    for k in range(3, half + 1):
        if not b[k]:
            continue
        if gram_rank(k) != b[k]:
            return RecognitionReport(
                "NONE",
                N,
                reason=f"degenerate pairing between degrees {k} and {N - k}",
            )
    pairs: list[tuple[int, int]] = []
    for k in range(3, (N - 1) // 2 + 1):
        pairs.extend([(k, N - k)] * b[k])
    if N % 2 == 0:
        pairs.extend([(N // 2, N // 2)] * (b[N // 2] // 2))
    return RecognitionReport("CONNECTED_SUM", N, tuple(pairs))


# -- theorem harnesses ------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    status: str  # CONFIRMED | HYPOTHESIS_NOT_MET | VIOLATION | UNKNOWN
    hypothesis: dict = field(default_factory=dict)
    conclusion: dict | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "status": self.status,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "details": self.details,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _conclusion_status(mng: MNGReport, extra_ok: bool = True) -> str:
    if mng.value is None:
        return "UNKNOWN"
    return "CONFIRMED" if (mng.value and extra_ok) else "VIOLATION"


def verify_theorem_1_1(
    K: SimplicialComplex, *, max_vertices: int = DEFAULT_MAX_VERTICES
) -> VerificationReport:
    """If Z_K is a connected sum of sphere products (ring level) and K is
    Gorenstein*, then K must be minimally non-Golod."""
    rec = recognize_connected_sum(K, RAT, max_vertices=max_vertices)
    gor = is_gorenstein_star(K)
    hyp = {
        "connected_sum": rec.kind == "CONNECTED_SUM",
        "recognition": rec.to_dict(),
        "gorenstein_star": gor.value,
    }
    if rec.kind != "CONNECTED_SUM" or not gor.value:
        return VerificationReport("thm1.1", "HYPOTHESIS_NOT_MET", hyp)
    mng = is_minimally_non_golod(K, max_vertices=max_vertices)
    return VerificationReport(
        "thm1.1",
        _conclusion_status(mng),
        hyp,
        mng.to_dict(),
    )


def verify_theorem_1_2(
    K: SimplicialComplex, *, max_vertices: int = DEFAULT_MAX_VERTICES
) -> VerificationReport:
    """If Z_K is a connected sum of sphere products (ring level), then K
    splits as a simplex joined with its core, the core is Gorenstein*,
    and the core is minimally non-Golod."""
    rec = recognize_connected_sum(K, RAT, max_vertices=max_vertices)
    hyp = {
        "connected_sum": rec.kind == "CONNECTED_SUM",
        "recognition": rec.to_dict(),
    }
    if rec.kind != "CONNECTED_SUM":
        return VerificationReport("thm1.2", "HYPOTHESIS_NOT_MET", hyp)
    cone_verts, core = K.core()
    gor = is_gorenstein_star(core)
    mng = is_minimally_non_golod(core, max_vertices=max_vertices)
    details = {
        "cone_vertices": list(cone_verts),
        "simplex_dim": len(cone_verts) - 1,
        "core_vertices": list(core.labels()),
        "core_gorenstein_star": gor.to_dict(),
    }
    return VerificationReport(
        "thm1.2",
        _conclusion_status(mng, extra_ok=gor.value),
        hyp,
        mng.to_dict(),
        details,
    )


def verify_theorem_4_2(
    K: SimplicialComplex,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    rk_max_vertices: int = RK_MAX_VERTICES,
) -> VerificationReport:
    """If the real moment-angle complex has the rational Betti profile of
    a connected sum (1, middle, 1 with duality), then the core of K is
    minimally non-Golod."""
    b = rk_betti(K, RAT, max_vertices=rk_max_vertices)
    n = len(b) - 1
    middle = sum(b[1:n]) if n >= 1 else 0
    pattern = (
        n >= 1
        and b[0] == 1
        and b[n] == 1
        and all(b[k] == b[n - k] for k in range(n + 1))
        and middle >= 2
        and middle % 2 == 0
    )
    hyp = {
        "rk_betti": list(b),
        "top_degree": n,
        "middle_sum": middle,
        "pattern": pattern,
    }
    if not pattern:
        return VerificationReport("thm4.2", "HYPOTHESIS_NOT_MET", hyp)
    cone_verts, core = K.core()
    mng = is_minimally_non_golod(core, max_vertices=max_vertices)
    details = {
        "cone_vertices": list(cone_verts),
        "simplex_dim": len(cone_verts) - 1,
        "core_vertices": list(core.labels()),
    }
    return VerificationReport(
        "thm4.2",
        _conclusion_status(mng),
        hyp,
        mng.to_dict(),
        details,
    )
