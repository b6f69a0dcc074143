"""Cup products in H*(Z_K) and the cup-level Golod test.

Classes live in the subset decomposition: a class is a cocycle on a full
subcomplex K_I, placed in total degree |I| + d + 1.  Products of classes
with overlapping supports vanish; for disjoint supports I and J the
product evaluates on a face tau of K_{I u J} as

    (a.b)(tau) = (-1)^e a(tau n I) b(tau n J),
    e = inv(tau n I, J) + inv(tau n J, I) + inv(I - tau, J - tau),

where inv(A, B) counts pairs a > b.  The sign makes the product graded
commutative and associative at the cochain level, which the test suite
checks directly on random complexes.

The Golod verdict is three-valued.  NON_GOLOD is witnessed by an explicit
nonzero product over some field; CUP_GOLOD means every tested field is
product-free (higher operations are out of scope, which the report's
caveat repeats); UNKNOWN is reserved for torsion primes too large to test.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .complexes import SimplicialComplex, vertices_of
from .errors import (
    FieldMismatch,
    InternalInvariant,
    NotAField,
    TooManyVertices,
)
from .hochster import DEFAULT_MAX_VERTICES, hochster_table
from .linalg import (
    INT,
    MAX_FIELD_PRIME,
    PRIME,
    RAT,
    Coefficients,
    cocycle_basis,
    field_ops,
)


@dataclass(frozen=True)
class Cochain:
    """A cochain on K_subset, with faces in the ambient labels."""

    subset: int
    degree: int
    coeffs: Coefficients
    values: tuple[tuple[int, object], ...]  # (face mask, scalar), sorted

    def as_dict(self) -> dict[int, object]:
        return dict(self.values)

    @property
    def is_zero(self) -> bool:
        return not self.values

    @property
    def total_degree(self) -> int:
        return self.subset.bit_count() + self.degree + 1


@dataclass(frozen=True)
class TorClass:
    """Basis class of H*(Z_K): position `index` of H~^degree(K_subset)."""

    subset: int
    degree: int
    index: int
    coeffs: Coefficients
    cochain: tuple[tuple[int, object], ...]

    @property
    def total_degree(self) -> int:
        return self.subset.bit_count() + self.degree + 1

    def to_cochain(self) -> Cochain:
        return Cochain(self.subset, self.degree, self.coeffs, self.cochain)

    def describe(self) -> dict:
        return {
            "subset": list(vertices_of(self.subset)),
            "degree": self.degree,
            "total_degree": self.total_degree,
            "index": self.index,
        }


def _lift_mask(mask: int, verts: tuple[int, ...]) -> int:
    out = 0
    for i, v in enumerate(verts):
        if mask >> i & 1:
            out |= 1 << (v - 1)
    return out


@lru_cache(maxsize=50_000)
def _subset_classes(
    K: SimplicialComplex, subset: int, coeffs: Coefficients
) -> tuple[tuple[int, tuple[tuple[int, object], ...]], ...]:
    """(degree, lifted cochain) pairs for a basis of H~*(K_subset)."""
    verts = vertices_of(subset)
    KI = K.full_subcomplex(verts)
    out = []
    for degree in range(-1, KI.dim + 1):
        basis = cocycle_basis(KI, degree, coeffs)
        for vec in basis.vectors:
            lifted = tuple(
                sorted(
                    (_lift_mask(f, verts), val)
                    for f, val in zip(basis.faces, vec)
                    if val != 0
                )
            )
            out.append((degree, lifted))
    return tuple(out)


def tor_basis(
    K: SimplicialComplex,
    coeffs: Coefficients = RAT,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> tuple[TorClass, ...]:
    """Deterministic basis of H*(Z_K) over a field, unit class included.

    Classes are ordered by (subset mask, degree, basis index); the unit
    is the empty-subset class in total degree 0.
    """
    if not coeffs.is_field:
        raise NotAField("cup products need field coefficients")
    if K.m > max_vertices:
        raise TooManyVertices(
            f"{K.m} vertices exceed the cap of {max_vertices}",
            m=K.m,
            cap=max_vertices,
        )
    classes = []
    for mask in range(1 << K.m):
        per_degree: dict[int, int] = {}
        for degree, lifted in _subset_classes(K, mask, coeffs):
            idx = per_degree.get(degree, 0)
            per_degree[degree] = idx + 1
            classes.append(TorClass(mask, degree, idx, coeffs, lifted))
    return tuple(classes)


def _inv(amask: int, bmask: int) -> int:
    """Pairs (a, b) with a in A, b in B and a > b."""
    total = 0
    for a in vertices_of(amask):
        total += (bmask & ((1 << (a - 1)) - 1)).bit_count()
    return total


def multiply(K: SimplicialComplex, x, y) -> Cochain:
    """Cup product of two classes or cochains, as a cochain on K_{I u J}."""
    cx = x.to_cochain() if isinstance(x, TorClass) else x
    cy = y.to_cochain() if isinstance(y, TorClass) else y
    if cx.coeffs != cy.coeffs:
        raise FieldMismatch(
            f"cannot multiply over {cx.coeffs} and {cy.coeffs}"
        )
    I, J = cx.subset, cy.subset
    degree = cx.degree + cy.degree + 1
    if I & J:
        return Cochain(I | J, degree, cx.coeffs, ())
    ops = field_ops(cx.coeffs)
    acc: dict[int, object] = {}
    for f, a in cx.values:
        for g, b in cy.values:
            tau = f | g
            if not K.contains_mask(tau):
                continue
            e = _inv(f, J) + _inv(g, I) + _inv(I & ~f, J & ~g)
            val = ops.mul(a, b)
            if e % 2:
                val = ops.neg(val)
            prev = acc.get(tau)
            val = ops.add(prev, val) if prev is not None else val
            if val == ops.zero:
                acc.pop(tau, None)
            else:
                acc[tau] = val
    return Cochain(I | J, degree, cx.coeffs, tuple(sorted(acc.items())))


def _faces_within(K: SimplicialComplex, subset: int, size: int):
    return sorted(
        (f for f in K.faces() if not f & ~subset and f.bit_count() == size),
        key=vertices_of,
    )


@lru_cache(maxsize=50_000)
def _component_solver(
    K: SimplicialComplex, subset: int, degree: int, coeffs: Coefficients
):
    """Echelonized generators of the cocycle space of one component.

    Generators are the basis cocycles followed by the coboundaries of the
    (degree-1)-faces; each echelon entry keeps the combination that
    produced it, so expressing a cochain is a single reduction pass.
    """
    ops = field_ops(coeffs)
    faces = _faces_within(K, subset, degree + 1)
    index = {f: i for i, f in enumerate(faces)}
    gens: list[list] = []
    n_basis = 0
    for deg, lifted in _subset_classes(K, subset, coeffs):
        if deg != degree:
            continue
        col = [ops.zero] * len(faces)
        for f, val in lifted:
            col[index[f]] = val
        gens.append(col)
        n_basis += 1
    for g in _faces_within(K, subset, degree):
        col = [ops.zero] * len(faces)
        hit = False
        for f in faces:
            extra = f & ~g
            if extra and not extra & (extra - 1) and not g & ~f:
                pos = (f & (extra - 1)).bit_count()
                col[index[f]] = ops.neg(ops.one) if pos % 2 else ops.one
                hit = True
        if hit:
            gens.append(col)
    echelon: list[tuple[int, tuple, tuple]] = []
    width = len(gens)
    for g, vec in enumerate(gens):
        v = list(vec)
        combo = [ops.zero] * width
        combo[g] = ops.one
        for pivot, row, tvec in echelon:
            a = v[pivot]
            if a != ops.zero:
                v = [ops.sub(x, ops.mul(a, y)) for x, y in zip(v, row)]
                combo = [
                    ops.sub(x, ops.mul(a, y)) for x, y in zip(combo, tvec)
                ]
        lead = next((i for i, a in enumerate(v) if a != ops.zero), None)
        if lead is None:
            continue
        inv = ops.inv(v[lead])
        v = [ops.mul(inv, a) for a in v]
        combo = [ops.mul(inv, a) for a in combo]
        echelon.append((lead, tuple(v), tuple(combo)))
    echelon.sort(key=lambda e: e[0])
    return tuple(faces), n_basis, width, tuple(echelon)


def cochain_class_coords(
    K: SimplicialComplex, c: Cochain
) -> tuple[object, ...]:
    """Coordinates of a cocycle in the basis of H~^degree(K_subset).

    Raises InternalInvariant if the cochain is not a cocycle modulo
    coboundaries (a product failing to close up would be a sign bug).
    """
    ops = field_ops(c.coeffs)
    faces, n_basis, width, echelon = _component_solver(
        K, c.subset, c.degree, c.coeffs
    )
    if not faces:
        if c.values:
            raise InternalInvariant("cochain supported outside the complex")
        return ()
    index = {f: i for i, f in enumerate(faces)}
    v = [ops.zero] * len(faces)
    for f, val in c.values:
        if f not in index:
            raise InternalInvariant("cochain supported outside the complex")
        v[index[f]] = val
    combo = [ops.zero] * width
    for pivot, row, tvec in echelon:
        a = v[pivot]
        if a != ops.zero:
            v = [ops.sub(x, ops.mul(a, y)) for x, y in zip(v, row)]
            combo = [ops.add(x, ops.mul(a, y)) for x, y in zip(combo, tvec)]
    if any(a != ops.zero for a in v):
        raise InternalInvariant("product cochain is not closed")
    return tuple(combo[:n_basis])


@dataclass(frozen=True)
class ProductTable:
    """All nonzero pairwise products of the positive-degree basis classes.

    products holds (i, j, coords) with i <= j indexing `classes` and
    coords the nonzero coordinates (class index, scalar) of the product.
    """

    complex: SimplicialComplex
    coeffs: Coefficients
    classes: tuple[TorClass, ...]
    products: tuple[tuple[int, int, tuple[tuple[int, object], ...]], ...]

    @property
    def is_trivial(self) -> bool:
        return not self.products

    def witness(self):
        return self.products[0] if self.products else None

    def product_of(self, i: int, j: int):
        if i > j:
            i, j = j, i
        for a, b, coords in self.products:
            if (a, b) == (i, j):
                return coords
        return ()

    def to_dict(self) -> dict:
        return {
            "field": str(self.coeffs),
            "classes": [c.describe() for c in self.classes],
            "nonzero_products": [
                [i, j, [[t, str(v)] for t, v in coords]]
                for i, j, coords in self.products
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def product_table(
    K: SimplicialComplex,
    coeffs: Coefficients = RAT,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> ProductTable:
    """Multiply every disjoint-support pair of positive-degree classes.

    Pairs whose target component H~^d(K_{I u J}) is zero are skipped
    outright; the remaining products are resolved into basis coordinates.
    """
    basis = tor_basis(K, coeffs, max_vertices=max_vertices)
    classes = tuple(c for c in basis if c.subset)
    entries = tuple(_iter_nonzero_products(K, classes))
    return ProductTable(K, coeffs, classes, entries)


def _iter_nonzero_products(K: SimplicialComplex, classes):
    """Yield (i, j, coords) for the nonzero products among the classes.

    Pairs whose target component H~^d(K_{I u J}) is zero are skipped
    outright; the rest are resolved into basis coordinates.
    """
    by_component: dict[tuple[int, int], list[int]] = {}
    for t, c in enumerate(classes):
        by_component.setdefault((c.subset, c.degree), []).append(t)
    for i, x in enumerate(classes):
        for j in range(i, len(classes)):
            y = classes[j]
            if x.subset & y.subset:
                continue
            key = (x.subset | y.subset, x.degree + y.degree + 1)
            targets = by_component.get(key)
            if not targets:
                continue
            prod = multiply(K, x, y)
            if prod.is_zero:
                continue
            coords = cochain_class_coords(K, prod)
            nz = tuple(
                (targets[pos], val)
                for pos, val in enumerate(coords)
                if val != 0
            )
            if nz:
                yield i, j, nz


DEFAULT_GOLOD_FIELDS = (RAT, PRIME(2), PRIME(3), PRIME(5), PRIME(7))

CUP_CAVEAT = (
    "verdict covers cup products only; Massey-type operations are not"
    " examined"
)


@dataclass(frozen=True)
class GolodReport:
    verdict: str  # NON_GOLOD | CUP_GOLOD | UNKNOWN
    fields_checked: tuple[str, ...]
    witness: dict | None
    caveats: tuple[str, ...]

    @property
    def is_non_golod(self) -> bool:
        return self.verdict == "NON_GOLOD"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "fields_checked": list(self.fields_checked),
            "witness": self.witness,
            "caveats": list(self.caveats),
        }


def is_cup_golod(
    K: SimplicialComplex,
    fields=None,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> GolodReport:
    """Cup-level Golod test over a battery of fields.

    The default battery is Q and F_p for p in {2, 3, 5, 7}, extended by
    any torsion prime discovered in the subset table.  Torsion primes
    beyond MAX_FIELD_PRIME cannot be tested and downgrade a clean result
    to UNKNOWN.
    """
    table = hochster_table(K, INT, max_vertices=max_vertices)
    battery = list(fields) if fields is not None else list(DEFAULT_GOLOD_FIELDS)
    caveats = [CUP_CAVEAT]
    untestable = []
    if fields is None:
        have = {c.p for c in battery if c.kind == "prime"}
        for p in table.torsion_primes:
            if p in have:
                continue
            if p <= MAX_FIELD_PRIME:
                battery.append(PRIME(p))
            else:
                untestable.append(p)
    if untestable:
        caveats.append(
            "torsion primes beyond the field bound were not tested: "
            + ", ".join(map(str, untestable))
        )
    checked = []
    for field in battery:
        if not field.is_field:
            raise NotAField("the Golod battery must consist of fields")
        basis = tor_basis(K, field, max_vertices=max_vertices)
        classes = tuple(c for c in basis if c.subset)
        checked.append(str(field))
        found = next(_iter_nonzero_products(K, classes), None)
        if found is not None:
            i, j, coords = found
            witness = {
                "field": str(field),
                "x": classes[i].describe(),
                "y": classes[j].describe(),
                "product": [[t, str(v)] for t, v in coords],
            }
            return GolodReport(
                "NON_GOLOD", tuple(checked), witness, tuple(caveats)
            )
    verdict = "UNKNOWN" if untestable else "CUP_GOLOD"
    return GolodReport(verdict, tuple(checked), None, tuple(caveats))
