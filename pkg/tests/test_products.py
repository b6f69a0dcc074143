import json

import pytest

from momangle import (
    INT,
    PRIME,
    RAT,
    Cochain,
    FieldMismatch,
    InternalInvariant,
    NotAField,
    TooManyVertices,
    disjoint_points,
    from_facets,
    is_cup_golod,
    mask_of,
    multiply,
    polygon,
    product_table,
    simplex,
    stacked_sphere,
    tor_basis,
)
from momangle.linalg import field_ops
from momangle.products import CUP_CAVEAT, cochain_class_coords

from helpers import RP2_FACETS, is_cocycle

PYRAMID = from_facets(5, [(1, 2, 5), (2, 3, 5), (3, 4, 5), (1, 4, 5)])


def _positive_classes(K, coeffs):
    return [c for c in tor_basis(K, coeffs) if c.subset]


def test_tor_basis_square():
    basis = tor_basis(polygon(4), RAT)
    assert len(basis) == 4  # unit + two 3-classes + the top class
    unit = basis[0]
    assert unit.subset == 0 and unit.total_degree == 0
    degrees = sorted(c.total_degree for c in basis)
    assert degrees == [0, 3, 3, 6]
    # deterministic output
    assert basis == tor_basis(polygon(4), RAT)


def test_tor_basis_counts_match_table(random_corpus):
    from momangle import hochster_table

    for K in [polygon(5), PYRAMID, *random_corpus[:6]]:
        for coeffs in (RAT, PRIME(2)):
            classes = tor_basis(K, coeffs)
            table = hochster_table(K, INT).over(coeffs)
            assert len(classes) == sum(table.betti), K


def test_tor_basis_validation():
    with pytest.raises(NotAField):
        tor_basis(polygon(4), INT)
    with pytest.raises(TooManyVertices):
        tor_basis(polygon(6), max_vertices=5)


def test_square_single_product():
    pt = product_table(polygon(4), RAT)
    assert len(pt.products) == 1
    ((i, j, coords),) = pt.products
    x, y = pt.classes[i], pt.classes[j]
    assert {x.total_degree, y.total_degree} == {3}
    assert x.subset | y.subset == mask_of([1, 2, 3, 4])
    ((target, val),) = coords
    assert pt.classes[target].total_degree == 6
    assert val != 0
    assert pt.product_of(j, i) == coords  # symmetric lookup
    assert pt.product_of(0, 0) == ()
    assert not pt.is_trivial
    assert pt.witness() == (i, j, coords)


def test_pentagon_products():
    pt = product_table(polygon(5), RAT)
    assert len(pt.products) == 5
    degs = {
        tuple(
            sorted(
                (pt.classes[i].total_degree, pt.classes[j].total_degree)
            )
        )
        for i, j, _ in pt.products
    }
    assert degs == {(3, 4)}


def test_multiply_overlap_is_zero():
    classes = _positive_classes(polygon(4), RAT)
    x = classes[0]
    assert multiply(polygon(4), x, x).is_zero


def test_multiply_field_mismatch():
    xq = _positive_classes(polygon(4), RAT)[0]
    x2 = _positive_classes(polygon(4), PRIME(2))[0]
    with pytest.raises(FieldMismatch):
        multiply(polygon(4), xq, x2)


def test_graded_commutativity_samples(random_corpus):
    for K in [polygon(4), polygon(5), PYRAMID, *random_corpus[:4]]:
        for coeffs in (RAT, PRIME(2)):
            ops = field_ops(coeffs)
            classes = _positive_classes(K, coeffs)
            for i, x in enumerate(classes):
                for y in classes[i:]:
                    xy = multiply(K, x, y)
                    yx = multiply(K, y, x)
                    flip = (x.total_degree * y.total_degree) % 2
                    want = tuple(
                        (f, ops.neg(v) if flip else v) for f, v in xy.values
                    )
                    assert yx.values == want, (K, x, y)


def test_associativity_samples(random_corpus):
    for K in [polygon(5), disjoint_points(5), *random_corpus[:3]]:
        classes = _positive_classes(K, RAT)
        n = len(classes)
        for i in range(n):
            for j in range(i + 1, n):
                if classes[i].subset & classes[j].subset:
                    continue
                xy = multiply(K, classes[i], classes[j])
                for k in range(j + 1, n):
                    z = classes[k]
                    if z.subset & (classes[i].subset | classes[j].subset):
                        continue
                    left = multiply(K, xy, z)
                    right = multiply(
                        K, classes[i], multiply(K, classes[j], z)
                    )
                    assert left.values == right.values


def test_products_are_cocycles_samples(random_corpus):
    for K in [polygon(4), polygon(6), PYRAMID, *random_corpus[:4]]:
        for coeffs in (RAT, PRIME(3)):
            p = coeffs.p
            classes = _positive_classes(K, coeffs)
            for i, x in enumerate(classes):
                for y in classes[i:]:
                    prod = multiply(K, x, y)
                    if not prod.is_zero:
                        assert is_cocycle(K, prod, p), (K, x, y)


def test_class_coords_roundtrip():
    classes = _positive_classes(polygon(4), RAT)
    for c in classes:
        coords = cochain_class_coords(polygon(4), c.to_cochain())
        want = tuple(
            1 if t == c.index else 0 for t in range(len(coords))
        )
        assert tuple(coords) == want


def test_class_coords_rejects_non_cocycle():
    # a 0-cochain on an edge with unequal endpoint values is not closed
    bad = Cochain(mask_of([1, 2]), 0, RAT, ((mask_of([1]), 1),))
    with pytest.raises(InternalInvariant):
        cochain_class_coords(polygon(4), bad)


def test_product_table_json():
    data = json.loads(product_table(polygon(4), RAT).to_json())
    assert data["field"] == "q"
    assert len(data["classes"]) == 3
    assert len(data["nonzero_products"]) == 1


def test_golod_verdicts():
    assert is_cup_golod(simplex(3)).verdict == "CUP_GOLOD"
    path4 = from_facets(4, [(1, 2), (2, 3), (3, 4)])
    assert is_cup_golod(path4).verdict == "CUP_GOLOD"
    rep = is_cup_golod(polygon(4))
    assert rep.verdict == "NON_GOLOD"
    assert rep.is_non_golod
    assert rep.witness is not None
    assert rep.witness["x"]["total_degree"] == 3
    assert rep.fields_checked == ("q",)  # first field already witnesses
    assert CUP_CAVEAT in rep.caveats


def test_golod_battery():
    rep = is_cup_golod(simplex(2))
    assert rep.verdict == "CUP_GOLOD"
    assert rep.fields_checked == ("q", "f2", "f3", "f5", "f7")
    # torsion primes already in the battery are not added twice
    rep2 = is_cup_golod(from_facets(6, RP2_FACETS))
    assert rep2.fields_checked[0] == "q"
    assert len(rep2.fields_checked) <= 5


def test_golod_explicit_fields():
    rep = is_cup_golod(polygon(5), fields=[PRIME(2)])
    assert rep.verdict == "NON_GOLOD"
    assert rep.fields_checked == ("f2",)
    with pytest.raises(NotAField):
        is_cup_golod(polygon(4), fields=[INT])


def test_golod_stacked_spheres():
    assert is_cup_golod(stacked_sphere(2, 1)).verdict == "NON_GOLOD"
    assert is_cup_golod(stacked_sphere(2, 0)).verdict == "CUP_GOLOD"


def test_golod_report_dict():
    data = is_cup_golod(polygon(4)).to_dict()
    assert data["verdict"] == "NON_GOLOD"
    assert data["witness"]["field"] == "q"
    assert data["caveats"]
