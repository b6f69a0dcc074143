"""Cohomology of the moment-angle complex Z_K via full subcomplexes.

H^k(Z_K) splits as the direct sum over vertex subsets I of the reduced
cohomology of K_I in degree k - |I| - 1.  The table below records one
homology profile per subset with nonzero contribution; everything else
(total Betti numbers, the bigraded and Tor-style gradings, torsion
primes) is read off from it.

The empty subset contributes the unit in degree 0, so b_0 = 1 and
b_1 = b_2 = 0 for every complex.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .complexes import SimplicialComplex, vertices_of
from .errors import BadParams, TooManyVertices
from .linalg import (
    INT,
    Coefficients,
    HomologyProfile,
    reduced_homology,
)

DEFAULT_MAX_VERTICES = 20


@dataclass(frozen=True)
class HochsterTable:
    """Per-subset reduced homology of the full subcomplexes of K.

    subsets holds (mask, profile) pairs for the subsets with nonzero
    reduced homology, in increasing mask order; the cohomology of Z_K
    in degree |I| + d + 1 collects the degree-d entries.
    """

    complex: SimplicialComplex
    coeffs: Coefficients
    subsets: tuple[tuple[int, HomologyProfile], ...]

    @property
    def m(self) -> int:
        return self.complex.m

    @property
    def top_degree(self) -> int:
        """Degree of the top cohomology of Z_K when K triangulates a sphere."""
        return self.complex.m + self.complex.dim + 1

    def profile_of(self, subset_mask: int) -> HomologyProfile:
        for mask, prof in self.subsets:
            if mask == subset_mask:
                return prof
        return HomologyProfile(self.coeffs, ())

    @cached_property
    def bigraded(self) -> dict[tuple[int, int], int]:
        """Ranks keyed by (|I|, d): subset size and reduced degree."""
        out: dict[tuple[int, int], int] = {}
        for mask, prof in self.subsets:
            s = mask.bit_count()
            for d, r in prof.ranks:
                key = (s, d)
                out[key] = out.get(key, 0) + r
        return out

    @cached_property
    def betti(self) -> tuple[int, ...]:
        """Betti numbers of Z_K in degrees 0..m+dim+1 (free ranks over Z)."""
        top = self.top_degree
        out = [0] * (top + 1)
        for (s, d), r in self.bigraded.items():
            out[s + d + 1] += r
        return tuple(out)

    @cached_property
    def tor_bigraded(self) -> dict[tuple[int, int], int]:
        """The same ranks in Tor grading (-i, 2j): i = |I|-d-1, j = |I|."""
        return {
            (d + 1 - s, 2 * s): r for (s, d), r in self.bigraded.items()
        }

    @cached_property
    def torsion_primes(self) -> tuple[int, ...]:
        primes: set[int] = set()
        for _, prof in self.subsets:
            primes |= prof.torsion_primes()
        return tuple(sorted(primes))

    def has_torsion(self) -> bool:
        return any(prof.torsion for _, prof in self.subsets)

    def over(self, coeffs: Coefficients) -> "HochsterTable":
        """Derive the table over a field from an integral table."""
        if self.coeffs.kind != "int":
            raise BadParams("field tables derive from an integral table")
        if coeffs.kind == "int":
            return self
        subsets = []
        for mask, prof in self.subsets:
            fp = prof.over_field(coeffs)
            if not fp.is_trivial:
                subsets.append((mask, fp))
        return HochsterTable(self.complex, coeffs, tuple(subsets))

    def to_dict(self) -> dict:
        d: dict = {
            "coeffs": str(self.coeffs),
            "vertices": self.m,
            "dim": self.complex.dim,
            "betti": list(self.betti),
            "bigraded": [
                [s, deg, r]
                for (s, deg), r in sorted(self.bigraded.items())
            ],
            "tor_bigraded": [
                [i, j, r]
                for (i, j), r in sorted(self.tor_bigraded.items())
            ],
            "torsion_primes": list(self.torsion_primes),
        }
        return d

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _subset_profiles(K: SimplicialComplex, masks, coeffs: Coefficients):
    out = []
    for mask in masks:
        prof = reduced_homology(
            K.full_subcomplex(vertices_of(mask)), coeffs
        )
        if not prof.is_trivial:
            out.append((mask, prof))
    return out


def hochster_table(
    K: SimplicialComplex,
    coeffs: Coefficients = INT,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    jobs: int = 1,
) -> HochsterTable:
    """Reduced homology of every full subcomplex of K, assembled per subset.

    Walks all 2^m vertex subsets, so the vertex count is capped by
    max_vertices (raising TooManyVertices beyond it).  jobs > 1 spreads
    the subsets over worker processes.
    """
    if K.m > max_vertices:
        raise TooManyVertices(
            f"{K.m} vertices exceed the cap of {max_vertices} "
            f"(2^m subsets are enumerated)",
            m=K.m,
            cap=max_vertices,
        )
    if jobs > 1 and K.m >= 10:
        masks = range(1 << K.m)
        chunks = [list(masks)[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                _pool_worker, [(K, chunk, coeffs) for chunk in chunks]
            )
            found = [pair for part in parts for pair in part]
        found.sort(key=lambda pair: pair[0])
        return HochsterTable(K, coeffs, tuple(found))
    return _sequential_table(K, coeffs)


@lru_cache(maxsize=10_000)
def _sequential_table(K: SimplicialComplex, coeffs: Coefficients) -> HochsterTable:
    found = _subset_profiles(K, range(1 << K.m), coeffs)
    found.sort(key=lambda pair: pair[0])
    return HochsterTable(K, coeffs, tuple(found))


def _pool_worker(args):
    return _subset_profiles(*args)


def poincare_series(table: HochsterTable) -> tuple[int, ...]:
    """Coefficients of the Poincare polynomial of H*(Z_K), degree 0 up."""
    return table.betti


def format_poincare(betti) -> str:
    terms = []
    for k, b in enumerate(betti):
        if not b:
            continue
        if k == 0:
            terms.append(str(b))
        elif b == 1:
            terms.append(f"t^{k}")
        else:
            terms.append(f"{b}*t^{k}")
    return " + ".join(terms) if terms else "0"


def duality_check(table: HochsterTable) -> bool:
    """Whether the Betti numbers are palindromic up to degree m + dim + 1."""
    b = table.betti
    n = len(b) - 1
    return all(b[k] == b[n - k] for k in range(n + 1))
