"""Finite abstract simplicial complexes and reduced cohomology over F_p.

Faces are sorted tuples of vertex labels.  The empty face () belongs to
every nonvoid complex and is the unique face of dimension -1.  Two
degenerate objects are kept distinct: the empty complex {()} (whose
degree -1 reduced cohomology is K) and the void complex with no faces
at all, which only ever arises as a sentinel and has zero cohomology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NotAFaceError, ParseError
from .gfp_linalg import GfpMatrix, Subspace, _rref_inplace, check_prime, kernel_basis

Face = tuple[int, ...]


def _normalize_facets(facets) -> tuple[Face, ...]:
    cleaned = []
    for f in facets:
        t = tuple(sorted(set(int(v) for v in f)))
        cleaned.append(t)
    cleaned = sorted(set(cleaned), key=lambda t: (len(t), t))
    # drop facets contained in another (antichain reduction)
    kept = [
        f
        for f in cleaned
        if not any(set(f) < set(g) for g in cleaned)
    ]
    return tuple(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices 0..n_vertices-1 with a canonical antichain of facets.

    facets == () encodes the void complex; facets == ((),) encodes the
    empty complex {()}.  Vertices not covered by any facet are permitted
    on internally built complexes (links keep ambient labels) but are
    rejected by from_facets.
    """

    n_vertices: int
    facets: tuple[Face, ...]

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError("negative vertex count")
        if self.facets != _normalize_facets(self.facets):
            raise ValueError("facets are not in canonical antichain form")
        for f in self.facets:
            for v in f:
                if v < 0 or v >= self.n_vertices:
                    raise ValueError(f"vertex label {v} out of range")

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Max facet dimension; -1 for {()} and -2 for the void complex."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def is_face(self, sigma) -> bool:
        s = frozenset(sigma)
        return not self.is_void and any(s <= set(f) for f in self.facets)


def make_complex(n_vertices: int, facets) -> SimplicialComplex:
    """Normalize and build; uncovered vertices allowed (internal use)."""
    return SimplicialComplex(n_vertices, _normalize_facets(facets))


def from_facets(n_vertices: int, facets) -> SimplicialComplex:
    """Parse-time constructor: validates labels and rejects isolated ones."""
    norm = _normalize_facets(facets)
    covered = set()
    for f in norm:
        for v in f:
            if v < 0 or v >= n_vertices:
                raise ParseError(f"vertex label {v} out of range [0, {n_vertices})")
            covered.add(v)
    missing = sorted(set(range(n_vertices)) - covered)
    if missing:
        raise ParseError(f"vertices {missing} belong to no facet")
    return SimplicialComplex(n_vertices, norm)


def parse_facets_text(text: str) -> SimplicialComplex:
    """Facet-list format: one facet per line, whitespace-separated labels,
    lines starting with '#' ignored."""
    facets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            facets.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not facets:
        raise ParseError("no facets found")
    n = 1 + max(v for f in facets for v in f)
    return from_facets(n, facets)


@lru_cache(maxsize=None)
def faces(c: SimplicialComplex) -> dict[int, tuple[Face, ...]]:
    """All faces grouped by dimension, including () at dimension -1."""
    if c.is_void:
        return {}
    seen: set[Face] = set()
    for f in c.facets:
        for k in range(len(f) + 1):
            seen.update(itertools.combinations(f, k))
    out: dict[int, list[Face]] = {}
    for s in seen:
        out.setdefault(len(s) - 1, []).append(s)
    return {d: tuple(sorted(fs)) for d, fs in sorted(out.items())}


def all_faces(c: SimplicialComplex) -> tuple[Face, ...]:
    return tuple(f for d in sorted(faces(c)) for f in faces(c)[d])


def link(c: SimplicialComplex, sigma) -> SimplicialComplex:
    """link(sigma): faces disjoint from sigma whose union with it is a face.

    link(()) is the complex itself; the link of a facet is {()}.
    """
    s = tuple(sorted(set(sigma)))
    if not c.is_face(s):
        raise NotAFaceError(f"{s} is not a face")
    if not s:
        return c
    lk_facets = []
    for f in c.facets:
        if set(s) <= set(f):
            lk_facets.append(tuple(v for v in f if v not in s))
    return make_complex(c.n_vertices, lk_facets)


def cone(c: SimplicialComplex) -> SimplicialComplex:
    """Add a fresh apex vertex to every facet."""
    apex = c.n_vertices
    if c.is_void:
        return SimplicialComplex(apex + 1, ((apex,),))
    return make_complex(apex + 1, [f + (apex,) for f in c.facets])


def relabel(c: SimplicialComplex, perm) -> SimplicialComplex:
    """Apply a vertex permutation (perm[v] = new label)."""
    return make_complex(c.n_vertices, [tuple(perm[v] for v in f) for f in c.facets])


def is_cone_complex(c: SimplicialComplex) -> bool:
    if c.is_void or not c.facets[0]:
        return False
    common = set(range(c.n_vertices))
    for f in c.facets:
        common &= set(f)
    return bool(common)


@dataclass(frozen=True)
class CohomologyProfile:
    """Reduced cohomology dimensions over F_p; only nonzero degrees stored."""

    p: int
    dims: tuple[tuple[int, int], ...]
    cocycles: tuple[tuple[int, GfpMatrix], ...] | None = None

    def dim_at(self, j: int) -> int:
        return dict(self.dims).get(j, 0)

    @property
    def total(self) -> int:
        return sum(d for _, d in self.dims)


def coboundary_matrix(c: SimplicialComplex, j: int, p: int) -> np.ndarray:
    """Matrix of the reduced coboundary C^j -> C^{j+1}; rows indexed by
    (j+1)-faces, columns by j-faces, sign (-1)^k for inserting the new
    vertex at position k of the sorted target face."""
    fs = faces(c)
    src = fs.get(j, ())
    tgt = fs.get(j + 1, ())
    idx = {f: i for i, f in enumerate(src)}
    m = np.zeros((len(tgt), len(src)), dtype=np.int64)
    for r, tau in enumerate(tgt):
        for k in range(len(tau)):
            sigma = tau[:k] + tau[k + 1 :]
            ci = idx.get(sigma)
            if ci is not None:
                m[r, ci] = (m[r, ci] + (-1) ** k) % p
    return m


@lru_cache(maxsize=None)
def reduced_cohomology(c: SimplicialComplex, p: int, with_cocycles: bool = False) -> CohomologyProfile:
    """Reduced simplicial cohomology dimensions over F_p.

    Computed as kernel/image ranks of the coboundary maps of the
    augmented cochain complex (the empty face sits in degree -1).  The
    void complex has all dims zero; {()} has exactly dims[-1] = 1.
    """
    check_prime(p)
    fs = faces(c)
    if not fs:
        return CohomologyProfile(p, ())
    degrees = sorted(fs)
    ranks: dict[int, int] = {}
    kernels: dict[int, Subspace] = {}
    for j in degrees:
        m = coboundary_matrix(c, j, p)
        a = m.copy()
        r, pivots = _rref_inplace(a, p)
        ranks[j] = r
        if with_cocycles:
            kernels[j] = kernel_basis(GfpMatrix.from_array(p, m))
    dims = []
    cocycles = []
    for j in degrees:
        n_j = len(fs[j])
        h = (n_j - ranks[j]) - ranks.get(j - 1, 0)
        if h:
            dims.append((j, h))
            if with_cocycles:
                basis = kernels[j]
                cocycles.append((j, GfpMatrix.from_rows(p, list(basis.basis), cols=basis.ambient_dim)))
    return CohomologyProfile(p, tuple(dims), tuple(cocycles) if with_cocycles else None)


def boundary_homology_dims(c: SimplicialComplex, p: int) -> dict[int, int]:
    """Reduced homology dimensions via boundary-matrix ranks (cross-check route)."""
    check_prime(p)
    fs = faces(c)
    if not fs:
        return {}
    degrees = sorted(fs)
    ranks = {}
    for j in degrees:
        m = coboundary_matrix(c, j, p).T  # boundary of (j+1)-chains
        a = m.copy()
        r, _ = _rref_inplace(a, p)
        ranks[j] = r
    out = {}
    for j in degrees:
        h = (len(fs[j]) - ranks.get(j - 1, 0)) - ranks[j]
        if h:
            out[j] = h
    return out


def euler_characteristic_faces(c: SimplicialComplex) -> int:
    """Alternating face count including the empty face with sign -1."""
    return sum((-1) ** d * len(fs) for d, fs in faces(c).items())
