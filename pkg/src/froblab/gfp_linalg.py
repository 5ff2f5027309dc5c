"""Exact dense linear algebra over the prime field F_p.

Matrix entries are machine integers kept reduced to [0, p); p is checked
prime by trial division and bounded so that products fit in int64 with
plenty of slack.  All values are immutable and all operations are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapacityError, DimensionMismatchError

MAX_PRIME = 2**15
DEFAULT_ENUM_CAP = 2**16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if p >= MAX_PRIME:
        raise ValueError(f"modulus {p} exceeds the supported bound {MAX_PRIME}")
    return p


@dataclass(frozen=True)
class GfpMatrix:
    """Dense matrix over F_p, entries row-major and reduced to [0, p)."""

    p: int
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")
        if any(e < 0 or e >= self.p for e in self.entries):
            raise ValueError("entries must be reduced to [0, p)")

    @classmethod
    def from_rows(cls, p: int, rows: list[list[int]] | tuple, cols: int | None = None) -> "GfpMatrix":
        rows = [list(r) for r in rows]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("column count required for a matrix with no rows")
        flat = tuple(int(e) % p for r in rows for e in r)
        return cls(p, len(rows), cols, flat)

    @classmethod
    def from_array(cls, p: int, a: np.ndarray) -> "GfpMatrix":
        a = np.asarray(a, dtype=np.int64) % p
        return cls(p, a.shape[0], a.shape[1], tuple(int(x) for x in a.ravel()))

    @classmethod
    def identity(cls, p: int, n: int) -> "GfpMatrix":
        return cls.from_array(p, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "GfpMatrix":
        return cls(p, rows, cols, (0,) * (rows * cols))

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def transpose(self) -> "GfpMatrix":
        return GfpMatrix.from_array(self.p, self.array().T)


def _rref_inplace(a: np.ndarray, p: int) -> tuple[int, list[int]]:
    # Entries of `a` must already be reduced mod p; kept reduced throughout.
    rows, cols = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        touched = np.nonzero(a[:, c])[0]
        touched = touched[touched != r]
        if touched.size:
            a[touched] = (a[touched] - np.outer(a[touched, c], a[r])) % p
        pivots.append(c)
        r += 1
    return r, pivots


def rref(m: GfpMatrix) -> tuple[GfpMatrix, int, tuple[int, ...]]:
    """Reduced row-echelon form, rank, and pivot columns."""
    a = m.array()
    rank, pivots = _rref_inplace(a, m.p)
    return GfpMatrix.from_array(m.p, a), rank, tuple(pivots)


def rank(m: GfpMatrix) -> int:
    return rref(m)[1]


def reduce_vector(echelon: np.ndarray, pivots: tuple[int, ...], v: np.ndarray, p: int) -> np.ndarray:
    """Reduce v against rows of an rref matrix; the residual has zeros in pivot columns."""
    v = v % p
    for i, c in enumerate(pivots):
        f = int(v[c])
        if f:
            v = (v - f * echelon[i]) % p
    return v


def in_row_space(echelon: np.ndarray, pivots: tuple[int, ...], v: np.ndarray, p: int) -> bool:
    return not np.any(reduce_vector(echelon, pivots, v, p))


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_p^ambient_dim, stored as a canonical rref basis (no zero rows)."""

    p: int
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_prime(self.p)
        if len(self.basis) > self.ambient_dim:
            raise ValueError("more basis rows than ambient dimension")
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise ValueError("basis row length mismatch")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def zero(cls, p: int, ambient_dim: int) -> "Subspace":
        return cls(p, ambient_dim, ())

    @classmethod
    def full(cls, p: int, ambient_dim: int) -> "Subspace":
        rows = tuple(tuple(1 if j == i else 0 for j in range(ambient_dim)) for i in range(ambient_dim))
        return cls(p, ambient_dim, rows)

    @classmethod
    def from_vectors(cls, p: int, ambient_dim: int, vectors) -> "Subspace":
        vecs = [list(v) for v in vectors]
        if not vecs:
            return cls.zero(p, ambient_dim)
        a = np.array(vecs, dtype=np.int64) % p
        r, _ = _rref_inplace(a, p)
        return cls(p, ambient_dim, tuple(tuple(int(x) for x in row) for row in a[:r]))

    def _echelon(self) -> tuple[np.ndarray, tuple[int, ...]]:
        a = np.array(self.basis, dtype=np.int64).reshape(self.dim, self.ambient_dim)
        pivots = tuple(int(np.nonzero(row)[0][0]) for row in a)
        return a, pivots

    def contains_vector(self, v) -> bool:
        v = np.array(list(v), dtype=np.int64)
        if v.shape[0] != self.ambient_dim:
            raise DimensionMismatchError("vector length differs from ambient dimension")
        if self.dim == 0:
            return not np.any(v % self.p)
        a, pivots = self._echelon()
        return in_row_space(a, pivots, v, self.p)

    def contains(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(self.contains_vector(row) for row in other.basis)

    def vectors(self):
        """Iterate over all vectors of the subspace (desk scale only)."""
        for coeffs in itertools.product(range(self.p), repeat=self.dim):
            v = np.zeros(self.ambient_dim, dtype=np.int64)
            for c, row in zip(coeffs, self.basis):
                v = (v + c * np.array(row, dtype=np.int64)) % self.p
            yield tuple(int(x) for x in v)


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.p != b.p:
        raise DimensionMismatchError("subspaces over different primes")
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}"
        )


def kernel_basis(m: GfpMatrix) -> Subspace:
    """Basis of {v : m v = 0}; its dimension is cols - rank(m)."""
    r, rk, pivots = rref(m)
    a = r.array()
    free = [c for c in range(m.cols) if c not in pivots]
    vecs = []
    for f in free:
        v = np.zeros(m.cols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-a[i, f]) % m.p
        vecs.append(v)
    return Subspace.from_vectors(m.p, m.cols, vecs)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return Subspace.from_vectors(a.p, a.ambient_dim, list(a.basis) + list(b.basis))


def subspace_perp(a: Subspace) -> Subspace:
    """Orthogonal complement under the standard dot product."""
    m = GfpMatrix.from_rows(a.p, list(a.basis), cols=a.ambient_dim)
    return kernel_basis(m)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    # (U + V)^perp = U^perp ∩ V^perp and perp is an involution for the
    # standard (nondegenerate) pairing, so intersect via complements.
    _check_compatible(a, b)
    return subspace_perp(subspace_sum(subspace_perp(a), subspace_perp(b)))


def enumerate_subspaces(p: int, dim: int, cap: int = DEFAULT_ENUM_CAP):
    """Yield every subspace of F_p^dim exactly once, via rref normal forms."""
    check_prime(p)
    if p**dim > cap:
        raise CapacityError(f"p^dim = {p**dim} exceeds enumeration cap {cap}")
    for k in range(dim + 1):
        for pivots in itertools.combinations(range(dim), k):
            free_pos = [
                (i, j)
                for i in range(k)
                for j in range(pivots[i] + 1, dim)
                if j not in pivots
            ]
            for values in itertools.product(range(p), repeat=len(free_pos)):
                rows = [[0] * dim for _ in range(k)]
                for i in range(k):
                    rows[i][pivots[i]] = 1
                for (i, j), v in zip(free_pos, values):
                    rows[i][j] = v
                yield Subspace(p, dim, tuple(tuple(r) for r in rows))


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def num_subspaces(p: int, n: int) -> int:
    """Total number of subspaces of F_p^n (sum of Gaussian binomials)."""
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


@lru_cache(maxsize=None)
def subspace_lattice(p: int, dim: int, cap: int = DEFAULT_ENUM_CAP) -> tuple[Subspace, ...]:
    """All subspaces of F_p^dim as a cached tuple, zero subspace first."""
    return tuple(enumerate_subspaces(p, dim, cap))
