"""Finite graded truncation models of the local cohomology modules of a
face ring, with their variable action and Frobenius action.

A model is determined by the prime p, the ambient variable count, a
cohomological index, a depth bound T, and the isotypic summands
(nu, multiplicity) from the decomposition table.  Basis elements are
triples (nu, class_index, w) where w records the magnitudes of strictly
negative exponents supported exactly on nu; the window holds magnitudes
in [1, T] and Frobenius maps it into the depth-p*T extension.

Action rules on a basis element:
  * x_j with j outside nu kills it;
  * x_j at magnitude 1 (exponent -1) kills it;
  * otherwise x_j lowers the magnitude by one;
  * F scales every magnitude by p (and is the identity on the
    multiplicity coordinate, the coefficient field being F_p).

Everything downstream of these rules (stable-span closure, brute-force
submodule enumeration, the anti-nilpotence check, annihilators) is
computed over graded profiles: assignments of a subspace of the
multiplicity space to each multidegree in the working box [-pT, 0]^n.
The enumeration searches graded profiles only; the semisimple graded
structure of the models justifies this, and reports flag it as a scope
condition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .errors import CapacityError, UnsupportedInputError
from .gfp_linalg import (
    DEFAULT_ENUM_CAP,
    Subspace,
    check_prime,
    num_subspaces,
    subspace_lattice,
    subspace_sum,
)
from .local_cohomology import decomposition
from .polyfp import MonomialIdeal
from .simplicial import Face, SimplicialComplex

MultiDegree = tuple[int, ...]


class BasisElement(NamedTuple):
    nu: Face
    class_index: int
    w: tuple[int, ...]  # magnitudes of the negative exponents; support == nu


Element = dict[BasisElement, int]


@dataclass(frozen=True)
class FModuleTruncation:
    """Finite window of one graded local cohomology module.

    zero_frobenius replaces the Frobenius action by the zero map; it
    exists purely as a diagnostic fixture for the anti-nilpotence check.
    """

    p: int
    n_vars: int
    index: int
    depth: int
    summands: tuple[tuple[Face, int], ...]
    zero_frobenius: bool = False

    def __post_init__(self):
        check_prime(self.p)
        if self.depth < 1:
            raise ValueError("depth bound must be positive")
        for nu, m in self.summands:
            if m < 1 or any(v < 0 or v >= self.n_vars for v in nu):
                raise ValueError("bad summand")

    @property
    def extension_depth(self) -> int:
        return self.p * self.depth

    def multiplicity(self, nu) -> int:
        nu = tuple(sorted(nu))
        for s, m in self.summands:
            if s == nu:
                return m
        return 0

    def basis(self, depth: int | None = None) -> list[BasisElement]:
        """Window basis (or the depth-p*T extension when depth is given)."""
        bound = self.depth if depth is None else depth
        out = []
        for nu, m in self.summands:
            for w_on_nu in itertools.product(range(1, bound + 1), repeat=len(nu)):
                w = [0] * self.n_vars
                for v, mag in zip(nu, w_on_nu):
                    w[v] = mag
                for k in range(m):
                    out.append(BasisElement(nu, k, tuple(w)))
        return sorted(out)

    def is_zero_module(self) -> bool:
        return not self.summands


def build_truncation(
    c: SimplicialComplex,
    p: int,
    i: int,
    depth: int,
    nu_filter=None,
    zero_frobenius: bool = False,
) -> FModuleTruncation:
    """Model of H^i over the window of exponent magnitudes [1, depth].

    nu_filter optionally restricts to a subset of faces, giving the
    sub-model spanned by those isotypic blocks.
    """
    table = decomposition(c, p)
    if i < 0 or i > c.dim + 1:
        raise ValueError(f"index {i} out of range [0, {c.dim + 1}]")
    allowed = None if nu_filter is None else {tuple(sorted(nu)) for nu in nu_filter}
    summands = tuple(
        (nu, m)
        for ei, nu, m in table.entries
        if ei == i and (allowed is None or nu in allowed)
    )
    return FModuleTruncation(p, c.n_vertices, i, depth, summands, zero_frobenius)


def degree_of(b: BasisElement) -> MultiDegree:
    return tuple(-m for m in b.w)


def apply_x(t: FModuleTruncation, j: int, v: Element) -> Element:
    """Multiplication by x_j, extended linearly."""
    out: dict[BasisElement, int] = {}
    for b, c in v.items():
        if j not in b.nu:
            continue
        mag = b.w[j]
        if mag == 1:
            continue
        w = list(b.w)
        w[j] = mag - 1
        nb = BasisElement(b.nu, b.class_index, tuple(w))
        out[nb] = (out.get(nb, 0) + c) % t.p
    return {b: c for b, c in out.items() if c}


def apply_monomial(t: FModuleTruncation, exponents, v: Element) -> Element:
    out = v
    for j, e in enumerate(exponents):
        for _ in range(e):
            out = apply_x(t, j, out)
    return out


def apply_F(t: FModuleTruncation, v: Element) -> Element:
    """Frobenius: magnitudes scale by p, coefficients are fixed (prime field)."""
    if t.zero_frobenius:
        return {}
    out: dict[BasisElement, int] = {}
    for b, c in v.items():
        nb = BasisElement(b.nu, b.class_index, tuple(m * t.p for m in b.w))
        out[nb] = (out.get(nb, 0) + c) % t.p
    return {b: c for b, c in out.items() if c}


@dataclass(frozen=True)
class Profile:
    """Graded profile: one subspace of the multiplicity space for each
    multidegree of the working box (zero subspaces omitted).

    stabilized records whether the assignment depends on the multidegree
    only through its negative support; patterns then hold the common
    subspace per face."""

    assignments: tuple[tuple[MultiDegree, Subspace], ...]
    stabilized: bool
    patterns: tuple[tuple[Face, Subspace], ...]

    def subspace_at(self, theta: MultiDegree, ambient: int, p: int) -> Subspace:
        for th, s in self.assignments:
            if th == theta:
                return s
        return Subspace.zero(p, ambient)

    @property
    def is_zero(self) -> bool:
        return not self.assignments

    def contains(self, other: "Profile", dims: dict, p: int) -> bool:
        for theta, ambient in dims.items():
            if not self.subspace_at(theta, ambient, p).contains(
                other.subspace_at(theta, ambient, p)
            ):
                return False
        return True


def _neg_support(theta: MultiDegree) -> Face:
    return tuple(i for i, v in enumerate(theta) if v < 0)


def lattice_points(t: FModuleTruncation) -> tuple[dict[MultiDegree, int], list[MultiDegree]]:
    """Multidegrees of the working box [-pT, 0]^n whose negative support
    carries a summand, with the multiplicity-space dimension at each;
    ordered shallow-first so constraints bind early during search."""
    nus = {nu: m for nu, m in t.summands}
    bound = t.extension_depth
    points: dict[MultiDegree, int] = {}
    for nu, m in nus.items():
        free = [v for v in nu]
        for mags in itertools.product(range(1, bound + 1), repeat=len(free)):
            theta = [0] * t.n_vars
            for v, mag in zip(free, mags):
                theta[v] = -mag
            points[tuple(theta)] = m
    order = sorted(points, key=lambda th: (-sum(th), th))
    return points, order


def _constraints(t: FModuleTruncation, points: dict[MultiDegree, int]):
    """Inclusion constraints U_src <= U_tgt induced by the action rules.

    x_j gives one for every surviving step (exponent below -1); F gives
    one whenever p*theta stays inside the box.  Both maps are the
    identity on multiplicity coordinates.
    """
    cons: list[tuple[MultiDegree, MultiDegree]] = []
    for theta in points:
        for j in range(t.n_vars):
            if theta[j] <= -2:
                tgt = list(theta)
                tgt[j] += 1
                tgt = tuple(tgt)
                if tgt in points:
                    cons.append((theta, tgt))
        if not t.zero_frobenius:
            ptheta = tuple(t.p * v for v in theta)
            if theta != ptheta and all(v >= -t.extension_depth for v in ptheta):
                if ptheta in points:
                    cons.append((theta, ptheta))
    return cons


def _profile_from_assignment(points, assignment) -> Profile:
    nonzero = tuple(
        (theta, s) for theta, s in sorted(assignment.items()) if s.dim > 0
    )
    by_nu: dict[Face, set] = {}
    for theta in points:
        by_nu.setdefault(_neg_support(theta), set()).add(assignment[theta])
    stabilized = all(len(vals) == 1 for vals in by_nu.values())
    patterns = ()
    if stabilized:
        patterns = tuple(
            (nu, next(iter(vals)))
            for nu, vals in sorted(by_nu.items())
            if next(iter(vals)).dim > 0
        )
    return Profile(nonzero, stabilized, patterns)


def search_space_size(t: FModuleTruncation) -> int:
    points, _ = lattice_points(t)
    size = 1
    for theta, m in points.items():
        size *= num_subspaces(t.p, m)
    return size


def enumerate_f_stable_submodules(
    t: FModuleTruncation, cap: int = DEFAULT_ENUM_CAP
) -> tuple[int, list[Profile]]:
    """Brute-force search over all graded profiles compatible with the
    variable action inside the box and with Frobenius wherever its image
    stays inside the box.  Degrees outside the box are unconstrained,
    so no genuine submodule is ever rejected."""
    points, order = lattice_points(t)
    if search_space_size(t) > cap:
        raise CapacityError(
            f"profile search space {search_space_size(t)} exceeds cap {cap}"
        )
    if not points:
        return 1, [Profile((), True, ())]
    cons = _constraints(t, points)
    cons_by_point: dict[MultiDegree, list[tuple[MultiDegree, MultiDegree]]] = {
        theta: [] for theta in points
    }
    position = {theta: k for k, theta in enumerate(order)}
    for src, tgt in cons:
        later = src if position[src] >= position[tgt] else tgt
        cons_by_point[later].append((src, tgt))

    profiles: list[Profile] = []
    assignment: dict[MultiDegree, Subspace] = {}

    def dfs(k: int):
        if k == len(order):
            profiles.append(_profile_from_assignment(points, assignment))
            return
        theta = order[k]
        for s in subspace_lattice(t.p, points[theta]):
            assignment[theta] = s
            ok = True
            for src, tgt in cons_by_point[theta]:
                if src in assignment and tgt in assignment:
                    if not assignment[tgt].contains(assignment[src]):
                        ok = False
                        break
            if ok:
                dfs(k + 1)
        del assignment[theta]

    dfs(0)
    return len(profiles), profiles


def f_stable_span(t: FModuleTruncation, generators: list[Element]) -> Profile:
    """Smallest graded profile containing the generators and closed under
    the variable action inside the box and under F into the box."""
    points, _ = lattice_points(t)
    spans: dict[MultiDegree, Subspace] = {
        theta: Subspace.zero(t.p, m) for theta, m in points.items()
    }

    def vector_of(el: Element) -> tuple[MultiDegree, tuple[int, ...]]:
        degs = {degree_of(b) for b in el}
        if len(degs) != 1:
            raise UnsupportedInputError("generators must be homogeneous")
        theta = degs.pop()
        if theta not in points:
            raise UnsupportedInputError(f"degree {theta} outside the model")
        vec = [0] * points[theta]
        for b, c in el.items():
            vec[b.class_index] = c
        return theta, tuple(vec)

    queue: list[tuple[MultiDegree, tuple[int, ...]]] = []

    def add(theta: MultiDegree, vec: tuple[int, ...]):
        if spans[theta].contains_vector(vec):
            return
        spans[theta] = subspace_sum(
            spans[theta], Subspace.from_vectors(t.p, points[theta], [vec])
        )
        queue.append((theta, vec))

    for g in generators:
        if g:
            add(*vector_of(g))
    while queue:
        theta, vec = queue.pop()
        for j in range(t.n_vars):
            if theta[j] <= -2:
                tgt = tuple(v + 1 if k == j else v for k, v in enumerate(theta))
                if tgt in points:
                    add(tgt, vec)
        if not t.zero_frobenius:
            ptheta = tuple(t.p * v for v in theta)
            if ptheta != theta and ptheta in points:
                add(ptheta, vec)
    assignment = {theta: spans[theta] for theta in points}
    return _profile_from_assignment(points, assignment)


class AntiNilpotenceWitness(NamedTuple):
    smaller: Profile
    larger: Profile
    theta: MultiDegree


def check_antinilpotent(
    t: FModuleTruncation, cap: int = DEFAULT_ENUM_CAP
) -> tuple[bool, AntiNilpotenceWitness | None]:
    """For every nested pair of enumerated stable profiles, Frobenius must
    act injectively on the quotient over the box interior (the degrees
    whose image under F stays inside the box)."""
    points, _ = lattice_points(t)
    _, profiles = enumerate_f_stable_submodules(t, cap)
    interior = [
        theta
        for theta in points
        if all(t.p * v >= -t.extension_depth for v in theta)
    ]
    for small in profiles:
        for large in profiles:
            if small == large or not large.contains(small, points, t.p):
                continue
            for theta in interior:
                m = points[theta]
                u_small = small.subspace_at(theta, m, t.p)
                u_large = large.subspace_at(theta, m, t.p)
                ptheta = tuple(t.p * v for v in theta)
                if t.zero_frobenius:
                    # zero map: injective on the quotient only if it vanishes
                    if not u_small.contains(u_large):
                        return False, AntiNilpotenceWitness(small, large, theta)
                    continue
                target_small = small.subspace_at(ptheta, points.get(ptheta, m), t.p)
                for vec in u_large.vectors():
                    if target_small.contains_vector(vec) and not u_small.contains_vector(vec):
                        return False, AntiNilpotenceWitness(small, large, theta)
    return True, None


def adjoin_inverse_variable(t: FModuleTruncation) -> FModuleTruncation:
    """Model of M<x^{-1}> over one extra variable: every summand picks up
    the new vertex, the cohomological index shifts by one, and the new
    variable acts by the same magnitude rules (killing magnitude 1)."""
    new = t.n_vars
    summands = tuple(
        (tuple(sorted(nu + (new,))), m) for nu, m in t.summands
    )
    return FModuleTruncation(t.p, t.n_vars + 1, t.index + 1, t.depth, summands, t.zero_frobenius)


def annihilator_up_to_cap(t: FModuleTruncation, profile: Profile, cap: int) -> MonomialIdeal:
    """Monomial annihilator of the submodule a stabilized profile spans,
    reported up to the given degree cap.

    A monomial x^a acts on a basis element by the magnitude rules, so it
    kills the whole nu-block tail exactly when its support is not
    contained in nu.  For a stabilized profile the annihilator is the
    square-free ideal of supports hitting the complement of every
    nonzero block, truncated to generators of degree at most cap.
    """
    if not profile.stabilized:
        raise UnsupportedInputError(
            "annihilators are reported only for stabilized profiles"
        )
    if not profile.assignments:
        return MonomialIdeal.unit(t.n_vars)
    active = [nu for nu, _ in profile.patterns]
    complements = [
        frozenset(range(t.n_vars)) - frozenset(nu) for nu in active
    ]
    gens = []
    for size in range(0, t.n_vars + 1):
        if size > cap:
            break
        for cand in itertools.combinations(range(t.n_vars), size):
            cs = set(cand)
            if not all(cs & comp for comp in complements):
                continue
            if any(set(g) <= cs for g in gens):
                continue
            gens.append(cand)
    return MonomialIdeal.from_generators(
        t.n_vars, [tuple(1 if i in g else 0 for i in range(t.n_vars)) for g in gens]
    )


@dataclass(frozen=True)
class LyubeznikProfile:
    """Filtration summary: factor descriptors tagged either as simple
    with injective Frobenius or as nilpotent.  Anti-nilpotent exactly
    when no nilpotent factor appears."""

    factors: tuple[tuple[str, Face, int], ...]  # (tag, nu, copies)

    @property
    def length(self) -> int:
        return sum(copies for tag, _, copies in self.factors if tag == "simple")

    @property
    def is_anti_nilpotent(self) -> bool:
        return all(tag != "nilpotent" for tag, _, _ in self.factors)


def lyubeznik_profile(t: FModuleTruncation) -> LyubeznikProfile:
    """Structural filtration of a model: the isotypic summands are simple
    with injective Frobenius, except under the zero-Frobenius fixture,
    where every factor is nilpotent."""
    tag = "nilpotent" if t.zero_frobenius else "simple"
    return LyubeznikProfile(tuple((tag, nu, m) for nu, m in t.summands))
