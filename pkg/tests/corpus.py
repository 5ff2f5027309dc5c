"""Shared test corpus: named complexes plus every complex on at most
four vertices (one representative per relabeling class)."""

import itertools

from froblab.simplicial import from_facets, make_complex

TWO_POINTS = from_facets(2, [[0], [1]])
TRIANGLE = from_facets(3, [[0, 1], [1, 2], [0, 2]])
TWO_EDGES = from_facets(4, [[0, 1], [2, 3]])
EMPTY = make_complex(0, [[]])
POINT = from_facets(1, [[0]])
SEGMENT = from_facets(2, [[0, 1]])
FULL3 = from_facets(3, [[0, 1, 2]])

RP2 = from_facets(6, [
    (0, 1, 3), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 4, 5),
    (1, 2, 4), (1, 2, 5), (1, 3, 4), (2, 3, 5), (3, 4, 5),
])


def _canonical(n, facets):
    best = None
    for perm in itertools.permutations(range(n)):
        relabeled = tuple(
            sorted(tuple(sorted(perm[v] for v in f)) for f in facets)
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def small_complexes(max_vertices=4, include_empty=True):
    """Every complex with all of its <= max_vertices vertices covered,
    one representative per isomorphism class, empty complex optional."""
    out = []
    if include_empty:
        out.append(EMPTY)
    for n in range(1, max_vertices + 1):
        subsets = [
            tuple(s)
            for size in range(1, n + 1)
            for s in itertools.combinations(range(n), size)
        ]
        seen = set()
        for mask in range(1, 2 ** len(subsets)):
            fam = [subsets[i] for i in range(len(subsets)) if mask >> i & 1]
            if any(
                set(a) < set(b) for a in fam for b in fam if a != b
            ):
                continue
            if set().union(*map(set, fam)) != set(range(n)):
                continue
            key = _canonical(n, fam)
            if key in seen:
                continue
            seen.add(key)
            out.append(from_facets(n, fam))
    return out


def acceptance_corpus():
    return small_complexes() + [TRIANGLE, TWO_EDGES, RP2]
