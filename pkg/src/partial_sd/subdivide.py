"""
Explicit construction of the l-th partial barycentric subdivision.

A face of ``sd^l(K)`` is a chain ``A_0 ⊂ A_1 ⊂ ... ⊂ A_r`` of faces of ``K``
with ``#A_0 <= l``, ``#A_1 >= l + 1`` (when ``r >= 1``) and ``A_r ∈ K``.
Its vertices are the original vertices of ``A_0`` and the barycenters of
``A_1, ..., A_r``, so it has ``#A_0 + r`` vertices. Only faces with at least
``l + 1`` vertices receive a barycenter.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Union

from .complex import Face, SimplicialComplex, all_faces


@dataclass(frozen=True, order=True)
class Original:
    v: int

    def to_dict(self) -> dict:
        return {"orig": self.v}


@dataclass(frozen=True, order=True)
class Barycenter:
    face: Face

    def to_dict(self) -> dict:
        return {"bary": list(self.face)}


SubdivVertex = Union[Original, Barycenter]


@dataclass(frozen=True)
class ChainFace:
    chain: tuple[Face, ...]

    @property
    def head(self) -> Face:
        return self.chain[0]

    @property
    def r(self) -> int:
        return len(self.chain) - 1

    @property
    def size(self) -> int:
        return len(self.chain[0]) + self.r

    def vertices(self) -> tuple[SubdivVertex, ...]:
        return tuple(Original(v) for v in self.chain[0]) + tuple(
            Barycenter(A) for A in self.chain[1:]
        )


def _supersets(K: SimplicialComplex) -> dict[Face, list[Face]]:
    faces = K.face_set
    sup: dict[Face, list[Face]] = {F: [] for F in faces}
    for G in faces:
        for k in range(len(G)):
            for F in combinations(G, k):
                sup[F].append(G)
    for v in sup.values():
        v.sort(key=lambda G: (len(G), G))
    return sup


def _chains_from(A: Face, sup, l: int) -> Iterator[tuple[Face, ...]]:
    """All chains of barycentric faces strictly above ``A``, including the empty chain."""
    yield ()
    for B in sup[A]:
        if len(B) >= l + 1:
            for rest in _chains_from(B, sup, l):
                yield (B,) + rest


def chain_faces(K: SimplicialComplex, l: int) -> list[list[ChainFace]]:
    """All faces of ``sd^l(K)`` as chains, grouped by number of vertices."""
    if l < 1:
        raise ValueError(f"level must be >= 1, got {l}")
    sup = _supersets(K)
    groups: list[list[ChainFace]] = [[] for _ in range(K.d + 1)]
    for layer in all_faces(K)[: l + 1]:
        for A0 in layer:
            for tail in _chains_from(A0, sup, l):
                cf = ChainFace((A0,) + tail)
                groups[cf.size].append(cf)
    for g in groups:
        g.sort(key=lambda cf: cf.chain)
    return groups


def chain_f_vector(K: SimplicialComplex, l: int) -> tuple[int, ...]:
    return tuple(len(g) for g in chain_faces(K, l))


def vertex_labels(K: SimplicialComplex, l: int) -> list[SubdivVertex]:
    """Vertices of ``sd^l(K)`` in label order: originals, then barycenters by (size, lex)."""
    bary = sorted((F for F in K.face_set if len(F) >= l + 1), key=lambda F: (len(F), F))
    return [Original(v) for v in range(1, K.ground_size + 1)] + [Barycenter(F) for F in bary]


def maximal_chains(K: SimplicialComplex, l: int) -> list[ChainFace]:
    """Facets of ``sd^l(K)``: saturated chains from an l-subset up to each facet of ``K``."""
    out = []
    for G in K.facets:
        if len(G) <= l:
            out.append(ChainFace((G,)))
            continue
        for A0 in combinations(G, l):
            rest = [v for v in G if v not in A0]
            for order in permutations(rest):
                chain = [A0]
                cur = set(A0)
                for v in order:
                    cur.add(v)
                    chain.append(tuple(sorted(cur)))
                out.append(ChainFace(tuple(chain)))
    return out


def partial_subdivision(K: SimplicialComplex, l: int) -> tuple[SimplicialComplex, dict[int, SubdivVertex]]:
    """``sd^l(K)`` relabelled to ``1..N`` together with the label dictionary."""
    if l < 1:
        raise ValueError(f"level must be >= 1, got {l}")
    labels = vertex_labels(K, l)
    index = {x: n for n, x in enumerate(labels, 1)}
    facets = [[index[x] for x in cf.vertices()] for cf in maximal_chains(K, l)]
    sd = SimplicialComplex.from_facets(facets, ground_size=len(labels))
    return sd, dict(enumerate(labels, 1))


def label_dict_to_json(labels: dict[int, SubdivVertex]) -> dict[str, dict]:
    return {str(n): x.to_dict() for n, x in sorted(labels.items())}


# ---------------------------------------------------------------------------
# Order complex oracle for l = 1
# ---------------------------------------------------------------------------


def standard_sd_oracle(K: SimplicialComplex) -> tuple[SimplicialComplex, dict[int, Face]]:
    """Order complex of the poset of nonempty faces.

    Independent of the chain code above: flags are grown one face at a time
    by strict inclusion and the maximal ones are kept by antichain reduction.
    """
    nonempty = sorted((F for F in K.face_set if F), key=lambda F: (len(F), F))
    index = {F: n for n, F in enumerate(nonempty, 1)}
    covers = {F: [G for G in nonempty if len(G) == len(F) + 1 and set(F) <= set(G)] for F in nonempty}

    flags: list[tuple[Face, ...]] = []
    stack = [(F,) for F in nonempty if len(F) == 1]
    while stack:
        flag = stack.pop()
        ups = covers[flag[-1]]
        if not ups:
            flags.append(flag)
        for G in ups:
            stack.append(flag + (G,))
    if not flags:
        return SimplicialComplex.from_facets([[]]), {}
    sd = SimplicialComplex.from_facets(
        [[index[F] for F in flag] for flag in flags], ground_size=len(nonempty)
    )
    return sd, {n: F for F, n in index.items()}


def as_face_sets(sd: SimplicialComplex, labels: dict) -> set[frozenset[Face]]:
    """Facets of a barycentric-type complex, each as the set of faces its vertices name."""

    def name(x) -> Face:
        if isinstance(x, Original):
            return (x.v,)
        if isinstance(x, Barycenter):
            return x.face
        return x

    return {frozenset(name(labels[v]) for v in F) for F in sd.facets}


def carrier_in_next_level(cf: ChainFace, l: int) -> ChainFace:
    """Smallest face of ``sd^{l+1}`` containing the face ``cf`` of ``sd^l``.

    A barycenter of an ``(l+1)``-set is not a vertex one level up; it is
    replaced by the original vertices of that set.
    """
    chain = cf.chain
    if cf.r >= 1 and len(chain[1]) == l + 1:
        return ChainFace((chain[1],) + chain[2:])
    return cf
