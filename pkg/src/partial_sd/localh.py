"""
Local h-polynomials of the partial barycentric subdivision of a simplex.

``ℓ(x) = Σ_{W ⊆ V} (-1)^{d-|W|} h(sd^l(2^W), x)`` with ``h`` written in
ascending powers, ``h(Γ, x) = Σ h_i x^i``. The subdivision restricted to
``W`` is ``sd^l(2^W)``, which only depends on ``|W|``, so the sum runs over
subset sizes weighted by binomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complex import SimplicialComplex, f_to_h, restriction
from .permstat import derangements, excedance
from .subdivide import Barycenter, Original, chain_f_vector, partial_subdivision


@dataclass(frozen=True)
class LocalHPolynomial:
    d: int
    l: int | None
    coefficients: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def is_symmetric(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def __call__(self, x: int) -> int:
        return sum(c * x**k for k, c in enumerate(self.coefficients))


def simplex_subdivision_h(m: int, l: int) -> tuple[int, ...]:
    """h-vector of ``sd^l(2^[m])`` from its explicitly enumerated faces."""
    if m == 0:
        return (1,)
    return f_to_h(chain_f_vector(SimplicialComplex.simplex(m), l))


def local_h(d: int, l: int) -> LocalHPolynomial:
    if d < 0 or l < 1:
        raise ValueError("need d >= 0 and l >= 1")
    coeffs = [0] * (d + 1)
    for m in range(d + 1):
        sign = (-1) ** (d - m) * comb(d, m)
        for k, h in enumerate(simplex_subdivision_h(m, l)):
            coeffs[k] += sign * h
    return LocalHPolynomial(d, l, tuple(coeffs))


def derangement_excedance_polynomial(d: int) -> LocalHPolynomial:
    """``Σ_{σ derangement of [d]} x^{ex(σ)}``."""
    coeffs = [0] * (d + 1)
    for s in derangements(d):
        coeffs[excedance(s)] += 1
    return LocalHPolynomial(d, None, tuple(coeffs))


def alternating_facet_sum(d: int, l: int) -> int:
    """``Σ_W (-1)^{d-|W|}`` times the facet count of ``sd^l(2^W)``, i.e. ℓ(1)."""
    return sum(
        (-1) ** (d - m) * comb(d, m) * chain_f_vector(SimplicialComplex.simplex(m), l)[-1]
        for m in range(d + 1)
    )


def restricted_subdivision(d: int, l: int, W) -> SimplicialComplex:
    """Literal restriction of ``sd^l(2^[d])`` to the vertices carried by ``W``.

    The result is relabelled so that it can be compared with
    ``partial_subdivision(2^W, l)`` directly: originals keep their position
    within ``W``, barycenters are renamed through the same order.
    """
    W = tuple(sorted(W))
    sd, labels = partial_subdivision(SimplicialComplex.simplex(d), l)
    Wset = set(W)

    def carried(x) -> bool:
        support = (x.v,) if isinstance(x, Original) else x.face
        return set(support) <= Wset

    keep = [n for n, x in labels.items() if carried(x)]
    res = restriction(sd, keep)
    pos = {v: k for k, v in enumerate(W, 1)}
    target, tlabels = partial_subdivision(SimplicialComplex.simplex(len(W)), l)
    tindex = {x: n for n, x in tlabels.items()}

    def rename(n: int) -> int:
        x = labels[n]
        if isinstance(x, Original):
            return tindex[Original(pos[x.v])]
        return tindex[Barycenter(tuple(pos[v] for v in x.face))]

    return SimplicialComplex.from_facets(
        [[rename(n) for n in F] for F in res.facets], ground_size=target.ground_size
    )
