"""Wirtinger presentations from planar diagram codes and a small corpus of
knots and closed manifolds used by the examples and suites."""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .cobordism import KnotInput
from .freegroup import AbelMap, commutator, gen, inverse, mul, power, reduce_word

PD = Sequence[Tuple[int, int, int, int]]


def _arcs(pd: PD):
    """Edges joined through over-crossings form the arcs (generators)."""
    nedges = 2 * len(pd)
    parent = list(range(nedges + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for _, j, _, l in pd:
        parent[find(j)] = find(l)
    roots = sorted({find(e) for e in range(1, nedges + 1)})
    index = {r: q for q, r in enumerate(roots)}
    return len(roots), lambda e: index[find(e)]


def _check_pd(pd: PD):
    nedges = 2 * len(pd)
    seen: Dict[int, int] = {}
    for c in pd:
        if len(c) != 4:
            raise ValueError(f"crossing {list(c)} must have four edge labels")
        for e in c:
            if not 1 <= e <= nedges:
                raise ValueError(f"edge label {e} outside 1..{nedges}")
            seen[e] = seen.get(e, 0) + 1
    bad = [e for e in range(1, nedges + 1) if seen.get(e) != 2]
    if bad:
        raise ValueError(f"edge {bad[0]} must appear exactly twice")


def crossing_signs(pd: PD) -> List[int]:
    nedges = 2 * len(pd)
    out = []
    for _, j, _, l in pd:
        if (l - j) % nedges == 1:
            out.append(1)
        elif (j - l) % nedges == 1:
            out.append(-1)
        else:
            raise ValueError(f"over-strand edges {j}, {l} are not consecutive")
    return out


def wirtinger(pd: PD) -> KnotInput:
    """Knot group from a PD code X[i, j, k, l] (i incoming under-edge, k
    outgoing, j and l the over-strand).  At a crossing of sign e with over
    arc o: x_k = x_o^e x_i x_o^-e.  One relator is dropped (it follows from
    the others), the meridian is the arc of edge 1 and the parallel is the
    preferred longitude read off the diagram."""
    if not pd:
        return KnotInput(1, [], AbelMap([(1,)]), gen(0), ())
    _check_pd(pd)
    ngens, arc = _arcs(pd)
    signs = crossing_signs(pd)
    rels = []
    for (i, j, k, _), e in zip(pd, signs):
        o = gen(arc(j))
        rels.append(mul(gen(arc(k)), power(o, e), inverse(gen(arc(i))), power(o, -e)))
    under = {i: (c, j) for c, (i, j, _, _) in enumerate(pd)}
    letters = []
    for e in range(1, 2 * len(pd) + 1):
        if e in under:
            c, j = under[e]
            letters.append((arc(j), -signs[c]))
    mu = gen(arc(1))
    writhe = sum(s for _, s in letters)
    lam = mul(reduce_word(letters), power(mu, -writhe))
    return KnotInput(ngens, rels[:-1], AbelMap([(1,)] * ngens), mu, lam)


PD_CODES: Dict[str, PD] = {
    "unknot": [],
    "trefoil": [(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)],
    "figure-eight": [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)],
    "cinquefoil": [(1, 6, 2, 7), (3, 8, 4, 9), (5, 10, 6, 1), (7, 2, 8, 3), (9, 4, 10, 5)],
}


def trefoil_two_generator() -> KnotInput:
    """<x, y | x y x y^-1 x^-1 y^-1> with meridian x."""
    x, y = gen(0), gen(1)
    return KnotInput(2, [mul(x, y, x, inverse(y), inverse(x), inverse(y))], AbelMap([(1,), (1,)]), x)


def knot_corpus() -> Dict[str, KnotInput]:
    out = {name: wirtinger(pd) for name, pd in PD_CODES.items()}
    out["trefoil-2gen"] = trefoil_two_generator()
    return out


def s1_times_s2() -> KnotInput:
    """N = S^1 x S^2, K = S^1 x pt: the exterior is a solid torus
    <gamma | > with parallel gamma and phi(gamma) = t.  The meridian bounds
    a disk."""
    return KnotInput(1, [], AbelMap([(1,)]), (), gen(0))


def circle_times_surface(genus: int, phi_c, phi_surface) -> KnotInput:
    """N = S^1 x Sigma_genus, K = S^1 x pt.  The exterior is S^1 times a
    punctured surface: <c, x_1..x_2g | [c, x_i]>, parallel c, meridian the
    boundary of the punctured surface."""
    n = len(phi_c)
    c = gen(0)
    rels = [commutator(c, gen(1 + i)) for i in range(2 * genus)]
    mu = mul(*[commutator(gen(1 + 2 * i), gen(2 + 2 * i)) for i in range(genus)])
    phi = AbelMap([tuple(phi_c)] + [tuple(e) for e in phi_surface], n)
    return KnotInput(2 * genus + 1, rels, phi, mu, c)
