"""Independent reference computations built on sympy."""

import sympy

from reidemeister.coeff import LaurentPoly, RatFunc

T = sympy.symbols("t1:4")


def sym_poly(p: LaurentPoly):
    xs = T[:p.nvars] if p.nvars != 1 else (sympy.Symbol("t"),)
    out = sympy.Integer(0)
    for e, c in p.terms.items():
        m = sympy.Integer(c)
        for x, k in zip(xs, e):
            m *= x ** k
        out += m
    return out


def sym_rat(f):
    if isinstance(f, LaurentPoly):
        return sym_poly(f)
    return sym_poly(f.num) / sym_poly(f.den)


def sym_matrix(m):
    return sympy.Matrix([[sym_rat(x) for x in row] for row in m])


def same(a, b):
    """a == b as rational functions."""
    return sympy.simplify(sympy.together(a - b)) == 0


def unit_related(a, b, nvars=1):
    """a = +-monomial * b, tested by sympy: the quotient must be a single
    signed monomial."""
    xs = T[:nvars] if nvars != 1 else (sympy.Symbol("t"),)
    if b == 0:
        return a == 0
    q = sympy.factor(sympy.cancel(sympy.together(a / b)))
    num, den = sympy.fraction(q)
    for part in (num, den):
        poly = sympy.Poly(sympy.expand(part), *xs)
        if len(poly.terms()) != 1 or abs(poly.terms()[0][1]) != 1:
            return False
    return True


def seifert_alexander(v):
    """det(V - t V^T) for a Seifert matrix V."""
    t = sympy.Symbol("t")
    m = sympy.Matrix(v)
    return sympy.expand((m - t * m.T).det())


def field_rank(m):
    return sym_matrix(m).rank(simplify=True)


def to_ratfunc(expr, nvars=1):
    """sympy rational expression -> RatFunc (for frozen goldens)."""
    from reidemeister.coeff import parse_poly
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    fmt = lambda e: str(sympy.expand(e)).replace("**", "^")
    return RatFunc(parse_poly(fmt(num), nvars), parse_poly(fmt(den), nvars))


def tensor_complex(c, d):
    """Cellular complex of a product: C (x) D with
    d(x (x) y) = dx (x) y + (-1)^p x (x) dy."""
    from reidemeister.torsion import BasedChainComplex
    n = c.nvars
    zero = RatFunc.zero(n)
    top = c.length + d.length
    index = []
    for k in range(top + 1):
        cells = []
        for p in range(k + 1):
            q = k - p
            if p <= c.length and q <= d.length:
                cells += [(p, i, q, j) for i in range(c.dims[p]) for j in range(d.dims[q])]
        index.append(cells)
    pos = [{cell: r for r, cell in enumerate(cells)} for cells in index]
    bd = {}
    for k in range(1, top + 1):
        m = [[zero] * len(index[k]) for _ in range(len(index[k - 1]))]
        for col, (p, i, q, j) in enumerate(index[k]):
            if p >= 1:
                for r in range(c.dims[p - 1]):
                    x = c.boundaries[p][r][i]
                    if x:
                        row = pos[k - 1][(p - 1, r, q, j)]
                        m[row][col] = m[row][col] + x
            if q >= 1:
                for r in range(d.dims[q - 1]):
                    y = d.boundaries[q][r][j]
                    if y:
                        row = pos[k - 1][(p, i, q - 1, r)]
                        m[row][col] = m[row][col] + (y if p % 2 == 0 else -y)
        bd[k] = m
    return BasedChainComplex([len(x) for x in index], bd, n)


def circle_complex(exp):
    """S^1 with one 0-cell and one 1-cell, loop mapped to t^exp."""
    from reidemeister.torsion import BasedChainComplex
    return BasedChainComplex([1, 1], {1: [[RatFunc(LaurentPoly.monomial(tuple(exp)) - 1)]]}, len(exp))


def surface_complex(genus, phis):
    """Closed orientable surface: one 0-cell, 2g 1-cells x_1..x_2g, one
    2-cell attached along [x1, x2] ... [x_{2g-1}, x_2g]."""
    from reidemeister.freegroup import AbelMap, commutator, fox_row, gen, mul
    from reidemeister.torsion import BasedChainComplex
    n = len(phis[0]) if phis else 0
    phi = AbelMap([tuple(e) for e in phis], n)
    rel = mul(*[commutator(gen(2 * i), gen(2 * i + 1)) for i in range(genus)])
    row = fox_row(rel, phi)
    d1 = [[RatFunc(LaurentPoly.monomial(tuple(e)) - 1) for e in phis]]
    d2 = [[RatFunc(x)] for x in row]
    return BasedChainComplex([1, 2 * genus, 1], {1: d1, 2: d2}, n)


def sphere_complex(n):
    """S^2 as one 0-cell and one 2-cell (simply connected, trivial twist)."""
    from reidemeister.torsion import BasedChainComplex
    return BasedChainComplex([1, 0, 1], {1: [[]], 2: []}, n)


SEIFERT = {
    "trefoil": [[-1, 1], [0, -1]],
    "figure-eight": [[-1, 1], [0, 1]],
    "cinquefoil": [[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]],
}


def fox_alexander(relators, ngens):
    """Alexander polynomial of a one-relator-deficient knot group with every
    generator sent to t.  Fox derivatives are summed letter by letter in
    sympy: x_j contributes t^(prefix), x_j^-1 contributes -t^(prefix - 1).
    The last column is deleted."""
    t = sympy.Symbol("t")
    rows = []
    for w in relators:
        row = [sympy.Integer(0)] * ngens
        height = 0
        for g, e in w:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                if step > 0:
                    row[g] += t ** height
                else:
                    row[g] -= t ** (height - 1)
                height += step
        rows.append(row)
    m = sympy.Matrix(rows)[:, :ngens - 1]
    return sympy.expand(sympy.cancel(m.det())) if ngens > 1 else sympy.Integer(1)
