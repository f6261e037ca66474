"""Free groups, abelianization maps and abelianized Fox calculus.

A word is a tuple of letters ``(i, s)`` with generator index ``i`` (from 0)
and sign ``s`` in {+1, -1}, always freely reduced.

Surface groups: pi_1(F_k) is free on alpha_1..alpha_k, beta_1..beta_k,
indexed 0..k-1 and k..2k-1, with boundary word prod_i [alpha_i, beta_i]
where [x, y] = x y x^-1 y^-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .coeff import LaurentPoly

Letter = Tuple[int, int]
Word = Tuple[Letter, ...]


def reduce_word(letters) -> Word:
    out: List[Letter] = []
    for g, s in letters:
        if s not in (1, -1):
            raise ValueError(f"letter sign must be +-1, got {s}")
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def word(*letters) -> Word:
    return reduce_word(letters)


def gen(i) -> Word:
    return ((i, 1),)


def mul(*words) -> Word:
    return reduce_word(l for w in words for l in w)


def inverse(w: Word) -> Word:
    return tuple((g, -s) for g, s in reversed(w))


def power(w: Word, k: int) -> Word:
    if k < 0:
        return power(inverse(w), -k)
    return reduce_word(l for _ in range(k) for l in w)


def commutator(x: Word, y: Word) -> Word:
    return mul(x, y, inverse(x), inverse(y))


def substitute(w: Word, images: Sequence[Word]) -> Word:
    """Apply the endomorphism sending generator i to images[i]."""
    out = []
    for g, s in w:
        out.extend(images[g] if s > 0 else inverse(images[g]))
    return reduce_word(out)


def max_generator(w: Word) -> int:
    return max((g for g, _ in w), default=-1)


# ---------------------------------------------------------------- text

_LETTER = re.compile(r"^([abx])(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, genus: int = 0) -> Word:
    """Parse ``x1 x2 x1^-1`` or ``a1 b1 a1^-1 b1^-1``.

    ``a_i`` and ``b_i`` are surface generators and need ``genus``; ``x_i``
    is generator i-1.  Powers ``^k`` are accepted for any integer k."""
    letters = []
    for tok in text.replace(",", " ").split():
        if tok == "1":
            continue
        m = _LETTER.match(tok)
        if not m:
            raise ValueError(f"bad letter {tok!r}")
        kind, idx, exp = m.group(1), int(m.group(2)), m.group(3)
        if idx < 1:
            raise ValueError(f"generator indices start at 1: {tok!r}")
        if kind == "x":
            g = idx - 1
        else:
            if idx > genus:
                raise ValueError(f"{tok!r} exceeds genus {genus}")
            g = idx - 1 if kind == "a" else genus + idx - 1
        k = int(exp) if exp is not None else 1
        letters.extend([(g, 1 if k > 0 else -1)] * abs(k))
    return reduce_word(letters)


def format_word(w: Word, genus: int = 0) -> str:
    """Inverse of ``parse_word``; surface names when genus > 0."""
    if not w:
        return "1"
    out = []
    for g, s in w:
        if genus:
            name = f"a{g + 1}" if g < genus else f"b{g - genus + 1}"
        else:
            name = f"x{g + 1}"
        out.append(name if s > 0 else name + "^-1")
    return " ".join(out)


# ---------------------------------------------------------------- abelianization


@dataclass(frozen=True)
class AbelMap:
    """phi: generators -> Z^n, one exponent vector per generator."""

    images: Tuple[Tuple[int, ...], ...]
    nvars: int

    def __init__(self, images, nvars=None):
        images = tuple(tuple(int(x) for x in e) for e in images)
        if nvars is None:
            if not images:
                raise ValueError("empty AbelMap needs nvars")
            nvars = len(images[0])
        for e in images:
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} has length {len(e)}, expected {nvars}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "nvars", nvars)

    @property
    def ngens(self):
        return len(self.images)

    def exp(self, w: Word) -> Tuple[int, ...]:
        acc = [0] * self.nvars
        for g, s in w:
            e = self.images[g]
            for i in range(self.nvars):
                acc[i] += s * e[i]
        return tuple(acc)

    def __call__(self, w: Word) -> LaurentPoly:
        return LaurentPoly.monomial(self.exp(w))

    def compose(self, f: "FreeHom") -> "AbelMap":
        """phi o f."""
        return AbelMap([self.exp(w) for w in f.fwd], self.nvars)


def fox_row(w: Word, phi: AbelMap) -> List[LaurentPoly]:
    """All abelianized Fox derivatives of w, one per generator."""
    n = phi.nvars
    acc = [dict() for _ in range(phi.ngens)]
    pre = [0] * n
    for g, s in w:
        e = phi.images[g]
        if s > 0:
            key = tuple(pre)
            d = acc[g]
            d[key] = d.get(key, 0) + 1
            for i in range(n):
                pre[i] += e[i]
        else:
            for i in range(n):
                pre[i] -= e[i]
            key = tuple(pre)
            d = acc[g]
            d[key] = d.get(key, 0) - 1
    return [LaurentPoly._raw({k: c for k, c in d.items() if c}, n) for d in acc]


def fox_abel(w: Word, j: int, phi: AbelMap) -> LaurentPoly:
    """phi(dw/dx_j) by d(x_i) = delta_ij, d(x_i^-1) = -delta_ij phi(x_i)^-1,
    d(uv) = du + phi(u) dv."""
    if not 0 <= j < phi.ngens:
        raise IndexError(f"generator {j} out of range")
    return fox_row(w, phi)[j]


def fundamental_identity_check(w: Word, phi: AbelMap) -> bool:
    """sum_j phi(dw/dx_j) (phi(x_j) - 1) == phi(w) - 1."""
    row = fox_row(w, phi)
    lhs = LaurentPoly.zero(phi.nvars)
    for j, d in enumerate(row):
        if d:
            lhs = lhs + d * (LaurentPoly.monomial(phi.images[j]) - 1)
    return lhs == phi(w) - 1


# ---------------------------------------------------------------- endomorphisms


@dataclass(frozen=True)
class FreeHom:
    """Automorphism of a free group given by generator images and the
    images of its inverse."""

    fwd: Tuple[Word, ...]
    inv: Tuple[Word, ...]

    def __init__(self, fwd, inv, check=True):
        fwd = tuple(reduce_word(w) for w in fwd)
        inv = tuple(reduce_word(w) for w in inv)
        object.__setattr__(self, "fwd", fwd)
        object.__setattr__(self, "inv", inv)
        if check:
            self.validate()

    @property
    def ngens(self):
        return len(self.fwd)

    def validate(self):
        n = len(self.fwd)
        if len(self.inv) != n:
            raise ValueError("forward and inverse images differ in length")
        for w in self.fwd + self.inv:
            if max_generator(w) >= n:
                raise ValueError("image uses a generator out of range")
        for i in range(n):
            if substitute(self.fwd[i], self.inv) != gen(i):
                raise ValueError(f"inverse images do not invert generator {i}")
            if substitute(self.inv[i], self.fwd) != gen(i):
                raise ValueError(f"inverse images do not invert generator {i}")

    def __call__(self, w: Word) -> Word:
        return substitute(w, self.fwd)

    def compose(self, other: "FreeHom") -> "FreeHom":
        """self o other (apply other first)."""
        fwd = [substitute(w, self.fwd) for w in other.fwd]
        inv = [substitute(w, other.inv) for w in self.inv]
        return FreeHom(fwd, inv, check=False)

    def inverse(self) -> "FreeHom":
        return FreeHom(self.inv, self.fwd, check=False)

    def fixes(self, w: Word) -> bool:
        return self(w) == w

    @classmethod
    def identity(cls, n):
        ws = tuple(gen(i) for i in range(n))
        return cls(ws, ws, check=False)

    def extend(self, left: int, right: int) -> "FreeHom":
        """Act by self on handles left..left+k-1 of a surface of genus
        left+k+right, identically on the others."""
        k = self.ngens // 2
        g = left + k + right

        def relabel(w):
            return tuple((left + i if i < k else g + left + i - k, s) for i, s in w)

        fwd = [gen(i) for i in range(2 * g)]
        inv = list(fwd)
        for i in range(2 * k):
            j = left + i if i < k else g + left + i - k
            fwd[j] = relabel(self.fwd[i])
            inv[j] = relabel(self.inv[i])
        return FreeHom(fwd, inv, check=False)


def boundary_word(k: int) -> Word:
    """prod_i alpha_i beta_i alpha_i^-1 beta_i^-1."""
    return mul(*(commutator(gen(i), gen(k + i)) for i in range(k)))


def fox_jacobian(f: FreeHom, phi_plus: AbelMap):
    """Matrix with (row i, column j) = phi_plus(d f(x_j) / d x_i): column j
    holds the coordinates of the image of the j-th basis loop."""
    cols = [fox_row(w, phi_plus) for w in f.fwd]
    n = f.ngens
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def abelian_matrix(f: FreeHom):
    """Integer action on H_1: column j is the exponent sum vector of f(x_j)."""
    n = f.ngens
    m = [[0] * n for _ in range(n)]
    for j, w in enumerate(f.fwd):
        for g, s in w:
            m[g][j] += s
    return m


def twist_library(k: int) -> List[FreeHom]:
    """For each handle i: alpha_i -> alpha_i beta_i, beta_i -> beta_i alpha_i
    and their inverses, all other generators fixed."""
    if k < 1:
        raise ValueError("twist library needs genus >= 1")
    out = []
    for i in range(k):
        a, b = gen(i), gen(k + i)
        for target, other in ((i, b), (k + i, a)):
            for e in (1, -1):
                fwd = [gen(j) for j in range(2 * k)]
                inv = list(fwd)
                fwd[target] = mul(gen(target), power(other, e))
                inv[target] = mul(gen(target), power(other, -e))
                out.append(FreeHom(fwd, inv))
    return out


def twist_names(k: int) -> List[str]:
    names = []
    for i in range(k):
        for letter, other in (("a", "b"), ("b", "a")):
            for e in ("", "^-1"):
                names.append(f"{letter}{i + 1}->{letter}{i + 1} {other}{i + 1}{e}")
    return names


def validate_surface_hom(f: FreeHom) -> None:
    """Raise unless f fixes the boundary word exactly."""
    if f.ngens % 2:
        raise ValueError("surface automorphisms act on an even number of generators")
    k = f.ngens // 2
    bw = boundary_word(k)
    if f(bw) != bw:
        raise ValueError("automorphism does not fix the boundary word")
