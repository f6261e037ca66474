"""Objects and morphism encodings of the cobordism category.

An object is a genus g with phi-values on alpha_1..alpha_g, beta_1..beta_g.
Morphisms come either as Heegaard words (sequences of elementary pieces) or
as presented cobordisms (a spine presentation with boundary-loop words).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

from .freegroup import (
    AbelMap,
    FreeHom,
    Word,
    gen,
    inverse,
    max_generator,
    mul,
    reduce_word,
    substitute,
    validate_surface_hom,
)

ExpVec = Tuple[int, ...]

LOWER_ALPHA = "lower-alpha"
UPPER_BETA = "upper-beta"
LOWER_BETA = "lower-beta"
UPPER_ALPHA = "upper-alpha"
CYLINDER = "cylinder"
KINDS = (LOWER_ALPHA, UPPER_BETA, LOWER_BETA, UPPER_ALPHA, CYLINDER)


class PreconditionError(ValueError):
    """A phi-value forbids the requested piece or composition."""


@dataclass(frozen=True)
class CobObject:
    genus: int
    phi: Tuple[ExpVec, ...]
    nvars: int

    def __init__(self, genus, phi=None, nvars=1):
        if genus < 0:
            raise ValueError("genus must be nonnegative")
        if phi is None:
            phi = [(0,) * nvars] * (2 * genus)
        phi = tuple(tuple(int(x) for x in e) for e in phi)
        if len(phi) != 2 * genus:
            raise ValueError(f"genus {genus} needs {2 * genus} phi-values, got {len(phi)}")
        for e in phi:
            if len(e) != nvars:
                raise ValueError(f"phi-value {e} has length {len(e)}, expected {nvars}")
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "nvars", nvars)

    def alpha(self, i):
        return self.phi[i]

    def beta(self, i):
        return self.phi[self.genus + i]

    @property
    def alphas(self):
        return self.phi[:self.genus]

    @property
    def betas(self):
        return self.phi[self.genus:]

    def abel(self) -> AbelMap:
        return AbelMap(self.phi, self.nvars)

    def tensor(self, other: "CobObject") -> "CobObject":
        return CobObject(self.genus + other.genus,
                         self.alphas + other.alphas + self.betas + other.betas, self.nvars)

    def handles(self, start, count) -> "CobObject":
        """The sub-object on handles start..start+count-1."""
        a = self.alphas[start:start + count]
        b = self.betas[start:start + count]
        return CobObject(count, a + b, self.nvars)

    @staticmethod
    def from_handles(alphas, betas, nvars):
        return CobObject(len(alphas), tuple(alphas) + tuple(betas), nvars)


def _zero(n):
    return (0,) * n


@dataclass(frozen=True)
class Piece:
    """Elementary piece ``Id_lpad (x) P (x) Id_pad``.

    ``phi_new`` carries the phi-values of the free curves a lower handlebody
    creates: the betas of LowerAlpha(k), the alphas of LowerBeta(k).
    Defaults to zero vectors."""

    kind: str
    k: int
    pad: int = 0
    lpad: int = 0
    hom: Optional[FreeHom] = None
    phi_new: Optional[Tuple[ExpVec, ...]] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown piece kind {self.kind!r}")
        if self.k < 0 or self.pad < 0 or self.lpad < 0:
            raise ValueError("piece sizes must be nonnegative")
        if self.kind == CYLINDER:
            if self.hom is None or self.hom.ngens != 2 * self.k:
                raise ValueError("cylinder needs an automorphism on 2k generators")
            validate_surface_hom(self.hom)
        if self.phi_new is not None:
            object.__setattr__(self, "phi_new", tuple(tuple(e) for e in self.phi_new))
            if self.kind not in (LOWER_ALPHA, LOWER_BETA) or len(self.phi_new) != self.k:
                raise ValueError("phi_new applies to lower handlebodies, one value per handle")

    @property
    def lower(self):
        return self.kind in (LOWER_ALPHA, LOWER_BETA)

    @property
    def upper(self):
        return self.kind in (UPPER_ALPHA, UPPER_BETA)

    @property
    def src_genus(self):
        return self.lpad + self.pad + (0 if self.lower else self.k)

    @property
    def tgt_genus(self):
        return self.lpad + self.pad + (0 if self.upper else self.k)

    def target(self, src: CobObject) -> CobObject:
        """Target object, checking the phi-preconditions."""
        if src.genus != self.src_genus:
            raise ValueError(f"{self.kind}({self.k}) expects source genus {self.src_genus}, got {src.genus}")
        n = src.nvars
        left = src.handles(0, self.lpad)
        right = src.handles(src.genus - self.pad, self.pad)
        if self.kind == CYLINDER:
            mid = src.handles(self.lpad, self.k)
            # psi_+ = psi_- o f^-1
            new = CobObject(self.k, AbelMap(mid.phi, n).compose(self.hom.inverse()).images, n)
        elif self.lower:
            vals = self.phi_new if self.phi_new is not None else (_zero(n),) * self.k
            for e in vals:
                if len(e) != n:
                    raise ValueError("phi_new has the wrong variable count")
            zeros = (_zero(n),) * self.k
            if self.kind == LOWER_ALPHA:
                new = CobObject.from_handles(zeros, vals, n)
            else:
                new = CobObject.from_handles(vals, zeros, n)
        else:
            mid = src.handles(self.lpad, self.k)
            dead = mid.betas if self.kind == UPPER_BETA else mid.alphas
            name = "beta" if self.kind == UPPER_BETA else "alpha"
            for i, e in enumerate(dead):
                if any(e):
                    raise PreconditionError(
                        f"{self.kind}({self.k}) needs phi({name}_{self.lpad + i + 1}) = 1, got exponent {list(e)}")
            new = CobObject(0, (), n)
        return left.tensor(new).tensor(right)

    def check_target(self, tgt: CobObject):
        if self.kind == LOWER_ALPHA:
            for i in range(self.k):
                if any(tgt.alpha(self.lpad + i)):
                    raise PreconditionError(f"lower-alpha needs phi(alpha_{self.lpad + i + 1}) = 1")
        if self.kind == LOWER_BETA:
            for i in range(self.k):
                if any(tgt.beta(self.lpad + i)):
                    raise PreconditionError(f"lower-beta needs phi(beta_{self.lpad + i + 1}) = 1")

    def shifted(self, lpad=0, pad=0) -> "Piece":
        return Piece(self.kind, self.k, self.pad + pad, self.lpad + lpad, self.hom, self.phi_new)


def LowerAlpha(k, pad=0, lpad=0, phi_new=None):
    return Piece(LOWER_ALPHA, k, pad, lpad, None, phi_new)


def UpperBeta(k, pad=0, lpad=0):
    return Piece(UPPER_BETA, k, pad, lpad)


def LowerBeta(k, pad=0, lpad=0, phi_new=None):
    return Piece(LOWER_BETA, k, pad, lpad, None, phi_new)


def UpperAlpha(k, pad=0, lpad=0):
    return Piece(UPPER_ALPHA, k, pad, lpad)


def Cylinder(hom: FreeHom, pad=0, lpad=0):
    return Piece(CYLINDER, hom.ngens // 2, pad, lpad, hom)


@dataclass(frozen=True)
class HeegaardWord:
    """A composable sequence of pieces, applied first to last."""

    source: CobObject
    pieces: Tuple[Piece, ...] = ()
    target: CobObject = field(default=None)

    def __init__(self, source, pieces=(), target=None):
        pieces = tuple(pieces)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "pieces", pieces)
        objs = [source]
        for p in pieces:
            nxt = p.target(objs[-1])
            p.check_target(nxt)
            objs.append(nxt)
        if target is not None and target != objs[-1]:
            raise ValueError(f"declared target {target} differs from computed {objs[-1]}")
        object.__setattr__(self, "target", objs[-1])
        object.__setattr__(self, "_objects", tuple(objs))

    @property
    def objects(self) -> Tuple[CobObject, ...]:
        """source, intermediate objects, target."""
        return self._objects

    @property
    def nvars(self):
        return self.source.nvars

    def then(self, other: "HeegaardWord") -> "HeegaardWord":
        """Composite: self first, then other."""
        if other.source != self.target:
            raise ValueError("objects do not match")
        return HeegaardWord(self.source, self.pieces + other.pieces)

    def tensor(self, other: "HeegaardWord") -> "HeegaardWord":
        """self (x) other = (self (x) Id) o (Id (x) other)."""
        pieces = [p.shifted(lpad=self.source.genus) for p in other.pieces]
        pieces += [p.shifted(pad=other.target.genus) for p in self.pieces]
        return HeegaardWord(self.source.tensor(other.source), pieces)


def dual_piece(p: Piece, src: CobObject) -> Piece:
    """Time reversal of p, whose source object is src."""
    if p.kind == LOWER_ALPHA:
        return Piece(UPPER_ALPHA, p.k, p.pad, p.lpad)
    if p.kind == LOWER_BETA:
        return Piece(UPPER_BETA, p.k, p.pad, p.lpad)
    mid = src.handles(p.lpad, p.k)
    if p.kind == UPPER_BETA:
        return Piece(LOWER_BETA, p.k, p.pad, p.lpad, None, mid.alphas)
    if p.kind == UPPER_ALPHA:
        return Piece(LOWER_ALPHA, p.k, p.pad, p.lpad, None, mid.betas)
    return Piece(CYLINDER, p.k, p.pad, p.lpad, p.hom.inverse())


def dual_word(w: HeegaardWord) -> HeegaardWord:
    pieces = [dual_piece(p, src) for p, src in zip(w.pieces, w.objects)]
    return HeegaardWord(w.target, reversed(pieces), w.source)


# ---------------------------------------------------------------- presentations


@dataclass(frozen=True)
class PresentedCobordism:
    """Spine presentation <gamma_1..gamma_{g+r} | rho_1..rho_r> with the
    boundary loops written as words: ``bottom`` lists m_-(alpha_i) then
    m_-(beta_i), ``top`` lists m_+(alpha_i) then m_+(beta_i)."""

    ngens: int
    relators: Tuple[Word, ...]
    phi: AbelMap
    bottom: Tuple[Word, ...]
    top: Tuple[Word, ...]

    def __init__(self, ngens, relators, phi, bottom, top, check=True):
        object.__setattr__(self, "ngens", ngens)
        object.__setattr__(self, "relators", tuple(reduce_word(w) for w in relators))
        if not isinstance(phi, AbelMap):
            raise TypeError("phi must be an AbelMap")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "bottom", tuple(reduce_word(w) for w in bottom))
        object.__setattr__(self, "top", tuple(reduce_word(w) for w in top))
        if check:
            self.validate()

    @property
    def nvars(self):
        return self.phi.nvars

    @property
    def g_minus(self):
        return len(self.bottom) // 2

    @property
    def g_plus(self):
        return len(self.top) // 2

    @property
    def g(self):
        return self.ngens - len(self.relators)

    def validate(self):
        if self.phi.ngens != self.ngens:
            raise ValueError(f"phi has {self.phi.ngens} values for {self.ngens} generators")
        if len(self.bottom) % 2 or len(self.top) % 2:
            raise ValueError("boundary word lists must have even length")
        if self.g_minus + self.g_plus != self.g:
            raise ValueError(
                f"deficiency {self.g} does not match boundary genera {self.g_minus} + {self.g_plus}")
        for w in self.relators + self.bottom + self.top:
            if max_generator(w) >= self.ngens:
                raise ValueError("word uses a generator out of range")
        for i, r in enumerate(self.relators):
            if any(self.phi.exp(r)):
                raise PreconditionError(f"phi does not kill relator {i + 1}")

    def source_object(self) -> CobObject:
        return CobObject(self.g_minus, [self.phi.exp(w) for w in self.bottom], self.nvars)

    def target_object(self) -> CobObject:
        return CobObject(self.g_plus, [self.phi.exp(w) for w in self.top], self.nvars)


def presented_identity(obj: CobObject) -> PresentedCobordism:
    ws = [gen(i) for i in range(2 * obj.genus)]
    return PresentedCobordism(2 * obj.genus, [], AbelMap(obj.phi, obj.nvars), ws, ws)


def _shift(w, k):
    return tuple((g + k, s) for g, s in w)


def tensor_presented(p: PresentedCobordism, q: PresentedCobordism) -> PresentedCobordism:
    if p.nvars != q.nvars:
        raise ValueError("variable count mismatch")
    k = p.ngens
    qs = lambda ws: [_shift(w, k) for w in ws]
    gp, gq = p.g_minus, q.g_minus
    bottom = list(p.bottom[:gp]) + qs(q.bottom[:gq]) + list(p.bottom[gp:]) + qs(q.bottom[gq:])
    hp, hq = p.g_plus, q.g_plus
    top = list(p.top[:hp]) + qs(q.top[:hq]) + list(p.top[hp:]) + qs(q.top[hq:])
    phi = AbelMap(p.phi.images + q.phi.images, p.nvars)
    return PresentedCobordism(p.ngens + q.ngens, list(p.relators) + qs(q.relators), phi, bottom, top)


def compose_presented(p: PresentedCobordism, q: PresentedCobordism) -> PresentedCobordism:
    """q o p: glue the top of p to the bottom of q."""
    if p.target_object() != q.source_object():
        raise ValueError(f"objects do not match: {p.target_object()} vs {q.source_object()}")
    k = p.ngens
    glue = [mul(a, inverse(_shift(b, k))) for a, b in zip(p.top, q.bottom)]
    rels = list(p.relators) + [_shift(w, k) for w in q.relators] + glue
    phi = AbelMap(p.phi.images + q.phi.images, p.nvars)
    return PresentedCobordism(p.ngens + q.ngens, rels, phi, p.bottom, [_shift(w, k) for w in q.top])


def _core_presentation(p: Piece, src: CobObject, tgt: CobObject) -> PresentedCobordism:
    n = src.nvars
    k = p.k
    ws = [gen(i) for i in range(2 * k)]
    if p.kind == CYLINDER:
        mid = tgt.handles(p.lpad, k)
        return PresentedCobordism(2 * k, [], AbelMap(mid.phi, n), list(p.hom.fwd), ws)
    if p.lower:
        mid = tgt.handles(p.lpad, k)
        rels = ws[:k] if p.kind == LOWER_ALPHA else ws[k:]
        return PresentedCobordism(2 * k, rels, AbelMap(mid.phi, n), [], ws)
    mid = src.handles(p.lpad, k)
    rels = ws[k:] if p.kind == UPPER_BETA else ws[:k]
    return PresentedCobordism(2 * k, rels, AbelMap(mid.phi, n), ws, [])


def piece_presentation(p: Piece, src: CobObject) -> PresentedCobordism:
    tgt = p.target(src)
    core = _core_presentation(p, src, tgt)
    left = presented_identity(src.handles(0, p.lpad))
    right = presented_identity(src.handles(src.genus - p.pad, p.pad))
    return tensor_presented(tensor_presented(left, core), right)


def simplify_presentation(p: PresentedCobordism) -> PresentedCobordism:
    """Tietze moves: while some relator contains a generator exactly once,
    solve for it, substitute everywhere and drop both.  The Reidemeister
    function changes only by a unit."""
    ngens = p.ngens
    rels = list(p.relators)
    bottom, top = list(p.bottom), list(p.top)
    phi = list(p.phi.images)
    while True:
        best = None
        for ri, rel in enumerate(rels):
            counts = {}
            for g, _ in rel:
                counts[g] = counts.get(g, 0) + 1
            for pos, (g, _) in enumerate(rel):
                if counts[g] == 1:
                    cand = (len(rel), ri, pos)
                    if best is None or cand < best:
                        best = cand
                    break
        if best is None:
            break
        _, ri, pos = best
        rel = rels.pop(ri)
        g, s = rel[pos]
        u, v = rel[:pos], rel[pos + 1:]
        repl = mul(inverse(u), inverse(v)) if s > 0 else mul(v, u)
        images = [gen(i) for i in range(ngens)]
        images[g] = repl
        renum = [gen(i if i < g else i - 1) for i in range(ngens)]
        renum[g] = ()

        def sub(w):
            return substitute(substitute(w, images), renum)

        rels = [sub(w) for w in rels]
        bottom = [sub(w) for w in bottom]
        top = [sub(w) for w in top]
        phi.pop(g)
        ngens -= 1
    return PresentedCobordism(ngens, rels, AbelMap(phi, p.nvars), bottom, top)


def word_to_presentation(w: HeegaardWord, simplify=True) -> PresentedCobordism:
    pres = presented_identity(w.source)
    for piece, src in zip(w.pieces, w.objects):
        pres = compose_presented(pres, piece_presentation(piece, src))
        if simplify:
            pres = simplify_presentation(pres)
    return pres


@dataclass(frozen=True)
class KnotInput:
    """Deficiency-one presentation of a knot exterior (in a homology sphere
    or a general closed 3-manifold), a meridian and an optional parallel."""

    ngens: int
    relators: Tuple[Word, ...]
    phi: AbelMap
    meridian: Word
    parallel: Optional[Word] = None

    def __init__(self, ngens, relators, phi, meridian, parallel=None):
        object.__setattr__(self, "ngens", ngens)
        object.__setattr__(self, "relators", tuple(reduce_word(w) for w in relators))
        if not isinstance(phi, AbelMap):
            phi = AbelMap(phi)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "meridian", reduce_word(meridian))
        object.__setattr__(self, "parallel", None if parallel is None else reduce_word(parallel))
        self.validate()

    @property
    def nvars(self):
        return self.phi.nvars

    def validate(self):
        if self.phi.ngens != self.ngens:
            raise ValueError("phi must have one value per generator")
        if len(self.relators) != self.ngens - 1:
            raise ValueError(
                f"presentation must have deficiency one: {self.ngens} generators, {len(self.relators)} relators")
        words = list(self.relators) + [self.meridian] + ([self.parallel] if self.parallel is not None else [])
        for w in words:
            if max_generator(w) >= self.ngens:
                raise ValueError("word uses a generator out of range")
        for i, r in enumerate(self.relators):
            if any(self.phi.exp(r)):
                raise PreconditionError(f"phi does not kill relator {i + 1}")

    def exterior(self) -> PresentedCobordism:
        """The exterior as a morphism 1 -> 0 with m_-(alpha) = meridian and
        m_-(beta) = parallel."""
        if self.parallel is None:
            raise ValueError("the exterior cobordism needs a parallel word")
        return PresentedCobordism(self.ngens, self.relators, self.phi, [self.meridian, self.parallel], [])
