"""Exact polynomial arithmetic over the rationals.

Multivariate polynomials are sparse maps from exponent tuples to Fraction
coefficients; zero coefficients are never stored, and the zero polynomial
is the empty map.  Univariate polynomials are dense coefficient tuples,
lowest degree first, used for restrictions of multivariate polynomials to
lines and for real-root counting.

Real roots are counted with Sturm sequences.  The remainder chain is the
signed Euclidean remainder sequence over Q with each remainder rescaled by
the absolute value of its leading coefficient; rescaling by a positive
constant preserves every sign, and the rational arithmetic is exact, so
the chain is stable without subresultant machinery at the sizes used
here.  Polynomials are reduced to their squarefree part before counting,
which makes the counts multiplicity-free.  The default root bracket is
the Cauchy bound 1 + max|coeff| / |lead|, outside of which a polynomial
cannot vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import EndpointRootError, PreconditionError, ZeroPolynomialError
from .geometry import Line, Point

Exponent = tuple[int, ...]
Coord = int | Fraction


def graded_monomials(dimension: int, max_degree: int, min_degree: int = 0) -> list[Exponent]:
    """Exponent tuples of total degree min..max in graded lexicographic
    order: ascending total degree, descending lexicographic within a degree."""

    def tuples_of_degree(total: int, nvars: int) -> list[Exponent]:
        if nvars == 1:
            return [(total,)]
        out: list[Exponent] = []
        for first in range(total, -1, -1):
            out.extend((first,) + rest for rest in tuples_of_degree(total - first, nvars - 1))
        return out

    result: list[Exponent] = []
    for deg in range(min_degree, max_degree + 1):
        result.extend(tuples_of_degree(deg, dimension))
    return result


@dataclass(frozen=True)
class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    dimension: int
    terms: Mapping[Exponent, Fraction]

    def __init__(self, dimension: int, terms: Mapping[Exponent, Coord]):
        cleaned = {}
        for exp, coeff in terms.items():
            c = Fraction(coeff)
            if c != 0:
                if len(exp) != dimension:
                    raise PreconditionError("exponent arity mismatch")
                cleaned[tuple(exp)] = c
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, dimension: int) -> "MultiPoly":
        return cls(dimension, {})

    @classmethod
    def constant(cls, dimension: int, value: Coord) -> "MultiPoly":
        return cls(dimension, {(0,) * dimension: Fraction(value)})

    @classmethod
    def variable(cls, dimension: int, index: int) -> "MultiPoly":
        exp = [0] * dimension
        exp[index] = 1
        return cls(dimension, {tuple(exp): Fraction(1)})

    @classmethod
    def from_coefficients(
        cls, dimension: int, monomials: Sequence[Exponent], coeffs: Sequence[Coord]
    ) -> "MultiPoly":
        return cls(dimension, dict(zip(monomials, coeffs)))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return MultiPoly(self.dimension, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.dimension, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                out[exp] = out.get(exp, Fraction(0)) + ca * cb
        return MultiPoly(self.dimension, out)

    def scale(self, value: Coord) -> "MultiPoly":
        v = Fraction(value)
        return MultiPoly(self.dimension, {e: c * v for e, c in self.terms.items()})

    def eval(self, p: Point | Sequence[Coord]) -> Fraction:
        coords = [Fraction(c) for c in (p.coords if isinstance(p, Point) else p)]
        if len(coords) != self.dimension:
            raise PreconditionError("dimension mismatch in evaluation")
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            term = coeff
            for e, v in zip(exp, coords):
                if e:
                    term *= v**e
            total += term
        return total

    def gradient(self) -> tuple["MultiPoly", ...]:
        parts = []
        for i in range(self.dimension):
            out: dict[Exponent, Fraction] = {}
            for exp, coeff in self.terms.items():
                if exp[i] == 0:
                    continue
                new = list(exp)
                new[i] -= 1
                out[tuple(new)] = out.get(tuple(new), Fraction(0)) + coeff * exp[i]
            parts.append(MultiPoly(self.dimension, out))
        return tuple(parts)

    def restrict_to_line(self, line: Line) -> "UniPoly":
        """The univariate polynomial t -> f(base + t * direction)."""
        if line.dimension != self.dimension:
            raise PreconditionError("dimension mismatch in restriction")
        axes = [
            UniPoly((b, Fraction(v)))
            for b, v in zip(line.base.coords, line.direction)
        ]
        total = UniPoly(())
        for exp, coeff in self.terms.items():
            term = UniPoly((coeff,))
            for e, axis in zip(exp, axes):
                for _ in range(e):
                    term = term * axis
            total = total + term
        return total

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in graded-lexicographic order (ascending degree, lex
        descending inside a degree)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.dimension == other.dimension and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.dimension, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for exp, coeff in self.sorted_terms():
            mono = "*".join(
                f"x{i}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e
            )
            bits.append(f"{coeff}" + (f"*{mono}" if mono else ""))
        return "MultiPoly(" + " + ".join(bits) + ")"


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coord]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def eval(self, t: Coord) -> Fraction:
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def scale(self, value: Coord) -> "UniPoly":
        v = Fraction(value)
        return UniPoly(c * v for c in self.coeffs)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroPolynomialError("division by the zero polynomial")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = other.leading()
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            shift = len(rem) - 1 - dd
            factor = rem[-1] / dlead
            quo[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quo), UniPoly(rem)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "UniPoly(0)"
        return "UniPoly(" + ", ".join(str(c) for c in self.coeffs) + ")"


def _normalized(u: UniPoly) -> UniPoly:
    """Rescale by |leading|; positive rescaling keeps all signs intact."""
    return u.scale(1 / abs(u.leading()))


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q (gcd with the zero polynomial is the other input)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a.scale(1 / a.leading())


def squarefree_part(u: UniPoly) -> UniPoly:
    """u divided by gcd(u, u'): same roots, all simple."""
    if u.is_zero():
        raise ZeroPolynomialError("zero polynomial has no squarefree part")
    if u.degree == 0:
        return UniPoly((1,))
    g = poly_gcd(u, u.derivative())
    if g.degree == 0:
        return u
    quo, rem = u.divmod(g)
    assert rem.is_zero()
    return quo


def sturm_chain(u: UniPoly) -> list[UniPoly]:
    """Sturm sequence of a squarefree polynomial."""
    chain = [_normalized(u)]
    deriv = u.derivative()
    if deriv.is_zero():
        return chain
    chain.append(_normalized(deriv))
    while True:
        rem = chain[-2].divmod(chain[-1])[1]
        if rem.is_zero():
            return chain
        chain.append(_normalized(-rem))


def _sign_variations(values: Sequence[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_root_bound(u: UniPoly) -> Fraction:
    """Strict bound B with every real root of u inside (-B, B)."""
    if u.is_zero():
        raise ZeroPolynomialError("zero polynomial has no root bound")
    if u.degree == 0:
        return Fraction(1)
    lead = abs(u.leading())
    return 1 + max(abs(c) for c in u.coeffs[:-1]) / lead


def sturm_count(u: UniPoly, a: Coord, b: Coord) -> int:
    """Number of distinct real roots of u in the open interval (a, b).

    The input is reduced to its squarefree part first, so multiple roots
    are counted once.  Endpoints must not be roots; callers perturb.
    """
    if u.is_zero():
        raise ZeroPolynomialError("cannot count roots of the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise PreconditionError("need a < b")
    if u.eval(a) == 0 or u.eval(b) == 0:
        raise EndpointRootError(f"root at bracket endpoint of ({a}, {b})")
    sf = squarefree_part(u)
    chain = sturm_chain(sf)
    va = _sign_variations([p.eval(a) for p in chain])
    vb = _sign_variations([p.eval(b) for p in chain])
    return va - vb


def _nonroot_split(u: UniPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi) that is not a root of u."""
    pieces = u.degree + 2
    for j in range(1, pieces):
        c = lo + (hi - lo) * Fraction(j, pieces)
        if u.eval(c) != 0:
            return c
    raise AssertionError("more roots than the degree allows")


def isolate_real_roots(u: UniPoly, lo: Coord, hi: Coord) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open rational intervals inside (lo, hi), each holding
    exactly one distinct real root of u; endpoints are never roots."""
    if u.is_zero():
        raise ZeroPolynomialError("cannot isolate roots of the zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if u.eval(lo) == 0 or u.eval(hi) == 0:
        raise EndpointRootError("root at isolation bracket endpoint")
    sf = squarefree_part(u)
    chain = sturm_chain(sf)

    def count(a: Fraction, b: Fraction) -> int:
        va = _sign_variations([p.eval(a) for p in chain])
        vb = _sign_variations([p.eval(b) for p in chain])
        return va - vb

    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, count(lo, hi))]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        c = _nonroot_split(sf, a, b)
        kl = count(a, c)
        stack.append((c, b, k - kl))
        stack.append((a, c, kl))
    return sorted(out)


def sample_sign_sequence(u: UniPoly, bound: Coord) -> list[int]:
    """Signs of u on the open intervals between consecutive real roots in
    (-bound, bound), left to right; with no roots there is one sign."""
    if u.is_zero():
        raise ZeroPolynomialError("zero polynomial has no sign sequence")
    bound = Fraction(bound)
    intervals = isolate_real_roots(u, -bound, bound)
    samples = [-bound] + [b for _, b in intervals]
    return [1 if u.eval(s) > 0 else -1 for s in samples]


def count_real_roots(u: UniPoly) -> int:
    """Distinct real roots over the whole line, via the Cauchy bracket."""
    if u.is_zero():
        raise ZeroPolynomialError("cannot count roots of the zero polynomial")
    if u.degree == 0:
        return 0
    bound = cauchy_root_bound(u)
    return sturm_count(u, -bound, bound)
