"""
Arithmetic in the universal enveloping algebra U(g) via PBW normal forms.

A monomial is an exponent tuple ``(a_1, ..., a_n)`` standing for the ordered
product x_1^a_1 ... x_n^a_n.  Products are straightened by rewriting
``x_j x_i = x_i x_j + [x_j, x_i]`` for j > i.
"""

from fractions import Fraction
from itertools import product
from math import comb
import weakref

from liedual.lie import AmbientMismatch, Character, LieAlgebraError, unimodular_character
from liedual.linalg import ONE, ZERO, format_scalar, scalar


def compositions(n, d):
    """Exponent vectors of length n and total degree d, lexicographically descending."""
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in compositions(n - 1, d - first):
            yield (first,) + rest


def monomials(n, D):
    """All monomials of degree <= D, by degree then lex-descending."""
    for d in range(D + 1):
        yield from compositions(n, d)


def monomials_of_degree(n, d):
    return list(compositions(n, d))


def filtration_dim(g, D):
    """dim F_D U(g) = binom(n + D, n)."""
    n = g if isinstance(g, int) else g.n
    return comb(n + D, n)


def _bump(a, i, by=1):
    return a[:i] + (a[i] + by,) + a[i + 1:]


def _add_into(acc, terms, coef=ONE):
    for m, v in terms.items():
        w = acc.get(m, ZERO) + coef * v
        if w:
            acc[m] = w
        else:
            acc.pop(m, None)


class _Tables:
    # Memo tables for one algebra.  Entries are pure functions of their keys,
    # so concurrent fills at worst recompute the same value.

    def __init__(self, g):
        self.n = g.n
        self.brackets = {(j, i): g.bracket_basis(j, i) for j in range(g.n) for i in range(j)}
        self.gen = {}
        self.mono = {}

    def gen_times(self, j, b):
        """x_j * x^b in normal form."""
        key = (j, b)
        hit = self.gen.get(key)
        if hit is not None:
            return hit
        i = next((t for t, e in enumerate(b) if e), None)
        if i is None or j <= i:
            res = {_bump(b, j): ONE}
        else:
            rest = _bump(b, i, -1)
            res = {}
            for c, v in self.gen_times(j, rest).items():
                _add_into(res, self.gen_times(i, c), v)
            for k, v in self.brackets[j, i].items():
                _add_into(res, self.gen_times(k, rest), v)
        self.gen[key] = res
        return res

    def mono_times(self, a, b):
        """x^a * x^b in normal form."""
        key = (a, b)
        hit = self.mono.get(key)
        if hit is not None:
            return hit
        i = next((t for t in range(len(a) - 1, -1, -1) if a[t]), None)
        if i is None:
            res = {b: ONE}
        else:
            head = _bump(a, i, -1)
            res = {}
            for c, v in self.gen_times(i, b).items():
                _add_into(res, self.mono_times(head, c), v)
        self.mono[key] = res
        return res


_TABLES = weakref.WeakKeyDictionary()


def _tables(g):
    t = _TABLES.get(g)
    if t is None:
        t = _TABLES.setdefault(g, _Tables(g))
    return t


class UEAElement:
    """Element of U(g): a map from PBW monomials to nonzero rationals."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        clean = {}
        for m, v in (terms or {}).items():
            m = tuple(m)
            if len(m) != algebra.n or any(e < 0 for e in m):
                raise ValueError("bad monomial %r" % (m,))
            v = scalar(v)
            if v:
                clean[m] = clean.get(m, ZERO) + v
        self.terms = {m: v for m, v in clean.items() if v}

    @classmethod
    def zero(cls, g):
        return cls(g)

    @classmethod
    def one(cls, g):
        return cls(g, {(0,) * g.n: ONE})

    @classmethod
    def constant(cls, g, c):
        return cls(g, {(0,) * g.n: c})

    @classmethod
    def generator(cls, g, i):
        return cls(g, {tuple(1 if k == i else 0 for k in range(g.n)): ONE})

    @classmethod
    def monomial(cls, g, a, coef=ONE):
        return cls(g, {tuple(a): coef})

    @classmethod
    def from_vector(cls, g, vec):
        """The degree-1 element sum_k vec[k] x_k."""
        return cls(g, {tuple(1 if t == k else 0 for t in range(g.n)): v for k, v in enumerate(vec) if v})

    @classmethod
    def _raw(cls, g, terms):
        obj = cls.__new__(cls)
        obj.algebra = g
        obj.terms = terms
        return obj

    def degree(self):
        """Filtration degree; None for the zero element."""
        return max((sum(m) for m in self.terms), default=None)

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * self.algebra.n, ZERO)

    def top_part(self):
        d = self.degree()
        return UEAElement._raw(self.algebra, {m: v for m, v in self.terms.items() if sum(m) == d})

    def truncate(self, D):
        return UEAElement._raw(self.algebra, {m: v for m, v in self.terms.items() if sum(m) <= D})

    def _same(self, other):
        if self.algebra != other.algebra:
            raise AmbientMismatch("elements of different enveloping algebras")

    def __add__(self, other):
        if not isinstance(other, UEAElement):
            if other == 0:
                return self
            other = UEAElement.constant(self.algebra, other)
        self._same(other)
        terms = dict(self.terms)
        _add_into(terms, other.terms)
        return UEAElement._raw(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return UEAElement._raw(self.algebra, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            return multiply(self, other)
        c = scalar(other)
        if not c:
            return UEAElement.zero(self.algebra)
        return UEAElement._raw(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, other):
        c = scalar(other)
        if not c:
            return UEAElement.zero(self.algebra)
        return UEAElement._raw(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, k):
        out = UEAElement.one(self.algebra)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UEAElement):
            return self.algebra == other.algebra and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == UEAElement.constant(self.algebra, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mv: (-sum(mv[0]), tuple(-e for e in mv[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, v in self.sorted_terms():
            word = "*".join(self.algebra.labels[i] + ("^%d" % e if e > 1 else "")
                            for i, e in enumerate(m) if e)
            if not word:
                parts.append(format_scalar(v))
            elif v == 1:
                parts.append(word)
            elif v == -1:
                parts.append("-" + word)
            else:
                parts.append("%s*%s" % (format_scalar(v), word))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "UEAElement(%s)" % self


def multiply(u, v):
    """PBW normal form of u*v."""
    u._same(v)
    t = _tables(u.algebra)
    out = {}
    for a, x in u.terms.items():
        for b, y in v.terms.items():
            _add_into(out, t.mono_times(a, b), x * y)
    return UEAElement._raw(u.algebra, out)


def gen_times_monomial(g, j, b):
    """x_j * x^b as a terms dict (shared memo; do not mutate)."""
    return _tables(g).gen_times(j, tuple(b))


def monomial_times(g, a, b):
    """x^a * x^b as a terms dict (shared memo; do not mutate)."""
    return _tables(g).mono_times(tuple(a), tuple(b))


def left_multiply_generator(j, u):
    g = u.algebra
    out = {}
    for b, v in u.terms.items():
        _add_into(out, gen_times_monomial(g, j, b), v)
    return UEAElement._raw(g, out)


def right_multiply_generator(u, j):
    g = u.algebra
    e = tuple(1 if k == j else 0 for k in range(g.n))
    out = {}
    for a, v in u.terms.items():
        _add_into(out, monomial_times(g, a, e), v)
    return UEAElement._raw(g, out)


class FilteredAutomorphism:
    """Generator shift x_i -> x_i + c_i; an automorphism iff c is a character."""

    def __init__(self, algebra, shifts):
        self.algebra = algebra
        try:
            Character(algebra, shifts)
        except LieAlgebraError as exc:
            raise LieAlgebraError("shift does not extend to an automorphism: %s" % exc) from None
        self.shifts = tuple(scalar(c) for c in shifts)

    def is_identity(self):
        return not any(self.shifts)

    def inverse(self):
        return FilteredAutomorphism(self.algebra, [-c for c in self.shifts])

    def image_of_generator(self, i):
        return UEAElement.generator(self.algebra, i) + self.shifts[i]

    def __call__(self, u):
        return apply_automorphism(self, u)

    def __eq__(self, other):
        if not isinstance(other, FilteredAutomorphism):
            return NotImplemented
        return self.algebra == other.algebra and self.shifts == other.shifts

    def __hash__(self):
        return hash(self.shifts)

    def __repr__(self):
        return "FilteredAutomorphism(%s)" % ", ".join(format_scalar(c) for c in self.shifts)


def apply_automorphism(gamma, u):
    """Substitute x_i -> x_i + c_i.

    (x_1+c_1)^a_1 ... (x_n+c_n)^a_n expands binomially straight into PBW
    order, so no rewriting is needed.
    """
    if gamma.algebra != u.algebra:
        raise AmbientMismatch("automorphism and element over different algebras")
    c = gamma.shifts
    out = {}
    for a, v in u.terms.items():
        for k in product(*(range(e + 1) for e in a)):
            coef = v
            for ci, ai, ki in zip(c, a, k):
                if ai != ki:
                    coef *= comb(ai, ki) * ci ** (ai - ki)
                    if not coef:
                        break
            if coef:
                _add_into(out, {k: coef})
    return UEAElement._raw(u.algebra, out)


def dualizing_automorphism(g):
    """gamma(x) = x - tr(ad x)."""
    return FilteredAutomorphism(g, unimodular_character(g).values)
