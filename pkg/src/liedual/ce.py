"""
Chevalley-Eilenberg complexes.

* ``ce_boundary_matrix`` / ``relative_ce_complex``: the free left U(g)-module
  complex K_i(g; h) = U(g) (x) wedge^i h with its boundary, plus the right
  U(g)-action (right multiplication on U(g), adjoint on wedge^i h).
* ``lie_cochain_complex`` / ``lie_chain_complex``: finite complexes computing
  H^*(g, M) and H_*(g, M) for a finite-dimensional module M.
* ``KCBimodule`` and ``hochschild_dims``: Hochschild (co)homology of U(g) with
  coefficients in a finite-dimensional k-central bimodule, through the
  adjoint module x.m = xm - mx.
"""

from dataclasses import dataclass
import random

from liedual.lie import (
    AmbientMismatch, LieAlgebraError, LieModule, NotAnIdeal, RepresentationViolation,
    adjoint_module, character_module, dual_module, sort_with_sign, tensor_module,
    trivial_module, unimodular_character, wedge_basis,
)
from liedual.linalg import (
    ONE, ZERO, NonzeroComposition, SparseMatrix, commutator, complex_cohomology_dims,
    dense_add, dense_mul, dense_zero,
)
from liedual.pbw import UEAElement, monomials, right_multiply_generator


class EquivarianceViolation(LieAlgebraError):
    def __init__(self, degree, basis_element, multiplier, difference):
        self.witness = (degree, basis_element, str(multiplier), str(difference))
        super().__init__("delta does not commute with right multiplication by %s on e_%r (degree %d)"
                         % (multiplier, basis_element, degree))


class FiniteComplex:
    """Finite complex of finite-dimensional Q-spaces in degrees 0..top.

    ``direction`` is +1 for a cochain complex (d: C^q -> C^{q+1}) and -1 for a
    chain complex (d: C_q -> C_{q-1}).  ``differentials[q]`` is the map out
    of degree q.  d o d = 0 is checked at construction.
    """

    def __init__(self, dims, differentials, direction=1, check=True):
        self.dims = tuple(dims)
        self.top = len(self.dims) - 1
        self.direction = direction
        self.differentials = dict(differentials)
        for q, m in self.differentials.items():
            tgt = q + direction
            if m.ncols != self.dims[q] or m.nrows != self.dims[tgt]:
                raise ValueError("differential out of degree %d has shape %r" % (q, m.shape))
        if check:
            self.check_square_zero()

    def _cochain_order(self):
        if self.direction == 1:
            degrees = list(range(self.top + 1))
        else:
            degrees = list(range(self.top, -1, -1))
        mats = [self.differentials.get(q, SparseMatrix.zero(self.dims[q + self.direction], self.dims[q]))
                for q in degrees[:-1]]
        return degrees, mats

    def check_square_zero(self):
        degrees, mats = self._cochain_order()
        for t in range(len(mats) - 1):
            comp = mats[t + 1] @ mats[t]
            if not comp.is_zero():
                raise NonzeroComposition(degrees[t], next(iter(comp.entries)))

    def cohomology(self):
        """Dimensions of H(degree q), indexed by q = 0..top."""
        degrees, mats = self._cochain_order()
        dims = [self.dims[q] for q in degrees]
        h = complex_cohomology_dims(mats, dims=dims, check=False).cohomology
        out = [0] * (self.top + 1)
        for q, v in zip(degrees, h):
            out[q] = v
        return tuple(out)

    homology = cohomology

    def euler_characteristic(self):
        return sum((-1) ** q * d for q, d in enumerate(self.dims))


# --- the relative complex K(g; h) over U(g) --------------------------------

@dataclass(frozen=True)
class UMatrix:
    """Matrix with entries in U(g); column c is the image of basis element c."""

    algebra: object
    nrows: int
    ncols: int
    entries: dict

    def get(self, r, c):
        return self.entries.get((r, c)) or UEAElement.zero(self.algebra)

    def max_degree(self):
        return max((u.degree() for u in self.entries.values()), default=0)


def _check_ideal(g, h):
    if h.algebra != g:
        raise AmbientMismatch("ideal belongs to another algebra")
    if not h.is_ideal():
        raise NotAnIdeal("subspace is not an ideal")


def ce_boundary_matrix(g, h, i):
    """Matrix of delta: K_i(g;h) -> K_{i-1}(g;h) in lexicographic wedge bases.

    delta(1 (x) h_1..h_i) = sum_p (-1)^(p+1) h_p (x) (..^h_p..)
                          + sum_{p<q} (-1)^(p+q) 1 (x) [h_p, h_q] ^ (..^h_p..^h_q..)
    """
    _check_ideal(g, h)
    m = h.m
    if not 1 <= i <= m:
        raise IndexError("boundary index %d outside 1..%d" % (i, m))
    src = wedge_basis(m, i)
    tgt = wedge_basis(m, i - 1)
    pos = {s: r for r, s in enumerate(tgt)}
    gens = [UEAElement.from_vector(g, row) for row in h.basis]
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            brackets[a, b] = h.coordinates(g.bracket(h.basis[a], h.basis[b]))
    entries = {}

    def add(r, c, u):
        cur = entries.get((r, c))
        entries[r, c] = u if cur is None else cur + u

    for col, S in enumerate(src):
        for p in range(i):
            sign = 1 if p % 2 == 0 else -1      # (-1)^(p+1) with p 1-based
            add(pos[S[:p] + S[p + 1:]], col, gens[S[p]] * sign)
        for p in range(i):
            for q in range(p + 1, i):
                sign = (-1) ** (p + q)          # (-1)^(p+q) is parity-invariant under 0-basing
                rest = S[:p] + S[p + 1:q] + S[q + 1:]
                for c, v in enumerate(brackets[S[p], S[q]]):
                    if not v:
                        continue
                    s2, T = sort_with_sign((c,) + rest)
                    if s2:
                        add(pos[T], col, UEAElement.constant(g, sign * s2 * v))
    entries = {k: u for k, u in entries.items() if u}
    return UMatrix(g, len(tgt), len(src), entries)


class FreeUComplex:
    """K_*(g; h): free left U(g)-modules of ranks binom(m, i), chain direction.

    ``differentials[i]`` is the UMatrix of delta: K_i -> K_{i-1} (i = 1..m).
    """

    side = "left"

    def __init__(self, algebra, ideal, differentials, max_raise=1):
        self.algebra = algebra
        self.ideal = ideal
        self.ranks = tuple(len(wedge_basis(ideal.m, i)) for i in range(ideal.m + 1))
        self.differentials = dict(differentials)
        self.max_raise = max_raise
        for u in self.differentials.values():
            if u.max_degree() > max_raise:
                raise ValueError("entry exceeds the declared filtration raise")

    @property
    def top(self):
        return self.ideal.m

    def compose(self, i):
        """Matrix of delta_{i-1} o delta_i (entry (R,S) = sum_T a_{T,S} b_{R,T})."""
        a = self.differentials[i]
        b = self.differentials[i - 1]
        out = {}
        for (t, s), u in a.entries.items():
            for (r, t2), w in b.entries.items():
                if t2 == t:
                    cur = out.get((r, s))
                    out[r, s] = u * w if cur is None else cur + u * w
        return {k: v for k, v in out.items() if v}

    def check(self):
        for i in range(2, self.top + 1):
            comp = self.compose(i)
            if comp:
                (r, s), u = next(iter(sorted(comp.items())))
                raise NonzeroComposition(i, (r, s, str(u)))


def relative_ce_complex(g, h):
    _check_ideal(g, h)
    diffs = {i: ce_boundary_matrix(g, h, i) for i in range(1, h.m + 1)}
    return FreeUComplex(g, h, diffs)


def check_delta_squared(g, h):
    """Symbolic check delta o delta = 0 in U(g); raises NonzeroComposition."""
    relative_ce_complex(g, h).check()


def right_adjoint_matrix(g, h, i, j):
    """Right action of x_j on wedge^i h: xi . x = [xi, x] extended as a derivation."""
    basis = wedge_basis(h.m, i)
    pos = {s: r for r, s in enumerate(basis)}
    xj = g.basis_vector(j)
    ad = [h.coordinates(g.bracket(row, xj)) for row in h.basis]
    out = {}
    for col, S in enumerate(basis):
        for p, s in enumerate(S):
            for b, v in enumerate(ad[s]):
                if not v:
                    continue
                sign, T = sort_with_sign(S[:p] + (b,) + S[p + 1:])
                if sign:
                    key = (pos[T], col)
                    out[key] = out.get(key, ZERO) + sign * v
    return {k: v for k, v in out.items() if v}


class _RelativeComplexOps:
    # Vectors in K_i are dicts: wedge index -> UEAElement.

    def __init__(self, g, h):
        self.g = g
        self.h = h
        self.cx = relative_ce_complex(g, h)
        self.bases = [wedge_basis(h.m, i) for i in range(h.m + 1)]
        self._right = {}

    def right_matrix(self, i, j):
        key = (i, j)
        if key not in self._right:
            self._right[key] = right_adjoint_matrix(self.g, self.h, i, j)
        return self._right[key]

    def delta(self, i, vec):
        mat = self.cx.differentials[i]
        out = {}
        for (r, c), a in mat.entries.items():
            u = vec.get(c)
            if u:
                out[r] = out.get(r, UEAElement.zero(self.g)) + u * a
        return {k: v for k, v in out.items() if v}

    def right_generator(self, i, vec, j):
        out = {}
        for c, u in vec.items():
            out[c] = out.get(c, UEAElement.zero(self.g)) + right_multiply_generator(u, j)
        for (r, c), v in self.right_matrix(i, j).items():
            u = vec.get(c)
            if u:
                out[r] = out.get(r, UEAElement.zero(self.g)) + u * v
        return {k: v for k, v in out.items() if v}

    def right_element(self, i, vec, w):
        out = {}
        for mono, coef in w.terms.items():
            cur = vec
            for j, e in enumerate(mono):
                for _ in range(e):
                    cur = self.right_generator(i, cur, j)
            for k, u in cur.items():
                out[k] = out.get(k, UEAElement.zero(self.g)) + u * coef
        return {k: v for k, v in out.items() if v}


def random_element(g, rng, max_degree=2, max_coef=3, terms=3):
    monos = list(monomials(g.n, max_degree))
    out = {}
    for _ in range(terms):
        out[rng.choice(monos)] = rng.randint(-max_coef, max_coef)
    return UEAElement(g, out)


def check_right_equivariance(g, h, samples=0, seed=0):
    """Verify delta(xi . w) = delta(xi) . w on all generators and random w.

    Returns the number of identities checked.
    """
    _check_ideal(g, h)
    ops = _RelativeComplexOps(g, h)
    rng = random.Random(seed)
    count = 0
    one = UEAElement.one(g)
    for i in range(1, h.m + 1):
        for S in range(len(ops.bases[i])):
            e = {S: one}
            de = ops.delta(i, e)
            for j in range(g.n):
                lhs = ops.delta(i, ops.right_generator(i, e, j))
                rhs = ops.right_generator(i - 1, de, j)
                if lhs != rhs:
                    diff = {k: lhs.get(k, UEAElement.zero(g)) - rhs.get(k, UEAElement.zero(g))
                            for k in set(lhs) | set(rhs)}
                    raise EquivarianceViolation(i, ops.bases[i][S], g.labels[j], diff)
                count += 1
    if h.m:
        for _ in range(samples):
            w = random_element(g, rng)
            i = rng.randint(1, h.m)
            S = rng.randrange(len(ops.bases[i]))
            e = {S: one}
            lhs = ops.delta(i, ops.right_element(i, e, w))
            rhs = ops.right_element(i - 1, ops.delta(i, e), w)
            if lhs != rhs:
                raise EquivarianceViolation(i, ops.bases[i][S], w, "mismatch")
            count += 1
    return count


def specialize_trivial(g, h):
    """k (x)_U K(g; h): entries replaced by their constant terms."""
    cx = relative_ce_complex(g, h)
    dims = cx.ranks
    diffs = {}
    for i, mat in cx.differentials.items():
        ent = {k: u.constant_term() for k, u in mat.entries.items()}
        diffs[i] = SparseMatrix(mat.nrows, mat.ncols, ent)
    return FiniteComplex(dims, diffs, direction=-1)


# --- Lie algebra (co)homology with finite coefficients ---------------------

def _check_module(g, M):
    if M.algebra != g:
        raise AmbientMismatch("module is over a different Lie algebra")


def lie_cochain_complex(g, M):
    """C^q = Hom(wedge^q g, M); basis (S, a) with S lexicographic, a fastest.

    (d phi)(x_1..x_{q+1}) = sum_p (-1)^(p+1) x_p.phi(..^x_p..)
                          + sum_{p<r} (-1)^(p+r) phi([x_p, x_r], ..^x_p..^x_r..)
    """
    _check_module(g, M)
    n, d = g.n, M.dim
    bases = [wedge_basis(n, q) for q in range(n + 1)]
    pos = [{S: i for i, S in enumerate(b)} for b in bases]
    diffs = {}
    for q in range(n):
        ent = {}

        def add(r, c, v):
            ent[r, c] = ent.get((r, c), ZERO) + v

        for si, S in enumerate(bases[q + 1]):
            for p in range(q + 1):
                sign = 1 if p % 2 == 0 else -1
                T = pos[q][S[:p] + S[p + 1:]]
                act = M.actions[S[p]]
                for a in range(d):
                    for b in range(d):
                        if act[b][a]:
                            add(si * d + b, T * d + a, sign * act[b][a])
            for p in range(q + 1):
                for r in range(p + 1, q + 1):
                    sign = (-1) ** (p + r)
                    rest = S[:p] + S[p + 1:r] + S[r + 1:]
                    for k, v in g.bracket_basis(S[p], S[r]).items():
                        s2, T = sort_with_sign((k,) + rest)
                        if s2:
                            for a in range(d):
                                add(si * d + a, pos[q][T] * d + a, sign * s2 * v)
        diffs[q] = SparseMatrix(len(bases[q + 1]) * d, len(bases[q]) * d, ent)
    dims = [len(b) * d for b in bases]
    return FiniteComplex(dims, diffs, direction=1)


def lie_chain_complex(g, M):
    """C_q = wedge^q g (x) M; basis (S, a) with a fastest.

    d(x_1..x_q (x) m) = sum_p (-1)^p (..^x_p..) (x) x_p.m
                      + sum_{p<r} (-1)^(p+r) [x_p, x_r] ^ (..^x_p..^x_r..) (x) m
    """
    _check_module(g, M)
    n, d = g.n, M.dim
    bases = [wedge_basis(n, q) for q in range(n + 1)]
    pos = [{S: i for i, S in enumerate(b)} for b in bases]
    diffs = {}
    for q in range(1, n + 1):
        ent = {}

        def add(r, c, v):
            ent[r, c] = ent.get((r, c), ZERO) + v

        for si, S in enumerate(bases[q]):
            for p in range(q):
                sign = -1 if p % 2 == 0 else 1      # (-1)^p with p 1-based
                T = pos[q - 1][S[:p] + S[p + 1:]]
                act = M.actions[S[p]]
                for a in range(d):
                    for b in range(d):
                        if act[b][a]:
                            add(T * d + b, si * d + a, sign * act[b][a])
            for p in range(q):
                for r in range(p + 1, q):
                    sign = (-1) ** (p + r)
                    rest = S[:p] + S[p + 1:r] + S[r + 1:]
                    for k, v in g.bracket_basis(S[p], S[r]).items():
                        s2, T = sort_with_sign((k,) + rest)
                        if s2:
                            for a in range(d):
                                add(pos[q - 1][T] * d + a, si * d + a, sign * s2 * v)
        diffs[q] = SparseMatrix(len(bases[q - 1]) * d, len(bases[q]) * d, ent)
    dims = [len(b) * d for b in bases]
    return FiniteComplex(dims, diffs, direction=-1)


def lie_cohomology(g, M):
    return lie_cochain_complex(g, M).cohomology()


def lie_homology(g, M):
    return lie_chain_complex(g, M).homology()


# --- k-central bimodules ---------------------------------------------------

class KCBimodule:
    """Two commuting actions on a finite-dimensional space.

    Right action matrices satisfy rhoR([x_i,x_j]) = rhoR[j] rhoR[i] - rhoR[i] rhoR[j].
    """

    def __init__(self, algebra, left, right, check=True, name=None):
        self.algebra = algebra
        self.left = tuple(tuple(tuple(r) for r in a) for a in left)
        self.right = tuple(tuple(tuple(r) for r in a) for a in right)
        self.name = name
        n = algebra.n
        if len(self.left) != n or len(self.right) != n:
            raise LieAlgebraError("need one left and one right matrix per basis element")
        self.dim = len(self.left[0]) if self.left else 0
        if check:
            self.validate()

    def validate(self):
        g = self.algebra
        LieModule(g, self.left)   # left representation law
        for i in range(g.n):
            for j in range(i + 1, g.n):
                br = g.bracket(g.basis_vector(i), g.basis_vector(j))
                lhs = dense_zero(self.dim)
                for k, c in enumerate(br):
                    if c:
                        lhs = dense_add(lhs, self.right[k], c)
                if lhs != commutator(self.right[j], self.right[i]):
                    raise RepresentationViolation(i, j)
        for i in range(g.n):
            for j in range(g.n):
                if dense_mul(self.left[i], self.right[j]) != dense_mul(self.right[j], self.left[i]):
                    raise LieAlgebraError("left and right actions do not commute (%d, %d)" % (i, j))


def bimodule_from_left(M, name=None):
    """Left action M, trivial right action."""
    zero = [dense_zero(M.dim)] * M.algebra.n
    return KCBimodule(M.algebra, M.actions, zero, name=name or M.name)


def trivial_bimodule(g):
    return bimodule_from_left(trivial_module(g), name="trivial")


def adjoint_bimodule(g):
    return bimodule_from_left(adjoint_module(g), name="adjoint")


def dual_adjoint_bimodule(g):
    return bimodule_from_left(dual_module(adjoint_module(g)), name="dual-adjoint")


def adjoint_of_bimodule(B):
    """The g-module x.m = xm - mx."""
    acts = [dense_add(l, r, -ONE) for l, r in zip(B.left, B.right)]
    return LieModule(B.algebra, acts)


def twist_module(M):
    """M (x) wedge^n g^*, realized as M tensor the unimodular character."""
    return tensor_module(M, character_module(unimodular_character(M.algebra)))


def hochschild_dims(g, B):
    """(dim H^q(U(g), B), dim H_q(U(g), B)) for q = 0..n."""
    if B.algebra != g:
        raise AmbientMismatch("bimodule is over a different Lie algebra")
    M = adjoint_of_bimodule(B)
    return lie_cohomology(g, M), lie_homology(g, M)
