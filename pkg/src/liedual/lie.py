"""
Finite-dimensional Lie algebras over Q given by structure constants, their
ideals and quotients, and finite-dimensional modules given by action
matrices.

Conventions: ``[x_i, x_j] = sum_k c[i][j][k] x_k``.  A module's action
matrix ``rho[i]`` acts on column vectors, so column ``a`` of ``rho[i]`` is
``x_i . v_a``.
"""

from fractions import Fraction
from itertools import combinations
from math import comb
import hashlib
import json

from liedual.linalg import (
    ONE, ZERO, commutator, dense_add, dense_scale, dense_trace,
    dense_transpose, dense_zero, format_scalar, inverse, rank_of_vectors,
    rref, scalar,
)


class LieAlgebraError(ValueError):
    pass


class AntisymmetryViolation(LieAlgebraError):
    def __init__(self, i, j, labels=None):
        self.i, self.j = i, j
        self.witness = (i, j)
        name = (labels[i], labels[j]) if labels else (i, j)
        super().__init__("antisymmetry fails for [%s, %s]" % name)


class JacobiViolation(LieAlgebraError):
    def __init__(self, i, j, k, labels=None, value=None):
        self.i, self.j, self.k = i, j, k
        self.witness = (i, j, k)
        self.value = value
        name = (labels[i], labels[j], labels[k]) if labels else (i, j, k)
        super().__init__("Jacobi identity fails for (%s, %s, %s)" % name)


class NotAnIdeal(LieAlgebraError):
    pass


class RepresentationViolation(LieAlgebraError):
    def __init__(self, i, j):
        self.witness = (i, j)
        super().__init__("rho([x_%d, x_%d]) != [rho(x_%d), rho(x_%d)]" % (i, j, i, j))


class NotACharacter(LieAlgebraError):
    pass


class AmbientMismatch(LieAlgebraError):
    pass


def sort_with_sign(seq):
    """Sort a sequence of distinct indices; return (sign, sorted tuple).

    Returns (0, None) if an index repeats (the wedge vanishes).
    """
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, None
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign, tuple(seq)


def wedge_basis(n, p):
    return list(combinations(range(n), p))


class LieAlgebra:
    """Structure constants over Q.

    The constructor does not enforce the axioms, so that invalid input can be
    represented and diagnosed; call ``validate``.
    """

    def __init__(self, labels, constants, name=None):
        self.labels = tuple(str(s) for s in labels)
        if len(set(self.labels)) != len(self.labels):
            raise LieAlgebraError("duplicate basis labels")
        self.n = len(self.labels)
        self.name = name
        c = {}
        items = constants.items() if hasattr(constants, "items") else constants
        for (i, j), vec in items:
            vals = vec.items() if hasattr(vec, "items") else enumerate(vec)
            row = {}
            for k, v in vals:
                v = scalar(v)
                if not (0 <= i < self.n and 0 <= j < self.n and 0 <= k < self.n):
                    raise LieAlgebraError("structure constant index out of range")
                if v:
                    row[k] = row.get(k, ZERO) + v
            row = {k: v for k, v in row.items() if v}
            if row:
                c[i, j] = row
        self._c = c

    @classmethod
    def from_brackets(cls, labels, brackets, name=None):
        """Build from brackets given on label pairs; partners filled by antisymmetry."""
        labels = tuple(labels)
        index = {s: i for i, s in enumerate(labels)}
        c = {}
        for (a, b), value in brackets.items():
            i, j = index[a], index[b]
            vec = {index[k]: scalar(v) for k, v in value.items()}
            c[i, j] = vec
            c[j, i] = {k: -v for k, v in vec.items()}
        return cls(labels, c, name=name)

    @classmethod
    def abelian(cls, n, name=None):
        labels = ["x%d" % (i + 1) for i in range(n)]
        return cls(labels, {}, name=name or "abelian%d" % n)

    def constant(self, i, j, k):
        return self._c.get((i, j), {}).get(k, ZERO)

    def bracket_basis(self, i, j):
        """[x_i, x_j] as a sparse dict k -> coefficient."""
        return dict(self._c.get((i, j), {}))

    def bracket(self, u, v):
        """Bracket of coordinate vectors."""
        out = [ZERO] * self.n
        for (i, j), row in self._c.items():
            a = u[i] * v[j]
            if a:
                for k, w in row.items():
                    out[k] += a * w
        return tuple(out)

    def basis_vector(self, i):
        return tuple(ONE if k == i else ZERO for k in range(self.n))

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise LieAlgebraError("unknown basis label %r" % label) from None

    def nonzero_brackets(self):
        return {k: dict(v) for k, v in sorted(self._c.items())}

    def canonical_json(self):
        brackets = [
            [i, j, [[k, format_scalar(v)] for k, v in sorted(row.items())]]
            for (i, j), row in sorted(self._c.items())
        ]
        return json.dumps({"basis": list(self.labels), "c": brackets}, separators=(",", ":"))

    def digest(self):
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()[:16]

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.labels == other.labels and self._c == other._c

    def __hash__(self):
        return hash((self.labels, frozenset((k, frozenset(v.items())) for k, v in self._c.items())))

    def __repr__(self):
        return "LieAlgebra(%s, n=%d)" % (self.name or "?", self.n)


def validate(g):
    """Raise AntisymmetryViolation or JacobiViolation at the first bad index."""
    n = g.n
    for i in range(n):
        for j in range(i, n):
            a, b = g.bracket_basis(i, j), g.bracket_basis(j, i)
            keys = set(a) | set(b)
            if any(a.get(k, ZERO) != -b.get(k, ZERO) for k in keys):
                raise AntisymmetryViolation(i, j, g.labels)
    for i, j, k in combinations(range(n), 3):
        xi, xj, xk = g.basis_vector(i), g.basis_vector(j), g.basis_vector(k)
        total = [ZERO] * n
        for a, b, c in ((xi, xj, xk), (xj, xk, xi), (xk, xi, xj)):
            for t, v in enumerate(g.bracket(a, g.bracket(b, c))):
                total[t] += v
        if any(total):
            raise JacobiViolation(i, j, k, g.labels, tuple(total))


def is_valid(g):
    try:
        validate(g)
    except LieAlgebraError:
        return False
    return True


class LieIdeal:
    """A subspace of g spanned by the rows of ``basis`` (kept in RREF)."""

    def __init__(self, algebra, rows, check=True):
        self.algebra = algebra
        rows = [tuple(scalar(v) for v in r) for r in rows]
        for r in rows:
            if len(r) != algebra.n:
                raise LieAlgebraError("ideal row has wrong length")
        if rank_of_vectors([dict(enumerate(r)) for r in rows]) != len(rows):
            raise LieAlgebraError("ideal basis rows are linearly dependent")
        reduced, pivots = rref(rows, algebra.n)
        self.basis = tuple(tuple(r) for r in reduced)
        self.pivots = tuple(pivots)
        self.m = len(self.basis)
        if check and not self.is_ideal():
            raise NotAnIdeal("subspace is not an ideal of %s" % (algebra.name or "g"))

    @classmethod
    def span(cls, g, labels, check=True):
        rows = [g.basis_vector(g.index(s)) for s in labels]
        return cls(g, rows, check=check)

    @classmethod
    def zero(cls, g):
        return cls(g, [])

    @classmethod
    def whole(cls, g):
        return cls(g, [g.basis_vector(i) for i in range(g.n)])

    @classmethod
    def commutator(cls, g):
        vecs = [g.bracket(g.basis_vector(i), g.basis_vector(j))
                for i in range(g.n) for j in range(i + 1, g.n)]
        reduced, _ = rref([v for v in vecs if any(v)], g.n)
        return cls(g, reduced)

    @classmethod
    def center(cls, g):
        from liedual.linalg import SparseMatrix, kernel_basis
        # z is central iff [x_i, z] = 0 for all i: stack ad matrices
        rows = []
        for i in range(g.n):
            for k in range(g.n):
                rows.append([g.constant(i, j, k) for j in range(g.n)])
        ker = kernel_basis(SparseMatrix.from_dense(rows, g.n))
        return cls(g, ker)

    def contains(self, v):
        try:
            self.coordinates(v)
        except ValueError:
            return False
        return True

    def coordinates(self, v):
        """Coordinates of v in the ideal basis; ValueError if v is not in the span."""
        v = tuple(scalar(x) for x in v)
        coords = tuple(v[p] for p in self.pivots)
        recon = [ZERO] * self.algebra.n
        for c, row in zip(coords, self.basis):
            if c:
                for k, x in enumerate(row):
                    recon[k] += c * x
        if tuple(recon) != v:
            raise ValueError("vector not in the subspace")
        return coords

    def is_ideal(self):
        g = self.algebra
        for i in range(g.n):
            xi = g.basis_vector(i)
            for row in self.basis:
                if not self.contains(g.bracket(xi, row)):
                    return False
        return True

    def labels(self):
        out = []
        for a, row in enumerate(self.basis):
            nz = [k for k, v in enumerate(row) if v]
            if len(nz) == 1 and row[nz[0]] == 1:
                out.append(self.algebra.labels[nz[0]])
            else:
                out.append("h%d" % (a + 1))
        return out

    def as_algebra(self):
        """The ideal as a Lie algebra in its own basis."""
        c = {}
        for a in range(self.m):
            for b in range(self.m):
                coords = self.coordinates(self.algebra.bracket(self.basis[a], self.basis[b]))
                if any(coords):
                    c[a, b] = dict(enumerate(coords))
        return LieAlgebra(self.labels(), c, name="ideal")

    def __repr__(self):
        return "LieIdeal(dim=%d in %r)" % (self.m, self.algebra)


class LieModule:
    """Finite-dimensional left module: one d x d action matrix per basis element."""

    def __init__(self, algebra, actions, check=True, name=None):
        self.algebra = algebra
        if len(actions) != algebra.n:
            raise LieAlgebraError("need one action matrix per basis element")
        acts = tuple(tuple(tuple(scalar(v) for v in row) for row in mat) for mat in actions)
        self.dim = len(acts[0]) if acts else 0
        for mat in acts:
            if len(mat) != self.dim or any(len(row) != self.dim for row in mat):
                raise LieAlgebraError("action matrices must be square of equal size")
        self.actions = acts
        self.name = name
        if check:
            self.validate()

    def act_on(self, i, vec):
        mat = self.actions[i]
        return tuple(sum((mat[r][c] * vec[c] for c in range(self.dim) if vec[c]), ZERO) for r in range(self.dim))

    def action_of(self, vec):
        """Action matrix of the Lie algebra element with coordinates vec."""
        out = dense_zero(self.dim)
        for i, c in enumerate(vec):
            if c:
                out = dense_add(out, self.actions[i], c)
        return out

    def validate(self):
        g = self.algebra
        for i in range(g.n):
            for j in range(i + 1, g.n):
                lhs = self.action_of(g.bracket(g.basis_vector(i), g.basis_vector(j)))
                rhs = commutator(self.actions[i], self.actions[j])
                if lhs != rhs:
                    raise RepresentationViolation(i, j)

    def __eq__(self, other):
        if not isinstance(other, LieModule):
            return NotImplemented
        return self.algebra == other.algebra and self.actions == other.actions

    def __hash__(self):
        return hash((self.algebra, self.actions))

    def __repr__(self):
        return "LieModule(dim=%d over %r)" % (self.dim, self.algebra)


class Character:
    """A Lie homomorphism g -> k, stored by its values on the basis."""

    def __init__(self, algebra, values, check=True):
        self.algebra = algebra
        self.values = tuple(scalar(v) for v in values)
        if len(self.values) != algebra.n:
            raise LieAlgebraError("character needs one value per basis element")
        if check:
            for i in range(algebra.n):
                for j in range(i + 1, algebra.n):
                    br = algebra.bracket_basis(i, j)
                    if sum((v * self.values[k] for k, v in br.items()), ZERO):
                        raise NotACharacter("does not vanish on [%s, %s]"
                                            % (algebra.labels[i], algebra.labels[j]))

    def is_zero(self):
        return not any(self.values)

    def __neg__(self):
        return Character(self.algebra, [-v for v in self.values], check=False)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.algebra == other.algebra and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "Character(%s)" % ", ".join(format_scalar(v) for v in self.values)


def _check_same(a, b):
    if a != b:
        raise AmbientMismatch("modules live over different Lie algebras")


def trivial_module(g, dim=1):
    return LieModule(g, [dense_zero(dim)] * g.n, check=False, name="trivial")


def character_module(chi):
    return LieModule(chi.algebra, [((v,),) for v in chi.values], check=False, name="character")


def adjoint_module(g):
    acts = [tuple(tuple(g.constant(i, j, k) for j in range(g.n)) for k in range(g.n))
            for i in range(g.n)]
    return LieModule(g, acts, name="adjoint")


def exterior_power(M, p):
    """p-th exterior power; basis = index sets in lexicographic order."""
    if not 0 <= p <= M.dim:
        raise LieAlgebraError("exterior power %d out of range 0..%d" % (p, M.dim))
    basis = wedge_basis(M.dim, p)
    pos = {s: a for a, s in enumerate(basis)}
    N = len(basis)
    acts = []
    for mat in M.actions:
        out = [[ZERO] * N for _ in range(N)]
        for col, S in enumerate(basis):
            for j, s in enumerate(S):
                for b in range(M.dim):
                    v = mat[b][s]
                    if not v:
                        continue
                    sign, T = sort_with_sign(S[:j] + (b,) + S[j + 1:])
                    if sign:
                        out[pos[T]][col] += sign * v
        acts.append(out)
    return LieModule(M.algebra, acts, check=False, name="wedge%d" % p)


def dual_module(M):
    """Left-module dual: rho*(x) = -rho(x)^T."""
    acts = [dense_scale(dense_transpose(a), -ONE) if M.dim else a for a in M.actions]
    return LieModule(M.algebra, acts, check=False, name="dual")


def tensor_module(M, N):
    """M (x) N with basis (a, b) -> a * dim N + b."""
    _check_same(M.algebra, N.algebra)
    dm, dn = M.dim, N.dim
    acts = []
    for am, an in zip(M.actions, N.actions):
        out = [[ZERO] * (dm * dn) for _ in range(dm * dn)]
        for a in range(dm):
            for b in range(dn):
                col = a * dn + b
                for a2 in range(dm):
                    if am[a2][a]:
                        out[a2 * dn + b][col] += am[a2][a]
                for b2 in range(dn):
                    if an[b2][b]:
                        out[a * dn + b2][col] += an[b2][b]
        acts.append(out)
    return LieModule(M.algebra, acts, check=False, name="tensor")


def quotient_algebra(g, h):
    """g/h on a greedy complement of standard basis vectors.

    Returns (quotient, projection) with projection an (n-m) x n matrix.
    """
    if h.algebra != g:
        raise AmbientMismatch("ideal belongs to another algebra")
    if not h.is_ideal():
        raise NotAnIdeal("cannot form quotient by a non-ideal")
    chosen = []
    span = [dict(enumerate(r)) for r in h.basis]
    r = len(span)
    for j in range(g.n):
        trial = span + [{j: ONE}]
        if rank_of_vectors(trial) > r:
            span, r = trial, r + 1
            chosen.append(j)
    # columns of the change of basis: complement vectors, then ideal rows
    cols = [g.basis_vector(j) for j in chosen] + list(h.basis)
    mat = [[cols[c][r_] for c in range(g.n)] for r_ in range(g.n)]
    inv = inverse(mat) if g.n else []
    q = len(chosen)
    projection = tuple(tuple(inv[a][j] for j in range(g.n)) for a in range(q))

    def project(v):
        return tuple(sum((projection[a][j] * v[j] for j in range(g.n) if v[j]), ZERO) for a in range(q))

    c = {}
    for a in range(q):
        for b in range(q):
            vec = project(g.bracket(g.basis_vector(chosen[a]), g.basis_vector(chosen[b])))
            if any(vec):
                c[a, b] = dict(enumerate(vec))
    labels = [g.labels[j] for j in chosen]
    name = "%s/ideal" % g.name if g.name else None
    return LieAlgebra(labels, c, name=name), projection


def trace_character(M):
    """Raw traces (tr rho(x_1), ..., tr rho(x_n)); not necessarily a Character."""
    return tuple(dense_trace(a) for a in M.actions)


def unimodular_character(g):
    """lambda(x) = -tr(ad x); zero iff g is unimodular."""
    traces = [sum((g.constant(i, j, j) for j in range(g.n)), ZERO) for i in range(g.n)]
    return Character(g, [-t for t in traces])


def binomial_dims(n, d=1):
    return tuple(comb(n, q) * d for q in range(n + 1))

