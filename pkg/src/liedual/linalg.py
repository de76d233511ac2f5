"""
Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction``.  Sparse matrices are immutable maps
(row, col) -> nonzero scalar; rank uses fraction-free integer elimination on
the rows, kernels use reduced row echelon form.
"""

from fractions import Fraction
from dataclasses import dataclass
from math import gcd, lcm
from types import MappingProxyType

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class ComplexError(ValueError):
    pass


class CompositionMismatch(ComplexError):
    pass


class NonzeroComposition(ComplexError):
    """d_{q+1} d_q != 0; usually a sign-convention bug upstream."""

    def __init__(self, degree, witness=None):
        self.degree = degree
        self.witness = witness
        msg = "nonzero composition of differentials at degree %d" % degree
        if witness is not None:
            msg += " (entry %r)" % (witness,)
        super().__init__(msg)


def scalar(value):
    """Exact scalar from int, Fraction or a "p/q" string.  Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError("scalar must be written 'p' or 'p/q': %r" % value)
        return Fraction(text)
    raise TypeError("cannot make an exact scalar from %r" % (value,))


def format_scalar(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


class SparseMatrix:
    """Immutable sparse matrix with exact entries."""

    __slots__ = ("nrows", "ncols", "_entries")

    def __init__(self, nrows, ncols, entries=()):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative dimensions")
        items = entries.items() if hasattr(entries, "items") else entries
        store = {}
        for (r, c), v in items:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError("entry (%d, %d) outside %dx%d" % (r, c, nrows, ncols))
            v = scalar(v)
            if v:
                store[r, c] = store.get((r, c), ZERO) + v
                if not store[r, c]:
                    del store[r, c]
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_entries", store)

    def __setattr__(self, name, value):
        raise AttributeError("SparseMatrix is immutable")

    @classmethod
    def from_dense(cls, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    entries[i, j] = v
        return cls(len(rows), ncols, entries)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def entries(self):
        return MappingProxyType(self._entries)

    def __getitem__(self, rc):
        return self._entries.get(rc, ZERO)

    def nnz(self):
        return len(self._entries)

    def is_zero(self):
        return not self._entries

    def to_dense(self):
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def row_dicts(self):
        rows = {}
        for (r, c), v in self._entries.items():
            rows.setdefault(r, {})[c] = v
        return rows

    def transpose(self):
        return SparseMatrix(self.ncols, self.nrows, {(c, r): v for (r, c), v in self._entries.items()})

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise CompositionMismatch("cannot multiply %dx%d by %dx%d" % (self.shape + other.shape))
        right = other.row_dicts()
        out = {}
        for (r, k), v in self._entries.items():
            for c, w in right.get(k, {}).items():
                out[r, c] = out.get((r, c), ZERO) + v * w
        return SparseMatrix(self.nrows, other.ncols, out)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("vector length %d, expected %d" % (len(vec), self.ncols))
        out = [ZERO] * self.nrows
        for (r, c), v in self._entries.items():
            out[r] += v * vec[c]
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.shape, frozenset(self._entries.items())))

    def __repr__(self):
        return "SparseMatrix(%d, %d, nnz=%d)" % (self.nrows, self.ncols, len(self._entries))


# --- elimination -----------------------------------------------------------

def _integer_row(row):
    """Scale a {col: Fraction} row to a primitive integer row."""
    den = 1
    for v in row.values():
        den = lcm(den, v.denominator)
    ints = {c: int(v * den) for c, v in row.items()}
    return _primitive(ints)


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _rank_of_rows(rows):
    """Rank of a collection of sparse rows {col: value}.

    Fraction-free: rows are made primitive integer vectors and combined as
    a*row - b*pivot, then divided by their content.  Sparse rows go first.
    """
    pivots = {}
    work = [_integer_row(r) for r in rows if r]
    work.sort(key=len)
    for row in work:
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = row
                break
            a, b = prow[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in prow.items():
                w = new.get(c, 0) - b * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            row = _primitive(new) if new else new
    return len(pivots)


def rank(m):
    """Exact rank over Q."""
    if m.nrows <= m.ncols:
        rows = m.row_dicts().values()
    else:
        rows = m.transpose().row_dicts().values()
    return _rank_of_rows(list(rows))


def rank_of_vectors(vectors):
    """Rank of a list of sparse vectors given as {index: scalar} dicts."""
    return _rank_of_rows([{k: Fraction(v) for k, v in vec.items() if v} for vec in vectors])


def rref(rows, ncols):
    """Reduced row echelon form of dense rows; returns (rows, pivot_columns)."""
    a = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def kernel_basis(m):
    """Exact basis of the null space of m, as a list of dense vectors."""
    n = m.ncols
    reduced, pivots = rref(m.to_dense(), n)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve_square(a, b):
    """Solve a x = b for an invertible dense square matrix a."""
    n = len(a)
    aug = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(a, b)]
    reduced, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n] for row in reduced]


def inverse(a):
    n = len(a)
    aug = [list(map(Fraction, row)) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    reduced, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]


# --- small dense helpers (action matrices) ---------------------------------

def dense_zero(r, c=None):
    return tuple(tuple(ZERO for _ in range(r if c is None else c)) for _ in range(r))


def dense_identity(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def dense_mul(a, b):
    if not a:
        return ()
    inner = len(b)
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(inner) if a[i][k]), ZERO) for j in range(cols))
        for i in range(len(a))
    )


def dense_add(a, b, s=ONE):
    """a + s*b."""
    return tuple(tuple(x + s * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def dense_scale(a, s):
    return tuple(tuple(s * x for x in row) for row in a)


def dense_transpose(a):
    return tuple(zip(*a)) if a else ()


def dense_trace(a):
    return sum((a[i][i] for i in range(len(a))), ZERO)


def commutator(a, b):
    return dense_add(dense_mul(a, b), dense_mul(b, a), -ONE)


def is_dense_zero(a):
    return all(not x for row in a for x in row)


# --- complexes -------------------------------------------------------------

@dataclass(frozen=True)
class ComplexDims:
    """Per-degree dimensions of a finite cochain complex C^0 -> ... -> C^N."""

    dims: tuple
    kernel: tuple
    image: tuple
    cohomology: tuple

    def euler_characteristic(self):
        return sum((-1) ** q * d for q, d in enumerate(self.dims))

    def cohomology_euler_characteristic(self):
        return sum((-1) ** q * h for q, h in enumerate(self.cohomology))


def complex_cohomology_dims(mats, dims=None, check=True):
    """Cohomology dimensions of C^0 -d_0-> C^1 -d_1-> ... .

    ``mats[q]`` is the matrix of d_q : C^q -> C^{q+1} (shape dim C^{q+1} x
    dim C^q).  ``dims`` is only needed when ``mats`` is empty.
    """
    mats = list(mats)
    if not mats:
        dims = tuple(dims or ())
        return ComplexDims(dims, dims, tuple(0 for _ in dims), dims)
    spaces = [mats[0].ncols] + [m.nrows for m in mats]
    for q in range(len(mats) - 1):
        if mats[q].nrows != mats[q + 1].ncols:
            raise CompositionMismatch("d_%d lands in dim %d but d_%d starts from dim %d"
                                      % (q, mats[q].nrows, q + 1, mats[q + 1].ncols))
    if dims is not None and tuple(dims) != tuple(spaces):
        raise CompositionMismatch("declared dims %r do not match matrices %r" % (tuple(dims), tuple(spaces)))
    if check:
        for q in range(len(mats) - 1):
            comp = mats[q + 1] @ mats[q]
            if not comp.is_zero():
                raise NonzeroComposition(q, next(iter(comp.entries)))
    ranks = [rank(m) for m in mats] + [0]
    kernel = tuple(spaces[q] - ranks[q] for q in range(len(spaces)))
    image = tuple([0] + ranks[:-1])
    h = tuple(k - i for k, i in zip(kernel, image))
    return ComplexDims(tuple(spaces), kernel, image, h)
