"""
Filtration-truncated cohomology of complexes whose terms are infinite
dimensional but filtered by finite-dimensional pieces.

A filtered cochain complex here exposes, per degree q, the basis keys of its
degree-<=D piece and the image of each key under d^q, which raises filtration
by at most ``max_raise`` (s).  The window value

    h^q(D) = dim ker(d^q on C^q_{<=D}) - rank(d^{q-1} on C^{q-1}_{<=D-s})

is the dimension of the degree-<=D piece of H^q whenever the complex is
strict, which is what the associated-graded cross check corroborates.
"""

from dataclasses import dataclass
from math import comb

from liedual.lie import sort_with_sign, wedge_basis
from liedual.linalg import ZERO, rank_of_vectors
from liedual.pbw import UEAElement, gen_times_monomial, monomial_times, monomials_of_degree

DEFAULT_CAP = 200_000


class TruncationError(ValueError):
    pass


class TruncationCapExceeded(TruncationError):
    pass


class NonHomogeneousError(TruncationError):
    pass


def default_ladder(n):
    return (2, 3, 4) if n >= 4 else (3, 4, 5, 6)


# --- filtered coefficient modules ------------------------------------------

class FilteredModuleSpec:
    """A filtered g-module with finite-dimensional pieces.

    Subclasses provide ``keys_of_degree(e)``, ``dim_le(D)`` and
    ``act(i, key) -> {key: coef}`` for basis element i of the acting algebra.
    """

    max_raise = 1

    def keys_le(self, D):
        out = []
        for e in range(D + 1):
            out.extend(self.keys_of_degree(e))
        return out


class HomIntoU(FilteredModuleSpec):
    """Hom_k(M, U(g)) with (x.f)(v) = x f(v) - f(x.v).

    Key (v, a) is the map e_v -> x^a, other basis vectors -> 0.
    """

    kind = "hom-into-U"

    def __init__(self, module):
        self.module = module
        self.algebra = module.algebra

    def degree(self, key):
        return sum(key[1])

    def keys_of_degree(self, e):
        monos = monomials_of_degree(self.algebra.n, e)
        return [(v, a) for v in range(self.module.dim) for a in monos]

    def dim_le(self, D):
        return self.module.dim * comb(self.algebra.n + D, self.algebra.n)

    def act(self, i, key):
        v, a = key
        out = {(v, b): c for b, c in gen_times_monomial(self.algebra, i, a).items()}
        rho = self.module.actions[i]
        # f_{v,a}(x.e_w) = rho[v][w] x^a, so subtract sum_w rho[v][w] f_{w,a}
        for w in range(self.module.dim):
            c = rho[v][w]
            if c:
                k = (w, a)
                val = out.get(k, ZERO) - c
                if val:
                    out[k] = val
                else:
                    out.pop(k, None)
        return out


class EnvelopingSquare(FilteredModuleSpec):
    """U(g) (x) U(g)^op with x.(u (x) v) = xu (x) v - u (x) vx."""

    kind = "enveloping-square"

    def __init__(self, algebra):
        self.algebra = algebra

    def degree(self, key):
        return sum(key[0]) + sum(key[1])

    def keys_of_degree(self, e):
        n = self.algebra.n
        out = []
        for da in range(e, -1, -1):
            for a in monomials_of_degree(n, da):
                for b in monomials_of_degree(n, e - da):
                    out.append((a, b))
        return out

    def dim_le(self, D):
        n = self.algebra.n
        return comb(2 * n + D, 2 * n)

    def act(self, i, key):
        g = self.algebra
        a, b = key
        out = {}
        for a2, c in gen_times_monomial(g, i, a).items():
            out[a2, b] = c
        xi = tuple(1 if k == i else 0 for k in range(g.n))
        for b2, c in monomial_times(g, b, xi).items():
            k = (a, b2)
            val = out.get(k, ZERO) - c
            if val:
                out[k] = val
            else:
                out.pop(k, None)
        return out


class IdealLeftRegular(FilteredModuleSpec):
    """U(g) as a module over an ideal h, acting by left multiplication."""

    kind = "ideal-left-regular"

    def __init__(self, algebra, ideal):
        self.algebra = algebra
        self.ideal = ideal
        self._gens = [UEAElement.from_vector(algebra, row) for row in ideal.basis]

    def degree(self, key):
        return sum(key)

    def keys_of_degree(self, e):
        return monomials_of_degree(self.algebra.n, e)

    def dim_le(self, D):
        return comb(self.algebra.n + D, self.algebra.n)

    def act(self, i, key):
        return (self._gens[i] * UEAElement.monomial(self.algebra, key)).terms


# --- filtered cochain complexes --------------------------------------------

class FilteredComplex:
    """Interface: degrees 0..top, ``keys_of_degree(q, e)``, ``degree(q, key)``,
    ``dim_le(q, D)``, ``image(q, key)`` (d^q of a key, as {key: coef})."""

    max_raise = 1

    def keys_le(self, q, D):
        out = []
        for e in range(D + 1):
            out.extend(self.keys_of_degree(q, e))
        return out

    def total_dim_le(self, D):
        return sum(self.dim_le(q, D) for q in range(self.top + 1))

    def image(self, q, key):
        cache = self.__dict__.setdefault("_image_cache", {})
        hit = cache.get((q, key))
        if hit is None:
            hit = cache[q, key] = self._image(q, key)
        return hit


class CEFilteredComplex(FilteredComplex):
    """Chevalley-Eilenberg cochains of a Lie algebra L with filtered coefficients N.

    C^q = Hom(wedge^q L, N); key (S, nkey).  ``lie`` is the acting Lie algebra
    whose basis indexes ``module.act``.
    """

    def __init__(self, lie, module, label=None):
        self.lie = lie
        self.module = module
        self.top = lie.n
        self.max_raise = module.max_raise
        self.label = label or module.kind
        self._bases = [wedge_basis(lie.n, q) for q in range(lie.n + 1)]
        self._brackets = {(i, j): lie.bracket_basis(i, j) for i in range(lie.n) for j in range(lie.n)}

    def degree(self, q, key):
        return self.module.degree(key[1])

    def keys_of_degree(self, q, e):
        nkeys = self.module.keys_of_degree(e)
        return [(S, k) for S in self._bases[q] for k in nkeys]

    def dim_le(self, q, D):
        return len(self._bases[q]) * self.module.dim_le(D)

    def _image(self, q, key):
        if q >= self.top:
            return {}
        T, nk = key
        out = {}
        n = self.lie.n
        # cochain phi = (e_T)^* (x) nk; evaluate d phi on each (q+1)-subset S
        # first sum: S = T with one index s inserted at position p
        for s in range(n):
            if s in T:
                continue
            sign, S = sort_with_sign((s,) + T)
            p = S.index(s)
            sgn = 1 if p % 2 == 0 else -1
            for k2, c in self.module.act(s, nk).items():
                kk = (S, k2)
                val = out.get(kk, ZERO) + sgn * c
                if val:
                    out[kk] = val
                else:
                    out.pop(kk, None)
        # second sum: phi([x_p,x_r], rest) with coefficient of x_t in [x_p,x_r]
        for S in self._bases[q + 1]:
            for p in range(q + 1):
                for r in range(p + 1, q + 1):
                    br = self._brackets[S[p], S[r]]
                    if not br:
                        continue
                    rest = S[:p] + S[p + 1:r] + S[r + 1:]
                    for t, c in br.items():
                        s2, U = sort_with_sign((t,) + rest)
                        if s2 and U == T:
                            kk = (S, nk)
                            val = out.get(kk, ZERO) + (-1) ** (p + r) * s2 * c
                            if val:
                                out[kk] = val
                            else:
                                out.pop(kk, None)
        return out


class HomFreeComplex(FilteredComplex):
    """Hom_U(K_*(g; h), U(g)) for a FreeUComplex.

    C^q = U(g)^{binom(m,q)}; f maps to f o delta, i.e. component S of
    d(f) is sum_T a_{T,S} f_T (left multiplication by the boundary entries).
    The cohomological sign (-1)^(q+1) does not affect dimensions and is omitted.
    """

    def __init__(self, free_complex, label="hom-free"):
        self.cx = free_complex
        self.g = free_complex.algebra
        self.top = free_complex.top
        self.max_raise = free_complex.max_raise
        self.label = label
        self._cols = {}
        for i, mat in free_complex.differentials.items():
            by_row = {}
            for (t, s), a in mat.entries.items():
                by_row.setdefault(t, []).append((s, a))
            self._cols[i] = by_row

    def degree(self, q, key):
        return sum(key[1])

    def keys_of_degree(self, q, e):
        monos = monomials_of_degree(self.g.n, e)
        return [(t, a) for t in range(self.cx.ranks[q]) for a in monos]

    def dim_le(self, q, D):
        return self.cx.ranks[q] * comb(self.g.n + D, self.g.n)

    def _image(self, q, key):
        if q >= self.top:
            return {}
        t, a = key
        out = {}
        mono = UEAElement.monomial(self.g, a)
        for s, entry in self._cols[q + 1].get(t, ()):
            for b, c in (entry * mono).terms.items():
                kk = (s, b)
                val = out.get(kk, ZERO) + c
                if val:
                    out[kk] = val
                else:
                    out.pop(kk, None)
        return out


# --- truncated cohomology ---------------------------------------------------

def _check_cap(cx, D, cap):
    total = cx.total_dim_le(D)
    if cap is not None and total > cap:
        raise TruncationCapExceeded(
            "truncated terms at cutoff %d need %d columns (cap %d); use a smaller cutoff"
            % (D, total, cap))


def _rank_le(cx, q, D, cache):
    """rank of d^q restricted to C^q_{<=D}."""
    if q < 0 or q >= cx.top or D < 0:
        return 0
    key = (q, D)
    if key not in cache:
        index = {}
        vecs = []
        for k in cx.keys_le(q, D):
            img = cx.image(q, k)
            vecs.append({index.setdefault(t, len(index)): c for t, c in img.items()})
        cache[key] = rank_of_vectors(vecs)
    return cache[key]


def _window(cx, D, cache):
    s = cx.max_raise
    out = []
    for q in range(cx.top + 1):
        kernel = cx.dim_le(q, D) - _rank_le(cx, q, D, cache)
        out.append(kernel - _rank_le(cx, q - 1, D - s, cache))
    return tuple(out)


def _ranks_cache(cx):
    return cx.__dict__.setdefault("_rank_cache", {})


def truncated_cohomology(cx, D, cap=DEFAULT_CAP):
    """(h^0(D), ..., h^top(D)) for a filtered complex."""
    if D < cx.max_raise:
        raise TruncationError("cutoff %d is below the filtration raise %d" % (D, cx.max_raise))
    _check_cap(cx, D, cap)
    return _window(cx, D, _ranks_cache(cx))


def filtered_dims(cx, q, D, cap=DEFAULT_CAP):
    """Dimensions of the degree-<=d pieces of H^q for d = 0..D."""
    _check_cap(cx, D, cap)
    cache = _ranks_cache(cx)
    return tuple(_window(cx, d, cache)[q] for d in range(D + 1))


@dataclass(frozen=True)
class TruncatedProfile:
    ladder: tuple
    table: tuple          # table[t][q] = h^q(ladder[t])
    stable: tuple         # per degree

    def column(self, q):
        return tuple(row[q] for row in self.table)

    def final(self):
        return self.table[-1]

    def all_stable(self):
        return all(self.stable)


def validate_ladder(ladder):
    ladder = tuple(int(d) for d in ladder)
    if len(ladder) < 2:
        raise TruncationError("a ladder needs at least two cutoffs")
    if any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise TruncationError("ladder must be strictly increasing")
    return ladder


def profile(cx, ladder, growth=None, cap=DEFAULT_CAP):
    """Run the window over a ladder and judge stabilization.

    ``growth`` maps degrees expected to grow to a function D -> expected
    Hilbert value; such a degree is stable when its last two values match.
    Other degrees are stable when their last two values agree.
    """
    ladder = validate_ladder(ladder)
    growth = growth or {}
    table = tuple(truncated_cohomology(cx, D, cap) for D in ladder)
    stable = []
    for q in range(cx.top + 1):
        col = [row[q] for row in table]
        if q in growth:
            f = growth[q]
            stable.append(col[-2] == f(ladder[-2]) and col[-1] == f(ladder[-1]))
        else:
            stable.append(col[-2] == col[-1])
    return TruncatedProfile(ladder, table, tuple(stable))


def graded_cross_check(cx, D, cap=DEFAULT_CAP):
    """Cohomology of the associated graded complex per internal degree.

    Returns table[q][e] for e = 0..D.  The graded differential keeps the part
    of d raising filtration by exactly s; any term above that is an error.
    """
    _check_cap(cx, D + cx.max_raise, cap)
    s = cx.max_raise
    ranks = {}

    def gr_rank(q, e):
        if q < 0 or q >= cx.top or e < 0:
            return 0
        if (q, e) not in ranks:
            index = {}
            vecs = []
            for k in cx.keys_of_degree(q, e):
                vec = {}
                for t, c in cx.image(q, k).items():
                    dt = cx.degree(q + 1, t)
                    if dt > e + s:
                        raise NonHomogeneousError("term of degree %d from source degree %d" % (dt, e))
                    if dt == e + s:
                        vec[index.setdefault(t, len(index))] = c
                vecs.append(vec)
            ranks[q, e] = rank_of_vectors(vecs)
        return ranks[q, e]

    table = []
    for q in range(cx.top + 1):
        row = []
        for e in range(D + 1):
            dim = len(cx.keys_of_degree(q, e))
            row.append(dim - gr_rank(q, e) - gr_rank(q - 1, e - s))
        table.append(tuple(row))
    return tuple(table)


def hilbert_expected(kind, params, d):
    """Closed-form Hilbert functions.

    quotient-envelope, params (n, m): binom((n-m)+d, n-m)
    self-envelope,     params (n,):   binom(n+d, n)
    """
    if isinstance(params, int):
        params = (params,)
    if kind == "quotient-envelope":
        n, m = params
        return comb((n - m) + d, n - m)
    if kind == "self-envelope":
        (n,) = params[:1]
        return comb(n + d, n)
    raise ValueError("unknown Hilbert kind %r" % (kind,))


# --- instance constructors ---------------------------------------------------

def ext_finite_complex(g, M):
    """Cochains computing Ext_U(M, U) = H(g, Hom_k(M, U))."""
    return CEFilteredComplex(g, HomIntoU(M), label="ext-finite")


def ext_quotient_complex(g, h):
    """Hom_U(K(g; h), U): computes Ext_U(U(g/h), U)."""
    from liedual.ce import relative_ce_complex
    cx = relative_ce_complex(g, h)
    cx.check()
    return HomFreeComplex(cx, label="ext-quotient")


def ext_quotient_complex_ce(g, h):
    """Same Ext via CE cochains of h with coefficients U(g) (left multiplication)."""
    return CEFilteredComplex(h.as_algebra(), IdealLeftRegular(g, h), label="ext-quotient-ce")


def hh_self_complex(g, max_n=2):
    """Cochains computing H(U, U^e) = H(g, U (x) U^op with the adjoint action)."""
    if g.n > max_n:
        raise TruncationCapExceeded(
            "enveloping-square terms grow like binom(D+2n, 2n); n = %d exceeds max_n = %d. "
            "Pass a larger max_n with a short ladder such as (1, 2)." % (g.n, max_n))
    return CEFilteredComplex(g, EnvelopingSquare(g), label="hh-self")


def abelian_line_complex():
    """k[x] -(.x)-> k[x], i.e. Ext_U(k, U) for the 1-dimensional algebra."""
    from liedual.lie import LieAlgebra, trivial_module
    g = LieAlgebra.abelian(1)
    return ext_finite_complex(g, trivial_module(g))

