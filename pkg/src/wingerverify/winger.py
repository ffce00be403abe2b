"""The icosahedral plane representation and its pencil of invariant sextics.

Everything is reconstructed from two published inputs: the invariant
conic Q = z0*z1 + z2^2 and the six-line sextic F.  The 60 matrices of
the group are NOT hardcoded; they are recovered by solving, for each of
the 720 ways the six lines could be permuted, the exact linear system a
line-permuting projective map must satisfy, then rescaling so that the
bilinear form of Q is preserved on the nose with determinant 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .cyclo import Cyclo, rational, zeta
from .linalg import Matrix
from .perms import Perm, alternating_group_5, parse_cycles
from .polys import Poly3


class _Infinity:
    """Projective parameter value at infinity (the fiber F itself)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "infinity"


INFINITY = _Infinity()


def gram_matrix() -> Matrix:
    """Symmetric bilinear form of the conic Q = z0*z1 + z2^2."""
    h = rational(1) / 2
    z, o = rational(0), rational(1)
    return Matrix.from_rows([[z, h, z], [h, z, z], [z, z, o]])


def q_poly() -> Poly3:
    return Poly3({(1, 1, 0): 1, (0, 0, 2): 1})


@lru_cache(maxsize=None)
def six_lines():
    """The six invariant lines, first nonzero coefficient normalized to 1.

    Order: z2, then the five lines eta^i z0 + eta^(4i) z1 + z2 for
    i = 1..5 (the last being z0 + z1 + z2).
    """
    eta = zeta(5)
    lines = [Poly3.linear((0, 0, 1))]
    for i in range(1, 6):
        lines.append(Poly3.linear((eta ** i, eta ** (4 * i), rational(1))))
    return tuple(lines)


@lru_cache(maxsize=None)
def f_poly() -> Poly3:
    """The sextic F: exact expanded product of the six lines."""
    prod = Poly3.monomial((0, 0, 0), 1)
    for ln in six_lines():
        prod = prod * ln
    return prod


def _line_rows():
    """Coefficient row vectors (on z0, z1, z2) of the six lines."""
    rows = []
    for ln in six_lines():
        rows.append((ln.coefficient((1, 0, 0)), ln.coefficient((0, 1, 0)),
                     ln.coefficient((0, 0, 1))))
    return rows


class ReconstructionError(RuntimeError):
    pass


def _matrix_key(m: Matrix):
    return tuple(e.sort_key() for e in m.entries)


def _solve_line_permutation(sigma, rows, c_inv, u_rows, gram):
    """The unique form-preserving det-1 matrix realizing one line permutation.

    Solves L_{sigma(i)} * M = c_i * L_i (rows) for M; returns None when
    the permutation is not realized by any projective map.
    """
    zero = rational(0)
    b = Matrix.from_rows([rows[sigma[0]], rows[sigma[1]], rows[sigma[2]]])
    if b.det().is_zero():
        return None
    b_inv = b.inverse()
    # cross conditions from the remaining three lines:
    # with M = B^-1 diag(c) C, line i+3 maps correctly iff
    # (w ⊙ c) is proportional to u, where w = L_{sigma(i)} B^-1, u = L_i C^-1
    eq_rows = []
    for i in range(3, 6):
        w = b_inv.transpose().apply(rows[sigma[i]])
        u = u_rows[i]
        for j, k in ((0, 1), (0, 2), (1, 2)):
            row = [zero, zero, zero]
            row[j] = w[j] * u[k]
            row[k] = -(w[k] * u[j])
            eq_rows.append(row)
    kern = Matrix.from_rows(eq_rows).kernel()
    if len(kern) != 1:
        return None
    c = kern[0]
    if any(x.is_zero() for x in c):
        return None
    m = b_inv * Matrix.diagonal(list(c)) * Matrix.from_rows(
        [rows[0], rows[1], rows[2]])
    # rescale: M^T A M = s A forces det(M)^2 = s^3, so t = s/det(M)
    # satisfies t^2 = 1/s and makes the form exactly preserved with det 1
    s_mat = m.transpose() * gram * m
    s = s_mat[0, 1] * 2
    if s.is_zero() or s_mat != gram * s:
        return None
    d = m.det()
    if d * d != s ** 3:
        raise ReconstructionError("determinant/form scalar mismatch")
    m = m * (s / d)
    if m.transpose() * gram * m != gram:
        raise ReconstructionError("rescaled matrix does not preserve the form")
    if m.det() != rational(1):
        raise ReconstructionError("rescaled matrix does not have det 1")
    return m


@dataclass(frozen=True)
class IcosaGroup:
    """The 60 reconstructed matrices with their A5 dictionary.

    `iso` maps degree-5 permutations to matrices and respects products;
    `label` records which of the two mirror character rows (I or I')
    the trace function of this particular identification matches.
    """

    matrices: tuple
    iso: dict
    label: str

    @property
    def order(self) -> int:
        return len(self.matrices)

    def class_sizes(self):
        elems = set(self.matrices)
        sizes = []
        while elems:
            g = next(iter(elems))
            orbit = {x * g * x.inverse() for x in self.matrices}
            sizes.append(len(orbit))
            elems -= orbit
        return sorted(sizes)

    def trace_of_class(self, rep: Perm) -> Cyclo:
        return self.iso[rep].trace()


def _build_isomorphism(matrices):
    """Map A5 onto the matrix group by matching generator relations.

    Sends (12345) to a fixed order-5 matrix m5 and (12)(34) to an
    involution m2 with ord(m5*m2) = 3; consistency of every revisited
    word certifies the map is a homomorphism.
    """
    by_order = {}
    for m in matrices:
        by_order.setdefault(m.order(limit=6), []).append(m)
    for k in by_order:
        by_order[k].sort(key=_matrix_key)
    m5 = by_order[5][0]
    p5 = parse_cycles("(12345)", 5)
    p2 = parse_cycles("(12)(34)", 5)
    for m2 in by_order[2]:
        if (m5 * m2).order(limit=6) != 3:
            continue
        iso = {Perm.identity(5): Matrix.identity(3)}
        frontier = [Perm.identity(5)]
        ok = True
        while frontier and ok:
            nxt = []
            for p in frontier:
                for pg, mg in ((p5, m5), (p2, m2)):
                    q = pg * p
                    mq = mg * iso[p]
                    if q in iso:
                        if iso[q] != mq:
                            ok = False
                            break
                    else:
                        iso[q] = mq
                        nxt.append(q)
                if not ok:
                    break
            frontier = nxt
        if ok and len(iso) == 60 and len(set(iso.values())) == 60:
            return iso
    raise ReconstructionError("no generator pair realizes the A5 relations")


@lru_cache(maxsize=None)
def reconstruct_group() -> IcosaGroup:
    rows = _line_rows()
    gram = gram_matrix()
    c_mat = Matrix.from_rows([rows[0], rows[1], rows[2]])
    c_inv = c_mat.inverse()
    u_rows = {i: c_inv.transpose().apply(rows[i]) for i in range(3, 6)}
    found = {}
    for sigma in permutations(range(6)):
        m = _solve_line_permutation(sigma, rows, c_inv, u_rows, gram)
        if m is not None:
            found[m] = sigma
    if len(found) != 60:
        raise ReconstructionError(f"expected 60 survivors, got {len(found)}")
    matrices = tuple(sorted(found, key=_matrix_key))
    prods = {a * b for a in matrices for b in matrices}
    if prods != set(matrices):
        raise ReconstructionError("survivors are not closed under products")
    iso = _build_isomorphism(matrices)
    # label the identification by the trace of the class of (12345):
    # the golden ratio for I, its conjugate (1-sqrt5)/2 = 1-phi for I'
    phi = (rational(1) + (zeta() - zeta() ** 2 - zeta() ** 3 + zeta() ** 4)) / 2
    tr = iso[parse_cycles("(12345)", 5)].trace()
    if tr == phi:
        label = "I"
    elif tr == rational(1) - phi:
        label = "I'"
    else:
        raise ReconstructionError(f"order-5 trace {tr} is not a golden ratio value")
    return IcosaGroup(matrices=matrices, iso=iso, label=label)


def no_three_concurrent() -> bool:
    """No three of the six lines pass through a common point."""
    rows = _line_rows()
    for i, j, k in combinations(range(6), 3):
        if Matrix.from_rows([rows[i], rows[j], rows[k]]).det().is_zero():
            return False
    return True


# -- projective points and irregular orbits ------------------------------------


def normalize_point(coords):
    """Scale so the last nonzero coordinate is 1; canonical representative."""
    coords = tuple(c if isinstance(c, Cyclo) else rational(c) for c in coords)
    last = None
    for i in range(2, -1, -1):
        if not coords[i].is_zero():
            last = i
            break
    if last is None:
        raise ValueError("zero vector is not a projective point")
    inv = coords[last].inv()
    return tuple(c * inv for c in coords)


def orbit_of(point, group: IcosaGroup):
    p = normalize_point(point)
    return frozenset(normalize_point(m.apply(p)) for m in group.matrices)


def _unit_eigenvector(m: Matrix):
    kern = (m - Matrix.identity(3)).kernel()
    if len(kern) != 1:
        raise ValueError("unit eigenspace is not a line")
    return normalize_point(kern[0])


def _eigenvector(m: Matrix, lam) -> tuple:
    kern = (m - Matrix.identity(3) * lam).kernel()
    if len(kern) != 1:
        raise ValueError("eigenspace is not a line")
    return normalize_point(kern[0])


@lru_cache(maxsize=None)
def irregular_orbits() -> dict:
    """The four special orbits, keyed by size (6, 10, 15 off K; 12 on K).

    Each of 6/10/15 is the orbit of the unit-eigenvalue fixed point of
    an element of order 5/3/2; the 12-orbit is the orbit of the other
    rational eigenvector of an order-5 element and lies on the conic.
    """
    group = reconstruct_group()
    out = {}
    for order, size in ((5, 6), (3, 10), (2, 15)):
        m = next(x for x in group.matrices
                 if x != Matrix.identity(3) and x.order(limit=6) == order)
        orb = orbit_of(_unit_eigenvector(m), group)
        if len(orb) != size:
            raise ReconstructionError(f"orbit of order-{order} fixed point has size {len(orb)}")
        out[size] = orb
    m5 = next(x for x in group.matrices
              if x != Matrix.identity(3) and x.order(limit=6) == 5)
    # the two non-unit eigenvalues are primitive fifth roots; both
    # eigenvectors lie on the conic and sweep the same orbit of size 12
    eta = zeta(5)
    point = None
    for k in range(1, 5):
        try:
            point = _eigenvector(m5, eta ** k)
            break
        except ValueError:
            continue
    if point is None:
        raise ReconstructionError("order-5 element has no rational non-unit eigenvector")
    orb = orbit_of(point, group)
    if len(orb) != 12:
        raise ReconstructionError(f"conic orbit has size {len(orb)}")
    out[12] = orb
    return out


# -- the pencil -----------------------------------------------------------------


def pencil_member(lam) -> Poly3:
    """Q^3 + lam*F for finite lam; F itself at infinity."""
    if lam is INFINITY:
        return f_poly()
    return q_poly() ** 3 + f_poly() * lam


def singular_lambda(p):
    """The unique parameter whose member is singular at p, if any.

    Solves grad(Q^3)(p) + lam * grad(F)(p) = 0.  Returns a field
    element, INFINITY when grad F vanishes but grad Q^3 does not, or
    None when no single parameter works.
    """
    p = normalize_point(p)
    gq = tuple(d.evaluate(p) for d in (q_poly() ** 3).gradient())
    gf = tuple(d.evaluate(p) for d in f_poly().gradient())
    if all(c.is_zero() for c in gf):
        if all(c.is_zero() for c in gq):
            return None  # singular for every parameter; not a pencil datum
        return INFINITY
    i = next(i for i, c in enumerate(gf) if not c.is_zero())
    lam = -(gq[i] / gf[i])
    for a, b in zip(gq, gf):
        if a + lam * b != rational(0):
            return None
    return lam


def node_check(lam, p) -> bool:
    """Is the singular point an ordinary double point of that member?

    Tests that the quadratic part of the member in an affine chart at p
    is a nondegenerate binary form (nonzero discriminant).
    """
    p = normalize_point(p)
    member = pencil_member(lam)
    if member.evaluate(p) != rational(0):
        raise ValueError("point is not on the member")
    grad = tuple(d.evaluate(p) for d in member.gradient())
    if any(c for c in grad):
        raise ValueError("point is not singular on the member")
    chart = max(i for i in range(3) if not p[i].is_zero())
    u, v = [i for i in range(3) if i != chart]
    hess = [[member.partial(i).partial(j).evaluate(p) for j in range(3)]
            for i in range(3)]
    a, b, c = hess[u][u], hess[u][v], hess[v][v]
    return b * b - a * c != rational(0)
