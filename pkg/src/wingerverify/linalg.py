"""Exact dense linear algebra over a cyclotomic field.

Determinants use fraction-free (Bareiss) elimination, kernels come from
reduced row echelon form, and characteristic polynomials are computed
with the Faddeev-LeVerrier recursion (divisions by small integers only).
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import Cyclo, rational


class Matrix:
    """Immutable dense matrix with entries sharing one conductor."""

    __slots__ = ("rows", "cols", "entries", "n")

    def __init__(self, rows: int, cols: int, entries, n: int = 5):
        entries = tuple(
            e if isinstance(e, Cyclo) else rational(e, n) for e in entries
        )
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        if entries:
            n = entries[0].n
            if any(e.n != n for e in entries):
                raise ValueError("entries must share one conductor")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def from_rows(rows, n: int = 5) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return Matrix(r, c, [e for row in rows for e in row], n)

    @staticmethod
    def identity(k: int, n: int = 5) -> "Matrix":
        one, zero = rational(1, n), rational(0, n)
        return Matrix(k, k, [one if i == j else zero for i in range(k) for j in range(k)], n)

    @staticmethod
    def diagonal(diag, n: int = 5) -> "Matrix":
        k = len(diag)
        zero = rational(0, n)
        return Matrix(k, k, [diag[i] if i == j else zero for i in range(k) for j in range(k)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            a, b = self.entries, other.entries
            m, k, p = self.rows, self.cols, other.cols
            out = []
            for i in range(m):
                arow = a[i * k:(i + 1) * k]
                for j in range(p):
                    acc = None
                    for t in range(k):
                        av = arow[t]
                        if av.is_zero():
                            continue
                        term = av * b[t * p + j]
                        acc = term if acc is None else acc + term
                    out.append(acc if acc is not None else rational(0, self.n))
            return Matrix(m, p, out, self.n)
        if isinstance(other, (int, Fraction, Cyclo)):
            return Matrix(self.rows, self.cols, [e * other for e in self.entries], self.n)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)], self.n)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (other * -1)

    def __neg__(self):
        return self * -1

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)], self.n)

    def trace(self) -> Cyclo:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = rational(0, self.n)
        for i in range(self.rows):
            acc = acc + self[i, i]
        return acc

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            acc = rational(0, self.n)
            for j, v in enumerate(vec):
                if not v.is_zero():
                    acc = acc + self[i, j] * v
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def det(self) -> Cyclo:
        """Exact determinant by fraction-free elimination, pivot = first nonzero."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        k = self.rows
        if k == 0:
            return rational(1, self.n)
        m = self.to_rows()
        sign = 1
        prev = rational(1, self.n)
        for col in range(k - 1):
            piv = None
            for r in range(col, k):
                if not m[r][col].is_zero():
                    piv = r
                    break
            if piv is None:
                return rational(0, self.n)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                sign = -sign
            pivval = m[col][col]
            for r in range(col + 1, k):
                for c in range(col + 1, k):
                    m[r][c] = (pivval * m[r][c] - m[r][col] * m[col][c]) / prev
                m[r][col] = rational(0, self.n)
            prev = pivval
        d = m[k - 1][k - 1]
        return d if sign == 1 else -d

    def rref(self):
        """Reduced row echelon form; returns (rows as lists, pivot column list)."""
        m = self.to_rows()
        nrows, ncols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(ncols):
            piv = None
            for i in range(r, nrows):
                if not m[i][c].is_zero():
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = m[r][c].inv()
            m[r] = [e * inv for e in m[r]]
            for i in range(nrows):
                if i != r and not m[i][c].is_zero():
                    f = m[i][c]
                    m[i] = [e - f * p for e, p in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        k = self.rows
        ident = Matrix.identity(k, self.n)
        aug = Matrix(k, 2 * k,
                     [x for i in range(k) for x in (*self.row(i), *ident.row(i))], self.n)
        m, pivots = aug.rref()
        if pivots != list(range(k)):
            raise ValueError("singular matrix")
        return Matrix(k, k, [e for row in m for e in row[k:]], self.n)

    def kernel(self):
        """Exact basis of the right null space, as column tuples."""
        m, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        zero, one = rational(0, self.n), rational(1, self.n)
        for f in free:
            vec = [zero] * self.cols
            vec[f] = one
            for r, p in enumerate(pivots):
                vec[p] = -m[r][f]
            basis.append(tuple(vec))
        return basis

    def charpoly(self) -> "UniPoly":
        """det(T*I - M) by the Faddeev-LeVerrier recursion."""
        if self.rows != self.cols:
            raise ValueError("charpoly of a non-square matrix")
        k = self.rows
        ident = Matrix.identity(k, self.n)
        coeffs = [rational(1, self.n)]  # of T^k, then T^(k-1), ...
        a = self
        c = -a.trace()
        coeffs.append(c)
        for step in range(2, k + 1):
            a = self * (a + ident * c)
            c = -(a.trace() / step)
            coeffs.append(c)
        return UniPoly(list(reversed(coeffs)))

    def order(self, limit: int = 1000) -> int:
        """Multiplicative order; raises if it exceeds `limit`."""
        ident = Matrix.identity(self.rows, self.n)
        p = self
        for k in range(1, limit + 1):
            if p == ident:
                return k
            p = p * self
        raise ValueError("order exceeds limit")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in self.row(i)) + "]"
                         for i in range(self.rows))

    __repr__ = __str__


class UniPoly:
    """Univariate polynomial over a cyclotomic field, lowest degree first."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs, n: int = 5):
        coeffs = [c if isinstance(c, Cyclo) else rational(c, n) for c in coeffs]
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        if coeffs:
            n = coeffs[0].n
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "n", n)

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Evaluate at a scalar or a square matrix (Horner)."""
        if isinstance(x, Matrix):
            acc = Matrix.identity(x.rows, x.n) * self.coeffs[-1]
            for c in reversed(self.coeffs[:-1]):
                acc = acc * x + Matrix.identity(x.rows, x.n) * c
            return acc
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        out = [rational(0, self.n)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.n)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero() and len(self.coeffs) > 1:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            cs = str(c)
            if mono and cs == "1":
                terms.append(mono)
            elif mono and cs == "-1":
                terms.append(f"-{mono}")
            else:
                terms.append(f"({cs}){mono}" if mono else cs)
        return " + ".join(terms) if terms else "0"

    __repr__ = __str__
