"""Exact arithmetic over F_p and small extensions F_{p^k}, plus dense linear algebra.

Elements of F_{p^k} are stored as length-k coefficient tuples (polynomial
representation, ascending degree) with residues canonically reduced into
[0, p).  Extension fields are described by a monic irreducible polynomial,
given as its full coefficient list of length k+1, ascending.  Everything
here is immutable and pure; equality of elements is structural.

Gaussian elimination uses deterministic first-nonzero pivoting so that
kernels, solutions and echelon bases are reproducible between runs.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotPrime, ReduciblePolynomial


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return coeffs[:i]


def _poly_mod(a, mod, p):
    """Remainder of a by the monic polynomial mod, over F_p."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return [c % p for c in a[:dm]]


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_divmod(a, b, p):
    """Polynomial division over F_p; b need not be monic."""
    a = [c % p for c in _poly_trim(list(a))]
    b = [c % p for c in _poly_trim(list(b))]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and _poly_trim(r):
        shift = len(r) - len(b)
        c = (r[-1] * inv_lead) % p
        q[shift] = c
        for j, bj in enumerate(b):
            r[shift + j] = (r[shift + j] - c * bj) % p
        r = _poly_trim(r)
    return q, r


class FieldContext:
    """The field F_{p^k}; k = 1 when ext_poly is absent."""

    def __init__(self, p: int, ext_poly: Sequence[int] | None = None):
        self.p = p
        if ext_poly is None:
            self.ext_degree = 1
            self.ext_poly = None
        else:
            poly = tuple(c % p for c in ext_poly)
            self.ext_degree = len(poly) - 1
            self.ext_poly = poly
        k = self.ext_degree
        self.zero = FieldElement(self, (0,) * k)
        self.one = FieldElement(self, (1,) + (0,) * (k - 1))

    # -- construction -------------------------------------------------------

    def element(self, value) -> FieldElement:
        """Coerce an int, coefficient sequence, or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.ext_degree - 1)
            return FieldElement(self, coeffs)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.ext_degree:
            coeffs = _poly_mod(coeffs, self.ext_poly, self.p)
        coeffs = coeffs + [0] * (self.ext_degree - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def __call__(self, value) -> FieldElement:
        return self.element(value)

    def elements(self):
        """All p^k elements, lexicographically by coefficient tuple."""
        k = self.ext_degree
        total = self.p ** k
        for n in range(total):
            coeffs = []
            m = n
            for _ in range(k):
                coeffs.append(m % self.p)
                m //= self.p
            yield FieldElement(self, tuple(coeffs))

    # -- internal arithmetic on coefficient tuples ---------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p = self.p
        if self.ext_degree == 1:
            return ((a[0] * b[0]) % p,)
        prod = _poly_mul(list(a), list(b), p)
        red = _poly_mod(prod, self.ext_poly, p)
        return tuple(red + [0] * (self.ext_degree - len(red)))

    def _inv(self, a):
        p = self.p
        if all(c == 0 for c in a):
            raise ZeroDivisionError("inverse of zero")
        if self.ext_degree == 1:
            return (pow(a[0], p - 2, p),)
        # extended Euclid in F_p[x] against the irreducible modulus
        r0, r1 = list(self.ext_poly), _poly_trim(list(a))
        s0, s1 = [0], [1]
        while _poly_trim(r1):
            q, r = _poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s2 = list(s0)
            qs = _poly_mul(q, s1, p)
            length = max(len(s2), len(qs))
            s2 = s2 + [0] * (length - len(s2))
            for i, c in enumerate(qs):
                s2[i] = (s2[i] - c) % p
            s0, s1 = s1, s2
        r0 = _poly_trim(r0)
        lead_inv = pow(r0[-1], p - 2, p)
        inv = [(c * lead_inv) % p for c in s0]
        inv = _poly_mod(inv, self.ext_poly, p)
        return tuple(inv + [0] * (self.ext_degree - len(inv)))

    # -- identity -------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldContext) and self.p == other.p
                and self.ext_poly == other.ext_poly)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.p, self.ext_poly))

    def __repr__(self):
        if self.ext_degree == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.ext_degree}"


class FieldElement:
    """An element of a FieldContext, in canonical reduced form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldContext, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def __add__(self, other):
        return FieldElement(self.field, self.field._add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return FieldElement(self.field, self.field._sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.field.element(other)
        return FieldElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field._inv(self.coeffs))

    def __truediv__(self, other):
        return self * other.inv()

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and self.coeffs == other.coeffs
                and self.field == other.field)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    @property
    def in_prime_field(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def lift(self) -> int:
        """Least nonnegative residue; only defined for prime-field elements."""
        if not self.in_prime_field:
            raise ValueError("element is not in the prime field")
        return self.coeffs[0]

    def lift_signed(self) -> int:
        """Representative in (-p/2, p/2], for readable reports."""
        r = self.lift()
        p = self.field.p
        return r - p if r > p // 2 else r

    def __repr__(self):
        if self.field.ext_degree == 1 or self.in_prime_field:
            return str(self.coeffs[0])
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def make_field(p: int, ext_poly: Sequence[int] | None = None) -> FieldContext:
    """Build F_p, or F_{p^k} from a monic irreducible polynomial of degree k.

    The polynomial is given as its coefficient list, ascending, length k+1.
    Irreducibility is verified by exhaustive root search for k <= 3 plus a
    scan over monic quadratic factors for k = 4; larger degrees are rejected.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if ext_poly is None:
        return FieldContext(p)
    poly = [c % p for c in ext_poly]
    k = len(poly) - 1
    if k < 2:
        raise ReduciblePolynomial("extension polynomial must have degree >= 2")
    if poly[-1] != 1:
        raise ReduciblePolynomial("extension polynomial must be monic")
    if k > 4:
        raise ReduciblePolynomial("extension degrees above 4 are not supported")
    for a in range(p):
        value = 0
        for c in reversed(poly):
            value = (value * a + c) % p
        if value == 0:
            raise ReduciblePolynomial(f"polynomial has root {a} mod {p}")
    if k == 4:
        # no roots means no linear factors; also exclude quadratic ones
        for b in range(p):
            for c in range(p):
                q, r = _poly_divmod(poly, [c, b, 1], p)
                if not r:
                    raise ReduciblePolynomial(
                        f"polynomial is divisible by x^2+{b}x+{c} mod {p}")
    return FieldContext(p, poly)


class Matrix:
    """Dense matrix of FieldElements over one FieldContext."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldContext, entries: Sequence[Sequence[FieldElement]]):
        self.field = field
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged rows")

    @classmethod
    def from_ints(cls, field: FieldContext, rows: Sequence[Sequence[int]]) -> Matrix:
        return cls(field, [[field.element(v) for v in row] for row in rows])

    @classmethod
    def zero(cls, field: FieldContext, rows: int, cols: int) -> Matrix:
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: FieldContext, n: int) -> Matrix:
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.entries == other.entries
                and self.field == other.field)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        return Matrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix subtraction shape mismatch")
        return Matrix(self.field, [[a - b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return Matrix(self.field, [[a * other for a in row] for row in self.entries])
        if self.cols != other.rows:
            raise DimensionMismatch("matrix product shape mismatch")
        bt = other.transpose().entries
        z = self.field.zero
        out = []
        for row in self.entries:
            out_row = []
            for col in bt:
                acc = z
                for a, b in zip(row, col):
                    if a.coeffs != z.coeffs and b.coeffs != z.coeffs:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(self.field, out)

    def mul_vector(self, vec: Sequence[FieldElement]) -> tuple:
        if self.cols != len(vec):
            raise DimensionMismatch("matrix-vector shape mismatch")
        z = self.field.zero
        out = []
        for row in self.entries:
            acc = z
            for a, x in zip(row, vec):
                if a.coeffs != z.coeffs and x.coeffs != z.coeffs:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def power(self, n: int) -> Matrix:
        if self.rows != self.cols:
            raise DimensionMismatch("power of a non-square matrix")
        result = Matrix.identity(self.field, self.rows)
        base = self
        for _ in range(n):
            result = result * base
        return result

    def transpose(self) -> Matrix:
        return Matrix(self.field, list(zip(*self.entries)) if self.entries else [])

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def rref(self):
        """Reduced row echelon form; returns (Matrix, pivot column tuple)."""
        rows = [list(r) for r in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot_row = None
            for i in range(r, self.rows):
                if rows[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = rows[r][c].inv()
            rows[r] = [v * inv for v in rows[r]]
            for i in range(self.rows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(self.field, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])


def kernel(m: Matrix) -> list[tuple]:
    """Deterministic basis of the right kernel of m, as coefficient tuples."""
    red, pivots = m.rref()
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    z, o = m.field.zero, m.field.one
    for fc in free_cols:
        vec = [z] * m.cols
        vec[fc] = o
        for r, pc in enumerate(pivots):
            vec[pc] = -red.entries[r][fc]
        basis.append(tuple(vec))
    return basis


def solve(m: Matrix, b: Sequence[FieldElement]):
    """Some x with m x = b, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side has wrong length")
    aug = Matrix(m.field, [list(row) + [bv] for row, bv in zip(m.entries, b)])
    red, pivots = aug.rref()
    if m.cols in pivots:
        return None
    z = m.field.zero
    x = [z] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = red.entries[r][m.cols]
    return tuple(x)


def column_space_profile(m: Matrix):
    """Indices of the leftmost independent columns, plus expansions of the rest.

    Returns (pivot_cols, expansions) where expansions[j] gives, for every
    column j, its coefficients over the pivot columns.
    """
    red, pivots = m.rref()
    expansions = []
    z, o = m.field.zero, m.field.one
    pivot_index = {c: r for r, c in enumerate(pivots)}
    for j in range(m.cols):
        if j in pivot_index:
            coeffs = [o if pivots[r] == j else z for r in range(len(pivots))]
        else:
            coeffs = [red.entries[r][j] for r in range(len(pivots))]
        expansions.append(tuple(coeffs))
    return pivots, expansions


class LinearSystem:
    """Incremental Gaussian elimination for streaming equation systems.

    Equations are rows (coeffs, rhs) over a fixed set of unknowns; rows are
    reduced against the current echelon as they arrive, keeping memory flat.
    """

    def __init__(self, field: FieldContext, nvars: int):
        self.field = field
        self.nvars = nvars
        self.pivot_of = {}      # column -> row index
        self.rows = []          # list of (coeff list, rhs)
        self.inconsistent = False

    def add_equation(self, coeffs, rhs):
        coeffs = list(coeffs)
        for col in sorted(self.pivot_of):
            if coeffs[col]:
                f = coeffs[col]
                prow, prhs = self.rows[self.pivot_of[col]]
                for j, v in enumerate(prow):
                    if v:
                        coeffs[j] = coeffs[j] - f * v
                rhs = rhs - f * prhs
        lead = None
        for j, v in enumerate(coeffs):
            if v:
                lead = j
                break
        if lead is None:
            if rhs:
                self.inconsistent = True
            return
        inv = coeffs[lead].inv()
        coeffs = [v * inv for v in coeffs]
        rhs = rhs * inv
        # rows above are not re-reduced here; solve() back-substitutes instead
        self.pivot_of[lead] = len(self.rows)
        self.rows.append((coeffs, rhs))

    def solve(self):
        """A particular solution with free unknowns set to zero, or None."""
        if self.inconsistent:
            return None
        z = self.field.zero
        x = [z] * self.nvars
        for col in sorted(self.pivot_of, reverse=True):
            row, rhs = self.rows[self.pivot_of[col]]
            acc = rhs
            for j in range(col + 1, self.nvars):
                if row[j] and x[j]:
                    acc = acc - row[j] * x[j]
            x[col] = acc
        return tuple(x)

    @property
    def rank(self) -> int:
        return len(self.rows)
