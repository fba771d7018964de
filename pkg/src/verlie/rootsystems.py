"""Cartan graphs, Weyl groupoids and root systems of contragredient data.

A datum is a square matrix over F_{p^k} with parity signs attached to the
rows.  From it we derive an integer Cartan matrix, reflections between
data, the groupoid orbit of a datum, and the real-root sets that serve as
the (reduced) root system.  Roots live in Z^theta and are stored as plain
integer tuples; the distinguished index ``i`` in every public signature is
1-based, matching the naming of simple roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .errors import (InfiniteRootSystem, OrbitCapExceeded, UnsupportedEntry,
                     ValidationError, VerlieError)
from .exactfield import FieldContext, Matrix


class ContragredientDatum:
    """A matrix/parity pair (A, p) with a_ii in {0, 2} and a_ij = 0 iff a_ji = 0."""

    def __init__(self, field: FieldContext, a: Matrix, parity):
        self.field = field
        self.theta = a.rows
        self.a = a
        self.parity = tuple(parity)
        self._validate()

    def _validate(self):
        if self.a.rows != self.a.cols:
            raise ValidationError("matrix A must be square")
        if len(self.parity) != self.theta:
            raise ValidationError("parity vector length must match the rank")
        if any(s not in (1, -1) for s in self.parity):
            raise ValidationError("parity entries must be +1 or -1")
        two = self.field.element(2)
        zero = self.field.zero
        for i in range(self.theta):
            if self.a[i, i] != two and self.a[i, i] != zero:
                raise ValidationError(f"a_{i+1}{i+1} must be 0 or 2")
            for j in range(self.theta):
                if (self.a[i, j] == zero) != (self.a[j, i] == zero):
                    raise ValidationError(
                        f"a_{i+1}{j+1} and a_{j+1}{i+1} must vanish together")

    @property
    def p(self) -> int:
        return self.field.p

    def canonical(self) -> ContragredientDatum:
        """Row-rescaled normal form: rows with zero diagonal start with 1."""
        zero = self.field.zero
        rows = []
        for i in range(self.theta):
            row = list(self.a.entries[i])
            if self.a[i, i] == zero:
                lead = next((e for e in row if e), None)
                if lead is not None and lead != self.field.one:
                    inv = lead.inv()
                    row = [e * inv for e in row]
            rows.append(row)
        return ContragredientDatum(self.field, Matrix(self.field, rows), self.parity)

    def canonical_key(self):
        c = self.canonical()
        return (tuple(tuple(e.coeffs for e in row) for row in c.a.entries), c.parity)

    def __eq__(self, other):
        return (isinstance(other, ContragredientDatum)
                and self.field == other.field
                and self.canonical_key() == other.canonical_key())

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"Datum(p={self.p}, theta={self.theta}, parity={self.parity})"


def datum_from_ints(field: FieldContext, rows, parity) -> ContragredientDatum:
    """Convenience constructor: integer (or coefficient tuple) matrix entries."""
    mat = Matrix(field, [[field.element(v) for v in row] for row in rows])
    return ContragredientDatum(field, mat, parity)


@dataclass(frozen=True)
class CartanGraphNode:
    datum: ContragredientDatum
    c: tuple  # integer Cartan matrix, tuple of row tuples


def cartan_matrix_of(datum: ContragredientDatum) -> CartanGraphNode:
    """The integer Cartan matrix C^{(A,p)} computed from the entry case table."""
    p = datum.p
    theta = datum.theta
    zero = datum.field.zero
    two = datum.field.element(2)
    rows = []
    for i in range(theta):
        row = []
        for j in range(theta):
            if i == j:
                row.append(2)
                continue
            aij = datum.a[i, j]
            aii = datum.a[i, i]
            pi = datum.parity[i]
            if aii == two:
                if aij.in_prime_field:
                    t = aij.lift()
                    tilde = t - p if t > 0 else 0
                    if pi == 1 or tilde % 2 == 0:
                        c = tilde
                    else:
                        c = tilde - p
                else:
                    c = 1 - ((3 - pi) // 2) * p
            elif aii == zero:
                if aij == zero:
                    c = 0
                elif pi == 1:
                    c = 1 - p
                else:
                    c = -1
            else:
                raise UnsupportedEntry(f"a_{i+1}{i+1} outside the classified cases")
            row.append(c)
        rows.append(tuple(row))
    c = tuple(rows)
    for i in range(theta):
        for j in range(theta):
            if i != j and (c[i][j] == 0) != (c[j][i] == 0):
                raise UnsupportedEntry("Cartan matrix lost symmetrizability")
    return CartanGraphNode(datum, c)


def reflect_datum(datum: ContragredientDatum, i: int) -> ContragredientDatum:
    """The i-th reflection r_i(A, p), row-rescaled into normal form (i is 1-based)."""
    node = cartan_matrix_of(datum)
    c = node.c
    theta = datum.theta
    fld = datum.field
    i0 = i - 1
    a = datum.a
    zero = fld.zero

    parity = tuple(datum.parity[j] * (datum.parity[i0] ** (abs(c[i0][j]) % 2 + 2))
                   for j in range(theta))

    def F(n: int):
        return fld.element(n)

    rows = []
    for j in range(theta):
        if j == i0:
            row = [F(c[i0][k]) * a[i0, i0] - a[i0, k] for k in range(theta)]
        elif a[i0, j] == zero:
            row = list(a.entries[j])
        else:
            row = []
            for k in range(theta):
                if k == i0:
                    row.append(a[j, i0] * (F(c[i0][j]) * a[i0, i0] - a[i0, j]))
                else:
                    v = (F(c[i0][j] * c[i0][k]) * a[j, i0] * a[i0, i0]
                         - F(c[i0][j]) * a[j, i0] * a[i0, k]
                         - F(c[i0][k]) * a[j, i0] * a[i0, j]
                         + a[i0, j] * a[j, k])
                    row.append(v)
        rows.append(row)

    # rescale each row so the diagonal lands back in {0, 2}
    two = fld.element(2)
    for j in range(theta):
        d = rows[j][j]
        if d != zero and d != two:
            s = two * d.inv()
            rows[j] = [e * s for e in rows[j]]
    return ContragredientDatum(fld, Matrix(fld, rows), parity).canonical()


@dataclass
class WeylGroupoidOrbit:
    theta: int
    nodes: list                      # list of CartanGraphNode
    arrows: dict                     # (node_idx, i 1-based) -> target_idx
    node_index: dict = dc_field(repr=False, default_factory=dict)

    def cartan(self, idx: int):
        return self.nodes[idx].c

    def target(self, idx: int, i: int) -> int:
        return self.arrows[(idx, i)]


def weyl_orbit(datum: ContragredientDatum, cap: int = 1024) -> WeylGroupoidOrbit:
    """Closure of a datum under all reflections, nodes deduplicated."""
    start = datum.canonical()
    nodes = [cartan_matrix_of(start)]
    index = {start.canonical_key(): 0}
    arrows = {}
    queue = [0]
    while queue:
        idx = queue.pop(0)
        cur = nodes[idx].datum
        for i in range(1, cur.theta + 1):
            refl = reflect_datum(cur, i)
            key = refl.canonical_key()
            if key not in index:
                if len(nodes) >= cap:
                    raise OrbitCapExceeded(
                        f"more than {cap} nodes; Cartan graph is likely infinite")
                index[key] = len(nodes)
                nodes.append(cartan_matrix_of(refl))
                queue.append(index[key])
            arrows[(idx, i)] = index[key]
    orbit = WeylGroupoidOrbit(datum.theta, nodes, arrows, index)
    for idx in range(len(nodes)):
        for i in range(1, datum.theta + 1):
            back = arrows[(arrows[(idx, i)], i)]
            if back != idx:
                raise VerlieError("reflection failed to be an involution on nodes")
    return orbit


def _sign_split(vec):
    """+1 / -1 / None for all-nonnegative, all-nonpositive, or mixed vectors."""
    if all(v >= 0 for v in vec):
        return 1
    if all(v <= 0 for v in vec):
        return -1
    return None


@dataclass
class RootSystemBundle:
    datum: ContragredientDatum
    orbit: WeylGroupoidOrbit
    base: int
    delta_plus: frozenset
    odd_nd: frozenset
    nabla_plus: frozenset
    finite_flag: bool

    @property
    def theta(self) -> int:
        return self.datum.theta

    @property
    def p(self) -> int:
        return self.datum.p

    def delta(self) -> frozenset:
        return frozenset(self.delta_plus) | frozenset(
            tuple(-v for v in r) for r in self.delta_plus)

    def nabla(self) -> frozenset:
        return frozenset(self.nabla_plus) | frozenset(
            tuple(-v for v in r) for r in self.nabla_plus)

    def max_height(self) -> int:
        return max(sum(r) for r in self.nabla_plus)

    def sorted_delta_plus(self):
        return sorted(self.delta_plus, key=lambda r: (sum(r), r))

    def sorted_nabla_plus(self):
        return sorted(self.nabla_plus, key=lambda r: (sum(r), r))


def _enumerate_real_roots(orbit: WeylGroupoidOrbit, base: int,
                          root_cap: int, morphism_cap: int = 500_000):
    """BFS over groupoid morphisms into the base node.

    A path base -> Y_1 -> ... -> Y_k (arrows labelled i_1 ... i_k) carries the
    morphism s_{i_1}^{base} s_{i_2}^{Y_1} ... from Y_k into base; its images
    of the simple roots are real roots at the base.
    """
    theta = orbit.theta
    identity = tuple(tuple(1 if a == b else 0 for b in range(theta))
                     for a in range(theta))
    start = (base, identity)
    seen = {start}
    queue = [start]
    roots = set()
    odd = set()
    per_node_roots = {base: set()}

    def record(node_idx, w):
        datum = orbit.nodes[node_idx].datum
        two = datum.field.element(2)
        for j in range(theta):
            img = tuple(w[k][j] for k in range(theta))
            sign = _sign_split(img)
            if sign is None:
                raise VerlieError("real root left the positive/negative cone")
            pos = img if sign == 1 else tuple(-v for v in img)
            if any(pos):
                roots.add(pos)
                if datum.a[j, j] == two and datum.parity[j] == -1:
                    odd.add(pos)

    record(base, identity)
    while queue:
        node_idx, w = queue.pop(0)
        c = orbit.cartan(node_idx)
        for i in range(1, theta + 1):
            tgt = orbit.target(node_idx, i)
            # w' = w composed with s_i^{node}: column j becomes col_j - c_ij col_i
            ci = c[i - 1]
            cols = list(zip(*w))
            col_i = cols[i - 1]
            new_cols = []
            for j in range(theta):
                if j == i - 1:
                    new_cols.append(tuple(-v for v in col_i))
                else:
                    cij = ci[j]
                    new_cols.append(tuple(a - cij * b for a, b in zip(cols[j], col_i)))
            w2 = tuple(zip(*new_cols))
            state = (tgt, w2)
            if state in seen:
                continue
            if len(seen) >= morphism_cap:
                raise InfiniteRootSystem("groupoid morphism cap exceeded")
            seen.add(state)
            record(tgt, w2)
            if len(roots) > root_cap:
                raise InfiniteRootSystem(
                    f"more than {root_cap} roots; root system is likely infinite")
            queue.append(state)
    return roots, odd


def positive_roots(orbit: WeylGroupoidOrbit, base: int = 0,
                   root_cap: int = 4096) -> RootSystemBundle:
    """Real roots at the base node, bundled with odd non-degenerate data."""
    roots, odd = _enumerate_real_roots(orbit, base, root_cap)
    for r in roots:
        for k in range(2, max(sum(r), 2) + 1):
            if all(v % k == 0 for v in r) and tuple(v // k for v in r) in roots:
                raise VerlieError("real root set is not reduced")
    delta_plus = frozenset(roots)
    odd_nd = frozenset(odd)
    doubles = frozenset(tuple(2 * v for v in r) for r in odd_nd)
    return RootSystemBundle(
        datum=orbit.nodes[base].datum,
        orbit=orbit,
        base=base,
        delta_plus=delta_plus,
        odd_nd=odd_nd,
        nabla_plus=delta_plus | doubles,
        finite_flag=True,
    )


def odd_nondegenerate(orbit: WeylGroupoidOrbit, base: int = 0) -> frozenset:
    """Positive odd non-degenerate roots at the base node."""
    _, odd = _enumerate_real_roots(orbit, base, 4096)
    return frozenset(odd)


def node_positive_roots(orbit: WeylGroupoidOrbit, idx: int,
                        root_cap: int = 4096) -> frozenset:
    """Positive real roots at an arbitrary node of the orbit."""
    roots, _ = _enumerate_real_roots(orbit, idx, root_cap)
    return frozenset(roots)


def full_roots(bundle: RootSystemBundle) -> frozenset:
    """nabla_+ = Delta_+ together with the doubles of odd non-degenerate roots."""
    doubles = frozenset(tuple(2 * v for v in r) for r in bundle.odd_nd)
    return bundle.delta_plus | doubles


@dataclass
class AlphaString:
    generator: tuple
    length: int

    def roots(self, i: int):
        g = self.generator
        out = []
        for k in range(self.length):
            r = list(g)
            r[i - 1] += k
            out.append(tuple(r))
        return out


@dataclass
class StringPartition:
    i: int                       # distinguished index, 1-based
    p: int
    strings: list                # list of AlphaString, sorted by generator
    multiplicities: dict         # length -> count (the a_j numbers)
    delta_plus_min: frozenset    # generators of strings of length < p
    delta_minus_min: frozenset

    def __post_init__(self):
        self._member_index = {}
        for s in self.strings:
            for r in s.roots(self.i):
                self._member_index[r] = s

    def string_of(self, root: tuple) -> AlphaString:
        """The maximal string containing a given positive root (not alpha_i)."""
        return self._member_index[root]


def alpha_strings(bundle: RootSystemBundle, i: int) -> StringPartition:
    """Partition of Delta_+ minus alpha_i into maximal alpha_i-strings (i is 1-based)."""
    theta = bundle.theta
    alpha_i = tuple(1 if k == i - 1 else 0 for k in range(theta))
    if alpha_i not in bundle.delta_plus:
        raise ValidationError(f"alpha_{i} is not a positive root")
    remaining = set(bundle.delta_plus) - {alpha_i}
    strings = []
    for root in sorted(remaining, key=lambda r: (sum(r), r)):
        if root not in remaining:
            continue
        gen = list(root)
        while True:
            gen[i - 1] -= 1
            if tuple(gen) not in bundle.delta_plus:
                gen[i - 1] += 1
                break
        length = 0
        cur = list(gen)
        while tuple(cur) in bundle.delta_plus:
            remaining.discard(tuple(cur))
            length += 1
            cur[i - 1] += 1
        strings.append(AlphaString(tuple(gen), length))
    strings.sort(key=lambda s: (sum(s.generator), s.generator))
    mult = {}
    for s in strings:
        mult[s.length] = mult.get(s.length, 0) + 1
    dmin = frozenset(s.generator for s in strings if s.length < bundle.p)
    return StringPartition(
        i=i, p=bundle.p, strings=strings, multiplicities=mult,
        delta_plus_min=dmin,
        delta_minus_min=frozenset(tuple(-v for v in r) for r in dmin),
    )


def normalize_primitive(vec: tuple) -> tuple:
    """vec divided by the gcd of its entries; rejects the zero vector."""
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g == 0:
        raise ValidationError("cannot normalize the zero vector")
    return tuple(v // g for v in vec)


def project_away(vec: tuple, i: int) -> tuple:
    """Delete the (1-based) i-th coordinate."""
    return vec[:i - 1] + vec[i:]


def parabolic_restrict(bundle: RootSystemBundle, i: int) -> frozenset:
    """Root set of the restricted arrangement: gcd-normalized projections of Delta."""
    out = set()
    for root in bundle.delta():
        img = project_away(root, i)
        if any(img):
            out.add(normalize_primitive(img))
    return frozenset(out)


def root_str(root: tuple) -> str:
    """Exponent notation for roots: (1, 2, 0) -> '1 2^2'."""
    if not any(root):
        return "0"
    parts = []
    for idx, a in enumerate(root, start=1):
        if a == 0:
            continue
        if a == 1:
            parts.append(f"{idx}")
        else:
            parts.append(f"{idx}^{a}")
    return " ".join(parts)
