"""Quivers with half-integer exchange data, seeds, mutations, log-canonical brackets.

The exchange data is stored doubled (``b = 2*eps``) so that solid arrows give
entries ``±2``, double arrows ``±4`` and the half-weight boundary arrows of
amalgamated quivers ``±1``.  Seed values are rational functions of the initial
generators, kept in a factored product form so that the telescoping
cancellations of mutation sequences happen by exact factor bookkeeping rather
than by multivariate gcd.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .intlinalg import IntMatrix, rank_bareiss, smith_kernel_basis
from .laurent import GeneratorTable, LaurentPoly, Q, RationalFn


def wname(vertex: str) -> str:
    return f"w:{vertex}"


class FrozenVertexError(ValueError):
    pass


class HalfIntegerMutationError(ArithmeticError):
    """Mutation at a vertex with odd incident doubled-exchange entries."""


class Quiver:
    """Named vertices plus a skew-symmetric doubled exchange matrix."""

    def __init__(self, vertices: Sequence[str], doubled: IntMatrix, frozen: Iterable[str] = ()):
        self.vertices = tuple(vertices)
        if doubled.rows != doubled.cols or doubled.rows != len(self.vertices):
            raise ValueError("exchange matrix size must match the vertex list")
        if not doubled.is_skew_symmetric():
            raise ValueError("doubled exchange matrix must be skew-symmetric")
        self.doubled = doubled
        self.frozen = frozenset(frozen)
        unknown = self.frozen - set(self.vertices)
        if unknown:
            raise ValueError(f"frozen names not among vertices: {sorted(unknown)}")
        self._pos = {v: i for i, v in enumerate(self.vertices)}

    @classmethod
    def from_arrows(
        cls,
        vertices: Sequence[str],
        arrows: Iterable[tuple],
        frozen: Iterable[str] = (),
    ) -> "Quiver":
        """Build from (source, target, doubled_weight) triples; weights add up."""
        vertices = tuple(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        m = IntMatrix.zero(len(vertices), len(vertices))
        for arrow in arrows:
            if len(arrow) == 2:
                src, dst = arrow
                weight = 2
            else:
                src, dst, weight = arrow
            i, j = pos[src], pos[dst]
            m[i, j] += weight
            m[j, i] -= weight
        return cls(vertices, m, frozen)

    def index(self, vertex: str) -> int:
        try:
            return self._pos[vertex]
        except KeyError:
            raise KeyError(f"unknown vertex {vertex!r}") from None

    def b(self, u: str, v: str) -> int:
        return self.doubled[self.index(u), self.index(v)]

    def eps(self, u: str, v: str) -> Fraction:
        return Fraction(self.b(u, v), 2)

    def arrows(self) -> list:
        """Positive-weight arrow triples (src, dst, doubled_weight)."""
        out = []
        for i, u in enumerate(self.vertices):
            for j, v in enumerate(self.vertices):
                w = self.doubled[i, j]
                if w > 0:
                    out.append((u, v, w))
        return out

    def mutate_matrix(self, k: str) -> "Quiver":
        """Exchange-matrix mutation at ``k`` (value bookkeeping lives in Seed)."""
        ki = self.index(k)
        n = len(self.vertices)
        row = self.doubled.entries[ki]
        if any(x % 2 for x in row):
            raise HalfIntegerMutationError(
                f"vertex {k!r} has half-integer exchange entries; its mutation is not Laurent"
            )
        new = IntMatrix.zero(n, n)
        old = self.doubled
        for i in range(n):
            for j in range(n):
                if i == ki or j == ki:
                    new[i, j] = -old[i, j]
                else:
                    gain4 = abs(old[i, ki]) * old[ki, j] + old[i, ki] * abs(old[ki, j])
                    if gain4 % 4:
                        raise HalfIntegerMutationError(
                            f"mutation at {k!r} leaves the half-integer lattice"
                        )
                    new[i, j] = old[i, j] + gain4 // 4
        return Quiver(self.vertices, new, self.frozen)

    def swap(self, u: str, v: str) -> "Quiver":
        """Relabel two vertices (rows/columns exchanged)."""
        order = list(self.vertices)
        iu, iv = self.index(u), self.index(v)
        order[iu], order[iv] = order[iv], order[iu]
        m = IntMatrix.zero(len(order), len(order))
        for i, a in enumerate(order):
            for j, b in enumerate(order):
                m[i, j] = self.b(a, b)
        frozen = set(self.frozen)
        return Quiver(self.vertices, m, frozen)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.doubled == other.doubled
            and self.frozen == other.frozen
        )

    def to_json(self) -> dict:
        entries = []
        for i in range(len(self.vertices)):
            for j in range(len(self.vertices)):
                w = self.doubled[i, j]
                if w > 0:
                    entries.append([self.vertices[i], self.vertices[j], w])
        return {
            "vertices": list(self.vertices),
            "doubled_exchange": entries,
            "frozen": sorted(self.frozen),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        return cls.from_arrows(
            data["vertices"],
            [tuple(e) for e in data["doubled_exchange"]],
            data.get("frozen", ()),
        )

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows())} arrows)"


def initial_table(vertices: Sequence[str]) -> GeneratorTable:
    return GeneratorTable([wname(v) for v in vertices])


class ClusterValue:
    """Product form  coeff * w^mono * prod(factor_i^exp_i)  of a seed value."""

    __slots__ = ("table", "coeff", "mono", "factors")

    def __init__(self, table: GeneratorTable, coeff=Q(1), mono: tuple | None = None, factors=None):
        self.table = table
        self.coeff = Fraction(coeff)
        self.mono = tuple(mono) if mono is not None else (0,) * len(table)
        self.factors: dict = dict(factors) if factors else {}

    @classmethod
    def generator_square(cls, table: GeneratorTable, vertex: str) -> "ClusterValue":
        mono = [0] * len(table)
        mono[table.index(wname(vertex))] = 2
        return cls(table, Q(1), tuple(mono))

    @classmethod
    def from_rational(cls, fn: RationalFn) -> "ClusterValue":
        out = cls(fn.table)._with_factor(fn.num, 1)
        return out._with_factor(fn.den, -1)

    def _with_factor(self, poly: LaurentPoly, exp: int) -> "ClusterValue":
        if exp == 0:
            return self
        # keep factors content-free with positive leading coefficient
        content = poly.content_exponents()
        coeff = self.coeff
        mono = self.mono
        if any(content):
            poly = poly.shift(tuple(-e for e in content))
            mono = tuple(m + exp * c for m, c in zip(mono, content))
        lead = poly.leading_coefficient()
        if lead != 1:
            poly = poly.scale(Q(1) / lead)
            coeff = coeff * lead ** exp
        if poly == LaurentPoly.one(self.table):
            return ClusterValue(self.table, coeff, mono, self.factors)
        factors = dict(self.factors)
        e = factors.get(poly, 0) + exp
        if e:
            factors[poly] = e
        elif poly in factors:
            del factors[poly]
        return ClusterValue(self.table, coeff, mono, factors)

    def inverse(self) -> "ClusterValue":
        return ClusterValue(
            self.table,
            Q(1) / self.coeff,
            tuple(-e for e in self.mono),
            {p: -e for p, e in self.factors.items()},
        )

    def __mul__(self, other: "ClusterValue") -> "ClusterValue":
        out = ClusterValue(
            self.table,
            self.coeff * other.coeff,
            tuple(a + b for a, b in zip(self.mono, other.mono)),
            self.factors,
        )
        for p, e in other.factors.items():
            out = out._with_factor(p, e)
        return out

    def __pow__(self, k: int) -> "ClusterValue":
        return ClusterValue(
            self.table,
            self.coeff ** k,
            tuple(k * e for e in self.mono),
            {p: k * e for p, e in self.factors.items()},
        )

    def split(self) -> tuple:
        """(numerator LaurentPoly, denominator LaurentPoly) with den = positive-exponent part."""
        num = LaurentPoly(self.table, {self.mono: self.coeff})
        den = LaurentPoly.one(self.table)
        for p, e in self.factors.items():
            if e > 0:
                num = num * p ** e
            else:
                den = den * p ** (-e)
        return num, den

    def as_rational(self) -> RationalFn:
        num, den = self.split()
        return RationalFn(num, den)

    def sqrt(self) -> "ClusterValue":
        """Exact square root of a perfect-square product form."""
        from math import isqrt

        if any(e % 2 for e in self.mono) or any(e % 2 for e in self.factors.values()):
            raise ArithmeticError("value is not a perfect square in the factored form")
        pn, pd = self.coeff.numerator, self.coeff.denominator
        rn, rd = isqrt(pn), isqrt(pd)
        if self.coeff < 0 or rn * rn != pn or rd * rd != pd:
            raise ArithmeticError("coefficient is not a perfect rational square")
        return ClusterValue(
            self.table,
            Fraction(rn, rd),
            tuple(e // 2 for e in self.mono),
            {p: e // 2 for p, e in self.factors.items()},
        )

    def one_plus_power(self, sign: int) -> "ClusterValue":
        """(1 + self**sign) as a ClusterValue (one fresh factor over known ones)."""
        z = self if sign > 0 else self.inverse()
        num, den = z.split()
        fresh = den + num
        # den from split() is exactly prod(p^-e) over negative-exponent factors,
        # so dividing it back keeps the factorization bookkeeping exact.
        out = ClusterValue(self.table)._with_factor(fresh, 1)
        for p, e in z.factors.items():
            if e < 0:
                out = out._with_factor(p, e)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClusterValue):
            return NotImplemented
        if (
            self.coeff == other.coeff
            and self.mono == other.mono
            and self.factors == other.factors
        ):
            return True
        return self.as_rational() == other.as_rational()

    def __repr__(self) -> str:
        return f"ClusterValue({self.as_rational().to_text()})"


class Seed:
    """A quiver together with values for its vertices over the initial frame."""

    def __init__(self, quiver: Quiver, values: Mapping[str, ClusterValue], frame: GeneratorTable):
        self.quiver = quiver
        self.values = dict(values)
        self.frame = frame
        missing = set(quiver.vertices) - set(self.values)
        if missing:
            raise ValueError(f"vertices without values: {sorted(missing)}")

    @classmethod
    def initial(cls, quiver: Quiver, frame: GeneratorTable | None = None) -> "Seed":
        frame = frame or initial_table(quiver.vertices)
        values = {v: ClusterValue.generator_square(frame, v) for v in quiver.vertices}
        return cls(quiver, values, frame)

    def value(self, vertex: str) -> RationalFn:
        return self.values[vertex].as_rational()

    def to_json(self) -> dict:
        out = self.quiver.to_json()
        out["values"] = {v: self.value(v).to_json() for v in self.quiver.vertices}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Seed":
        quiver = Quiver.from_json(data)
        frame = initial_table(quiver.vertices)
        if "values" in data:
            values = {
                v: ClusterValue.from_rational(RationalFn.from_json(frame, data["values"][v]))
                for v in quiver.vertices
            }
        else:
            values = {v: ClusterValue.generator_square(frame, v) for v in quiver.vertices}
        return cls(quiver, values, frame)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.frame == other.frame
            and all(self.values[v] == other.values[v] for v in self.quiver.vertices)
        )


def mutate(seed: Seed, k: str) -> Seed:
    """Seed mutation at a non-frozen vertex, values tracked in the initial frame."""
    if k in seed.quiver.frozen:
        raise FrozenVertexError(f"vertex {k!r} is frozen")
    quiver = seed.quiver.mutate_matrix(k)
    zk = seed.values[k]
    values = dict(seed.values)
    values[k] = zk.inverse()
    for j, v in enumerate(seed.quiver.vertices):
        if v == k:
            continue
        m2 = seed.quiver.b(k, v)
        if m2 == 0:
            continue
        m = m2 // 2
        if m > 0:
            values[v] = seed.values[v] * zk.one_plus_power(-1) ** (-m)
        else:
            values[v] = seed.values[v] * zk.one_plus_power(+1) ** (-m)
    return Seed(quiver, values, seed.frame)


def apply_sequence(seed: Seed, seq: Sequence) -> Seed:
    """Left-to-right composition of mutations and vertex transpositions.

    Items are vertex names, or pairs ``(u, v)`` exchanging the two labels.
    """
    current = seed
    for item in seq:
        if isinstance(item, str):
            current = mutate(current, item)
        else:
            u, v = item
            quiver = current.quiver.swap(u, v)
            values = dict(current.values)
            values[u], values[v] = values[v], values[u]
            current = Seed(quiver, values, current.frame)
    return current


# -- log-canonical Poisson bracket ------------------------------------------


def _aligned_doubled(quiver: Quiver, table: GeneratorTable) -> list:
    """Doubled exchange matrix re-indexed by table positions (0 for strangers)."""
    n = len(table)
    rows = [[0] * n for _ in range(n)]
    pos = []
    for v in quiver.vertices:
        name = wname(v)
        pos.append(table.index(name) if name in table else None)
    for i, ti in enumerate(pos):
        if ti is None:
            continue
        for j, tj in enumerate(pos):
            if tj is None:
                continue
            rows[ti][tj] = quiver.doubled[i, j]
    return rows


def _poly_bracket(p: LaurentPoly, r: LaurentPoly, b_rows: list) -> LaurentPoly:
    """{p, r} for Laurent polynomials in w-generators: pairwise monomial brackets."""
    table = p.table
    terms: dict = {}
    bcache = []
    for beta, cb in r.terms.items():
        col = [sum(b_rows[i][j] * beta[j] for j in range(len(beta)) if beta[j]) for i in range(len(beta))]
        bcache.append((beta, cb, col))
    for alpha, ca in p.terms.items():
        nz = [i for i, a in enumerate(alpha) if a]
        for beta, cb, col in bcache:
            q = sum(alpha[i] * col[i] for i in nz)
            if q == 0:
                continue
            key = tuple(a + b for a, b in zip(alpha, beta))
            s = terms.get(key, 0) + ca * cb * Fraction(q, 8)
            if s:
                terms[key] = s
            elif key in terms:
                del terms[key]
    return LaurentPoly(table, terms)


def poisson_bracket(f: RationalFn, g: RationalFn, quiver: Quiver) -> RationalFn:
    """{f, g} for the log-canonical bracket {z_u, z_v} = eps_uv z_u z_v."""
    table = f.table
    if g.table != table:
        raise ValueError("mixed generator tables")
    b_rows = _aligned_doubled(quiver, table)
    p, q = f.num, f.den
    r, s = g.num, g.den
    num = (
        _poly_bracket(p, r, b_rows) * q * s
        - _poly_bracket(p, s, b_rows) * q * r
        - _poly_bracket(q, r, b_rows) * p * s
        + _poly_bracket(q, s, b_rows) * p * r
    )
    return RationalFn(num, q * q * s * s)


def bracket_value_at(f: RationalFn, g: RationalFn, quiver: Quiver, point: Mapping[str, Fraction]) -> Fraction:
    """Exact value of {f, g} at a nonsingular point, via evaluated gradients."""
    table = f.table
    b_rows = _aligned_doubled(quiver, table)
    names = table.names

    def gradient(h: RationalFn) -> list:
        pv = h.num.evaluate(point)
        qv = h.den.evaluate(point)
        if qv == 0:
            raise ZeroDivisionError("singular point")
        grads = []
        for name in names:
            dp = h.num.derivative(name).evaluate(point)
            dq = h.den.derivative(name).evaluate(point)
            grads.append((dp * qv - pv * dq) / (qv * qv))
        return grads

    fg = gradient(f)
    gg = gradient(g)
    wv = [point[name] for name in names]
    total = Q(0)
    n = len(names)
    for i in range(n):
        if fg[i] == 0 and gg[i] == 0:
            continue
        for j in range(i + 1, n):
            bij = b_rows[i][j]
            if bij == 0:
                continue
            cross = fg[i] * gg[j] - fg[j] * gg[i]
            if cross == 0:
                continue
            total += Fraction(bij, 8) * wv[i] * wv[j] * cross
    return total


# -- Casimir lattice ----------------------------------------------------------


def corank(quiver: Quiver) -> int:
    return len(quiver.vertices) - rank_bareiss(quiver.doubled)


def monomial_casimirs(quiver: Quiver) -> list:
    """Basis of the Casimir lattice as Laurent monomials in the w-generators.

    A vector alpha with eps*alpha = 0 yields the monomial prod z_v^alpha_v,
    i.e. w-exponents 2*alpha.  Every basis element is checked to bracket to
    zero with every cluster variable (a kernel identity, asserted exactly).
    """
    basis = smith_kernel_basis(quiver.doubled)
    table = initial_table(quiver.vertices)
    b_rows = _aligned_doubled(quiver, table)
    out = []
    for alpha in basis:
        exps = tuple(2 * a for a in alpha)
        mono = LaurentPoly(table, {exps: Q(1)})
        for i, v in enumerate(quiver.vertices):
            zv = LaurentPoly.generator(table, wname(v), 2)
            if not _poly_bracket(mono, zv, b_rows).is_zero():
                raise AssertionError(f"kernel vector fails to commute with {v}")
        out.append(mono)
    return out


def monomial_is_casimir(quiver: Quiver, z_exponents: Mapping[str, Fraction]) -> bool:
    """Check Sum_j eps_ij alpha_j = 0 for a monomial prod z_j^alpha_j (alpha rational)."""
    alphas = [Fraction(z_exponents.get(v, 0)) for v in quiver.vertices]
    n = len(alphas)
    for i in range(n):
        s = Q(0)
        for j in range(n):
            if alphas[j]:
                s += Fraction(quiver.doubled[i, j], 2) * alphas[j]
        if s != 0:
            return False
    return True
