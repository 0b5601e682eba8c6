"""Sparse multivariate Laurent polynomials and rational functions over exact rationals.

Every quantity in this package is a Laurent polynomial (or a ratio of two) in
square-root generators ``w:v``.  A cluster variable ``z_v`` is represented as
``w_v**2``, so half-integer powers of cluster variables become integer powers
of the generators and no radicals ever appear.

Coefficients are :class:`fractions.Fraction`; exponent vectors are tuples of
ints indexed by a :class:`GeneratorTable`.  Terms are kept in a dict with no
zero coefficients; the canonical term order is graded lexicographic on the
exponent vector, which makes term counts and serialized output deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Q = Fraction


class SingularPointError(ArithmeticError):
    """Raised when a denominator vanishes at an evaluation point."""

    def __init__(self, denominator: "LaurentPoly"):
        self.denominator = denominator
        super().__init__("denominator vanishes at the evaluation point")


class GeneratorTable:
    """Ordered list of generator names; exponent vectors index into it."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be unique")
        self._index = {n: i for i, n in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def __eq__(self, other) -> bool:
        return isinstance(other, GeneratorTable) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"GeneratorTable({list(self.names)!r})"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def grlex_key(exps: tuple) -> tuple:
    """Graded-lex sort key: total degree first, then the exponent vector."""
    return (sum(exps), exps)


class LaurentPoly:
    """Sparse Laurent polynomial: map exponent vector -> nonzero Fraction."""

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: GeneratorTable, terms: Mapping[tuple, Fraction] | None = None):
        self.table = table
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                c = _as_fraction(coeff)
                if c != 0:
                    clean[tuple(exps)] = c
        self.terms = clean
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, table: GeneratorTable) -> "LaurentPoly":
        return cls(table, {})

    @classmethod
    def constant(cls, table: GeneratorTable, value) -> "LaurentPoly":
        c = _as_fraction(value)
        if c == 0:
            return cls.zero(table)
        return cls(table, {(0,) * len(table): c})

    @classmethod
    def one(cls, table: GeneratorTable) -> "LaurentPoly":
        return cls.constant(table, 1)

    @classmethod
    def generator(cls, table: GeneratorTable, name: str, power: int = 1) -> "LaurentPoly":
        exps = [0] * len(table)
        exps[table.index(name)] = power
        return cls(table, {tuple(exps): Q(1)})

    @classmethod
    def monomial(cls, table: GeneratorTable, coeff, exps: Mapping[str, int]) -> "LaurentPoly":
        vec = [0] * len(table)
        for name, e in exps.items():
            vec[table.index(name)] = int(e)
        return cls(table, {tuple(vec): _as_fraction(coeff)})

    # -- basic structure -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def term_count(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]))

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the graded-lex-largest term (0 for the zero polynomial)."""
        if not self.terms:
            return Q(0)
        exps = max(self.terms, key=grlex_key)
        return self.terms[exps]

    def content_exponents(self) -> tuple:
        """Componentwise minimum of all exponent vectors (zero vector if empty)."""
        if not self.terms:
            return (0,) * len(self.table)
        its = iter(self.terms)
        lo = list(next(its))
        for exps in its:
            for i, e in enumerate(exps):
                if e < lo[i]:
                    lo[i] = e
        return tuple(lo)

    def support(self) -> set:
        """Names of generators appearing with a nonzero exponent."""
        names = self.table.names
        seen = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e != 0:
                    seen.add(names[i])
        return seen

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.table != other.table:
            raise ValueError("mixed generator tables")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            elif exps in terms:
                del terms[exps]
        return LaurentPoly(self.table, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) - c
            if s:
                terms[exps] = s
            elif exps in terms:
                del terms[exps]
        return LaurentPoly(self.table, terms)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        terms: dict = {}
        for e2, c2 in small.items():
            for e1, c1 in big.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(key, 0) + c1 * c2
                if s:
                    terms[key] = s
                elif key in terms:
                    del terms[key]
        return LaurentPoly(self.table, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        c = _as_fraction(c)
        if c == 0:
            return LaurentPoly.zero(self.table)
        return LaurentPoly(self.table, {e: k * c for e, k in self.terms.items()})

    def shift(self, exps: tuple) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPoly(
            self.table, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}
        )

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            if not self.is_monomial():
                raise ArithmeticError("negative power of a non-monomial")
            ((exps, coeff),) = self.terms.items()
            return LaurentPoly(self.table, {tuple(k * e for e in exps): coeff ** k})
        result = LaurentPoly.one(self.table)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.table == other.table
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and evaluation ------------------------------------------

    def derivative(self, name: str) -> "LaurentPoly":
        i = self.table.index(name)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = list(exps)
            new[i] = e - 1
            key = tuple(new)
            s = terms.get(key, 0) + c * e
            if s:
                terms[key] = s
            elif key in terms:
                del terms[key]
        return LaurentPoly(self.table, terms)

    def evaluate(self, point: Mapping[str, object]):
        """Exact value at a point (any field-like values: Fraction, GaussianRational...)."""
        idx_vals = []
        for i, name in enumerate(self.table.names):
            if name in point:
                idx_vals.append((i, point[name]))
            else:
                idx_vals.append((i, None))
        total = None
        for exps, c in self.terms.items():
            val = c
            for i, v in idx_vals:
                e = exps[i]
                if e == 0:
                    continue
                if v is None:
                    raise KeyError(f"no value for generator {self.table.names[i]!r}")
                if e > 0:
                    val = val * v ** e
                else:
                    val = val / v ** (-e)
            total = val if total is None else total + val
        if total is None:
            return Q(0)
        return total

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form ``coeff * w:name^e * ...`` joined by `` + ``."""
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            parts = [str(c)]
            for name, e in zip(self.table.names, exps):
                if e != 0:
                    parts.append(f"{name}^{e}" if e != 1 else name)
            chunks.append(" * ".join(parts))
        return " + ".join(chunks)

    @classmethod
    def from_text(cls, table: GeneratorTable, text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return cls.zero(table)
        terms: dict = {}
        for chunk in text.split(" + "):
            parts = [p.strip() for p in chunk.split("*")]
            coeff = Q(parts[0])
            vec = [0] * len(table)
            for p in parts[1:]:
                if "^" in p:
                    name, e = p.split("^")
                    vec[table.index(name.strip())] = int(e)
                else:
                    vec[table.index(p)] = 1
            key = tuple(vec)
            terms[key] = terms.get(key, 0) + coeff
        return cls(table, terms)

    def to_json(self) -> list:
        out = []
        for exps, c in self.sorted_terms():
            entry = {"coeff": f"{c.numerator}/{c.denominator}", "exps": {}}
            for name, e in zip(self.table.names, exps):
                if e != 0:
                    entry["exps"][name] = e
            out.append(entry)
        return out

    @classmethod
    def from_json(cls, table: GeneratorTable, data: list) -> "LaurentPoly":
        terms = {}
        for entry in data:
            vec = [0] * len(table)
            for name, e in entry["exps"].items():
                vec[table.index(name)] = int(e)
            terms[tuple(vec)] = Q(entry["coeff"])
        return cls(table, terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()})"


class RationalFn:
    """Ratio of two Laurent polynomials in canonical form.

    Normalization: the denominator's componentwise-lowest exponent vector is
    shifted to zero (monomial content moved into the numerator) and its
    graded-lex leading coefficient is positive.  Full multivariate gcd is not
    taken; equality is decided by cross-multiplication, which needs none.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly):
        if num.table != den.table:
            raise ValueError("mixed generator tables")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = LaurentPoly.one(den.table)
        else:
            joint = tuple(
                min(a, b) for a, b in zip(num.content_exponents(), den.content_exponents())
            )
            if any(joint):
                neg = tuple(-e for e in joint)
                num = num.shift(neg)
                den = den.shift(neg)
        if den.leading_coefficient() < 0:
            num = -num
            den = -den
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFn":
        return cls(p, LaurentPoly.one(p.table))

    @classmethod
    def constant(cls, table: GeneratorTable, value) -> "RationalFn":
        return cls.from_poly(LaurentPoly.constant(table, value))

    @classmethod
    def generator(cls, table: GeneratorTable, name: str, power: int = 1) -> "RationalFn":
        return cls.from_poly(LaurentPoly.generator(table, name, power))

    @property
    def table(self) -> GeneratorTable:
        return self.num.table

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        """True when the denominator is a single monomial."""
        return self.den.is_monomial()

    def laurent_term_count(self) -> int:
        """Number of terms of a Laurent value (monomial denominator required)."""
        if not self.is_laurent():
            raise ArithmeticError("not in Laurent form: denominator is not a monomial")
        return self.num.term_count()

    def as_laurent(self) -> LaurentPoly:
        """The value as a Laurent polynomial (monomial denominator required)."""
        if not self.is_laurent():
            raise ArithmeticError("not in Laurent form: denominator is not a monomial")
        ((exps, coeff),) = self.den.terms.items()
        return self.num.shift(tuple(-e for e in exps)).scale(Q(1) / coeff)

    def support(self) -> set:
        return self.num.support() | self.den.support()

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFn.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFn.constant(self.table, other)
        raise TypeError(f"cannot combine RationalFn with {type(other).__name__}")

    def __add__(self, other) -> "RationalFn":
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFn":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFn":
        o = self._coerce(other)
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RationalFn":
        return self._coerce(other) / self

    def inverse(self) -> "RationalFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFn(self.den, self.num)

    def __pow__(self, k: int) -> "RationalFn":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFn(self.num ** k, self.den ** k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RationalFn, LaurentPoly, int, Fraction)):
            return NotImplemented
        o = self._coerce(other)
        return self.num * o.den == o.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- calculus and evaluation ----------------------------------------------

    def derivative(self, name: str) -> "RationalFn":
        num = self.num.derivative(name) * self.den - self.num * self.den.derivative(name)
        return RationalFn(num, self.den * self.den)

    def evaluate(self, point: Mapping[str, object]):
        dval = self.den.evaluate(point)
        if dval == 0:
            raise SingularPointError(self.den)
        return self.num.evaluate(point) / dval

    def substitute(self, bindings: Mapping[str, "RationalFn"]) -> "RationalFn":
        """Exact composition: replace every generator by a rational function."""
        needed = self.support()
        missing = needed - set(bindings)
        if missing:
            raise KeyError(f"unbound generators: {sorted(missing)}")
        some = None
        for v in bindings.values():
            some = v
            break
        if some is None:
            raise ValueError("empty bindings")
        target = some.table

        def sub_poly(p: LaurentPoly) -> RationalFn:
            cache: dict = {}
            total = RationalFn.constant(target, 0)
            for exps, c in p.terms.items():
                term = RationalFn.constant(target, c)
                for name, e in zip(p.table.names, exps):
                    if e == 0:
                        continue
                    key = (name, e)
                    if key not in cache:
                        cache[key] = bindings[name] ** e
                    term = term * cache[key]
                total = total + term
            return total

        den = sub_poly(self.den)
        if den.is_zero():
            raise ZeroDivisionError("denominator is identically zero after substitution")
        return sub_poly(self.num) / den

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, table: GeneratorTable, data: dict) -> "RationalFn":
        return cls(LaurentPoly.from_json(table, data["num"]), LaurentPoly.from_json(table, data["den"]))

    def to_text(self) -> str:
        if self.den == LaurentPoly.one(self.table):
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def __repr__(self) -> str:
        return f"RationalFn({self.to_text()})"


def equal_rational(
    f: RationalFn,
    g: RationalFn,
    mode: str = "symbolic",
    trials: int = 5,
    coefficient_bound: int = 10 ** 6,
    rng=None,
    retry_budget: int = 50,
) -> tuple:
    """Equality of two rational functions: (verdict, witness).

    Symbolic mode cross-multiplies canonical forms (sound and complete).
    Randomized mode compares exact evaluations at ``trials`` positive points
    with coordinates in [1, coefficient_bound], retrying on denominator zeros;
    a distinguishing point is returned as the witness on failure.
    """
    if f.table != g.table:
        raise ValueError("mixed generator tables")
    if mode == "symbolic":
        return (f == g, None)
    if mode != "randomized":
        raise ValueError(f"unknown mode {mode!r}")
    import random as _random

    rng = rng or _random.Random()
    done = 0
    budget = retry_budget
    while done < trials:
        point = {name: Fraction(rng.randint(1, coefficient_bound)) for name in f.table.names}
        try:
            fv = f.evaluate(point)
            gv = g.evaluate(point)
        except SingularPointError:
            budget -= 1
            if budget < 0:
                raise
            continue
        if fv != gv:
            return (False, point)
        done += 1
    return (True, None)


def substitute_mixed(f: RationalFn, wbind: Mapping[str, RationalFn], zbind: Mapping[str, RationalFn]) -> RationalFn:
    """Substitution with some generators bound only at the squared level.

    Generators in ``zbind`` must appear with even exponents everywhere in f
    (their square roots need not exist in the ring); generators in ``wbind``
    are bound directly.
    """
    table = f.table
    some = next(iter(wbind.values()), None) or next(iter(zbind.values()))
    target = some.table

    def sub_poly(p: LaurentPoly) -> RationalFn:
        total = RationalFn.constant(target, 0)
        cache: dict = {}
        for exps, c in p.terms.items():
            term = RationalFn.constant(target, c)
            for name, e in zip(table.names, exps):
                if e == 0:
                    continue
                if name in zbind:
                    if e % 2:
                        raise ArithmeticError(
                            f"generator {name} appears with odd exponent {e}; no square root available"
                        )
                    key = ("z", name, e // 2)
                    if key not in cache:
                        cache[key] = zbind[name] ** (e // 2)
                else:
                    key = ("w", name, e)
                    if key not in cache:
                        cache[key] = wbind[name] ** e
                term = term * cache[key]
            total = total + term
        return total

    den = sub_poly(f.den)
    if den.is_zero():
        raise ZeroDivisionError("denominator is identically zero after substitution")
    return sub_poly(f.num) / den


def cancel_factors(f: RationalFn, candidates) -> RationalFn:
    """Cancel each candidate polynomial from num and den while both divide.

    Used where factored bookkeeping names the factors that must cancel (the
    general fraction is never reduced by a full multivariate gcd)."""
    num, den = f.num, f.den
    changed = False
    for p in candidates:
        if p.is_monomial() or p.is_zero():
            continue
        while True:
            dd = exact_poly_div(den, p)
            if dd is None:
                break
            dn = exact_poly_div(num, p)
            if dn is None:
                break
            num, den = dn, dd
            changed = True
    return RationalFn(num, den) if changed else f


def exact_poly_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    """Exact Laurent division ``num / den`` or None when it does not divide.

    Both are shifted to ordinary polynomials and divided by the graded-lex
    leading-term algorithm on a mutable term dict with a lazy max-heap.
    """
    import heapq

    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero(num.table)
    nc = num.content_exponents()
    dc = den.content_exponents()
    n = num.shift(tuple(-e for e in nc))
    d = den.shift(tuple(-e for e in dc))
    lead = max(d.terms, key=grlex_key)
    lead_c = d.terms[lead]
    d_rest = [(e, c) for e, c in d.terms.items() if e != lead]
    quo: dict = {}
    rem = dict(n.terms)

    def negkey(exps):
        return (-sum(exps), tuple(-x for x in exps))

    heap = [negkey(e) for e in rem]
    heapq.heapify(heap)
    guard = len(n.terms) * (len(d.terms) + 1) + 16
    while heap:
        nk = heapq.heappop(heap)
        rlead = tuple(-x for x in nk[1])
        if rlead not in rem:
            continue  # stale heap entry
        guard -= 1
        if guard < 0:
            return None
        qexps = tuple(a - b for a, b in zip(rlead, lead))
        if any(e < 0 for e in qexps):
            return None
        qc = rem.pop(rlead) / lead_c
        quo[qexps] = qc
        for e, c in d_rest:
            key = tuple(a + b for a, b in zip(e, qexps))
            s = rem.get(key, 0) - qc * c
            if s:
                if key not in rem:
                    heapq.heappush(heap, negkey(key))
                rem[key] = s
            elif key in rem:
                del rem[key]
    if rem:
        return None
    shift_back = tuple(a - b for a, b in zip(nc, dc))
    return LaurentPoly(num.table, quo).shift(shift_back)
