"""Geodesic-function machinery on surface charts.

Telescopic sums, surface model construction, the separating-curve element,
skein completion of chains into unipotent matrices, matrix-level twists, and
the mutation-sequence twist with its closed-form product formula.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPoly, Q, RationalFn, cancel_factors
from .matrices import MatrixRF
from .quiver import (
    ClusterValue,
    Quiver,
    Seed,
    apply_sequence,
    mutate,
    poisson_bracket,
    wname,
)
from . import surfaces
from .surfaces import SurfaceModel


# -- telescopic words -----------------------------------------------------------


def telescopic(word: Sequence, seed: Seed) -> RationalFn:
    """Value of an ordered telescopic word on a seed.

    A word is a list of vertex names with optional two-name groups ``(x, y)``.
    The value is sqrt(prod of all letters) times the accumulated reciprocal
    sum; a group contributes the three reciprocals 1/x, 1/y, 1/(xy) at its
    slot before the running product absorbs x*y.

    Everything is assembled from suffix products in factored form, so the
    denominators stay exactly the product of the letters (no gcd needed).
    """
    table = seed.frame
    product = ClusterValue(table)
    for item in word:
        if isinstance(item, str):
            product = product * seed.values[item]
        else:
            x, y = item
            product = product * seed.values[x] * seed.values[y]
    inv_root = product.sqrt().inverse()

    # suffix products: S_j = product of letters after position j; each
    # reciprocal term 1/(v_1..v_j) equals S_j / (full product)
    terms = [ClusterValue(table)]
    suffix = ClusterValue(table)
    for item in reversed(word):
        if isinstance(item, str):
            suffix = suffix * seed.values[item]
            terms.append(suffix)
        else:
            x, y = item
            zx, zy = seed.values[x], seed.values[y]
            terms.append(suffix * zy)
            terms.append(suffix * zx)
            suffix = suffix * zx * zy
            terms.append(suffix)
    value = cv_sum([t * inv_root for t in terms])
    return cancel_factors(value, _seed_factors(seed))


def cv_sum(values: Sequence[ClusterValue]) -> RationalFn:
    """Exact sum of factored values over the least common factored denominator."""
    if not values:
        raise ValueError("empty sum")
    table = values[0].table
    den_exp: dict = {}
    for v in values:
        for p, e in v.factors.items():
            if e < 0:
                den_exp[p] = max(den_exp.get(p, 0), -e)
    den = LaurentPoly.one(table)
    for p, e in den_exp.items():
        den = den * p ** e
    total = LaurentPoly.zero(table)
    for v in values:
        num = LaurentPoly(table, {v.mono: v.coeff})
        for p, e in v.factors.items():
            lift = e + den_exp.get(p, 0)
            if lift:
                num = num * p ** lift
        for p, e in den_exp.items():
            if p not in v.factors and e:
                num = num * p ** e
        total = total + num
    return RationalFn(total, den)


def _seed_factors(seed: Seed) -> list:
    seen: dict = {}
    for v in seed.quiver.vertices:
        for p in seed.values[v].factors:
            seen[p] = None
    return list(seen)


# -- skein structure --------------------------------------------------------------


def skein_product(f: RationalFn, g: RationalFn, quiver: Quiver) -> RationalFn:
    """The distinguished resolution 1/2 f g + {f, g} of a single crossing."""
    return RationalFn.constant(f.table, Fraction(1, 2)) * f * g + poisson_bracket(f, g, quiver)


class SkeinInconsistency(ArithmeticError):
    pass


def skein_complete(chain: Sequence[RationalFn], quiver: Quiver, check_k_independence: bool = True) -> MatrixRF:
    """Unipotent matrix built from a chain of consecutively-crossing functions.

    ``chain[i]`` becomes the entry (i, i+1); longer-range entries follow from
    U_ij = 1/2 U_ik U_kj + {U_ik, U_kj}, independent of the split point k.
    """
    m = len(chain) + 1
    table = chain[0].table
    one = RationalFn.constant(table, 1)
    zero = RationalFn.constant(table, 0)
    entries = [[one if i == j else zero for j in range(m)] for i in range(m)]
    for i, g in enumerate(chain):
        entries[i][i + 1] = g
    for span in range(2, m):
        for i in range(m - span):
            j = i + span
            k = i + 1
            value = skein_product(entries[i][k], entries[k][j], quiver)
            if check_k_independence:
                for other in range(i + 2, j):
                    alt = skein_product(entries[i][other], entries[other][j], quiver)
                    if not (alt - value).is_zero():
                        raise SkeinInconsistency(
                            f"entry ({i + 1},{j + 1}) depends on the split point"
                        )
            entries[i][j] = value
    return MatrixRF(entries)


# -- matrix-level braid action ------------------------------------------------------


def matrix_braid(u: MatrixRF, i: int, direction: str = "+") -> MatrixRF:
    """Braid generator acting on a unipotent upper-triangular matrix.

    Conjugates by the two-line block ``[[a, 1], [-1, 0]]`` built from the
    entry ``a = u[i-1][i]``; the result is again unipotent upper-triangular.
    """
    n = u.rows
    if not 1 <= i <= n - 1:
        raise IndexError(f"braid index {i} out of range for size {n}")
    a = u[i - 1, i]
    one = a / a if not _is_zero(a) else None
    if one is None:
        raise ArithmeticError("vanishing superdiagonal entry")
    zero = a - a
    block = MatrixRF.identity(n, one, zero)
    block[i - 1, i - 1] = a
    block[i - 1, i] = one
    block[i, i - 1] = zero - one
    block[i, i] = zero
    if direction == "+":
        return block.transpose() * u * block
    binv = block.inverse()
    return binv.transpose() * u * binv


def _is_zero(x) -> bool:
    return x.is_zero() if hasattr(x, "is_zero") else x == 0


# -- surface construction -------------------------------------------------------------


def _seed(quiver: Quiver) -> Seed:
    return Seed.initial(quiver)


def _gen(seed: Seed, v: str, power: int = 1) -> RationalFn:
    return RationalFn.generator(seed.frame, wname(v), power)


def _z(seed: Seed, v: str) -> RationalFn:
    return _gen(seed, v, 2)


def build_surface(name: str) -> SurfaceModel:
    """A named surface chart with its geodesic-function catalog."""
    if name == "genus2_k33":
        seed = _seed(surfaces.genus2_k33_quiver())
        return SurfaceModel(name, seed, dict(surfaces.GENUS2_K33_CATALOG))

    if name == "genus2_original":
        seed = _seed(surfaces.genus2_original_quiver())
        # the catalog is carried over from the neighboring chart: the mutated
        # seed expresses that chart's variables in this chart's generators
        other = mutate(seed, "f")
        catalog = {
            label: telescopic(word, other)
            for label, word in surfaces.GENUS2_K33_CATALOG.items()
        }
        return SurfaceModel(name, seed, catalog)

    if name == "genus2_papillon":
        seed = _seed(surfaces.genus2_papillon_quiver())
        t = seed.frame
        one = RationalFn.constant(t, 1)
        a, b, c, d, e, f = (_z(seed, v) for v in "abcdef")
        ehat = _gen(seed, "e", 2) * (
            _gen(seed, "a") * _gen(seed, "b") * _gen(seed, "c") * _gen(seed, "d") * _gen(seed, "f")
        )
        g12 = telescopic(["d", "a"], seed)
        gt12 = telescopic(["b", "c"], seed)
        wf = _gen(seed, "f")
        catalog = {
            "G_{1,2}": g12,
            "Gt_{1,2}": gt12,
            "G_{1,3}": _gen(seed, "a", -1) * ehat
            + _gen(seed, "d") * _gen(seed, "f") * gt12
            + _gen(seed, "a") / ehat * (one + f) * (one + d),
            "G_{2,3}": _gen(seed, "d", -1) * ehat * (one + a.inverse())
            + wf / _gen(seed, "a") * gt12
            + _gen(seed, "d") / ehat * (one + f),
            "Gt_{1,3}": _gen(seed, "c", -1) * ehat
            + _gen(seed, "b") * _gen(seed, "f") * g12
            + _gen(seed, "c") / ehat * (one + f) * (one + b),
            "Gt_{2,3}": _gen(seed, "b", -1) * ehat * (one + c.inverse())
            + wf / _gen(seed, "c") * g12
            + _gen(seed, "b") / ehat * (one + f),
            "G_B": wf.inverse() * (ehat + (one + f) / ehat),
            "ehat": ehat,
        }
        return SurfaceModel(name, seed, catalog)

    if name == "genus2_x7":
        seed = _seed(surfaces.genus2_x7_quiver())
        t = seed.frame
        one = RationalFn.constant(t, 1)
        a, b, c, d, f, g = (_z(seed, v) for v in "abcdfg")
        g12 = telescopic(["d", "a"], seed)
        gt12 = telescopic(["b", "c"], seed)
        gb = telescopic(["f", "g"], seed)
        wgd = _gen(seed, "g") * _gen(seed, "d")
        wgb = _gen(seed, "g") * _gen(seed, "b")
        catalog = {
            "G_{1,2}": g12,
            "Gt_{1,2}": gt12,
            "G_B": gb,
            "G_{2,3}": wgd.inverse() * (one + a.inverse())
            + (_gen(seed, "f") / _gen(seed, "a")) * gt12
            + wgd * (one + f),
            "Gt_{2,3}": wgb.inverse() * (one + c.inverse())
            + (_gen(seed, "f") / _gen(seed, "c")) * g12
            + wgb * (one + f),
        }
        q = seed.quiver
        catalog["G_{1,3}"] = skein_product(catalog["G_{1,2}"], catalog["G_{2,3}"], q)
        catalog["Gt_{1,3}"] = skein_product(catalog["Gt_{1,2}"], catalog["Gt_{2,3}"], q)
        model = SurfaceModel(
            name,
            seed,
            catalog,
            chains={"braid": ("G_{1,2}", "G_{2,3}", "G_B", "Gt_{2,3}", "Gt_{1,2}")},
            casimir_constraint=({"e": 2, "a": 1, "b": 1, "c": 1, "d": 1, "f": 1, "g": 1}, 1),
        )
        return model

    if name == "genus3_original":
        seed = _seed(surfaces.genus3_original_quiver())
        catalog = {k: list(w) for k, w in surfaces.GENUS3_ORIGINAL_CATALOG.items()}
        return SurfaceModel(name, seed, catalog)

    if name == "genus3_symmetric":
        seed = _seed(surfaces.genus3_symmetric_quiver())
        catalog = {k: list(w) for k, w in surfaces.GENUS3_SYMMETRIC_CATALOG.items()}
        return SurfaceModel(name, seed, catalog)

    if name == "genus3_extended":
        seed = _seed(surfaces.genus3_extended_quiver())
        catalog = {k: list(w) for k, w in surfaces.GENUS3_ORIGINAL_CATALOG.items()}
        catalog["G_B"] = ["a1", "a2", "a3", "at"]
        constraint = ({v: 1 for v in seed.quiver.vertices}, -1)
        return SurfaceModel(
            name,
            seed,
            catalog,
            chains={
                "rank": (
                    "G_{1,2}",
                    "G_{2,3}",
                    "G_{3,4}",
                    "G_B",
                    "Gt_{3,4}",
                    "Gt_{2,3}",
                    "Gt_{1,2}",
                )
            },
            casimir_constraint=constraint,
        )

    if name == "genus4_n5":
        seed = _seed(surfaces.genus4_n5_quiver())
        catalog: dict = {k: list(w) for k, w in surfaces.GENUS4_N5_CATALOG.items()}
        catalog["G_{4,5}"] = _genus4_g45(seed)
        constraint = {v: 1 for v in seed.quiver.vertices}
        for v in ("a2", "a3", "a4"):
            constraint[v] = 2
        return SurfaceModel(
            name,
            seed,
            catalog,
            chains={"rank": ("G_{1,2}", "G_{2,3}", "G_{3,4}", "G_{4,5}")},
            casimir_constraint=(constraint, 1),
        )

    raise ValueError(f"unknown surface model {name!r}")


def _genus4_g45(seed: Seed) -> RationalFn:
    table = seed.frame
    root = ClusterValue(table)
    for v in surfaces.GENUS4_G45_PREFACTOR:
        root = root * seed.values[v]
    prefactor = root.sqrt().as_rational()
    total = RationalFn.constant(table, 0)
    one = RationalFn.constant(table, 1)
    for denom in surfaces.GENUS4_G45_DENOMS:
        term = one
        for v in denom:
            term = term / seed.value(v)
        total = total + term
    return prefactor * total


def catalog_value(model: SurfaceModel, label: str) -> RationalFn:
    item = model.catalog[label]
    if isinstance(item, RationalFn):
        return item
    return telescopic(item, model.seed)


# -- separating-curve element -----------------------------------------------------


def markov(model: SurfaceModel, form: str = "product_G") -> RationalFn:
    """The separating-curve element of a genus-two model, three equivalent ways."""
    t = model.seed.frame
    q = model.quiver
    if form in ("product_G", "product_Gtilde"):
        p = "" if form == "product_G" else "t"
        g12 = catalog_value(model, f"G{p}_{{1,2}}")
        g23 = catalog_value(model, f"G{p}_{{2,3}}")
        if f"G{p}_{{1,3}}" in model.catalog:
            g13 = catalog_value(model, f"G{p}_{{1,3}}")
        else:
            g13 = skein_product(g12, g23, q)
        return g12 * g13 * g23 - g12 ** 2 - g13 ** 2 - g23 ** 2
    if form == "via_GB":
        if "G_B" not in model.catalog:
            raise ValueError(f"model {model.name} has no dual geodesic in its catalog")
        g12 = catalog_value(model, "G_{1,2}")
        gt12 = catalog_value(model, "Gt_{1,2}")
        gb = catalog_value(model, "G_B")
        f = RationalFn.generator(t, wname("f"), 2)
        four = RationalFn.constant(t, 4)
        return f * (g12 * gt12 * gb + g12 ** 2 + gt12 ** 2 + gb ** 2 - four) - four
    raise ValueError(f"unknown form {form!r}")


def eliminate_constraint(model: SurfaceModel, f: RationalFn, solve_for: str) -> RationalFn:
    """Substitute the unit-Casimir relation, eliminating one generator."""
    if model.casimir_constraint is None:
        raise ValueError("model carries no Casimir constraint")
    exps, value = model.casimir_constraint
    if value != 1:
        raise ValueError("only unit constraints are eliminated symbolically")
    e0 = exps[solve_for]
    if e0 != 1:
        raise ValueError("eliminated variable must appear in power one")
    table = f.table
    # z_solve = prod z_v^-e  ->  w_solve = prod w_v^-e (positive branch)
    root = ClusterValue(table)
    for v, e in exps.items():
        if v == solve_for:
            continue
        mono = [0] * len(table)
        mono[table.index(wname(v))] = -int(2 * e)
        root = root * ClusterValue(table, Q(1), tuple(mono))
    w_value = root.sqrt().as_rational()
    bindings = {}
    for name in table.names:
        bindings[name] = RationalFn.generator(table, name)
    bindings[wname(solve_for)] = w_value
    return f.substitute(bindings)


# -- mutation-sequence twist and its closed form -------------------------------------


class ChainPatternError(ValueError):
    pass


def locate_flanking(seed: Seed, chain: Sequence[str]) -> dict:
    """Find the side vertices b_k (arrows z_k -> b_k -> z_{k+2}) and the twist
    vertex (arrows z_1 -> t -> z_2) of a zig-zag cycle z_1 .. z_m."""
    q = seed.quiver
    m = len(chain)
    for i in range(m - 1):
        if q.b(chain[i + 1], chain[i]) <= 0:
            raise ChainPatternError(f"chain breaks between {chain[i]} and {chain[i + 1]}")
    if q.b(chain[-1], chain[0]) <= 0:
        raise ChainPatternError("chain is not closed by an arrow from last to first")
    flank = {}
    others = [v for v in q.vertices if v not in chain]
    for k in range(m - 2):
        matches = [
            v
            for v in others
            if q.b(chain[k], v) > 0 and q.b(v, chain[k + 2]) > 0
        ]
        if len(matches) != 1:
            raise ChainPatternError(f"no unique side vertex between {chain[k]} and {chain[k + 2]}")
        flank[k + 1] = matches[0]  # b_k in one-based numbering
    twist = [
        v
        for v in others
        if q.b(chain[0], v) > 0 and q.b(v, chain[1]) > 0 and v not in flank.values()
    ]
    flank["twist"] = twist[0] if len(twist) == 1 else None
    return flank


def braid_twist(seed: Seed, chain: Sequence[str], mode: str = "mutation_sequence") -> Seed:
    """The twist along the chain geodesic, as mutations or in closed form.

    The chain lists the cycle vertices z_1 .. z_{2n-2}; the mutation
    realization is the palindrome through z_2 .. z_{2n-2} .. z_2 followed by
    the relabeling of the two chain endpoints (the palindrome alone returns
    the quiver with those two labels exchanged).
    """
    m = len(chain)
    if mode == "mutation_sequence":
        seq = list(chain[1:]) + list(reversed(chain[1:-1])) + [(chain[0], chain[-1])]
        return apply_sequence(seed, seq)
    if mode != "closed_form":
        raise ValueError(f"unknown mode {mode!r}")

    flank = locate_flanking(seed, chain)
    q = seed.quiver
    values = dict(seed.values)
    z = {k + 1: seed.values[v] for k, v in enumerate(chain)}
    one = ClusterValue(seed.frame)

    # eta_k = 1 + z_m + z_m z_{m-1} + ... + z_m ... z_{k+1}   (no z_1)
    eta: dict = {m: one}
    running = one
    for k in range(m - 1, 0, -1):
        running = running * z[k + 1]
        eta[k] = _cv_sum(eta[k + 1], running)

    prod_all = one
    for k in range(1, m + 1):
        prod_all = prod_all * z[k]
    prod_2_to_m = one
    for k in range(2, m + 1):
        prod_2_to_m = prod_2_to_m * z[k]

    new = {}
    for i in range(2, m):
        new[chain[i - 1]] = z[i] * eta[i + 1] * eta[i - 1].inverse()
    new[chain[0]] = eta[2] * prod_2_to_m.inverse()
    new[chain[m - 1]] = prod_all * z[m] * (eta[1] * eta[m - 1]).inverse()
    for k in range(1, m - 1):
        b = flank[k]
        new[b] = seed.values[b] * eta[k] * eta[k + 2].inverse()
    if flank["twist"] is not None:
        tv = flank["twist"]
        new[tv] = seed.values[tv] * eta[1] * eta[m - 1] * (eta[2] * z[1] * z[m]).inverse()
    values.update(new)
    return Seed(q, values, seed.frame)


def _cv_sum(a: ClusterValue, b: ClusterValue) -> ClusterValue:
    """Sum of two factored values, refactored over the shared denominator."""
    ra = a.as_rational()
    rb = b.as_rational()
    s = ra + rb
    out = ClusterValue(a.table)._with_factor(s.num, 1)
    return out._with_factor(s.den, -1)
