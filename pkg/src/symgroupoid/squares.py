"""Quivers attached to the SL_n square: the full face lattice, the transport
factorization quiver, and the Moebius-amalgamated quiver.

The full lattice quiver lives on ``(n+1)^2`` vertices ``K(r,c)`` arranged in a
sheared grid, rows ``r`` (top to bottom) and columns ``c`` (left to right).
Boundary arrows carry half weight (doubled entry 1), interior arrows weight
one (doubled entry 2):

* row arrows converge on the anti-diagonal column ``c = n - r``;
* column arrows diverge from the anti-diagonal row ``r = n - c``;
* below-diagonal ``r + c > n``: up-right arrows ``(r, c) -> (r-1, c+1)``;
* above-diagonal ``r + c < n``: down-left arrows ``(r, c) -> (r+1, c-1)``.

The amalgamated quiver glues the top and bottom rows with a flip,
``(0, k) ~ (n, n-k)``, summing the exchange data; the transport quiver drops
the bottom row and collapses the top row to a single product vertex.
"""

from __future__ import annotations

from fractions import Fraction

from .quiver import Quiver


def kname(r: int, c: int) -> str:
    return f"K{r}_{c}"


def _lattice_arrows(n: int) -> list:
    """Arrow triples (src, dst, doubled_weight) of the full lattice quiver.

    Directions are fixed so that the standard exchange rule written
    multiplicatively (mu_f: a -> a(1+f^-1)^-1 for an arrow out of f at a)
    reproduces the published catalogs; this is the reverse of the drawn
    orientation, a pure bookkeeping convention.
    """
    raw = _drawn_lattice_arrows(n)
    return [(dst, src, w) for (src, dst, w) in raw]


def _drawn_lattice_arrows(n: int) -> list:
    arrows = []

    def weight(r1, c1, r2, c2) -> int:
        # boundary (dashed) arrows join two boundary vertices along an edge row/column
        if r1 == r2 and r1 in (0, n):
            return 1
        if c1 == c2 and c1 in (0, n):
            return 1
        return 2

    for r in range(n + 1):
        conv = n - r
        for c in range(n):
            # arrow between columns c and c+1 pointing toward the anti-diagonal
            if c < conv:
                arrows.append((kname(r, c), kname(r, c + 1), weight(r, c, r, c + 1)))
            else:
                arrows.append((kname(r, c + 1), kname(r, c), weight(r, c + 1, r, c)))
    for c in range(n + 1):
        div = n - c
        for r in range(n):
            # arrow between rows r and r+1 pointing away from the anti-diagonal
            if r < div:
                arrows.append((kname(r + 1, c), kname(r, c), weight(r + 1, c, r, c)))
            else:
                arrows.append((kname(r, c), kname(r + 1, c), weight(r, c, r + 1, c)))
    for s in range(n + 1, 2 * n):
        # up-right diagonals below the anti-diagonal
        for r in range(n, s - n, -1):
            c = s - r
            arrows.append((kname(r, c), kname(r - 1, c + 1), 2))
    for s in range(1, n):
        # down-left diagonals above the anti-diagonal
        for r in range(0, s):
            c = s - r
            arrows.append((kname(r, c), kname(r + 1, c - 1), 2))
    return arrows


def square_quiver(n: int) -> Quiver:
    """Full lattice quiver on (n+1)^2 vertices; boundary vertices frozen."""
    vertices = [kname(r, c) for r in range(n + 1) for c in range(n + 1)]
    frozen = {
        kname(r, c)
        for r in range(n + 1)
        for c in range(n + 1)
        if r in (0, n) or c in (0, n)
    }
    return Quiver.from_arrows(vertices, _lattice_arrows(n), frozen)


def amalgamated_vertex(n: int, r: int, c: int) -> str:
    """Vertex name after the Moebius gluing (0, k) ~ (n, n-k)."""
    if r == n:
        return kname(0, n - c)
    return kname(r, c)


def amalgamated_quiver(n: int) -> Quiver:
    """Moebius-amalgamated quiver on n(n+1) vertices.

    Columns 0 and n stay frozen (they are eliminated by the unit-Casimir
    conditions and never mutated).
    """
    vertices = [kname(r, c) for r in range(n) for c in range(n + 1)]
    arrows = []
    for src, dst, w in _lattice_arrows(n):
        r1, c1 = _parse(src)
        r2, c2 = _parse(dst)
        arrows.append((amalgamated_vertex(n, r1, c1), amalgamated_vertex(n, r2, c2), w))
    frozen = {kname(r, c) for r in range(n) for c in (0, n)}
    return Quiver.from_arrows(vertices, arrows, frozen)


def _parse(name: str) -> tuple:
    r, c = name[1:].split("_")
    return int(r), int(c)


B_TOP = "Ktop"


def transport_quiver(n: int) -> Quiver:
    """Quiver of factorization parameters of the transport matrix.

    The bottom lattice row is dropped; the top row collapses to a single
    product vertex whose exchange entries are the sums over the removed row.
    """
    vertices = [B_TOP] + [kname(r, c) for r in range(1, n) for c in range(n + 1)]
    acc: dict = {}
    for src, dst, w in _lattice_arrows(n):
        r1, c1 = _parse(src)
        r2, c2 = _parse(dst)
        if r1 == n or r2 == n:
            continue
        a = B_TOP if r1 == 0 else src
        b = B_TOP if r2 == 0 else dst
        if a == b:
            continue
        acc[(a, b)] = acc.get((a, b), 0) + w
    return Quiver.from_arrows(vertices, [(a, b, w) for (a, b), w in acc.items()])


def det_b_exponents(n: int) -> dict:
    """z-exponents of det(B) on the transport quiver: the row-i product enters
    with exponent i, rows counted from the bottom (the collapsed top row is
    row n)."""
    exps = {B_TOP: Fraction(n)}
    for r in range(1, n):
        i = n - r
        for c in range(n + 1):
            exps[kname(r, c)] = Fraction(i)
    return exps


# -- the eight published n=4 monomials, as z-exponent maps on the lattice ----


def _mono(pairs) -> dict:
    return {kname(r, c): Fraction(e) for (r, c), e in pairs}


def square4_pre_casimirs() -> dict:
    """Pre-Casimir monomials of the n=4 lattice quiver, keyed by label.

    ``C0`` is the full boundary with two opposite corners cubed, ``C1`` the
    anti-diagonal with its corner endpoints squared; ``Ck``/``Ck~`` are the
    hook-shaped monomials whose products are Casimirs of the full lattice.
    """
    n = 4
    c0 = {}
    for c in range(1, n + 1):
        c0[(0, c)] = 1
    for c in range(0, n):
        c0[(n, c)] = 1
    for r in range(1, n):
        c0[(r, 0)] = 1
        c0[(r, n)] = 1
    c0[(0, 0)] = 3
    c0[(n, n)] = 3

    c1 = {(r, n - r): 1 for r in range(1, n)}
    c1[(n, 0)] = 2
    c1[(0, n)] = 2

    tilde = {
        2: {(0, 1): 1, (1, 0): 2, (1, 1): 1, (1, 2): 1, (1, 3): 1, (2, 3): 1, (3, 3): 1, (4, 3): 1},
        3: {(0, 2): 1, (1, 1): 1, (2, 0): 2, (2, 1): 1, (2, 2): 1, (3, 2): 1, (4, 2): 1},
        4: {(0, 3): 1, (1, 2): 1, (2, 1): 1, (3, 0): 2, (3, 1): 1, (4, 1): 1},
    }
    plain = {
        2: {(0, 1): 1, (1, 1): 1, (2, 1): 1, (3, 1): 1, (3, 2): 1, (3, 3): 1, (3, 4): 2, (4, 3): 1},
        3: {(0, 2): 1, (1, 2): 1, (2, 2): 1, (2, 3): 1, (2, 4): 2, (3, 3): 1, (4, 2): 1},
        4: {(0, 3): 1, (1, 3): 1, (1, 4): 2, (2, 3): 1, (3, 2): 1, (4, 1): 1},
    }
    out = {"C0": _mono(c0.items()), "C1": _mono(c1.items())}
    for k in (2, 3, 4):
        out[f"C{k}~"] = _mono(tilde[k].items())
        out[f"C{k}"] = _mono(plain[k].items())
    return out


def amalgamate_monomial(n: int, exps: dict) -> dict:
    """Read a lattice monomial on the glued vertex set.

    The published monomials list a glued vertex twice (once per boundary row)
    with matching exponents, so the projection takes the common per-vertex
    value and requires consistency across each fiber.
    """
    out: dict = {}
    for name, e in exps.items():
        r, c = _parse(name)
        glued = amalgamated_vertex(n, r, c)
        e = Fraction(e)
        if glued in out and out[glued] != e:
            raise ValueError(f"monomial is not symmetric across the gluing at {glued}")
        out[glued] = e
    return {k: v for k, v in out.items() if v}
