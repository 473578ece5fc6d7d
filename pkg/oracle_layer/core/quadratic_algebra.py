"""
The quadratic Lie algebra 𝔏 with the rescaled bracket [x, y]_new = (1/c)[x, y].

For L_{a,b}(m,n) and L_{u,v}(p,q) the bracket is

    ¼ n δ_{n+p,0} (b,u) a(m)v(q) + ¼ m δ_{m+p,0} (a,u) b(n)v(q)
  + ¼ n δ_{n+q,0} (b,v) u(p)a(m) + ¼ m δ_{m+q,0} (a,v) u(p)b(n),

where each product of two Heisenberg modes is rewritten with ``normal_order_pair``.
This is the abstract algebra, not ½:a(m)b(n): on a Heisenberg Fock space; the two only
share central terms at r = 1.
"""

import logging
from typing import Dict, List, Tuple

from sympy.polys.domains import QQ

from algebra_layer import BilinearSpace, CentralPoly, Rational
from ..models.fock_types import QuadElement, QuadGenerator

logger = logging.getLogger(__name__)

QUARTER = QQ(1, 4)


def normal_order_pair(i: int, m: int, j: int, n: int, space: BilinearSpace) -> QuadElement:
    """
    Rewrite e_i(m) e_j(n) as 2·L_{e_i,e_j}(m,n) plus its central correction.

    :a(m)b(n): swaps the factors when m ≥ n, so only then does
    [a(m), b(n)] = m (a,b) δ_{m+n,0} c appear.
    """
    central = CentralPoly.zero()
    if m >= n and m + n == 0 and m:
        central = CentralPoly.constant(m * space.gram[i][j])
    return QuadElement(((QuadGenerator.make(i, m, j, n), CentralPoly.constant(2)),), central)


def _contractions(g: QuadGenerator, h: QuadGenerator, space: BilinearSpace) -> List[Tuple[Rational, Tuple[int, int, int, int]]]:
    """The surviving δ-terms as (weight, ordered product e_s(x) e_t(y))."""
    a, m, b, n = g.i, g.m, g.j, g.n
    u, p, v, q = h.i, h.m, h.j, h.n
    gram = space.gram
    found = []
    if n and n + p == 0 and gram[b][u]:
        found.append((QUARTER * n * gram[b][u], (a, m, v, q)))
    if m and m + p == 0 and gram[a][u]:
        found.append((QUARTER * m * gram[a][u], (b, n, v, q)))
    if n and n + q == 0 and gram[b][v]:
        found.append((QUARTER * n * gram[b][v], (u, p, a, m)))
    if m and m + q == 0 and gram[a][v]:
        found.append((QUARTER * m * gram[a][v], (u, p, b, n)))
    return found


def bracket_new(g: QuadGenerator, h: QuadGenerator, space: BilinearSpace) -> QuadElement:
    """
    Rescaled bracket of two generators, as canonical generators plus a central part.

    Args:
        g: Left generator
        h: Right generator
        space: Space whose Gram matrix supplies the pairings

    Returns:
        [g, h]_new
    """
    quad: Dict[QuadGenerator, CentralPoly] = {}
    central = CentralPoly.zero()
    for weight, (s, x, t, y) in _contractions(g, h, space):
        ordered = normal_order_pair(s, x, t, y, space)
        for gen, coeff in ordered.quad:
            quad[gen] = quad.get(gen, CentralPoly.zero()) + coeff * weight
        central = central + ordered.central * weight
    return QuadElement.from_parts(quad, central)


def bracket_elements(x: QuadElement, y: QuadElement, space: BilinearSpace) -> QuadElement:
    """Bilinear extension of ``bracket_new``; c is central and drops out."""
    total = QuadElement()
    for g, cg in x.quad:
        for h, ch in y.quad:
            bracket = bracket_new(g, h, space)
            if bracket:
                total = total + bracket.scale(cg * ch)
    return total
