"""Poisson brackets of invariants.

The ambient bracket is ``{z_i, w_j} = −2i δ_ij`` with ``{z, z} = {w, w} = 0``.
Brackets of generators are rewritten in the generators either greedily
through the monoid decomposition or by elimination.
"""

from __future__ import annotations

import logging
from typing import Literal

from symquot.errors import ArgumentError, InternalConsistencyError
from symquot.invariants.generators import GeneratorSet, require_type1, s_label
from symquot.invariants.relations import PresentationIdeal
from symquot.lattice.hilbert import decompose
from symquot.poly.coefficient import Coefficient
from symquot.poly.groebner import EliminationOrder, IdealBasis, normal_form
from symquot.poly.polynomial import Polynomial
from symquot.weights.types import TypeInfo

logger = logging.getLogger(__name__)

BRACKET_CONSTANT = Coefficient.complex(0, -2)

RewriteMethod = Literal["greedy", "elimination"]


def poisson_bracket(f: Polynomial, g: Polynomial) -> Polynomial:
    """``−2i Σ_j (∂f/∂z_j ∂g/∂w_j − ∂f/∂w_j ∂g/∂z_j)`` on ``z_1 … z_n, w_1 … w_n``."""
    if f.names != g.names:
        raise ArgumentError("Brackets need both polynomials in the same ambient coordinates")
    names = f.names
    if len(names) % 2:
        raise ArgumentError(f"Ambient context {names} has no z/w split")
    n = len(names) // 2
    result = Polynomial.zero(names, f.weights)
    for j in range(n):
        z, w = names[j], names[n + j]
        result = result + f.diff(z) * g.diff(w) - f.diff(w) * g.diff(z)
    return result.scale(BRACKET_CONSTANT)


# ---------------------------------------------------------------------------
# Rewriting in generators
# ---------------------------------------------------------------------------


def _rewrite_greedy(gens: GeneratorSet, f: Polynomial) -> Polynomial:
    basis = tuple(g.exponent for g in gens.generators)
    terms = {}
    for exp, coeff in f.items():
        counts = decompose(exp, basis)
        if counts is None:
            raise InternalConsistencyError(f"Monomial with exponent {exp} is not invariant")
        terms[tuple(counts)] = coeff
    return Polynomial(gens.names, terms, gens.degrees)


def _rewrite_elimination(gens: GeneratorSet, f: Polynomial) -> Polynomial:
    ambient = gens.ambient
    names = ambient + gens.names
    weights = (1,) * len(ambient) + gens.degrees
    tags = [Polynomial.variable(names, n, weights) - gens.monomial(n).embed(names, weights) for n in gens.names]
    ideal = IdealBasis.of(tags, names, weights)
    nf = normal_form(f.embed(names, weights), ideal, EliminationOrder(len(ambient), weights))
    if nf.support() & set(ambient):
        raise InternalConsistencyError(f"{f} is not in the subalgebra generated by {gens.names}")
    return Polynomial(gens.names, {e[len(ambient):]: c for e, c in nf.items()}, gens.degrees)


def rewrite_in_generators(gens: GeneratorSet, f: Polynomial, method: RewriteMethod = "greedy") -> Polynomial:
    if method == "greedy":
        return _rewrite_greedy(gens, f)
    if method == "elimination":
        return _rewrite_elimination(gens, f)
    raise ArgumentError(f"Unknown rewriting method {method!r}")


def bracket_in_generators(
    gens: GeneratorSet,
    name1: str,
    name2: str,
    method: RewriteMethod = "greedy",
    presentation: PresentationIdeal | None = None,
) -> Polynomial:
    """``{name1, name2}`` as a polynomial in the generators.

    With ``presentation`` the result is reduced to its normal form modulo
    that ideal.
    """
    ambient = poisson_bracket(gens.monomial(name1), gens.monomial(name2))
    result = rewrite_in_generators(gens, ambient, method)
    if presentation is not None:
        result = normal_form(result, presentation.ideal)
    return result


def bracket_table(
    gens: GeneratorSet,
    method: RewriteMethod = "greedy",
    presentation: PresentationIdeal | None = None,
) -> dict[tuple[str, str], Polynomial]:
    """Brackets of every ordered pair ``(a, b)`` with ``a`` before ``b``."""
    names = gens.names
    table = {}
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            table[(a, b)] = bracket_in_generators(gens, a, b, method, presentation)
    logger.debug("Bracket table over %d generators: %d nonzero entries", len(names), sum(1 for v in table.values() if not v.is_zero()))
    return table


# ---------------------------------------------------------------------------
# Type I_k closed form
# ---------------------------------------------------------------------------


def _parse_name(name: str) -> tuple[str, tuple[int, ...]]:
    if name.startswith("qbar"):
        return "qbar", tuple(int(x) for x in name[4:].split("_"))
    if name.startswith("q"):
        return "q", tuple(int(x) for x in name[1:].split("_"))
    if name.startswith("p"):
        i, j = name[1:].split("_")
        return "p", (int(i), int(j))
    if name.startswith("r"):
        return "r", (int(name[1:]),)
    raise ArgumentError(f"{name!r} is not a Type I generator name")


def _p_product(s: tuple[int, ...], s2: tuple[int, ...]) -> dict[str, int]:
    rows = [g for g in range(1, len(s) + 1) for _ in range(s[g - 1])]
    cols = [h for h in range(1, len(s2) + 1) for _ in range(s2[h - 1])]
    out: dict[str, int] = {}
    for g, h in zip(rows, cols):
        key = f"p{g}_{h}"
        out[key] = out.get(key, 0) + 1
    return out


def type1_bracket(info: TypeInfo, gens: GeneratorSet, a: str, b: str) -> Polynomial:
    """Closed-form bracket of two Type I_k generators."""
    require_type1(info)
    ka, ia = _parse_name(a)
    kb, ib = _parse_name(b)
    order = ["r", "p", "q", "qbar"]
    if order.index(ka) > order.index(kb):
        return -type1_bracket(info, gens, b, a)
    c = BRACKET_CONSTANT
    var = gens.variable
    zero = gens.zero()

    def mono(counts: dict[str, int]) -> Polynomial:
        exp = tuple(counts.get(n, 0) for n in gens.names)
        return Polynomial(gens.names, {exp: 1}, gens.degrees)

    if ka == "r":
        m_i = info.m[ia[0] - 1]
        if kb in ("r", "p"):
            return zero
        return var(b).scale(-c * m_i) if kb == "q" else var(b).scale(c * m_i)
    if ka == "p":
        g, h = ia
        if kb == "p":
            i, j = ib
            out = zero
            if g == j:
                out = out + var(f"p{i}_{h}")
            if h == i:
                out = out - var(f"p{g}_{j}")
            return out.scale(c)
        s = list(ib)
        if kb == "q":
            if s[h - 1] == 0:
                return zero
            weight = s[h - 1]
            s[h - 1] -= 1
            s[g - 1] += 1
            return var(f"q{s_label(s)}").scale(-c * weight)
        if s[g - 1] == 0:
            return zero
        weight = s[g - 1]
        s[g - 1] -= 1
        s[h - 1] += 1
        return var(f"qbar{s_label(s)}").scale(c * weight)
    if ka == kb:
        return zero
    s, s2 = ia, ib
    r_part = {f"r{i + 1}": m for i, m in enumerate(info.m)}
    out = zero
    for i, m_i in enumerate(info.m):
        counts = dict(r_part)
        counts[f"r{i + 1}"] -= 1
        for key, e in _p_product(s, s2).items():
            counts[key] = counts.get(key, 0) + e
        out = out + mono(counts).scale(m_i * m_i)
    for j in range(info.k):
        if s[j] and s2[j]:
            t = tuple(x - (idx == j) for idx, x in enumerate(s))
            t2 = tuple(x - (idx == j) for idx, x in enumerate(s2))
            counts = dict(r_part)
            counts.update(_p_product(t, t2))
            out = out + mono(counts).scale(s[j] * s2[j])
    return out.scale(c)
