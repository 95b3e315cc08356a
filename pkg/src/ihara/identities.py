"""Checks of the algebraic identities behind the zeta computations.

Each verifier computes both sides along unrelated code paths (word
enumeration against determinant algebra, or integer evaluation against
symbolic expansion) and reports whether they agree. The scale limits are
hard errors so a run is explicit about what it covered.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Sequence

from .errors import BrokenInvolution, DimensionMismatch, ScaleGuard
from .graph import OrientedGraph, connectedness_matrix, q_matrix, successors
from .poly import (
    MultiPoly,
    PolyMatrix,
    UniPoly,
    Universe,
    bareiss_det,
    cofactor_det,
    series_inverse,
    truncated_product,
)
from .words import (
    BMonomial,
    LyndonMonomial,
    all_words,
    beta_circ,
    beta_dec,
    beta_vert,
    enumerate_lyndon,
    involution_step,
    is_good,
    lyndon_monomials,
)
from .zeta import delta_matrix, one_minus_u, edge_matrix_T, reverse_matrix, zeta_via_edges, zeta_via_vertices


def _guard(name: str, value: int, limit: int):
    if value > limit:
        raise ScaleGuard(f"{name}={value} exceeds the limit {limit}")


# ---------------------------------------------------------------------------
# symbolic successiveness matrix


def b_name(x: int, y: int) -> str:
    return f"b({x},{y})"


def b_universe(n: int) -> Universe:
    return Universe(b_name(x, y) for x in range(n) for y in range(n))


def symbolic_b(universe: Universe, n: int) -> PolyMatrix:
    return PolyMatrix([[universe.var(b_name(x, y)) for y in range(n)] for x in range(n)])


def to_multipoly(m: BMonomial, universe: Universe, coeff=1) -> MultiPoly:
    return universe.monomial({b_name(x, y): k for (x, y), k in m.exponents.items()}, coeff)


def monomial_sum(counts: Counter, universe: Universe) -> MultiPoly:
    acc = {}
    for m, c in counts.items():
        acc.update({e: acc.get(e, 0) + v for e, v in to_multipoly(m, universe, c).terms.items()})
    return MultiPoly(universe, acc)


def det_one_minus_b(universe: Universe, n: int) -> MultiPoly:
    b = symbolic_b(universe, n)
    one = universe.one()
    zero = universe.zero()
    m = PolyMatrix([[(one if i == j else zero) - b[i, j] for j in range(n)] for i in range(n)])
    return cofactor_det(m)


# ---------------------------------------------------------------------------
# Lyndon product, beta_dec / beta_vert sums and the determinant


@dataclass
class Thm11Report:
    n: int
    d: int
    lyndon_product: MultiPoly
    dec_sum: MultiPoly
    vert_sum: MultiPoly
    det: MultiPoly
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "lyndon_product": self.lyndon_product.to_json(),
            "det": self.det.to_json(),
            "checks": dict(self.checks),
            "pass": self.ok,
        }


def lyndon_product(n: int, d: int, universe: Universe) -> MultiPoly:
    """``prod over Lyndon l with |l| <= d of (1 - beta_circ(l))``, mod degree d+1."""
    one = universe.one()
    return truncated_product(
        (one - to_multipoly(beta_circ(l), universe) for l in enumerate_lyndon(n, d)), d, one=one
    )


def verify_thm_1_1(n: int, d: int) -> Thm11Report:
    """Lyndon product, word sums and ``det(I - B)`` agree as truncated series."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    _guard("n", n, 3)
    _guard("d", d, 6)
    uni = b_universe(n)
    lam = lyndon_product(n, d, uni)
    words = list(all_words(n, d))
    dec = monomial_sum(Counter(beta_dec(w) for w in words), uni)
    vert = monomial_sum(Counter(beta_vert(w) for w in words), uni)
    dt = det_one_minus_b(uni, n)
    checks = {
        "inverse_product_is_dec_sum": series_inverse(lam, d) == dec,
        "dec_sum_is_vert_sum": dec == vert,
        "vert_sum_is_inverse_det": vert == series_inverse(dt, d),
        "product_is_det": lam == dt.truncate(d),
    }
    return Thm11Report(n, d, lam, dec, vert, dt, checks)


def verify_macmahon(n: int, d: int) -> bool:
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    _guard("n", n, 3)
    _guard("d", d, 6)
    uni = b_universe(n)
    vert = monomial_sum(Counter(beta_vert(w) for w in all_words(n, d)), uni)
    return vert == series_inverse(det_one_minus_b(uni, n), d)


# ---------------------------------------------------------------------------
# the sign-reversing involution


@dataclass
class Thm41Report:
    n: int
    d: int
    monomials: int
    good: int
    orbits: int
    good_sum: MultiPoly
    signed_sum: MultiPoly
    lyndon_product: MultiPoly
    det: MultiPoly

    @property
    def pass_good_sum(self) -> bool:
        return self.good_sum == self.det.truncate(self.d)

    @property
    def pass_cancellation(self) -> bool:
        # the signed sum over all of D is the truncated Lyndon product
        return self.signed_sum == self.good_sum == self.lyndon_product

    @property
    def ok(self) -> bool:
        return self.pass_good_sum and self.pass_cancellation and 2 * self.orbits + self.good == self.monomials

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "monomials": self.monomials,
            "good": self.good,
            "orbits": self.orbits,
            "good_sum": self.good_sum.to_json(),
            "pass_good_sum": self.pass_good_sum,
            "pass_cancellation": self.pass_cancellation,
            "pass": self.ok,
        }


def involution_orbits(monomials: Sequence[LyndonMonomial]) -> list[tuple[LyndonMonomial, LyndonMonomial]]:
    """Pair up the non-good monomials; raise ``BrokenInvolution`` on any defect."""
    pool = set(monomials)
    seen = set()
    orbits = []
    for pi in monomials:
        if is_good(pi) or pi in seen:
            continue
        image = involution_step(pi)
        if image == pi:
            raise BrokenInvolution(f"{pi} is a fixed point", pi)
        if image not in pool:
            raise BrokenInvolution(f"{pi} maps outside the enumerated set to {image}", pi)
        if is_good(image):
            raise BrokenInvolution(f"{pi} maps to the good monomial {image}", pi)
        if involution_step(image) != pi:
            raise BrokenInvolution(f"{pi} -> {image} -> {involution_step(image)}", pi)
        if image.beta() != pi.beta():
            raise BrokenInvolution(f"beta differs between {pi} and {image}", pi)
        if abs(image.degree - pi.degree) != 1:
            raise BrokenInvolution(f"degree {pi.degree} -> {image.degree}", pi)
        seen.update((pi, image))
        orbits.append((pi, image))
    return orbits


def verify_thm_4_1(n: int, d: int) -> Thm41Report:
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    _guard("n", n, 3)
    _guard("d", d, 5)
    uni = b_universe(n)
    monos = lyndon_monomials(n, d)
    orbits = involution_orbits(monos)
    good = [pi for pi in monos if is_good(pi)]
    signed = Counter()
    for pi in monos:
        signed[pi.beta()] += pi.sign()
    good_counts = Counter()
    for pi in good:
        good_counts[pi.beta()] += pi.sign()
    good_sum = monomial_sum(good_counts, uni)
    return Thm41Report(
        n=n,
        d=d,
        monomials=len(monos),
        good=len(good),
        orbits=len(orbits),
        good_sum=good_sum,
        signed_sum=monomial_sum(signed, uni),
        lyndon_product=lyndon_product(n, d, uni),
        det=det_one_minus_b(uni, n),
    )


# ---------------------------------------------------------------------------
# determinant of a sum of matrices


T = UniPoly.gen("t")


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _char_det(a: Sequence[Sequence[int]], degree: int) -> UniPoly:
    """``det(I - t^degree A)`` for an integer matrix ``A``."""
    n = len(a)
    m = PolyMatrix(
        [[UniPoly.monomial(0, int(i == j), "t") - UniPoly.monomial(degree, a[i][j], "t") for j in range(n)]
         for i in range(n)]
    )
    d = bareiss_det(m)
    return d if isinstance(d, UniPoly) else UniPoly.const(d, "t")


@dataclass
class AmitsurReport:
    lhs: UniPoly
    rhs: UniPoly
    d: int

    @property
    def ok(self) -> bool:
        return self.lhs.truncate(self.d) == self.rhs


def amitsur_sides(matrices: Sequence[Sequence[Sequence[int]]], d: int, max_word_len: int | None = None) -> AmitsurReport:
    """Both sides of the graded identity, mod ``t^(d+1)``.

    ``max_word_len`` cuts the Lyndon product short; only useful as a
    negative control.
    """
    k = len(matrices)
    if k < 1:
        raise ValueError("need at least one matrix")
    dim = len(matrices[0])
    for a in matrices:
        if len(a) != dim or any(len(r) != dim for r in a):
            raise DimensionMismatch("matrices must be square and of equal dimension")
    _guard("dim", dim, 4)
    _guard("d", d, 8)
    total = [[sum(a[i][j] for a in matrices) for j in range(dim)] for i in range(dim)]
    lhs = _char_det(total, 1)
    limit = d if max_word_len is None else min(d, max_word_len)
    one = UniPoly.const(1, "t")
    factors = []
    for l in enumerate_lyndon(k, limit) if limit >= 1 else []:
        a_l = reduce(_matmul, (matrices[i] for i in l))
        factors.append(_char_det(a_l, len(l)))
    rhs = truncated_product(factors, d, one=one)
    return AmitsurReport(lhs, rhs, d)


def verify_amitsur(matrices, d: int) -> bool:
    return amitsur_sides(matrices, d).ok


def random_matrices(rng: random.Random, k: int, dim: int, lo: int = -3, hi: int = 3):
    return [[[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)] for _ in range(k)]


# ---------------------------------------------------------------------------
# common-origin matrix factorization


def common_origin_matrix(g: OrientedGraph, u: Callable[[int, int], object], v: Callable[[int], object], one=1, zero=0) -> PolyMatrix:
    """``I + Succ(u) + Com(v)``, rows indexed by the edge being mapped.

    Row ``e`` (an edge ``i -> j``) carries ``u(i, j)`` on every successor of
    ``e`` and ``v(i)`` on every other edge leaving ``i``.
    """
    rows = []
    for e in g.edges:
        i, j = g.origin[e], g.end[e]
        row = [one if f == e else zero for f in g.edges]
        for f in successors(g, e):
            row[f] = row[f] + u(i, j)
        for f in g.edges:
            if f != e and g.origin[f] == i:
                row[f] = row[f] + v(i)
        rows.append(row)
    return PolyMatrix(rows)


def vertex_factor_matrix(g: OrientedGraph, u, v, one=1) -> PolyMatrix:
    """Diagonal ``1 + K(i,i) u(i,i) + Q(i) v(i)``, off-diagonal ``K(i,j) u(i,j)``."""
    k, q = connectedness_matrix(g), q_matrix(g)
    return PolyMatrix(
        [[(one + k[i][i] * u(i, i) + q[i][i] * v(i)) if i == j else k[i][j] * u(i, j) for j in range(g.c0)]
         for i in range(g.c0)]
    )


def _prop81_rhs(g, delta_det, v, one):
    q = q_matrix(g)
    acc = delta_det
    for i in range(g.c0):
        if q[i][i] < 0:
            raise ValueError("vertex without outgoing edges")
        for _ in range(q[i][i]):
            acc = acc * (one - v(i))
    return acc


@dataclass
class Prop81Report:
    mode: str
    points: int
    agreements: int
    lhs: MultiPoly | None = None
    rhs: MultiPoly | None = None

    @property
    def ok(self) -> bool:
        return self.agreements == self.points

    def to_json(self) -> dict:
        out = {"mode": self.mode, "points": self.points, "agreements": self.agreements, "pass": self.ok}
        if self.lhs is not None:
            out["lhs"] = self.lhs.to_json()
            out["rhs"] = self.rhs.to_json()
        return out


def vertex_universe(g: OrientedGraph) -> Universe:
    names = [f"u({i},{j})" for i in range(g.c0) for j in range(g.c0)]
    names += [f"v({i})" for i in range(g.c0)]
    return Universe(names)


def verify_prop_8_1(g: OrientedGraph, mode: str = "random_eval", seeds: int = 20, seed: int = 0) -> Prop81Report:
    """``det A = det Delta * prod_i (1 - v(i))^Q(i)``, symbolically or at random integer points."""
    if mode == "symbolic":
        _guard("2*c1", g.edge_count, 8)
        uni = vertex_universe(g)
        one = uni.one()
        u = lambda i, j: uni.var(f"u({i},{j})")
        v = lambda i: uni.var(f"v({i})")
        lhs = cofactor_det(common_origin_matrix(g, u, v, one, uni.zero()))
        rhs = _prop81_rhs(g, cofactor_det(vertex_factor_matrix(g, u, v, one)), v, one)
        lhs, rhs = lhs * one, rhs * one  # promote bare ints from empty determinants
        return Prop81Report("symbolic", 1, int(lhs == rhs), lhs, rhs)
    if mode != "random_eval":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    agree = 0
    for _ in range(seeds):
        uv = {(i, j): rng.randint(-5, 5) for i in range(g.c0) for j in range(g.c0)}
        vv = [rng.randint(-5, 5) for _ in range(g.c0)]
        u = lambda i, j: uv[i, j]
        v = lambda i: vv[i]
        lhs = bareiss_det(common_origin_matrix(g, u, v))
        rhs = _prop81_rhs(g, bareiss_det(vertex_factor_matrix(g, u, v)), v, 1)
        agree += lhs == rhs
    return Prop81Report("random_eval", seeds, agree)


@dataclass
class Bass81Report:
    checks: dict[str, bool]
    det_reverse: UniPoly

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"checks": dict(self.checks), "det_reverse": self.det_reverse.to_json(), "pass": self.ok}


def verify_bass_from_8_1(g: OrientedGraph) -> Bass81Report:
    """Specialize ``u(i,j) -> -u``, ``v(i) -> u^2`` and recover the vertex formula.

    With rows indexed by the edge being mapped, the composite
    ``(I - uT) o (I - uJ)`` of endomorphisms is the matrix product
    ``(I - uJ)(I - uT)``.
    """
    u = UniPoly.gen()
    one = UniPoly.const(1)
    zero = UniPoly()
    a = common_origin_matrix(g, lambda i, j: -u, lambda i: u * u, one, zero)
    i_ut = one_minus_u(edge_matrix_T(g))
    i_uj = one_minus_u(reverse_matrix(g))
    det_a = _as_uni(bareiss_det(a))
    det_j = _as_uni(bareiss_det(i_uj))
    z_e = zeta_via_edges(g)
    z_v = zeta_via_vertices(g)
    base = UniPoly([1, 0, -1])
    delta = vertex_factor_matrix(g, lambda i, j: -u, lambda i: u * u, one)
    det_delta = _as_uni(bareiss_det(delta))
    checks = {
        "A_factors": a == i_uj @ i_ut,
        "det_I_minus_uJ": det_j == base**g.c1,
        "delta_specializes": delta == delta_matrix(g),
        "det_A_edges": det_a == z_e * det_j,
        "det_A_vertices": (
            det_a == det_delta * base ** (2 * g.c1 - g.c0)
            if 2 * g.c1 >= g.c0
            else det_a * base ** (g.c0 - 2 * g.c1) == det_delta
        ),
        "edges_equal_vertices": z_e == z_v,
    }
    return Bass81Report(checks, det_j)


def _as_uni(x) -> UniPoly:
    return x if isinstance(x, UniPoly) else UniPoly.const(x)
