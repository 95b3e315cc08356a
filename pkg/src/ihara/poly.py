"""Exact polynomial arithmetic.

Two coefficient models are provided:

* ``UniPoly`` -- dense univariate polynomials with Python ``int`` coefficients.
  Index ``k`` of ``coeffs`` holds the coefficient of ``u**k``.
* ``MultiPoly`` -- sparse multivariate polynomials with ``Fraction``
  coefficients over an explicit ``Universe`` of named variables.

``PolyMatrix`` holds square or rectangular matrices whose entries are ints,
``UniPoly`` or ``MultiPoly`` values; ``det`` picks fraction-free Bareiss
elimination for int/``UniPoly`` entries and memoized cofactor expansion for
``MultiPoly`` entries.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadFactor,
    InexactDivision,
    NonUnitConstantTerm,
    NotSquare,
    SymbolicTooLarge,
)

MULTIPOLY_DET_LIMIT = 10


def _strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class UniPoly:
    """Dense univariate polynomial with exact integer coefficients."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[int] = (), var: str = "u"):
        self.coeffs = _strip(list(coeffs))
        self.var = var

    @classmethod
    def const(cls, c: int, var: str = "u") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def monomial(cls, degree: int, c: int = 1, var: str = "u") -> "UniPoly":
        return cls([0] * degree + [c], var)

    @classmethod
    def gen(cls, var: str = "u") -> "UniPoly":
        return cls([0, 1], var)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other], self.var)
        return NotImplemented

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "UniPoly", max_degree: int | None = None) -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly((), self.var)
        n = len(a) + len(b) - 1
        if max_degree is not None:
            n = min(n, max_degree + 1)
        out = [0] * max(n, 0)
        for i, x in enumerate(a):
            if x == 0 or i >= n:
                continue
            for j in range(min(len(b), n - i)):
                out[i + j] += x * b[j]
        return UniPoly(out, self.var)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly([1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def truncate(self, d: int) -> "UniPoly":
        """Drop every term of degree > d."""
        return UniPoly(self.coeffs[: max(d + 1, 0)], self.var)

    def divmod(self, divisor: "UniPoly"):
        """Long division over Q; returns (quotient, remainder) with Fraction entries."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dq = divisor.coeffs
        lead = dq[-1]
        quot = [Fraction(0)] * max(len(rem) - len(dq) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(dq) - 1] / lead
            quot[k] = c
            if c:
                for j, x in enumerate(dq):
                    rem[k + j] -= c * x
        return quot, _strip(rem)

    def exact_divide(self, divisor: "UniPoly", context: str = "") -> "UniPoly":
        quot, rem = self.divmod(divisor)
        if rem or any(q.denominator != 1 for q in quot):
            raise InexactDivision(self, divisor, quot, list(rem), context)
        return UniPoly([int(q) for q in quot], self.var)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        return format_terms(
            ((k, c) for k, c in enumerate(self.coeffs) if c),
            lambda k: "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}"),
        )

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [int(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "UniPoly":
        return cls(obj["coeffs"], obj.get("var", "u"))


def format_terms(terms, render_monomial) -> str:
    """Render ``(key, coeff)`` pairs as ``1 - 2u^3 + u^6``."""
    parts = []
    for key, c in terms:
        mono = render_monomial(key)
        mag = abs(c)
        if mono == "":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{mono}" if not isinstance(mag, Fraction) or mag.denominator == 1 else f"({mag}){mono}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0"


class Universe:
    """A fixed, ordered tuple of variable names.

    Every ``MultiPoly`` is tied to one universe so exponent vectors have a
    fixed arity. Universes are created per computation and never grow.
    """

    def __init__(self, names: Iterable[str]):
        self.names: tuple[str, ...] = tuple(names)
        self._index = {name: i for i, name in enumerate(self.names)}
        if len(self._index) != len(self.names):
            raise ValueError("duplicate variable name")

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name):
        return name in self._index

    def __len__(self):
        return len(self.names)

    def var(self, name: str) -> "MultiPoly":
        idx = self.index(name)
        exps = [0] * len(self)
        exps[idx] = 1
        return MultiPoly(self, {tuple(exps): Fraction(1)})

    def const(self, c) -> "MultiPoly":
        if c == 0:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * len(self): Fraction(c)})

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def monomial(self, exponents: Mapping[str, int], c=1) -> "MultiPoly":
        exps = [0] * len(self)
        for name, k in exponents.items():
            exps[self.index(name)] += k
        return MultiPoly(self, {tuple(exps): Fraction(c)} if c else {})


class MultiPoly:
    """Sparse multivariate polynomial with rational coefficients."""

    __slots__ = ("universe", "terms")

    def __init__(self, universe: Universe, terms: Mapping[tuple, Fraction] | None = None):
        self.universe = universe
        n = len(universe)
        clean = {}
        for exps, c in (terms or {}).items():
            if c:
                if len(exps) != n:
                    raise ValueError(f"exponent vector {exps} does not have arity {n}")
                clean[exps] = Fraction(c)
        self.terms: dict[tuple, Fraction] = clean

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.universe is not self.universe:
                raise ValueError("polynomials live in different variable universes")
            return other
        if isinstance(other, (int, Fraction)):
            return self.universe.const(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return MultiPoly(self.universe, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.universe, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "MultiPoly", max_degree: int | None = None) -> "MultiPoly":
        """Product, optionally dropping terms of total degree > ``max_degree``."""
        out: dict[tuple, Fraction] = {}
        if max_degree is None:
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, 0) + c1 * c2
        else:
            right = [(sum(e), e, c) for e, c in other.terms.items()]
            for e1, c1 in self.terms.items():
                d1 = sum(e1)
                for d2, e2, c2 in right:
                    if d1 + d2 > max_degree:
                        continue
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.universe, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.universe.one()
        for _ in range(k):
            result = result * self
        return result

    @property
    def degree(self) -> int:
        """Total degree, -1 for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    def low_degree(self) -> int:
        """Smallest total degree carrying a nonzero coefficient (-1 for zero)."""
        return min((sum(e) for e in self.terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.universe), Fraction(0))

    def truncate(self, d: int) -> "MultiPoly":
        return MultiPoly(self.universe, {e: c for e, c in self.terms.items() if sum(e) <= d})

    def substitute(self, values: Mapping[str, object]):
        """Evaluate the named variables; unnamed ones must not occur in any term."""
        vals = [values.get(name) for name in self.universe.names]
        total = 0
        for exps, c in self.terms.items():
            term = c
            for v, k in zip(vals, exps):
                if k:
                    if v is None:
                        raise KeyError("no value supplied for a variable that occurs")
                    term = term * v**k
            total = total + term
        return total

    def exponents(self, exps: tuple) -> dict[str, int]:
        return {self.universe.names[i]: k for i, k in enumerate(exps) if k}

    def sorted_terms(self):
        """Terms by (total degree, exponent vector); deterministic for output."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-k for k in t[0])))

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        def render(exps):
            return "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in self.exponents(exps).items()
            )

        return format_terms(self.sorted_terms(), render)

    def to_json(self) -> list[dict]:
        return [
            {"exps": self.exponents(e), "num": c.numerator, "den": c.denominator}
            for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, universe: Universe, obj: Sequence[Mapping]) -> "MultiPoly":
        terms: dict[tuple, Fraction] = {}
        for term in obj:
            exps = [0] * len(universe)
            for name, k in term["exps"].items():
                exps[universe.index(name)] = k
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + Fraction(term["num"], term["den"])
        return cls(universe, terms)


# ---------------------------------------------------------------------------
# matrices


class PolyMatrix:
    """Dense matrix over ints, ``UniPoly`` or ``MultiPoly``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(r) for r in rows)
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> "PolyMatrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(self.rows)

    def map(self, f) -> "PolyMatrix":
        return PolyMatrix([[f(x) for x in r] for r in self.rows])

    def __add__(self, other: "PolyMatrix"):
        return PolyMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "PolyMatrix"):
        return PolyMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def scale(self, s) -> "PolyMatrix":
        return PolyMatrix([[s * x for x in r] for r in self.rows])

    def __matmul__(self, other: "PolyMatrix"):
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return PolyMatrix(
            [[reduce(lambda acc, t: acc + t[0] * t[1], zip(r, c), 0) for c in cols] for r in self.rows]
        )

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(zip(*self.rows))

    def __repr__(self):
        return f"PolyMatrix({[list(r) for r in self.rows]!r})"


def _exact_div(a, b):
    if isinstance(a, UniPoly) or isinstance(b, UniPoly):
        if not isinstance(a, UniPoly):
            a = UniPoly([a], b.var)
        if not isinstance(b, UniPoly):
            b = UniPoly([b], a.var)
        return a.exact_divide(b, context="Bareiss elimination step")
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise InexactDivision(a, b, q, r, context="Bareiss elimination step")
        return q
    return a / b


def bareiss_det(matrix: PolyMatrix):
    """Fraction-free Gaussian elimination over an integral domain."""
    n, m = matrix.shape
    if n != m:
        raise NotSquare(f"determinant of a {n}x{m} matrix")
    if n == 0:
        return 1
    a = [list(r) for r in matrix.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0 * a[0][0]
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(piv * row_i[j] - aik * row_k[j], prev)
            row_i[k] = 0 * piv
        prev = piv
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def cofactor_det(matrix: PolyMatrix, limit: int | None = MULTIPOLY_DET_LIMIT):
    """Laplace expansion along rows, memoized on the set of used columns."""
    n, m = matrix.shape
    if n != m:
        raise NotSquare(f"determinant of a {n}x{m} matrix")
    if limit is not None and n > limit:
        raise SymbolicTooLarge(f"symbolic determinant of order {n} exceeds limit {limit}")
    if n == 0:
        return 1
    rows = matrix.rows
    memo: dict[int, object] = {}

    def minor(mask: int):
        # rows 0..popcount(mask)-1 already consumed, columns in mask used
        r = bin(mask).count("1")
        if r == n:
            return 1
        if mask in memo:
            return memo[mask]
        total = None
        free_before = 0
        for c in range(n):
            if mask >> c & 1:
                continue
            entry = rows[r][c]
            if entry:
                term = entry * minor(mask | (1 << c))
                if free_before & 1:
                    term = -term
                total = term if total is None else total + term
            free_before += 1
        if total is None:
            total = 0 * rows[0][0]
        memo[mask] = total
        return total

    return minor(0)


def det(matrix: PolyMatrix):
    """Exact determinant; strategy chosen by entry type."""
    n, m = matrix.shape
    if n != m:
        raise NotSquare(f"determinant of a {n}x{m} matrix")
    if any(isinstance(x, MultiPoly) for r in matrix.rows for x in r):
        return cofactor_det(matrix)
    return bareiss_det(matrix)


# ---------------------------------------------------------------------------
# formal power series helpers


def series_inverse(p, d: int):
    """Inverse of ``p`` as a power series, truncated at (total) degree ``d``."""
    if isinstance(p, UniPoly):
        c0 = p[0]
        if c0 not in (1, -1):
            raise NonUnitConstantTerm(f"constant term {c0} is not a unit in Z")
        inv = [0] * (d + 1)
        for k in range(d + 1):
            s = 1 if k == 0 else 0
            for j in range(1, min(k, p.degree) + 1):
                s -= p[j] * inv[k - j]
            inv[k] = s * c0  # c0 == 1/c0 for c0 = +-1
        return UniPoly(inv, p.var)
    if isinstance(p, MultiPoly):
        c0 = p.constant_term()
        if c0 == 0:
            raise NonUnitConstantTerm("constant term is zero")
        # p = c0 (1 - r) with r having no constant term
        r = 1 - p * Fraction(1, c0)
        if not r.is_zero() and r.low_degree() == 0:
            raise NonUnitConstantTerm("internal: r has a constant term")
        acc = p.universe.one()
        for _ in range(d):
            acc = (1 + r.mul(acc, max_degree=d)).truncate(d)
        return acc * Fraction(1, c0)
    raise TypeError(f"series_inverse of {type(p).__name__}")


def _low_nonconstant_degree(p):
    if isinstance(p, UniPoly):
        return next((k for k in range(1, len(p.coeffs)) if p.coeffs[k]), None)
    ds = [sum(e) for e in p.terms if sum(e) > 0]
    return min(ds) if ds else None


def truncated_product(factors: Iterable, d: int, one=None):
    """Product of factors each ``1 + (higher terms)``, modulo degree ``d + 1``.

    Factors whose lowest non-constant term lies above ``d`` are skipped.
    ``one`` is the unit to start from; defaults to ``UniPoly([1])`` or to the
    first factor's universe unit.
    """
    acc = one
    for f in factors:
        if isinstance(f, UniPoly):
            c0 = f[0]
        elif isinstance(f, MultiPoly):
            c0 = f.constant_term()
        else:
            raise BadFactor(f"unsupported factor type {type(f).__name__}")
        if c0 != 1:
            raise BadFactor(f"factor {f} does not have constant term 1")
        if acc is None:
            acc = UniPoly([1], f.var) if isinstance(f, UniPoly) else f.universe.one()
        low = _low_nonconstant_degree(f)
        if low is None or low > d:
            continue
        acc = acc.mul(f, max_degree=d)
    if acc is None:
        return UniPoly([1])
    return acc.truncate(d)
