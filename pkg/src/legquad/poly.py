"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a dict mapping exponent tuples to nonzero Fractions.  The
exponent tuple has one entry per ambient variable, so every monomial of a
polynomial carries the same length.  The zero polynomial stores no terms.

The global monomial order is graded reverse lexicographic with
x0 > x1 > ... ; it is fixed once here so that every downstream computation
(Groebner bases in particular) is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

Exponent = Tuple[int, ...]


class PolyParseError(ValueError):
    """Syntax error in the polynomial text grammar; carries the position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def grevlex_key(exps: Exponent):
    """Sort key under grevlex with x0 > x1 > ...; larger key = larger monomial."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def monomial_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponent, b: Exponent) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponent, b: Exponent) -> Exponent:
    """Quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients.

    Do not mutate `terms` after construction; all arithmetic returns fresh
    objects, which keeps instances safe to share across threads.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, nvars: int, terms: Optional[Dict[Exponent, Fraction]] = None):
        self.nvars = nvars
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent tuple {exps} does not match nvars={nvars}")
                c = Fraction(coeff)
                if c != 0:
                    clean[tuple(exps)] = c
        self.terms = clean

    # ----- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars)

    @staticmethod
    def constant(nvars: int, value) -> "Polynomial":
        return Polynomial(nvars, {(0,) * nvars: Fraction(value)})

    @staticmethod
    def variable(nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for nvars={nvars}")
        exps = [0] * nvars
        exps[index] = 1
        return Polynomial(nvars, {tuple(exps): Fraction(1)})

    # ----- ring operations ----------------------------------------------

    def _check_compatible(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other)
        out: Dict[Exponent, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, factor) -> "Polynomial":
        f = Fraction(factor)
        if f == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {m: c * f for m, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # ----- structure ------------------------------------------------------

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def homogeneous_degree(self) -> Optional[int]:
        """Common degree of all terms, or None when inhomogeneous or zero."""
        degs = {sum(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def sorted_terms(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in descending grevlex order."""
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            yield m, self.terms[m]

    def leading_monomial(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def coefficient(self, exps: Exponent) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    # ----- calculus -------------------------------------------------------

    def partial_derivative(self, var: int) -> "Polynomial":
        """Exact formal partial derivative with respect to x_var."""
        if not 0 <= var < self.nvars:
            raise ValueError(f"variable index {var} out of range")
        out: Dict[Exponent, Fraction] = {}
        for m, c in self.terms.items():
            e = m[var]
            if e:
                dm = list(m)
                dm[var] = e - 1
                dm_t = tuple(dm)
                s = out.get(dm_t, 0) + c * e
                if s:
                    out[dm_t] = s
                else:
                    out.pop(dm_t, None)
        return Polynomial(self.nvars, out)

    def gradient(self) -> list:
        return [self.partial_derivative(i) for i in range(self.nvars)]

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a rational point; point length must equal nvars."""
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            value = c
            for x, e in zip(pt, m):
                if e:
                    value *= x ** e
            total += value
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Compose: replace x_i by images[i] (all over a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("one image polynomial per variable is required")
        target_nvars = images[0].nvars
        result = Polynomial.zero(target_nvars)
        for m, c in self.terms.items():
            term = Polynomial.constant(target_nvars, c)
            for img, e in zip(images, m):
                for _ in range(e):
                    term = term * img
            result = result + term
        return result

    # ----- text form -------------------------------------------------------

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def euler_weighted_sum(p: Polynomial) -> Polynomial:
    """Sum of x_i * dp/dx_i over all variables; input must be homogeneous.

    For a homogeneous p this equals deg(p) * p, which the callers rely on.
    """
    if not p.is_homogeneous():
        raise ValueError("euler_weighted_sum requires a homogeneous polynomial")
    total = Polynomial.zero(p.nvars)
    for i in range(p.nvars):
        total = total + Polynomial.variable(p.nvars, i) * p.partial_derivative(i)
    return total


# ---------------------------------------------------------------------------
# Parsing.  Grammar (whitespace insignificant):
#   expr   := [sign] term (sign term)*
#   term   := factor ('*' factor)*
#   factor := rational | variable ['^' int] | '(' expr ')' ['^' int]
#   rational := int ['/' int]
#   variable := ('x'|'y') int           (y<k> is an alias for x<k>)
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.text = text
        self.nvars = nvars
        self.pos = 0

    def error(self, message: str):
        raise PolyParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def read_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse_expr(self) -> Polynomial:
        sign = 1
        ch = self.peek()
        if ch in ("+", "-"):
            self.take()
            sign = -1 if ch == "-" else 1
        result = self.parse_term().scale(sign)
        while True:
            ch = self.peek()
            if ch not in ("+", "-"):
                break
            self.take()
            term = self.parse_term()
            result = result + (term.scale(-1) if ch == "-" else term)
        return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while self.peek() == "*":
            self.take()
            result = result * self.parse_factor()
        return result

    def parse_factor(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.take()
            inner = self.parse_expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return self._maybe_power(inner)
        if ch in ("x", "y"):
            self.take()
            index = self.read_int()
            if index >= self.nvars:
                self.error(f"variable index {index} out of range (nvars={self.nvars})")
            return self._maybe_power(Polynomial.variable(self.nvars, index))
        if ch.isdigit():
            num = self.read_int()
            if self.peek() == "/":
                self.take()
                den = self.read_int()
                if den == 0:
                    self.error("zero denominator")
                return Polynomial.constant(self.nvars, Fraction(num, den))
            return Polynomial.constant(self.nvars, num)
        self.error("expected a coefficient, variable or '('")

    def _maybe_power(self, base: Polynomial) -> Polynomial:
        if self.peek() == "^":
            self.take()
            return base ** self.read_int()
        return base


def parse_poly(text: str, nvars: int) -> Polynomial:
    """Parse the text grammar into canonical sparse form.

    parse(format(p)) == p for every polynomial p.
    """
    parser = _Parser(text, nvars)
    result = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input")
    return result


def _format_monomial(exps: Exponent) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """Canonical text form: descending grevlex, integer or a/b coefficients."""
    if not p.terms:
        return "0"
    chunks = []
    for m, c in p.sorted_terms():
        mono = _format_monomial(m)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def poly_from_pairs(nvars: int, pairs: Iterable[Tuple[Sequence[int], object]]) -> Polynomial:
    """Build a polynomial from (exponent tuple, coefficient) pairs."""
    terms: Dict[Exponent, Fraction] = {}
    for exps, coeff in pairs:
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + Fraction(coeff)
    return Polynomial(nvars, terms)
