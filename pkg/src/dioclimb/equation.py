"""Power Diophantine equations ``a1*x1^p1 + ... + an*xn^pn = N``.

All arithmetic uses Python's unbounded ``int``; nothing here ever rounds or
wraps. Assignments are plain tuples of positive integers, one per variable.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    DimensionMismatchError,
    DuplicateVariableError,
    EmptyEquationError,
    EquationSyntaxError,
    IndexOutOfRangeError,
    LengthMismatchError,
    MissingVariableError,
    NonPositiveCoefficientError,
    NonPositivePowerError,
)

Assignment = tuple[int, ...]


@dataclass(frozen=True)
class Equation:
    """Immutable statement of ``sum(coeffs[i] * x[i]**powers[i]) == target``.

    Coefficients may be any integer here; the climber and the oracle call
    :meth:`require_positive_coefficients` before relying on monotonicity.
    """

    coeffs: tuple[int, ...]
    powers: tuple[int, ...]
    target: int

    def __post_init__(self):
        coeffs = tuple(operator.index(a) for a in self.coeffs)
        powers = tuple(operator.index(p) for p in self.powers)
        if not coeffs and not powers:
            raise EmptyEquationError("an equation needs at least one term")
        if len(coeffs) != len(powers):
            raise LengthMismatchError(
                f"{len(coeffs)} coefficients but {len(powers)} powers"
            )
        for i, p in enumerate(powers, start=1):
            if p < 1:
                raise NonPositivePowerError(f"power of x{i} is {p}; powers must be >= 1")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "powers", powers)
        object.__setattr__(self, "target", operator.index(self.target))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def require_positive_coefficients(self) -> None:
        for i, a in enumerate(self.coeffs, start=1):
            if a < 1:
                raise NonPositiveCoefficientError(
                    f"coefficient of x{i} is {a}; the search requires every coefficient >= 1"
                )

    def __str__(self) -> str:
        return render(self)


def make_equation(coeffs: Sequence[int], powers: Sequence[int], target: int) -> Equation:
    return Equation(tuple(coeffs), tuple(powers), target)


def render(eq: Equation) -> str:
    """Canonical text form: terms by variable index, coefficient 1 omitted."""
    terms = []
    for i, (a, p) in enumerate(zip(eq.coeffs, eq.powers), start=1):
        var = f"x{i}^{p}"
        terms.append(var if a == 1 else f"{a}*{var}")
    return " + ".join(terms) + f" = {eq.target}"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        c = text[pos]
        if c.isspace():
            pos += 1
        elif c.isdigit():
            end = pos
            while end < len(text) and text[end].isdigit():
                end += 1
            tokens.append(("num", text[pos:end], pos))
            pos = end
        elif c in "-+*^=x":
            tokens.append((c, c, pos))
            pos += 1
        else:
            raise EquationSyntaxError(f"unexpected character {c!r}", text, pos)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def fail(self, message: str):
        raise EquationSyntaxError(message, self.text, self.tokens[self.i][2])

    def expect(self, kind: str, what: str) -> str:
        tok_kind, value, _ = self.tokens[self.i]
        if tok_kind != kind:
            found = "end of input" if tok_kind == "end" else repr(value)
            self.fail(f"expected {what}, found {found}")
        self.i += 1
        return value

    def integer(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.i += 1
            sign = -1
        return sign * int(self.expect("num", "an integer"))

    def term(self) -> tuple[int, int, int, int]:
        coeff = 1
        if self.peek() in ("num", "-"):
            coeff = self.integer()
            self.expect("*", "'*'")
        start = self.tokens[self.i][2]
        self.expect("x", "a variable like x1")
        index = int(self.expect("num", "a variable index"))
        if index < 1:
            raise EquationSyntaxError("variable indices start at 1", self.text, start)
        self.expect("^", "'^'")
        power = int(self.expect("num", "a power"))
        return index, coeff, power, start

    def equation(self) -> Equation:
        terms = [self.term()]
        while self.peek() == "+":
            self.i += 1
            terms.append(self.term())
        self.expect("=", "'+' or '='")
        target = self.integer()
        self.expect("end", "end of input")

        by_index = {}
        for index, coeff, power, _ in terms:
            if index in by_index:
                raise DuplicateVariableError(f"x{index} appears more than once")
            by_index[index] = (coeff, power)
        n = len(by_index)
        missing = sorted(set(range(1, n + 1)) - by_index.keys())
        if missing:
            raise MissingVariableError(
                f"variables must be x1..x{n} with no gaps; x{missing[0]} is missing"
            )
        ordered = [by_index[i] for i in range(1, n + 1)]
        return make_equation([c for c, _ in ordered], [p for _, p in ordered], target)


def parse_equation(text: str) -> Equation:
    """Parse ``"3*x1^2 + x2^5 = 100"``-style text into an :class:`Equation`.

    Every term needs an explicit ``^power``; the coefficient defaults to 1.
    Variables must be exactly x1..xn, each once, in any order.
    """
    return _Parser(text).equation()


def _check_dims(eq: Equation, x: Sequence[int]) -> None:
    if len(x) != eq.n:
        raise DimensionMismatchError(f"assignment has {len(x)} values, equation has {eq.n} variables")


def evaluate(eq: Equation, x: Sequence[int]) -> int:
    """Exact left-hand side at ``x``."""
    _check_dims(eq, x)
    return sum(a * xi**p for a, xi, p in zip(eq.coeffs, x, eq.powers))


def heuristic(eq: Equation, x: Sequence[int]) -> int:
    """Distance to the target, ``N - lhs(x)``. Zero at solutions, negative past them."""
    return eq.target - evaluate(eq, x)


def is_solution(eq: Equation, x: Sequence[int]) -> bool:
    return heuristic(eq, x) == 0


def floor_root(value: int, k: int) -> int:
    """Largest ``b >= 0`` with ``b**k <= value``, exactly, for arbitrarily large ints."""
    if value < 0:
        raise ValueError("floor_root of a negative number")
    if k < 1:
        raise ValueError("root degree must be >= 1")
    if value < 2 or k == 1:
        return value
    lo, hi = 1, 1 << (-(-value.bit_length() // k))
    # invariant: lo**k <= value < hi**k
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**k <= value:
            lo = mid
        else:
            hi = mid
    return lo


def variable_upper_bound(eq: Equation, i: int) -> Optional[int]:
    """Largest admissible value of variable ``i`` (1-based).

    Assumes every other variable sits at its minimum of 1. Returns ``None``
    when some coefficient is <= 0 (no finite bound), and 0 when even
    ``x_i = 1`` overshoots the target.
    """
    if not 1 <= i <= eq.n:
        raise IndexOutOfRangeError(f"variable index {i} outside 1..{eq.n}")
    if any(a < 1 for a in eq.coeffs):
        return None
    a = eq.coeffs[i - 1]
    slack = eq.target - (sum(eq.coeffs) - a)
    if slack < a:
        return 0
    return floor_root(slack // a, eq.powers[i - 1])


def variable_upper_bounds(eq: Equation) -> Optional[tuple[int, ...]]:
    bounds = tuple(variable_upper_bound(eq, i) for i in range(1, eq.n + 1))
    return None if None in bounds else bounds
