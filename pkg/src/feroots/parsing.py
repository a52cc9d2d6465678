"""Polynomial expression parsing: "x^3 - 6x^2 + 11x - 6" to coefficients.

A hand-rolled recursive-descent pass with single-token lookahead, so every
rejection carries an exact character offset.  The grammar:

    poly   := ws term (ws ("+"|"-") ws term)* ws
    term   := number | [number] ["*"] var ["^" uint]
    var    := one ASCII letter, consistent across the whole input
    number := decimal literal with optional fraction part and scientific
              exponent, or a rational written "num/den" with nonzero den

A sign before the first term is also accepted ("-x^3 + 1").  Implicit
coefficient 1 and exponent 1; repeated powers accumulate by addition;
whitespace between tokens is insignificant.  Factored forms such as
"(x-1)(x-2)" are out of scope.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .poly import Cubic, Quadratic

_NUMBER_RE = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


class ParseErrorKind(enum.Enum):
    UNEXPECTED_TOKEN = "unexpected_token"
    EMPTY_INPUT = "empty_input"
    UNSUPPORTED_VARIABLE = "unsupported_variable"
    DUPLICATE_VARIABLE = "duplicate_variable"
    MALFORMED_NUMBER = "malformed_number"
    DEGREE_TOO_HIGH = "degree_too_high"


class ParseError(ValueError):
    """Rejected polynomial text, with the offending kind and offset.

    ``position`` is a character offset into the input, in [0, len(text)];
    it equals len(text) when the input ended where a token was required.
    """

    def __init__(self, kind: ParseErrorKind, position: int, message: str):
        super().__init__(f"{message} (position {position})")
        self.kind = kind
        self.position = position
        self.message = message


@dataclass(frozen=True)
class ParsedPolynomial:
    """Coefficients by ascending power, as produced from source text.

    The highest-index coefficient is nonzero unless the polynomial is
    identically zero, so ``degree == len(coefficients) - 1`` always holds.
    ``source_span`` is the character range of the input the terms occupied.
    """

    coefficients: tuple[float, ...]
    degree: int
    source_span: tuple[int, int]


class _Scanner:
    """Cursor over the input with the shared variable-letter state."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.variable: str | None = None

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_whitespace(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def fail(self, kind: ParseErrorKind, message: str, position: int | None = None):
        raise ParseError(kind, self.pos if position is None else position, message)

    def read_number(self) -> float:
        start = self.pos
        match = _NUMBER_RE.match(self.text, self.pos)
        if match is None:
            self.fail(ParseErrorKind.MALFORMED_NUMBER, "malformed number", start)
        self.pos = match.end()
        value = float(match.group())
        if self.peek() == "/":
            self.pos += 1
            denominator_start = self.pos
            denominator_match = _NUMBER_RE.match(self.text, self.pos)
            if denominator_match is None:
                self.fail(
                    ParseErrorKind.MALFORMED_NUMBER,
                    "rational literal needs a denominator",
                    denominator_start,
                )
            self.pos = denominator_match.end()
            denominator = float(denominator_match.group())
            if denominator == 0.0:
                self.fail(
                    ParseErrorKind.MALFORMED_NUMBER,
                    "rational literal has a zero denominator",
                    denominator_start,
                )
            value /= denominator
        return value

    def read_uint(self) -> tuple[int, int]:
        start = self.pos
        if not self.peek().isdigit():
            self.fail(
                ParseErrorKind.UNEXPECTED_TOKEN, "expected an integer exponent"
            )
        while self.peek().isdigit():
            self.pos += 1
        return int(self.text[start : self.pos]), start

    def read_variable(self) -> None:
        ch = self.peek()
        if not (ch.isascii() and ch.isalpha()):
            self.fail(
                ParseErrorKind.UNSUPPORTED_VARIABLE,
                f"variable must be a single ASCII letter, got {ch!r}",
            )
        if self.variable is None:
            self.variable = ch
        elif ch != self.variable:
            self.fail(
                ParseErrorKind.DUPLICATE_VARIABLE,
                f"second variable {ch!r} after {self.variable!r}",
            )
        self.pos += 1


def _read_term(scanner: _Scanner, max_degree: int) -> tuple[float, int]:
    """One term: its coefficient and power."""
    ch = scanner.peek()
    if ch == "":
        scanner.fail(ParseErrorKind.UNEXPECTED_TOKEN, "expected a term")
    if ch.isdigit() or ch == ".":
        coefficient = scanner.read_number()
        after_number = scanner.pos
        scanner.skip_whitespace()
        starred = scanner.peek() == "*"
        if starred:
            scanner.pos += 1
            scanner.skip_whitespace()
        ch = scanner.peek()
        if ch.isalpha():
            pass  # coefficient applies to the variable below
        elif starred:
            scanner.fail(
                ParseErrorKind.UNEXPECTED_TOKEN, "expected a variable after '*'"
            )
        else:
            scanner.pos = after_number
            return coefficient, 0
    elif ch.isalpha():
        coefficient = 1.0
    else:
        scanner.fail(ParseErrorKind.UNEXPECTED_TOKEN, f"unexpected {ch!r}")
    scanner.read_variable()
    power = 1
    probe = scanner.pos
    scanner.skip_whitespace()
    if scanner.peek() == "^":
        scanner.pos += 1
        scanner.skip_whitespace()
        power, power_pos = scanner.read_uint()
        if power > max_degree:
            scanner.fail(
                ParseErrorKind.DEGREE_TOO_HIGH,
                f"exponent {power} exceeds the maximum degree {max_degree}",
                power_pos,
            )
    else:
        scanner.pos = probe
    return coefficient, power


def parse(text: str, max_degree: int = 3) -> ParsedPolynomial:
    """Parse polynomial source text into an ascending coefficient vector.

    Raises :class:`ParseError` for anything outside the grammar; the error
    position always lands on the offending character (or the end of input
    when a token was missing).
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    scanner = _Scanner(text)
    scanner.skip_whitespace()
    if scanner.at_end():
        scanner.fail(ParseErrorKind.EMPTY_INPUT, "empty polynomial", 0)
    span_start = scanner.pos

    accumulated: dict[int, float] = {}
    highest_power = 0
    sign = 1.0
    if scanner.peek() in "+-":
        sign = -1.0 if scanner.peek() == "-" else 1.0
        scanner.pos += 1
        scanner.skip_whitespace()
    while True:
        coefficient, power = _read_term(scanner, max_degree)
        accumulated[power] = accumulated.get(power, 0.0) + sign * coefficient
        highest_power = max(highest_power, power)
        span_end = scanner.pos
        scanner.skip_whitespace()
        if scanner.at_end():
            break
        ch = scanner.peek()
        if ch not in "+-":
            scanner.fail(
                ParseErrorKind.UNEXPECTED_TOKEN, f"expected '+' or '-', got {ch!r}"
            )
        sign = -1.0 if ch == "-" else 1.0
        scanner.pos += 1
        scanner.skip_whitespace()

    coefficients = [accumulated.get(k, 0.0) for k in range(highest_power + 1)]
    while len(coefficients) > 1 and coefficients[-1] == 0.0:
        coefficients.pop()
    return ParsedPolynomial(
        coefficients=tuple(coefficients),
        degree=len(coefficients) - 1,
        source_span=(span_start, span_end),
    )


def format_polynomial(coefficients: tuple[float, ...] | list[float]) -> str:
    """Canonical text for an ascending coefficient vector.

    Round-trips exactly through :func:`parse`: coefficients are printed
    with ``repr`` so no precision is lost.
    """
    pieces: list[str] = []
    for power in range(len(coefficients) - 1, -1, -1):
        coefficient = float(coefficients[power])
        if coefficient == 0.0:
            continue
        magnitude = repr(abs(coefficient))
        if power == 0:
            body = magnitude
        elif power == 1:
            body = f"{magnitude}x"
        else:
            body = f"{magnitude}x^{power}"
        if not pieces:
            pieces.append(body if coefficient > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if coefficient > 0 else '-'} {body}")
    if not pieces:
        return "0"
    return " ".join(pieces)


def as_cubic(parsed: ParsedPolynomial) -> Cubic:
    """Interpret a parsed polynomial as a cubic (requires degree 3)."""
    if parsed.degree != 3:
        raise ValueError(f"expected a cubic, got degree {parsed.degree}")
    c0, c1, c2, c3 = parsed.coefficients
    return Cubic(a=c3, b=c2, c=c1, d=c0)


def as_quadratic(parsed: ParsedPolynomial) -> Quadratic:
    """Interpret a parsed polynomial as a quadratic (requires degree 2)."""
    if parsed.degree != 2:
        raise ValueError(f"expected a quadratic, got degree {parsed.degree}")
    c0, c1, c2 = parsed.coefficients
    return Quadratic(a=c2, b=c1, c=c0)
