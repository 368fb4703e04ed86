"""Schläfli symbols: parsing, validation, classification and formatting.

A symbol is written ``{p,q,...}`` where every entry is an integer ``p``, a
star fraction ``p/q`` or the infinity marker (``inf`` or ``∞``).  Entries are
stored as :class:`Fraction` values; infinity is the module-level :data:`INF`
marker, never a large integer.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Union


class SchlafliError(ValueError):
    """Base class for symbol errors."""


class SchlafliSyntaxError(SchlafliError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


class SchlafliConstraintError(SchlafliError):
    pass


class _Infinity:
    """Singleton marker for an infinite entry (apeirogon / infinite vertex figure)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    @property
    def is_star(self) -> bool:
        return False

    @property
    def is_convex(self) -> bool:
        return True

    @property
    def is_large(self) -> bool:
        return False


INF = _Infinity()


@dataclass(frozen=True, order=True)
class Fraction:
    """Star polygon ``p/q``: ``p`` vertices, turning number ``q``."""

    p: int
    q: int = 1

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise SchlafliConstraintError(f"non-integer entry {self.p!r}/{self.q!r}")
        if self.p < 2:
            raise SchlafliConstraintError(f"polygon order must be >= 2, got {self.p}")
        if not 1 <= self.q < self.p:
            raise SchlafliConstraintError(f"turning number must satisfy 1 <= q < p, got {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise SchlafliConstraintError(f"gcd({self.p},{self.q}) != 1")

    @property
    def is_convex(self) -> bool:
        return self.q == 1

    @property
    def is_star(self) -> bool:
        return self.q > 1

    @property
    def is_large(self) -> bool:
        """True for the spherical-only star polygons with q > p/2."""
        return 2 * self.q > self.p

    def value(self) -> Q:
        return Q(self.p, self.q)

    def __str__(self) -> str:
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"


Entry = Union[Fraction, _Infinity]


@dataclass(frozen=True)
class SchlafliSymbol:
    entries: tuple[Entry, ...]

    def __post_init__(self):
        if len(self.entries) == 0:
            raise SchlafliConstraintError("empty symbol")
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return format_symbol(self)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def is_convex(self) -> bool:
        return all(e.is_convex for e in self.entries)

    @property
    def has_infinity(self) -> bool:
        return any(e is INF for e in self.entries)

    @property
    def has_large(self) -> bool:
        return any(e.is_large for e in self.entries)

    def ints(self) -> tuple:
        """Plain integer orders (INF kept) for convex symbols."""
        if not self.is_convex:
            raise SchlafliConstraintError(f"{self} has star entries")
        return tuple(e if e is INF else e.p for e in self.entries)

    @classmethod
    def of(cls, *items) -> "SchlafliSymbol":
        """Build from ints, ``(p, q)`` pairs, Fractions or INF."""
        out: list[Entry] = []
        for it in items:
            if it is INF:
                out.append(INF)
            elif isinstance(it, Fraction):
                out.append(it)
            elif isinstance(it, tuple):
                out.append(Fraction(*it))
            elif isinstance(it, int):
                out.append(Fraction(it, 1))
            else:
                raise SchlafliConstraintError(f"cannot build an entry from {it!r}")
        return cls(tuple(out))


_TOKEN = re.compile(r"\s*(?:(?P<inf>inf|∞)|(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?)\s*")


def parse(text: str) -> SchlafliSymbol:
    """Parse ``{frac,frac,...}``; whitespace is ignored between tokens."""
    if not isinstance(text, str):
        raise TypeError("symbol text must be a string")
    pos = 0
    n = len(text)
    while pos < n and text[pos].isspace():
        pos += 1
    if pos >= n or text[pos] != "{":
        raise SchlafliSyntaxError("expected '{'", text, pos)
    pos += 1
    entries: list[Entry] = []
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise SchlafliSyntaxError("expected an entry (integer, p/q, inf or ∞)", text, pos)
        if m.group("inf"):
            entries.append(INF)
        else:
            p = int(m.group("num"))
            q = int(m.group("den")) if m.group("den") is not None else 1
            try:
                entries.append(Fraction(p, q))
            except SchlafliConstraintError as exc:
                raise SchlafliConstraintError(f"{exc} (entry starting at position {m.start()})") from None
        pos = m.end()
        if pos >= n:
            raise SchlafliSyntaxError("unterminated symbol, expected ',' or '}'", text, pos)
        if text[pos] == ",":
            pos += 1
            continue
        if text[pos] == "}":
            pos += 1
            break
        raise SchlafliSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
    while pos < n and text[pos].isspace():
        pos += 1
    if pos != n:
        raise SchlafliSyntaxError("trailing characters after '}'", text, pos)
    return SchlafliSymbol(tuple(entries))


def format_symbol(sym: SchlafliSymbol) -> str:
    return "{" + ",".join(str(e) for e in sym.entries) + "}"


# short alias so ``schlafli.format(sym)`` reads naturally at call sites
format = format_symbol  # noqa: A001


def compact(sym: SchlafliSymbol) -> str:
    """Bracket-free table spelling, e.g. ``435`` or ``5/2 5 3``."""
    parts = [str(e) for e in sym.entries]
    if all(len(p) == 1 for p in parts):
        return "".join(parts)
    return " ".join(parts)


SPHERICAL = "spherical"
EUCLIDEAN = "euclidean"
HYPERBOLIC = "hyperbolic"


def _reciprocal(e: Entry) -> Q:
    return Q(0) if e is INF else Q(1, e.p)


def curvature_excess(sym: SchlafliSymbol) -> Q:
    """``1/p + 1/q - 1/2`` for a convex rank-2 symbol (infinity contributes 0)."""
    if len(sym) != 2:
        raise SchlafliConstraintError(f"classification needs a rank-2 symbol, got {sym}")
    if not sym.is_convex:
        raise SchlafliConstraintError(f"classification needs convex entries, got {sym}")
    return _reciprocal(sym[0]) + _reciprocal(sym[1]) - Q(1, 2)


def classify(sym: SchlafliSymbol | str) -> str:
    if isinstance(sym, str):
        sym = parse(sym)
    s = curvature_excess(sym)
    if s > 0:
        return SPHERICAL
    if s == 0:
        return EUCLIDEAN
    return HYPERBOLIC


def as_symbol(sym: SchlafliSymbol | str | Iterable) -> SchlafliSymbol:
    if isinstance(sym, SchlafliSymbol):
        return sym
    if isinstance(sym, str):
        return parse(sym)
    return SchlafliSymbol.of(*sym)
