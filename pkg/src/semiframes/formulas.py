"""Closed-form sequences over the positive integers.

Weights ``w(n)``, index maps ``sigma(n)`` and dimension rules ``dim(d)`` are
all :class:`Formula` objects.  Every formula has a canonical ``text`` form
that :func:`parse_formula` reads back to an equal object, so scenario files
round-trip.

>>> Expr("1/n").at(4)
Fraction(1, 4)
>>> Expr("n*(1 - n%2)").at(3)
Fraction(0, 1)
>>> BlockPermutation((2, 1)).at(3)
4
"""

import ast
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: Fraction(a) / Fraction(b),
    ast.FloorDiv: lambda a, b: Fraction(a) // Fraction(b),
    ast.Mod: lambda a, b: Fraction(a) % Fraction(b),
}


class Formula:
    """Base class: a function of one positive integer."""

    text = ""

    def at(self, n):
        raise NotImplementedError

    def __str__(self):
        return self.text


def _check_tree(node, var):
    for sub in ast.walk(node):
        if isinstance(sub, (ast.Expression, ast.BinOp, ast.UnaryOp, ast.operator,
                            ast.unaryop, ast.Load)):
            if isinstance(sub, ast.BinOp) and type(sub.op) not in _BINOPS \
                    and not isinstance(sub.op, ast.Pow):
                raise ValueError(f"operator {type(sub.op).__name__} not allowed")
            if isinstance(sub, ast.UnaryOp) and not isinstance(sub.op, (ast.USub, ast.UAdd)):
                raise ValueError("only unary + and - are allowed")
            continue
        if isinstance(sub, ast.Constant) and type(sub.value) in (int, float):
            continue
        if isinstance(sub, ast.Name) and sub.id == var:
            continue
        if isinstance(sub, ast.Name):
            raise ValueError(f"unknown variable {sub.id!r} (expected {var!r})")
        raise ValueError(f"unsupported syntax: {type(sub).__name__}")


def _eval(node, x):
    if isinstance(node, ast.Expression):
        return _eval(node.body, x)
    if isinstance(node, ast.Constant):
        v = node.value
        return Fraction(repr(v)) if isinstance(v, float) else Fraction(v)
    if isinstance(node, ast.Name):
        return Fraction(x)
    if isinstance(node, ast.UnaryOp):
        v = _eval(node.operand, x)
        return -v if isinstance(node.op, ast.USub) else v
    a, b = _eval(node.left, x), _eval(node.right, x)
    if isinstance(node.op, ast.Pow):
        if b.denominator != 1:
            raise ValueError("exponents must be integers")
        return a ** int(b)
    return _BINOPS[type(node.op)](a, b)


@dataclass(frozen=True)
class Expr(Formula):
    """Exact rational arithmetic expression in a single variable.

    Supports integers, decimal literals, ``+ - * / // % **`` (``^`` is read
    as ``**``) and parentheses.  Values are :class:`fractions.Fraction`.
    """

    text: str
    var: str = "n"

    def __post_init__(self):
        try:
            tree = ast.parse(self.text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"cannot parse expression {self.text!r}") from exc
        _check_tree(tree, self.var)
        object.__setattr__(self, "text", ast.unparse(tree).replace(" ", ""))
        object.__setattr__(self, "_tree", tree)

    def at(self, n):
        return _eval(self._tree, n)


@dataclass(frozen=True)
class Periodic(Formula):
    """``values[(n-1) % len(values)] * n**power``; values are real floats."""

    values: tuple
    power: int = 0

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ValueError("periodic formula needs at least one value")
        object.__setattr__(self, "values", vals)

    @property
    def text(self):
        body = ",".join(repr(v) for v in self.values)
        return f"periodic({body};power={self.power})" if self.power else f"periodic({body})"

    def at(self, n):
        return self.values[(n - 1) % len(self.values)] * float(n) ** self.power


@dataclass(frozen=True)
class BlockPermutation(Formula):
    """Index map permuting consecutive blocks: ``n -> b*floor((n-1)/b) + perm[(n-1) % b]``.

    ``perm`` is a 1-based permutation of ``1..b``.  Truncations at levels that
    are multiples of ``b`` map ``1..d`` onto itself.
    """

    perm: tuple

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
        object.__setattr__(self, "perm", perm)

    @property
    def text(self):
        return "block(" + ",".join(map(str, self.perm)) + ")"

    def at(self, n):
        b = len(self.perm)
        return b * ((n - 1) // b) + self.perm[(n - 1) % b]


@dataclass(frozen=True)
class CompressedIndex(Formula):
    """Index map enumerating only the residues ``residues`` modulo ``modulus``.

    Positions ``n`` whose residue ``(n-1) % modulus + 1`` is listed are
    numbered consecutively from 1; other positions map to ``None`` and must
    carry zero weight.  Used for sequences living in a coordinate subspace.
    """

    modulus: int
    residues: tuple

    def __post_init__(self):
        res = tuple(sorted({int(r) for r in self.residues}))
        if not res or res[0] < 1 or res[-1] > self.modulus:
            raise ValueError(f"residues {self.residues} outside 1..{self.modulus}")
        object.__setattr__(self, "residues", res)

    @property
    def text(self):
        return f"compress({self.modulus};" + ",".join(map(str, self.residues)) + ")"

    def at(self, n):
        r = (n - 1) % self.modulus + 1
        if r not in self.residues:
            return None
        return len(self.residues) * ((n - 1) // self.modulus) + self.residues.index(r) + 1

    def count(self, d):
        """Number of supported positions among ``1..d``."""
        return sum(1 for n in range(1, d + 1) if self.at(n) is not None)


_CALL = re.compile(r"^\s*(periodic|block|compress)\s*\((.*)\)\s*$", re.S)


def parse_formula(text, var="n"):
    """Parse the canonical text of any :class:`Formula`."""
    m = _CALL.match(text)
    if m is None:
        return Expr(text, var)
    kind, body = m.groups()
    head, _, tail = body.partition(";")
    items = [s.strip() for s in head.split(",") if s.strip()]
    if kind == "periodic":
        power = 0
        if tail.strip():
            key, _, val = tail.partition("=")
            if key.strip() != "power":
                raise ValueError(f"unknown periodic option {key.strip()!r}")
            power = int(val)
        return Periodic(tuple(float(Expr(v, var).at(1)) for v in items), power)
    if kind == "block":
        return BlockPermutation(tuple(int(v) for v in items))
    if not tail.strip() or len(items) != 1:
        raise ValueError("compress expects 'compress(modulus; r1, r2, ...)'")
    return CompressedIndex(int(items[0]), tuple(int(v) for v in tail.split(",")))


def evaluate(formula, count):
    """Values ``formula(1..count)`` as a complex array (``None`` becomes 0)."""
    out = np.empty(count, dtype=np.complex128)
    for i in range(count):
        v = formula.at(i + 1)
        out[i] = 0.0 if v is None else complex(v)
    return out


def as_int(value, what):
    """Exact positive-or-zero integer conversion with a helpful error."""
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise ValueError(f"{what} must be an integer, got {value}")
        return int(value)
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"{what} must be an integer, got {value}")
        return int(value)
    return int(value)
