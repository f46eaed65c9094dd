"""Core value types for dual-mode Boolean functions.

A polymorphic Boolean function behaves as one ordinary Boolean function in
mode 1 and as another in mode 2.  Cells of its truth table therefore hold
paired bits written ``a/b``.  Expressions are built from literals, paired
constants, and two-operator gates such as ``AND/XOR`` (AND in mode 1, XOR
in mode 2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

MAX_ARITY = 16

OP_NAMES = ("AND", "OR", "XOR", "NAND", "NOR", "XNOR")

_OP_BIT = {
    "AND": lambda a, b: a & b,
    "OR": lambda a, b: a | b,
    "XOR": lambda a, b: a ^ b,
    "NAND": lambda a, b: 1 - (a & b),
    "NOR": lambda a, b: 1 - (a | b),
    "XNOR": lambda a, b: 1 - (a ^ b),
}

# Same operators lifted to bit-parallel masks; `full` masks off the overflow
# of complements.
_OP_MASK = {
    "AND": lambda x, y, full: x & y,
    "OR": lambda x, y, full: x | y,
    "XOR": lambda x, y, full: x ^ y,
    "NAND": lambda x, y, full: full & ~(x & y),
    "NOR": lambda x, y, full: full & ~(x | y),
    "XNOR": lambda x, y, full: full & ~(x ^ y),
}

_COMPLEMENT_OP = {
    "AND": "NAND",
    "NAND": "AND",
    "OR": "NOR",
    "NOR": "OR",
    "XOR": "XNOR",
    "XNOR": "XOR",
}


class ArityError(ValueError):
    """A variable index or cube/function arity is out of range or mismatched."""


def apply_op(op: str, a: int, b: int) -> int:
    return _OP_BIT[op](a, b)


def apply_op_mask(op: str, x: int, y: int, full: int) -> int:
    return _OP_MASK[op](x, y, full)


@dataclass(frozen=True)
class PolyValue:
    """One truth-table cell: the bit in mode 1 paired with the bit in mode 2."""

    mode1: int
    mode2: int

    def __post_init__(self) -> None:
        if self.mode1 not in (0, 1) or self.mode2 not in (0, 1):
            raise ValueError(f"cell bits must be 0 or 1, got {self.mode1}/{self.mode2}")

    def bit(self, mode: int) -> int:
        _check_mode(mode)
        return self.mode1 if mode == 1 else self.mode2

    def __str__(self) -> str:
        return f"{self.mode1}/{self.mode2}"

    @classmethod
    def parse(cls, text: str) -> "PolyValue":
        m = re.fullmatch(r"([01])/([01])", text.strip())
        if m is None:
            raise ValueError(f"malformed cell value {text!r}, expected <bit>/<bit>")
        return cls(int(m.group(1)), int(m.group(2)))


ZERO = PolyValue(0, 0)
ONE = PolyValue(1, 1)
MODE1_ONLY = PolyValue(1, 0)
MODE2_ONLY = PolyValue(0, 1)

ALL_VALUES = (ZERO, MODE2_ONLY, MODE1_ONLY, ONE)


@dataclass(frozen=True)
class Assignment:
    """Values of the variables x1..xn; bit i (0-based) is the value of x(i+1)."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.bits) <= MAX_ARITY:
            raise ArityError(f"arity must be in 1..{MAX_ARITY}, got {len(self.bits)}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"assignment bits must be 0/1: {self.bits}")

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def from_index(cls, index: int, n: int) -> "Assignment":
        # x1 is the most significant bit of the index.
        return cls(tuple((index >> (n - 1 - i)) & 1 for i in range(n)))

    @classmethod
    def from_string(cls, text: str) -> "Assignment":
        if not re.fullmatch(r"[01]+", text):
            raise ValueError(f"malformed assignment {text!r}, expected bits like 1011")
        return cls(tuple(int(c) for c in text))

    def index(self) -> int:
        k = 0
        for b in self.bits:
            k = (k << 1) | b
        return k

    def value(self, var: int) -> int:
        if not 1 <= var <= self.n:
            raise ArityError(f"variable x{var} out of range for arity {self.n}")
        return self.bits[var - 1]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def _check_mode(mode: int) -> None:
    if mode not in (1, 2):
        raise ValueError(f"mode must be 1 or 2, got {mode}")


def _check_arity(n: int) -> None:
    if not 1 <= n <= MAX_ARITY:
        raise ArityError(f"arity must be in 1..{MAX_ARITY}, got {n}")


@lru_cache(maxsize=None)
def var_mask(n: int, var: int) -> int:
    """Bitmask over all 2**n cell indices where variable `var` is 1."""
    _check_arity(n)
    if not 1 <= var <= n:
        raise ArityError(f"variable x{var} out of range for arity {n}")
    pos = n - var  # bit position of x_var within a cell index
    block = ((1 << (1 << pos)) - 1) << (1 << pos)  # one period: zeros then ones
    mask = 0
    period = 1 << (pos + 1)
    for start in range(0, 1 << n, period):
        mask |= block << start
    return mask


def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


class PolyFunction:
    """A complete dual-mode truth table over n variables.

    Internally both mode tables are stored as integer bitmasks (bit k is the
    value at the assignment with index k), which makes equivalence checks and
    cube classification single integer operations.
    """

    __slots__ = ("n", "_m1", "_m2", "_cells")

    def __init__(self, cells: "tuple[PolyValue, ...] | list[PolyValue]"):
        n = (len(cells)).bit_length() - 1
        if len(cells) != (1 << n) or n < 1:
            raise ArityError(f"cell count must be a power of two >= 2, got {len(cells)}")
        _check_arity(n)
        m1 = m2 = 0
        for k, v in enumerate(cells):
            if not isinstance(v, PolyValue):
                raise TypeError(f"cell {k} is not a PolyValue")
            m1 |= v.mode1 << k
            m2 |= v.mode2 << k
        self.n = n
        self._m1 = m1
        self._m2 = m2
        self._cells: tuple[PolyValue, ...] | None = tuple(cells)

    @classmethod
    def from_masks(cls, n: int, mask1: int, mask2: int) -> "PolyFunction":
        _check_arity(n)
        full = full_mask(n)
        if mask1 & ~full or mask2 & ~full:
            raise ValueError("mode mask has bits beyond 2**n cells")
        obj = cls.__new__(cls)
        obj.n = n
        obj._m1 = mask1
        obj._m2 = mask2
        obj._cells = None
        return obj

    @classmethod
    def from_mode_tables(cls, bits1, bits2) -> "PolyFunction":
        if len(bits1) != len(bits2):
            raise ArityError("mode tables must have equal length")
        return cls([PolyValue(a, b) for a, b in zip(bits1, bits2)])

    @property
    def cells(self) -> tuple[PolyValue, ...]:
        if self._cells is None:
            self._cells = tuple(
                PolyValue((self._m1 >> k) & 1, (self._m2 >> k) & 1)
                for k in range(1 << self.n)
            )
        return self._cells

    def mode_mask(self, mode: int) -> int:
        _check_mode(mode)
        return self._m1 if mode == 1 else self._m2

    def mode_view(self, mode: int) -> tuple[int, ...]:
        m = self.mode_mask(mode)
        return tuple((m >> k) & 1 for k in range(1 << self.n))

    def value_at(self, index: int) -> PolyValue:
        if not 0 <= index < (1 << self.n):
            raise ArityError(f"cell index {index} out of range for arity {self.n}")
        return PolyValue((self._m1 >> index) & 1, (self._m2 >> index) & 1)

    def value(self, a: Assignment) -> PolyValue:
        if a.n != self.n:
            raise ArityError(f"assignment arity {a.n} != function arity {self.n}")
        return self.value_at(a.index())

    def assignments(self) -> Iterator[Assignment]:
        for k in range(1 << self.n):
            yield Assignment.from_index(k, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyFunction):
            return NotImplemented
        return (self.n, self._m1, self._m2) == (other.n, other._m1, other._m2)

    def __hash__(self) -> int:
        return hash((self.n, self._m1, self._m2))

    def __repr__(self) -> str:
        return f"PolyFunction(n={self.n}, mode1={self._m1:#x}, mode2={self._m2:#x})"


@dataclass(frozen=True)
class PolyGate:
    """An ordered operator pair: `op1` acts in mode 1, `op2` in mode 2."""

    op1: str
    op2: str

    def __post_init__(self) -> None:
        for op in (self.op1, self.op2):
            if op not in OP_NAMES:
                raise ValueError(f"unknown operator {op!r}")

    @property
    def is_zero_preserving(self) -> bool:
        # op(0,0) == 0 in both modes; exactly the AND/OR/XOR pairs.
        return self.op1 in ("AND", "OR", "XOR") and self.op2 in ("AND", "OR", "XOR")

    @property
    def is_polymorphic(self) -> bool:
        return self.op1 != self.op2

    def op(self, mode: int) -> str:
        _check_mode(mode)
        return self.op1 if mode == 1 else self.op2

    def complement(self) -> "PolyGate":
        return PolyGate(_COMPLEMENT_OP[self.op1], _COMPLEMENT_OP[self.op2])

    def sort_key(self) -> tuple[int, int]:
        return (OP_NAMES.index(self.op1), OP_NAMES.index(self.op2))

    def __str__(self) -> str:
        return f"{self.op1}/{self.op2}"

    @classmethod
    def parse(cls, text: str) -> "PolyGate":
        parts = text.strip().split("/")
        if len(parts) != 2:
            raise ValueError(f"malformed gate pair {text!r}, expected OP/OP")
        return cls(parts[0], parts[1])


AND_AND = PolyGate("AND", "AND")
OR_OR = PolyGate("OR", "OR")


@dataclass(frozen=True)
class Const:
    value: PolyValue


@dataclass(frozen=True)
class Literal:
    var: int
    negated: bool = False

    def __post_init__(self) -> None:
        if self.var < 1:
            raise ArityError(f"variable index must be >= 1, got {self.var}")


@dataclass(frozen=True)
class Gate:
    gate: PolyGate
    left: "PolyExpr"
    right: "PolyExpr"


PolyExpr = Union[Const, Literal, Gate]


def expr_arity(expr: PolyExpr) -> int:
    """Highest variable index referenced (0 for constant expressions)."""
    if isinstance(expr, Const):
        return 0
    if isinstance(expr, Literal):
        return expr.var
    return max(expr_arity(expr.left), expr_arity(expr.right))


def eval_expr(expr: PolyExpr, a: Assignment, mode: int) -> int:
    """Value of the expression at one assignment in one mode."""
    _check_mode(mode)
    if isinstance(expr, Const):
        return expr.value.bit(mode)
    if isinstance(expr, Literal):
        bit = a.value(expr.var)
        return 1 - bit if expr.negated else bit
    l = eval_expr(expr.left, a, mode)
    r = eval_expr(expr.right, a, mode)
    return apply_op(expr.gate.op(mode), l, r)


def mode_project(expr: PolyExpr, mode: int) -> PolyExpr:
    """Replace every gate by its single-mode operator (as a uniform pair)."""
    _check_mode(mode)
    if isinstance(expr, Const):
        b = expr.value.bit(mode)
        return Const(PolyValue(b, b))
    if isinstance(expr, Literal):
        return expr
    op = expr.gate.op(mode)
    return Gate(PolyGate(op, op), mode_project(expr.left, mode), mode_project(expr.right, mode))


def negate_expr(expr: PolyExpr) -> PolyExpr:
    """Mode-uniform complement, folded into the node (no inverter nodes exist)."""
    if isinstance(expr, Const):
        return Const(PolyValue(1 - expr.value.mode1, 1 - expr.value.mode2))
    if isinstance(expr, Literal):
        return Literal(expr.var, not expr.negated)
    return Gate(expr.gate.complement(), expr.left, expr.right)


def expr_masks(expr: PolyExpr, n: int) -> tuple[int, int]:
    """Bit-parallel evaluation over all 2**n assignments, both modes."""
    _check_arity(n)
    if expr_arity(expr) > n:
        raise ArityError(f"expression uses x{expr_arity(expr)} but arity is {n}")
    full = full_mask(n)

    def walk(e: PolyExpr) -> tuple[int, int]:
        if isinstance(e, Const):
            return (full if e.value.mode1 else 0, full if e.value.mode2 else 0)
        if isinstance(e, Literal):
            m = var_mask(n, e.var)
            if e.negated:
                m = full & ~m
            return (m, m)
        l1, l2 = walk(e.left)
        r1, r2 = walk(e.right)
        return (
            _OP_MASK[e.gate.op1](l1, r1, full),
            _OP_MASK[e.gate.op2](l2, r2, full),
        )

    return walk(expr)


def table_of(expr: PolyExpr, n: int) -> PolyFunction:
    m1, m2 = expr_masks(expr, n)
    return PolyFunction.from_masks(n, m1, m2)


def equivalent(expr: PolyExpr, f: PolyFunction) -> bool:
    """Cell-exact equality of the expression's table with `f`, both modes."""
    m1, m2 = expr_masks(expr, f.n)
    return m1 == f.mode_mask(1) and m2 == f.mode_mask(2)


def count_literals(expr: PolyExpr) -> int:
    if isinstance(expr, Const):
        return 0
    if isinstance(expr, Literal):
        return 1
    return count_literals(expr.left) + count_literals(expr.right)


def count_gates(expr: PolyExpr) -> int:
    if isinstance(expr, Gate):
        return 1 + count_gates(expr.left) + count_gates(expr.right)
    return 0


def count_poly_gates(expr: PolyExpr) -> int:
    if isinstance(expr, Gate):
        own = 1 if expr.gate.is_polymorphic else 0
        return own + count_poly_gates(expr.left) + count_poly_gates(expr.right)
    return 0


def expr_depth(expr: PolyExpr) -> int:
    if isinstance(expr, Gate):
        return 1 + max(expr_depth(expr.left), expr_depth(expr.right))
    return 0


def expr_size(expr: PolyExpr) -> int:
    """Total node count (literals, constants, and gates)."""
    if isinstance(expr, Gate):
        return 1 + expr_size(expr.left) + expr_size(expr.right)
    return 1


# ---------------------------------------------------------------------------
# Text form.
#
# Grammar (left-associative at every level, loosest to tightest):
#   expr := sum
#   sum  := poly ('+' poly)*          '+' is OR/OR
#   poly := prod (GATE prod)*         GATE is OPNAME/OPNAME
#   prod := atom ('*' atom)*          '*' is AND/AND
#   atom := '~'? (VAR | CONST | '(' expr ')')
#   VAR  := x<digits> (1-based)       CONST := <bit>/<bit>
# ---------------------------------------------------------------------------

_LEVEL_SUM = 0
_LEVEL_GATE = 1
_LEVEL_PROD = 2


class ExprSyntaxError(ValueError):
    """Expression text does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(r"(?P<word>[A-Za-z][A-Za-z0-9]*)|(?P<bit>[01])|(?P<punct>[+*~/()])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    end = len(text)
    while pos < end:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        assert kind is not None
        tokens.append((kind, m.group(kind), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _next(self) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None:
            raise ExprSyntaxError("unexpected end of expression", len(self.text))
        self.i += 1
        return tok

    def _expect_punct(self, ch: str) -> None:
        tok = self._peek()
        if tok is None or tok[0] != "punct" or tok[1] != ch:
            pos = tok[2] if tok else len(self.text)
            raise ExprSyntaxError(f"expected {ch!r}", pos)
        self.i += 1

    def parse(self) -> PolyExpr:
        expr = self._sum()
        tok = self._peek()
        if tok is not None:
            raise ExprSyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return expr

    def _sum(self) -> PolyExpr:
        expr = self._poly()
        while True:
            tok = self._peek()
            if tok is not None and tok[0] == "punct" and tok[1] == "+":
                self.i += 1
                expr = Gate(OR_OR, expr, self._poly())
            else:
                return expr

    def _gate_token(self) -> PolyGate | None:
        # OPNAME '/' OPNAME, matched over three raw tokens.
        tok = self._peek()
        if tok is None or tok[0] != "word":
            return None
        if self.i + 2 >= len(self.tokens):
            return None
        slash = self.tokens[self.i + 1]
        second = self.tokens[self.i + 2]
        if slash[0] != "punct" or slash[1] != "/":
            return None
        if second[0] != "word":
            raise ExprSyntaxError("malformed gate pair", second[2])
        for name, pos in ((tok[1], tok[2]), (second[1], second[2])):
            if name.upper() != name or name not in OP_NAMES:
                raise ExprSyntaxError(f"unknown operator {name!r}", pos)
        self.i += 3
        return PolyGate(tok[1], second[1])

    def _poly(self) -> PolyExpr:
        expr = self._prod()
        while True:
            tok = self._peek()
            if tok is not None and tok[0] == "word" and not tok[1].startswith("x"):
                gate = self._gate_token()
                if gate is None:
                    raise ExprSyntaxError(f"malformed gate pair at {tok[1]!r}", tok[2])
                expr = Gate(gate, expr, self._prod())
            else:
                return expr

    def _prod(self) -> PolyExpr:
        expr = self._atom()
        while True:
            tok = self._peek()
            if tok is not None and tok[0] == "punct" and tok[1] == "*":
                self.i += 1
                expr = Gate(AND_AND, expr, self._atom())
            else:
                return expr

    def _atom(self) -> PolyExpr:
        tok = self._peek()
        if tok is None:
            raise ExprSyntaxError("unexpected end of expression", len(self.text))
        if tok[0] == "punct" and tok[1] == "~":
            self.i += 1
            return negate_expr(self._atom())
        if tok[0] == "punct" and tok[1] == "(":
            self.i += 1
            expr = self._sum()
            self._expect_punct(")")
            return expr
        if tok[0] == "bit":
            self.i += 1
            self._expect_punct("/")
            second = self._next()
            if second[0] != "bit":
                raise ExprSyntaxError("malformed constant, expected <bit>/<bit>", second[2])
            return Const(PolyValue(int(tok[1]), int(second[1])))
        if tok[0] == "word":
            m = re.fullmatch(r"x(\d+)", tok[1])
            if m is None:
                raise ExprSyntaxError(
                    f"expected variable, constant, or '(' but found {tok[1]!r}", tok[2]
                )
            var = int(m.group(1))
            if var < 1:
                raise ExprSyntaxError("variable indices start at x1", tok[2])
            self.i += 1
            return Literal(var)
        raise ExprSyntaxError(f"unexpected token {tok[1]!r}", tok[2])


def parse_expr(text: str) -> PolyExpr:
    return _Parser(text).parse()


def print_expr(expr: PolyExpr) -> str:
    """Canonical text: '+' and '*' for the uniform OR/OR and AND/AND gates,
    named pairs otherwise, with minimal parenthesization."""
    return _fmt(expr, _LEVEL_SUM)


def _fmt(expr: PolyExpr, context: int) -> str:
    if isinstance(expr, Const):
        return str(expr.value)
    if isinstance(expr, Literal):
        return f"~x{expr.var}" if expr.negated else f"x{expr.var}"
    if expr.gate == OR_OR:
        level, sep = _LEVEL_SUM, " + "
    elif expr.gate == AND_AND:
        level, sep = _LEVEL_PROD, " * "
    else:
        level, sep = _LEVEL_GATE, f" {expr.gate} "
    out = _fmt(expr.left, level) + sep + _fmt(expr.right, level + 1)
    return f"({out})" if level < context else out
