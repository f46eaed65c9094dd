"""Subcube algebra over the n-dimensional Boolean hypercube.

A cube fixes some variables and leaves the rest free; its characteristic
function is the product of one literal per fixed variable.  Cubes are the
operands of the simplification rules, so intersection, containment, and
membership are kept O(1) by encoding a cube as a (mask, values) bit pair in
the same bit layout as truth-table cell indices (x1 is the most significant
index bit).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .polyfunc import (
    AND_AND,
    ArityError,
    Assignment,
    Const,
    Gate,
    Literal,
    ONE,
    PolyExpr,
    PolyFunction,
    _check_arity,
    _check_mode,
    full_mask,
    var_mask,
)


@dataclass(frozen=True)
class Cube:
    """Bound variables are the set bits of `mask`; `vals` holds their values.

    Bit (n - i) of mask/vals corresponds to variable x_i, matching the cell
    index encoding, so a point k lies in the cube iff k & mask == vals.
    """

    n: int
    mask: int
    vals: int

    def __post_init__(self) -> None:
        _check_arity(self.n)
        space = (1 << self.n) - 1
        if self.mask & ~space:
            raise ArityError(f"cube mask {self.mask:#x} exceeds arity {self.n}")
        if self.vals & ~self.mask:
            raise ValueError("cube values set on free positions")

    @property
    def dim(self) -> int:
        return self.n - bin(self.mask).count("1")

    @property
    def size(self) -> int:
        return 1 << self.dim

    @property
    def is_point(self) -> bool:
        return self.dim == 0

    @property
    def is_full(self) -> bool:
        return self.mask == 0

    def contains_point(self, index: int) -> bool:
        return (index & self.mask) == self.vals

    def contains(self, other: "Cube") -> bool:
        """True when every point of `other` lies in this cube."""
        if other.n != self.n:
            raise ArityError(f"arity mismatch: {self.n} vs {other.n}")
        return (other.mask & self.mask) == self.mask and (other.vals & self.mask) == self.vals

    def sort_key(self) -> tuple[int, int, int]:
        # Dimension descending, then (mask, vals) ascending.
        return (bin(self.mask).count("1"), self.mask, self.vals)

    def to_string(self) -> str:
        out = []
        for i in range(self.n):
            bit = 1 << (self.n - 1 - i)
            if self.mask & bit:
                out.append("1" if self.vals & bit else "0")
            else:
                out.append("-")
        return "".join(out)

    @classmethod
    def from_string(cls, text: str) -> "Cube":
        n = len(text)
        _check_arity(n)
        mask = vals = 0
        for i, ch in enumerate(text):
            bit = 1 << (n - 1 - i)
            if ch == "0":
                mask |= bit
            elif ch == "1":
                mask |= bit
                vals |= bit
            elif ch != "-":
                raise ValueError(f"malformed cube {text!r}: expected 0, 1, or -")
        return cls(n, mask, vals)

    def __str__(self) -> str:
        return self.to_string()


def full_cube(n: int) -> Cube:
    return Cube(n, 0, 0)


def point_cube(n: int, index: int) -> Cube:
    space = (1 << n) - 1
    if index & ~space:
        raise ArityError(f"point index {index} out of range for arity {n}")
    return Cube(n, space, index)


def intersect(a: Cube, b: Cube) -> Cube | None:
    """The cube of common points, or None when bound values conflict."""
    if a.n != b.n:
        raise ArityError(f"arity mismatch: {a.n} vs {b.n}")
    common = a.mask & b.mask
    if (a.vals ^ b.vals) & common:
        return None
    return Cube(a.n, a.mask | b.mask, a.vals | b.vals)


def points(c: Cube) -> Iterator[Assignment]:
    """Member assignments in ascending index order."""
    for index in point_indices(c):
        yield Assignment.from_index(index, c.n)


def point_indices(c: Cube) -> Iterator[int]:
    free = [1 << p for p in range(c.n) if not (c.mask & (1 << p))]
    free.reverse()  # highest position first keeps indices ascending
    for combo in range(1 << len(free)):
        index = c.vals
        for j, bit in enumerate(free):
            if (combo >> (len(free) - 1 - j)) & 1:
                index |= bit
        yield index


@lru_cache(maxsize=200_000)
def member_mask(c: Cube) -> int:
    """Bitmask over cell indices of the cube's points."""
    m = full_mask(c.n)
    for i in range(1, c.n + 1):
        bit = 1 << (c.n - i)
        if c.mask & bit:
            vm = var_mask(c.n, i)
            m &= vm if (c.vals & bit) else full_mask(c.n) & ~vm
    return m


def product_term(c: Cube) -> PolyExpr:
    """AND/AND chain of the cube's literals; the full cube is the constant 1/1."""
    if c.is_full:
        return Const(ONE)
    expr: PolyExpr | None = None
    for i in range(1, c.n + 1):
        bit = 1 << (c.n - i)
        if not (c.mask & bit):
            continue
        lit = Literal(i, negated=not (c.vals & bit))
        expr = lit if expr is None else Gate(AND_AND, expr, lit)
    assert expr is not None
    return expr


class CubeClass(enum.Enum):
    ONE_CUBE = "one_cube"
    ZERO_CUBE = "zero_cube"
    MIXED = "mixed"


def classify(f: PolyFunction, c: Cube, mode: int) -> CubeClass:
    """Whether the mode's function is constant 1, constant 0, or mixed on c."""
    if f.n != c.n:
        raise ArityError(f"arity mismatch: function {f.n} vs cube {c.n}")
    mm = member_mask(c)
    hits = mm & f.mode_mask(mode)
    if hits == mm:
        return CubeClass.ONE_CUBE
    if hits == 0:
        return CubeClass.ZERO_CUBE
    return CubeClass.MIXED


@dataclass(frozen=True)
class ModeView:
    """One cube seen through one mode: the per-point bits of that mode."""

    cube: Cube
    mode: int
    values: tuple[int, ...]  # aligned with points(cube)

    @property
    def is_one_cube(self) -> bool:
        return all(v == 1 for v in self.values)

    @property
    def is_zero_cube(self) -> bool:
        return all(v == 0 for v in self.values)


def mode_view(f: PolyFunction, c: Cube, mode: int) -> ModeView:
    if f.n != c.n:
        raise ArityError(f"arity mismatch: function {f.n} vs cube {c.n}")
    _check_mode(mode)
    m = f.mode_mask(mode)
    vals = tuple((m >> k) & 1 for k in point_indices(c))
    return ModeView(c, mode, vals)


def all_cubes(n: int) -> Iterator[Cube]:
    """Every nonempty cube of the space (3**n of them)."""
    _check_arity(n)
    for mask in range(1 << n):
        vals = mask
        while True:
            yield Cube(n, mask, vals)
            if vals == 0:
                break
            vals = (vals - 1) & mask


def implicants(f: PolyFunction, mode: int) -> list[Cube]:
    """All cubes on which the mode's function is constant 1, canonical order.

    Enumerates the whole 3**n cube space; intended for small arities and as
    the reference definition behind prime_implicants.
    """
    out = [c for c in all_cubes(f.n) if classify(f, c, mode) is CubeClass.ONE_CUBE]
    out.sort(key=Cube.sort_key)
    return out


def prime_implicants(f: PolyFunction, mode: int) -> list[Cube]:
    """Maximal constant-1 cubes for the mode, by iterative pairwise merging."""
    return maximal_cubes(f.n, f.mode_mask(mode))


def maximal_cubes(n: int, onset: int) -> list[Cube]:
    """Maximal cubes lying entirely inside the given cell set.

    Classic merge: level d holds every d-dimensional cube inside the set; a
    cube merges with its reflection across one bound variable to form the
    (d+1)-dimensional cube.  Unmerged cubes are exactly the maximal ones.
    """
    _check_arity(n)
    space = (1 << n) - 1
    if onset == 0:
        return []
    level = {(space, k) for k in range(1 << n) if (onset >> k) & 1}
    primes: set[tuple[int, int]] = set()
    while level:
        merged: set[tuple[int, int]] = set()
        nxt: set[tuple[int, int]] = set()
        for mask, vals in level:
            m = mask
            while m:
                bit = m & -m
                m ^= bit
                partner = (mask, vals ^ bit)
                if partner in level:
                    nxt.add((mask ^ bit, vals & ~bit))
                    merged.add((mask, vals))
                    merged.add(partner)
        primes |= level - merged
        level = nxt
    out = [Cube(n, mask, vals) for mask, vals in primes]
    out.sort(key=Cube.sort_key)
    return out
