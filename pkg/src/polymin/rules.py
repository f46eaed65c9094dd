"""Gate-combination matching over one, two, or three cubes.

A term candidate combines the characteristic products of its cubes with
zero-preserving gates (operator pairs over AND/OR/XOR) so that the result
reproduces the target function exactly on the union of the cubes and is 0
everywhere else.  Such terms can be OR/OR-summed into a full realization.

The matchers are semantic: a gate combination is emitted iff the pointwise
condition holds on the union.  The one named two-cube pattern, an AND/XOR
pair whose intersection is constant 1/0-style in mode 1 and whose symmetric
difference carries mode 2, falls out as the AND/XOR instance and is tagged
R1; every other accepted combination is tagged EXT with its gate signature.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cubes import Cube, member_mask, product_term
from .polyfunc import (
    ArityError,
    Gate,
    PolyExpr,
    PolyFunction,
    PolyGate,
    apply_op,
    count_gates,
    count_literals,
    count_poly_gates,
    expr_masks,
    full_mask,
    print_expr,
)

ZERO_PRESERVING_OPS = ("AND", "OR", "XOR")

ZERO_PRESERVING_GATES = tuple(
    PolyGate(a, b) for a in ZERO_PRESERVING_OPS for b in ZERO_PRESERVING_OPS
)

SHAPE_SINGLE = "single"
SHAPE_PAIR = "pair"
SHAPE_TRIPLE_LEFT = "triple_left"
SHAPE_TRIPLE_RIGHT = "triple_right"

_SHAPE_RANK = {SHAPE_SINGLE: 0, SHAPE_PAIR: 1, SHAPE_TRIPLE_LEFT: 2, SHAPE_TRIPLE_RIGHT: 3}


class UnsoundCandidateError(AssertionError):
    """Internal check failure: an emitted candidate does not realize its region."""


@dataclass(frozen=True)
class TermCandidate:
    """One applied rule instance: cubes, gates, and the induced expression."""

    shape: str
    cubes: tuple[Cube, ...]
    gates: tuple[PolyGate, ...]
    expr: PolyExpr
    region_mask: int
    n: int
    literal_count: int = field(compare=False)
    gate_count: int = field(compare=False)
    poly_gate_count: int = field(compare=False)

    def coverage_mask(self, f: PolyFunction, mode: int) -> int:
        # Sound terms agree with f on the region, so the cells they set to 1
        # in a mode are exactly the region's demanded cells of that mode.
        return self.region_mask & f.mode_mask(mode)

    def is_sound_for(self, f: PolyFunction) -> bool:
        m1, m2 = expr_masks(self.expr, f.n)
        r = self.region_mask
        out = full_mask(f.n) & ~r
        return (
            m1 & r == f.mode_mask(1) & r
            and m2 & r == f.mode_mask(2) & r
            and m1 & out == 0
            and m2 & out == 0
        )

    def sort_key(self):
        return (
            _SHAPE_RANK[self.shape],
            tuple(c.sort_key() for c in self.cubes),
            tuple(g.sort_key() for g in self.gates),
        )

    def dedup_key(self) -> str:
        return print_expr(_sort_commutative(self.expr))

    def to_json(self) -> dict:
        return {
            "shape": self.shape,
            "cubes": [c.to_string() for c in self.cubes],
            "gates": [str(g) for g in self.gates],
            "expr": print_expr(self.expr),
            "rule": tag_rule(self).id,
        }


def _sort_commutative(expr: PolyExpr) -> PolyExpr:
    # AND/OR/XOR are all commutative, so operand order never changes meaning
    # for the gates used in terms; sorting by printed form canonicalizes.
    if not isinstance(expr, Gate):
        return expr
    left = _sort_commutative(expr.left)
    right = _sort_commutative(expr.right)
    if print_expr(left) > print_expr(right):
        left, right = right, left
    return Gate(expr.gate, left, right)


@dataclass(frozen=True)
class RuleTag:
    id: str
    gates: tuple[str, ...]

    def __str__(self) -> str:
        return self.id if not self.gates else f"{self.id}[{','.join(self.gates)}]"


_R1_GATE = PolyGate("AND", "XOR")


def tag_rule(t: TermCandidate) -> RuleTag:
    """R1 for the named AND/XOR pair configuration, EXT otherwise."""
    if t.shape == SHAPE_PAIR and t.gates == (_R1_GATE,):
        return RuleTag("R1", ("AND/XOR",))
    return RuleTag("EXT", tuple(str(g) for g in t.gates))


def _make_candidate(
    f: PolyFunction,
    shape: str,
    cubes: tuple[Cube, ...],
    gates: tuple[PolyGate, ...],
    expr: PolyExpr,
    region: int,
) -> TermCandidate:
    cand = TermCandidate(
        shape=shape,
        cubes=cubes,
        gates=gates,
        expr=expr,
        region_mask=region,
        n=f.n,
        literal_count=count_literals(expr),
        gate_count=count_gates(expr),
        poly_gate_count=count_poly_gates(expr),
    )
    if not cand.is_sound_for(f):
        raise UnsoundCandidateError(
            f"matcher produced an unsound candidate: {print_expr(expr)}"
        )
    return cand


def _check_same_arity(f: PolyFunction, *cubes: Cube) -> None:
    for c in cubes:
        if c.n != f.n:
            raise ArityError(f"arity mismatch: function {f.n} vs cube {c.n}")


def _required_bits(f: PolyFunction, region: int) -> tuple[int, int] | None:
    """The constant (mode1, mode2) value f takes on the region, else None."""
    for mode in (1, 2):
        m = f.mode_mask(mode) & region
        if m != 0 and m != region:
            return None
    return (
        1 if f.mode_mask(1) & region else 0,
        1 if f.mode_mask(2) & region else 0,
    )


def match_single(f: PolyFunction, c: Cube) -> TermCandidate | None:
    """The cube's bare product, legal only where every cell is 1/1."""
    _check_same_arity(f, c)
    mm = member_mask(c)
    if mm & f.mode_mask(1) != mm or mm & f.mode_mask(2) != mm:
        return None
    return _make_candidate(f, SHAPE_SINGLE, (c,), (), product_term(c), mm)


def match_pair(f: PolyFunction, c1: Cube, c2: Cube) -> list[TermCandidate]:
    """All zero-preserving gates g with P1 g P2 realizing f on the union.

    A gate is emitted iff at every point of c1 ∪ c2 the gate applied to the
    two membership indicators equals f in both modes.  Identical or nested
    cubes are rejected: those pairs collapse to a single product.
    """
    _check_same_arity(f, c1, c2)
    if c1 == c2:
        raise ValueError("degenerate pair: cubes are identical")
    if c1.contains(c2) or c2.contains(c1):
        raise ValueError(
            "degenerate pair: one cube contains the other; "
            "use a single cube or a triple instead"
        )
    m1 = member_mask(c1)
    m2 = member_mask(c2)
    combos = []  # (indicator bits, required output bits)
    for i1, i2, region in ((1, 0, m1 & ~m2), (0, 1, m2 & ~m1), (1, 1, m1 & m2)):
        if not region:
            continue
        req = _required_bits(f, region)
        if req is None:
            return []
        combos.append(((i1, i2), req))

    a, b = sorted((c1, c2), key=lambda c: print_expr(product_term(c)))
    pa, pb = product_term(a), product_term(b)
    union = m1 | m2
    out = []
    for g in ZERO_PRESERVING_GATES:
        if all(
            apply_op(g.op1, i1, i2) == r1 and apply_op(g.op2, i1, i2) == r2
            for (i1, i2), (r1, r2) in combos
        ):
            out.append(_make_candidate(f, SHAPE_PAIR, (a, b), (g,), Gate(g, pa, pb), union))
    return out


def match_triple(f: PolyFunction, c1: Cube, c2: Cube, c3: Cube) -> list[TermCandidate]:
    """All two-gate combinations over three cubes realizing f on the union.

    Tries both association shapes, (P1 g P2) h P3 and P1 g (P2 h P3), with the
    cubes in exactly the order given; callers wanting other operand orders
    supply the permutations themselves.
    """
    _check_same_arity(f, c1, c2, c3)
    if c1 == c2 or c1 == c3 or c2 == c3:
        raise ValueError("degenerate triple: cubes must be pairwise distinct")
    m1 = member_mask(c1)
    m2 = member_mask(c2)
    m3 = member_mask(c3)
    combos = []
    for i1, i2, i3 in (
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, 1, 0), (1, 0, 1), (0, 1, 1),
        (1, 1, 1),
    ):
        region = (m1 if i1 else ~m1) & (m2 if i2 else ~m2) & (m3 if i3 else ~m3)
        region &= m1 | m2 | m3
        if not region:
            continue
        req = _required_bits(f, region)
        if req is None:
            return []
        combos.append(((i1, i2, i3), req))

    p1, p2, p3 = product_term(c1), product_term(c2), product_term(c3)
    union = m1 | m2 | m3
    out = []
    for g in ZERO_PRESERVING_GATES:
        for h in ZERO_PRESERVING_GATES:
            if all(
                apply_op(h.op1, apply_op(g.op1, i1, i2), i3) == r1
                and apply_op(h.op2, apply_op(g.op2, i1, i2), i3) == r2
                for (i1, i2, i3), (r1, r2) in combos
            ):
                out.append(
                    _make_candidate(
                        f, SHAPE_TRIPLE_LEFT, (c1, c2, c3), (g, h),
                        Gate(h, Gate(g, p1, p2), p3), union,
                    )
                )
            if all(
                apply_op(g.op1, i1, apply_op(h.op1, i2, i3)) == r1
                and apply_op(g.op2, i1, apply_op(h.op2, i2, i3)) == r2
                for (i1, i2, i3), (r1, r2) in combos
            ):
                out.append(
                    _make_candidate(
                        f, SHAPE_TRIPLE_RIGHT, (c1, c2, c3), (g, h),
                        Gate(g, p1, Gate(h, p2, p3)), union,
                    )
                )
    return out
