"""Shared strategies and independent brute-force oracles.

The oracles deliberately avoid the library's bitmask fast paths: they loop
over points and evaluate definitions directly, so the tests cross-check two
implementations rather than one implementation against itself.
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from polymin.cubes import Cube, all_cubes
from polymin.polyfunc import (
    Assignment,
    Const,
    Gate,
    Literal,
    OP_NAMES,
    PolyExpr,
    PolyFunction,
    PolyGate,
    PolyValue,
    eval_expr,
)

# ---------------------------------------------------------------------------
# Oracles.
# ---------------------------------------------------------------------------


def oracle_table(expr: PolyExpr, n: int) -> list[PolyValue]:
    """Point-by-point table via the recursive evaluator."""
    return [
        PolyValue(
            eval_expr(expr, Assignment.from_index(k, n), 1),
            eval_expr(expr, Assignment.from_index(k, n), 2),
        )
        for k in range(1 << n)
    ]


def oracle_cube_points(c: Cube) -> list[int]:
    return [k for k in range(1 << c.n) if (k & c.mask) == c.vals]


def oracle_is_one_cube(f: PolyFunction, c: Cube, mode: int) -> bool:
    return all(f.value_at(k).bit(mode) == 1 for k in oracle_cube_points(c))


def oracle_prime_implicants(f: PolyFunction, mode: int) -> set[Cube]:
    """Filter all 3**n cubes for maximal constant-1 cubes."""
    ones = [c for c in all_cubes(f.n) if oracle_is_one_cube(f, c, mode)]
    out = set()
    for c in ones:
        if not any(d != c and set(oracle_cube_points(d)) > set(oracle_cube_points(c)) for d in ones):
            out.add(c)
    return out


def oracle_pair_matches(f: PolyFunction, c1: Cube, c2: Cube) -> set[PolyGate]:
    """Gates satisfying the pointwise pair condition, recomputed from scratch."""
    from polymin.polyfunc import apply_op

    gates = set()
    union = sorted(set(oracle_cube_points(c1)) | set(oracle_cube_points(c2)))
    for op1 in ("AND", "OR", "XOR"):
        for op2 in ("AND", "OR", "XOR"):
            ok = True
            for k in union:
                i1 = 1 if (k & c1.mask) == c1.vals else 0
                i2 = 1 if (k & c2.mask) == c2.vals else 0
                v = f.value_at(k)
                if apply_op(op1, i1, i2) != v.mode1 or apply_op(op2, i1, i2) != v.mode2:
                    ok = False
                    break
            if ok:
                gates.add(PolyGate(op1, op2))
    return gates


def oracle_r1_condition(f: PolyFunction, c1: Cube, c2: Cube) -> bool:
    """The four-part region condition for the named AND/XOR pair pattern:
    intersection constant 1 in mode 1 and 0 in mode 2, symmetric difference
    constant 0 in mode 1 and 1 in mode 2 (vacuous on empty regions)."""
    p1 = set(oracle_cube_points(c1))
    p2 = set(oracle_cube_points(c2))
    inter = p1 & p2
    symdiff = (p1 | p2) - inter
    return (
        all(f.value_at(k).mode1 == 1 for k in inter)
        and all(f.value_at(k).mode1 == 0 for k in symdiff)
        and all(f.value_at(k).mode2 == 0 for k in inter)
        and all(f.value_at(k).mode2 == 1 for k in symdiff)
    )


def candidate_is_sound(cand, f: PolyFunction) -> bool:
    """Pointwise realization check through the recursive evaluator."""
    for k in range(1 << f.n):
        a = Assignment.from_index(k, f.n)
        inside = bool((cand.region_mask >> k) & 1)
        for mode in (1, 2):
            got = eval_expr(cand.expr, a, mode)
            want = f.value_at(k).bit(mode) if inside else 0
            if got != want:
                return False
    return True


def random_function(rng: random.Random, n: int) -> PolyFunction:
    size = 1 << n
    return PolyFunction.from_masks(n, rng.getrandbits(size), rng.getrandbits(size))


def random_cube(rng: random.Random, n: int) -> Cube:
    mask = rng.getrandbits(n)
    vals = rng.getrandbits(n) & mask
    return Cube(n, mask, vals)


# ---------------------------------------------------------------------------
# Hypothesis strategies.
# ---------------------------------------------------------------------------


def poly_values() -> st.SearchStrategy[PolyValue]:
    return st.builds(PolyValue, st.integers(0, 1), st.integers(0, 1))


def poly_gates(ops: tuple[str, ...] = OP_NAMES) -> st.SearchStrategy[PolyGate]:
    return st.builds(PolyGate, st.sampled_from(ops), st.sampled_from(ops))


def cubes(n: int) -> st.SearchStrategy[Cube]:
    return st.integers(0, (1 << n) - 1).flatmap(
        lambda mask: st.integers(0, (1 << n) - 1).map(
            lambda vals: Cube(n, mask, vals & mask)
        )
    )


def expressions(n: int, max_leaves: int = 6) -> st.SearchStrategy[PolyExpr]:
    leaves = st.one_of(
        st.builds(Const, poly_values()),
        st.builds(Literal, st.integers(1, n), st.booleans()),
    )
    return st.recursive(
        leaves,
        lambda children: st.builds(Gate, poly_gates(), children, children),
        max_leaves=max_leaves,
    )


def functions(n: int) -> st.SearchStrategy[PolyFunction]:
    size = 1 << n
    return st.builds(
        lambda m1, m2: PolyFunction.from_masks(n, m1, m2),
        st.integers(0, (1 << size) - 1),
        st.integers(0, (1 << size) - 1),
    )
