"""Automatic simplification: greedy term cover, baselines, and an exact oracle.

The cover loop is a greedy weighted set cover over the per-mode demand set
{(cell, mode) : f_mode(cell) = 1}.  Candidate terms come from single cubes
that are constant 1/1, from gate pairs over a bounded cube pool, and from
two-gate triples.  Large-group triples over prime implicants are offered up
front; exhaustive triples over the whole pool (and, at small arity, over all
cubes) are pulled in only when the cheaper stages stall.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cubes import (
    Cube,
    all_cubes,
    full_cube,
    maximal_cubes,
    member_mask,
    prime_implicants,
    product_term,
)
from .polyfunc import (
    ArityError,
    Assignment,
    Const,
    Gate,
    Literal,
    ONE,
    OR_OR,
    PolyExpr,
    PolyFunction,
    PolyGate,
    PolyValue,
    ZERO,
    apply_op_mask,
    count_gates,
    count_literals,
    count_poly_gates,
    equivalent,
    expr_depth,
    full_mask,
    print_expr,
    var_mask,
)
from .rules import (
    TermCandidate,
    ZERO_PRESERVING_GATES,
    match_pair,
    match_single,
    match_triple,
    tag_rule,
)


@dataclass(frozen=True)
class MinimizeConfig:
    max_arity: int = 10
    max_candidates: int = 50_000
    enable_triples: bool = True
    exact_budget: int = 15


DEFAULT_CONFIG = MinimizeConfig()


@dataclass(frozen=True)
class CostReport:
    literal_count: int
    gate_count: int
    poly_gate_count: int
    depth: int

    @classmethod
    def from_expr(cls, expr: PolyExpr) -> "CostReport":
        return cls(
            literal_count=count_literals(expr),
            gate_count=count_gates(expr),
            poly_gate_count=count_poly_gates(expr),
            depth=expr_depth(expr),
        )

    def __str__(self) -> str:
        return (
            f"literals={self.literal_count} gates={self.gate_count} "
            f"poly_gates={self.poly_gate_count} depth={self.depth}"
        )


@dataclass(frozen=True)
class Cover:
    terms: tuple[TermCandidate, ...]
    expr: PolyExpr
    cost: CostReport

    def trace(self) -> list[dict]:
        out = []
        for t in self.terms:
            entry = t.to_json()
            entry["rule"] = str(tag_rule(t))
            out.append(entry)
        return out


class UncoverableDemandError(RuntimeError):
    """The candidate pool ran dry with demand cells still uncovered."""

    def __init__(self, n: int, remaining: Sequence[tuple[str, int]]):
        self.remaining = tuple(remaining)
        listed = ", ".join(f"({bits}, mode {mode})" for bits, mode in self.remaining)
        super().__init__(f"no candidate covers the remaining demand: {listed}")


class CoverVerificationError(RuntimeError):
    """Internal error: an assembled cover failed the exhaustive equivalence check."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _sum_terms(terms: Iterable[TermCandidate]) -> PolyExpr:
    expr: PolyExpr | None = None
    for t in terms:
        expr = t.expr if expr is None else Gate(OR_OR, expr, t.expr)
    return Const(ZERO) if expr is None else expr


def _value_mask(f: PolyFunction, value: PolyValue) -> int:
    full = full_mask(f.n)
    m1 = f.mode_mask(1) if value.mode1 else full & ~f.mode_mask(1)
    m2 = f.mode_mask(2) if value.mode2 else full & ~f.mode_mask(2)
    return m1 & m2


def _dedup_sorted(groups: Iterable[Iterable[Cube]]) -> list[Cube]:
    seen: set[Cube] = set()
    pool: list[Cube] = []
    for group in groups:
        for c in group:
            if c not in seen:
                seen.add(c)
                pool.append(c)
    pool.sort(key=Cube.sort_key)
    return pool


def _base_pool(f: PolyFunction, limit: int) -> list[Cube]:
    """Cubes worth pairing: per-mode prime implicants, maximal constant-value
    regions (all four cell values), and the full cube; canonical truncation."""
    pool = _dedup_sorted(
        [
            prime_implicants(f, 1),
            prime_implicants(f, 2),
            *(
                maximal_cubes(f.n, _value_mask(f, v))
                for v in (PolyValue(1, 1), PolyValue(1, 0), PolyValue(0, 1), PolyValue(0, 0))
            ),
            [full_cube(f.n)],
        ]
    )
    return pool[:limit]


class _CandidateSet:
    """Deduplicated, capped, deterministic candidate accumulator."""

    def __init__(self, cap: int):
        self.cap = cap
        self.items: list[TermCandidate] = []
        self._keys: set[str] = set()

    @property
    def full(self) -> bool:
        return len(self.items) >= self.cap

    def add(self, cand: TermCandidate) -> None:
        if self.full:
            return
        key = cand.dedup_key()
        if key not in self._keys:
            self._keys.add(key)
            self.items.append(cand)

    def extend(self, cands: Iterable[TermCandidate]) -> None:
        for c in cands:
            if self.full:
                return
            self.add(c)


def _add_singles(f: PolyFunction, acc: _CandidateSet) -> None:
    both = f.mode_mask(1) & f.mode_mask(2)
    for c in maximal_cubes(f.n, both):
        cand = match_single(f, c)
        if cand is not None:
            acc.add(cand)


def _add_pairs(f: PolyFunction, cubes: Sequence[Cube], acc: _CandidateSet) -> None:
    for a, b in itertools.combinations(cubes, 2):
        if acc.full:
            return
        if a.contains(b) or b.contains(a):
            continue
        acc.extend(match_pair(f, a, b))


def _add_triples(
    f: PolyFunction,
    cubes: Sequence[Cube],
    acc: _CandidateSet,
    demand_hint: int | None = None,
) -> None:
    # Operand order within a commutative gate never matters, so one rotation
    # per choice of the lone right-hand cube enumerates all distinct shapes.
    masks = [member_mask(c) for c in cubes]
    for i, j, k in itertools.combinations(range(len(cubes)), 3):
        if acc.full:
            return
        if demand_hint is not None and not ((masks[i] | masks[j] | masks[k]) & demand_hint):
            continue
        for a, b, c in ((i, j, k), (i, k, j), (j, k, i)):
            acc.extend(match_triple(f, cubes[a], cubes[b], cubes[c]))


def candidate_pool(f: PolyFunction, config: MinimizeConfig | None = None) -> list[TermCandidate]:
    """The up-front candidate pool minimize() starts from (singles, pairs,
    and prime-implicant triples), in deterministic order."""
    config = config or DEFAULT_CONFIG
    acc = _CandidateSet(config.max_candidates)
    pair_limit = max(40, math.isqrt(2 * config.max_candidates))
    _add_singles(f, acc)
    _add_pairs(f, _base_pool(f, pair_limit), acc)
    if config.enable_triples:
        prime_pool = _dedup_sorted(
            [
                prime_implicants(f, 1),
                prime_implicants(f, 2),
                maximal_cubes(f.n, f.mode_mask(1) & f.mode_mask(2)),
            ]
        )[: max(20, math.isqrt(config.max_candidates))]
        _add_triples(f, prime_pool, acc)
    return acc.items


def minimize(f: PolyFunction, config: MinimizeConfig | None = None) -> Cover:
    """Greedy cover of the demand set by sound term candidates.

    Raises UncoverableDemandError when every enumeration stage is exhausted
    with demand remaining; never returns an unverified cover.
    """
    config = config or DEFAULT_CONFIG
    if f.n > config.max_arity:
        raise ArityError(f"arity {f.n} exceeds configured maximum {config.max_arity}")

    rem1 = f.mode_mask(1)
    rem2 = f.mode_mask(2)
    if rem1 == 0 and rem2 == 0:
        expr = Const(ZERO)
        return Cover((), expr, CostReport.from_expr(expr))

    acc = _CandidateSet(config.max_candidates)
    acc.extend(candidate_pool(f, config))
    pair_limit = max(40, math.isqrt(2 * config.max_candidates))
    pool = _base_pool(f, pair_limit)

    # Fallback enumeration stages, invoked in order when the loop stalls.
    stages = []
    if config.enable_triples:
        stages.append(lambda: _add_triples(f, pool, acc, demand_hint=rem1 | rem2))
    if f.n <= 5:
        def _all_pairs() -> None:
            _add_pairs(f, sorted(all_cubes(f.n), key=Cube.sort_key), acc)

        stages.append(_all_pairs)
    if f.n <= 4 and config.enable_triples:
        def _all_triples() -> None:
            every = sorted(all_cubes(f.n), key=Cube.sort_key)
            _add_triples(f, every, acc, demand_hint=rem1 | rem2)

        stages.append(_all_triples)

    chosen: list[TermCandidate] = []
    scored: list[tuple[int, int, TermCandidate]] = []
    stale = True
    while rem1 or rem2:
        if stale:
            scored = [(c.coverage_mask(f, 1), c.coverage_mask(f, 2), c) for c in acc.items]
            stale = False
        best = None
        best_rank = None
        for cov1, cov2, cand in scored:
            gain = _popcount(cov1 & rem1) + _popcount(cov2 & rem2)
            if gain == 0:
                continue
            rank = (-gain, cand.literal_count, cand.poly_gate_count, cand.sort_key())
            if best_rank is None or rank < best_rank:
                best, best_rank = cand, rank
        if best is None:
            if stages:
                stages.pop(0)()
                stale = True
                continue
            raise UncoverableDemandError(f.n, _demand_list(f.n, rem1, rem2))
        chosen.append(best)
        rem1 &= ~best.coverage_mask(f, 1)
        rem2 &= ~best.coverage_mask(f, 2)

    expr = _sum_terms(chosen)
    if not equivalent(expr, f):
        raise CoverVerificationError(
            f"assembled cover is not equivalent to the input: {print_expr(expr)}"
        )
    return Cover(tuple(chosen), expr, CostReport.from_expr(expr))


def _demand_list(n: int, rem1: int, rem2: int) -> list[tuple[str, int]]:
    out = []
    for mode, rem in ((1, rem1), (2, rem2)):
        for k in range(1 << n):
            if (rem >> k) & 1:
                out.append((str(Assignment.from_index(k, n)), mode))
    return out


# ---------------------------------------------------------------------------
# Baselines.
# ---------------------------------------------------------------------------


def baseline_sop(f: PolyFunction, mode: int) -> PolyExpr:
    """Greedy prime-implicant sum-of-products for one mode's plain function."""
    onset = f.mode_mask(mode)
    if onset == 0:
        return Const(ZERO)
    if onset == full_mask(f.n):
        return Const(ONE)
    remaining = onset
    terms = []
    pis = prime_implicants(f, mode)
    while remaining:
        best = None
        best_rank = None
        for c in pis:
            gain = _popcount(member_mask(c) & remaining)
            if gain == 0:
                continue
            rank = (-gain, c.sort_key())
            if best_rank is None or rank < best_rank:
                best, best_rank = c, rank
        assert best is not None  # every onset cell lies in some prime implicant
        terms.append(best)
        remaining &= ~member_mask(best)
    expr: PolyExpr | None = None
    for c in terms:
        expr = product_term(c) if expr is None else Gate(OR_OR, expr, product_term(c))
    assert expr is not None
    return expr


_MODE1_PICK = PolyGate("XNOR", "XOR")  # x XNOR/XOR x evaluates to 1/0
_MODE2_PICK = PolyGate("XOR", "XNOR")  # x XOR/XNOR x evaluates to 0/1
_AND = PolyGate("AND", "AND")


def baseline_mux(f: PolyFunction) -> PolyExpr:
    """Mode-multiplexed composition of the two per-mode SOP baselines.

    The selector x1 XNOR/XOR x1 is constant 1 in mode 1 and constant 0 in
    mode 2; its complement pair picks mode 2.
    """
    sop1 = baseline_sop(f, 1)
    sop2 = baseline_sop(f, 2)
    x1 = Literal(1)
    pick1 = Gate(_MODE1_PICK, x1, x1)
    pick2 = Gate(_MODE2_PICK, x1, x1)
    expr = Gate(OR_OR, Gate(_AND, sop1, pick1), Gate(_AND, sop2, pick2))
    if not equivalent(expr, f):
        raise CoverVerificationError("mux baseline failed verification")
    return expr


# ---------------------------------------------------------------------------
# Exact search (tiny arities).
#
# Dynamic programming over semantic signatures: for every reachable pair of
# mode tables, keep the first (smallest, canonically earliest) expression
# that produces it.  Tree node counts are always odd, so sizes step by 2.
# ---------------------------------------------------------------------------

_NON_ZP_GATES = tuple(
    g
    for g in (
        PolyGate(a, b)
        for a in ("AND", "OR", "XOR", "NAND", "NOR", "XNOR")
        for b in ("AND", "OR", "XOR", "NAND", "NOR", "XNOR")
    )
    if not g.is_zero_preserving
)


class _ExactTable:
    def __init__(self, n: int):
        self.n = n
        self.full = full_mask(n)
        self.best: dict[tuple[int, int], tuple[int, PolyExpr]] = {}
        self.levels: dict[int, list[tuple[tuple[int, int], PolyExpr]]] = {}
        self.built_to = 0
        self.total_signatures = 1 << (2 * (1 << n))

    def _add(self, size: int, sig: tuple[int, int], expr: PolyExpr) -> None:
        if sig not in self.best:
            self.best[sig] = (size, expr)
            self.levels.setdefault(size, []).append((sig, expr))

    def _build_leaves(self) -> None:
        for value in (PolyValue(0, 0), PolyValue(0, 1), PolyValue(1, 0), PolyValue(1, 1)):
            sig = (self.full if value.mode1 else 0, self.full if value.mode2 else 0)
            self._add(1, sig, Const(value))
        for var in range(1, self.n + 1):
            for negated in (False, True):
                m = var_mask(self.n, var)
                if negated:
                    m = self.full & ~m
                self._add(1, (m, m), Literal(var, negated))
        self.built_to = 1

    def grow_to(self, budget: int) -> None:
        if self.built_to == 0:
            self._build_leaves()
        while self.built_to < budget and len(self.best) < self.total_signatures:
            size = self.built_to + 2
            for left_size in range(1, size - 1, 2):
                right_size = size - 1 - left_size
                for (l1, l2), lexpr in self.levels.get(left_size, ()):
                    for (r1, r2), rexpr in self.levels.get(right_size, ()):
                        for g in ZERO_PRESERVING_GATES:
                            sig = (
                                apply_op_mask(g.op1, l1, r1, self.full),
                                apply_op_mask(g.op2, l2, r2, self.full),
                            )
                            if sig not in self.best:
                                self._add(size, sig, Gate(g, lexpr, rexpr))
            self.built_to = size

    def lookup(self, sig: tuple[int, int], budget: int) -> PolyExpr | None:
        hit = self.best.get(sig)
        if hit is not None and hit[0] <= budget:
            return hit[1]
        return None


_exact_tables: dict[int, _ExactTable] = {}


def exact_search(f: PolyFunction, budget: int = 15) -> PolyExpr | None:
    """Smallest equivalent expression within the node budget, or None.

    Exhaustive over expression trees built from literals, paired constants,
    and zero-preserving gates.  When that alphabet fails within budget, a
    single non-zero-preserving gate is additionally allowed at the root.
    """
    if f.n > 3:
        raise ArityError("exact search is limited to arity 3")
    if budget < 1:
        return None
    table = _exact_tables.setdefault(f.n, _ExactTable(f.n))
    target = (f.mode_mask(1), f.mode_mask(2))
    for size in range(1, budget + 1, 2):
        table.grow_to(size)
        found = table.lookup(target, size)
        if found is not None:
            return found

    # Root-level fallback with the full gate alphabet.
    best: tuple[int, PolyExpr] | None = None
    for left_size in range(1, budget - 1, 2):
        for right_size in range(1, budget - left_size, 2):
            total = left_size + right_size + 1
            if best is not None and total >= best[0]:
                continue
            for (l1, l2), lexpr in table.levels.get(left_size, ()):
                for (r1, r2), rexpr in table.levels.get(right_size, ()):
                    for g in _NON_ZP_GATES:
                        sig = (
                            apply_op_mask(g.op1, l1, r1, table.full),
                            apply_op_mask(g.op2, l2, r2, table.full),
                        )
                        if sig == target and (best is None or total < best[0]):
                            best = (total, Gate(g, lexpr, rexpr))
                            break
    return best[1] if best is not None else None
