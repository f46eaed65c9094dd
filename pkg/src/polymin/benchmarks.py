"""Benchmark truth-table generators and the pair-spec parser.

Supported single-mode generators:

    parityN            XOR of all N inputs
    majorityN          1 iff more than N/2 inputs are 1
    multiplierAxB(K)   bit K (0 = least significant) of the product of an
                       A-bit and a B-bit unsigned integer; inputs are
                       x1..xA (first factor, x1 most significant) then
                       xA+1..xA+B (second factor)
    sortingnetN(K)     output K (0-based) of an N-input sorting network with
                       descending outputs: 1 iff at least K+1 inputs are 1

A dual-mode benchmark is written "side1/side2", e.g. "parity4/majority4";
both sides must have the same input count.  The trailing "(K)" defaults to
output index 2 when omitted.
"""

from __future__ import annotations

import re

from .polyfunc import MAX_ARITY, ArityError, PolyFunction

DEFAULT_OUT_INDEX = 2


def parity_table(n: int) -> int:
    _check(n)
    mask = 0
    for k in range(1 << n):
        if bin(k).count("1") & 1:
            mask |= 1 << k
    return mask


def majority_table(n: int) -> int:
    _check(n)
    mask = 0
    for k in range(1 << n):
        if bin(k).count("1") > n / 2:
            mask |= 1 << k
    return mask


def multiplier_table(a_bits: int, b_bits: int, out_index: int) -> int:
    n = a_bits + b_bits
    _check(n)
    if a_bits < 1 or b_bits < 1:
        raise ValueError("multiplier factor widths must be at least 1")
    if not 0 <= out_index < a_bits + b_bits:
        raise ValueError(f"multiplier output index {out_index} out of range")
    mask = 0
    for k in range(1 << n):
        a = k >> b_bits
        b = k & ((1 << b_bits) - 1)
        if (a * b >> out_index) & 1:
            mask |= 1 << k
    return mask


def sortingnet_table(n: int, out_index: int) -> int:
    _check(n)
    if not 0 <= out_index < n:
        raise ValueError(f"sorting network output index {out_index} out of range")
    mask = 0
    for k in range(1 << n):
        if bin(k).count("1") >= out_index + 1:
            mask |= 1 << k
    return mask


def _check(n: int) -> None:
    if not 1 <= n <= MAX_ARITY:
        raise ArityError(f"benchmark arity must be in 1..{MAX_ARITY}, got {n}")


_SIDE_RE = re.compile(
    r"(?:(?P<kind>parity|majority|sortingnet)(?P<n>\d+)"
    r"|(?P<mult>multiplier)(?P<a>\d+)x(?P<b>\d+))"
    r"(?:\((?P<out>\d+)\))?"
)


def parse_side(text: str, default_out_index: int = DEFAULT_OUT_INDEX) -> tuple[int, int]:
    """Returns (input count, truth-table mask) for one benchmark name."""
    m = _SIDE_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"unknown benchmark {text!r}")
    out = int(m.group("out")) if m.group("out") is not None else default_out_index
    if m.group("mult"):
        a, b = int(m.group("a")), int(m.group("b"))
        return a + b, multiplier_table(a, b, out)
    kind, n = m.group("kind"), int(m.group("n"))
    if kind == "parity":
        return n, parity_table(n)
    if kind == "majority":
        return n, majority_table(n)
    return n, sortingnet_table(n, out)


def gen_benchmark(spec: str, default_out_index: int = DEFAULT_OUT_INDEX) -> PolyFunction:
    """Builds the dual-mode function for a "side1/side2" benchmark spec."""
    parts = spec.strip().split("/")
    if len(parts) != 2:
        raise ValueError(f"benchmark spec must be 'side1/side2', got {spec!r}")
    n1, mask1 = parse_side(parts[0], default_out_index)
    n2, mask2 = parse_side(parts[1], default_out_index)
    if n1 != n2:
        raise ArityError(f"benchmark sides have different arities: {n1} vs {n2}")
    return PolyFunction.from_masks(n1, mask1, mask2)


def benchmark_mode_names(spec: str) -> tuple[str, str]:
    parts = spec.strip().split("/")
    if len(parts) != 2:
        raise ValueError(f"benchmark spec must be 'side1/side2', got {spec!r}")
    return (parts[0].strip(), parts[1].strip())
