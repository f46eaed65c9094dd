"""polymin: dual-mode (polymorphic) Boolean function toolkit."""

from .polyfunc import (
    ArityError,
    Assignment,
    Const,
    ExprSyntaxError,
    Gate,
    Literal,
    PolyExpr,
    PolyFunction,
    PolyGate,
    PolyValue,
    equivalent,
    eval_expr,
    mode_project,
    parse_expr,
    print_expr,
    table_of,
)
from .cubes import (
    Cube,
    CubeClass,
    classify,
    full_cube,
    implicants,
    intersect,
    point_cube,
    points,
    prime_implicants,
    product_term,
)
from .rules import (
    RuleTag,
    TermCandidate,
    ZERO_PRESERVING_GATES,
    match_pair,
    match_single,
    match_triple,
    tag_rule,
)
from .minimizer import (
    CostReport,
    Cover,
    CoverVerificationError,
    MinimizeConfig,
    UncoverableDemandError,
    baseline_mux,
    baseline_sop,
    exact_search,
    minimize,
)
from .ppla import PplaDocument, PplaError, parse_ppla, serialize_ppla
from .benchmarks import gen_benchmark
from .kmap import render_kmap

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "Assignment",
    "Const",
    "CostReport",
    "Cover",
    "CoverVerificationError",
    "Cube",
    "CubeClass",
    "ExprSyntaxError",
    "Gate",
    "Literal",
    "MinimizeConfig",
    "PolyExpr",
    "PolyFunction",
    "PolyGate",
    "PolyValue",
    "PplaDocument",
    "PplaError",
    "RuleTag",
    "TermCandidate",
    "UncoverableDemandError",
    "ZERO_PRESERVING_GATES",
    "baseline_mux",
    "baseline_sop",
    "classify",
    "equivalent",
    "eval_expr",
    "exact_search",
    "full_cube",
    "gen_benchmark",
    "implicants",
    "intersect",
    "match_pair",
    "match_single",
    "match_triple",
    "minimize",
    "mode_project",
    "parse_expr",
    "parse_ppla",
    "point_cube",
    "points",
    "prime_implicants",
    "print_expr",
    "product_term",
    "render_kmap",
    "serialize_ppla",
    "table_of",
    "tag_rule",
]
