"""Line-oriented truth-table file format for one dual-mode output (.ppla).

    # optional comments
    .i 4
    .m 2
    .ob parity4 majority4
    0001 1/0
    0111 1/1
    .e

Rows list assignment bits and the paired cell value; assignments not listed
default to 0/0.  The canonical serialization lists only nonzero rows in
ascending bit order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyfunc import MAX_ARITY, PolyFunction, PolyValue, ZERO


class PplaError(ValueError):
    """Malformed .ppla document."""


@dataclass(frozen=True)
class PplaDocument:
    n: int
    rows: tuple[tuple[str, PolyValue], ...]
    mode_names: tuple[str, str] | None = None

    def to_function(self) -> PolyFunction:
        m1 = m2 = 0
        for bits, value in self.rows:
            k = int(bits, 2)
            m1 |= value.mode1 << k
            m2 |= value.mode2 << k
        return PolyFunction.from_masks(self.n, m1, m2)

    @classmethod
    def from_function(
        cls, f: PolyFunction, mode_names: tuple[str, str] | None = None
    ) -> "PplaDocument":
        rows = []
        for k in range(1 << f.n):
            v = f.value_at(k)
            if v != ZERO:
                rows.append((format(k, f"0{f.n}b"), v))
        return cls(f.n, tuple(rows), mode_names)

    def canonicalized(self) -> "PplaDocument":
        rows = tuple(sorted((b, v) for b, v in self.rows if v != ZERO))
        return PplaDocument(self.n, rows, self.mode_names)


def parse_ppla(text: str) -> PplaDocument:
    n: int | None = None
    modes: int | None = None
    names: tuple[str, str] | None = None
    rows: list[tuple[str, PolyValue]] = []
    seen: set[str] = set()
    terminated = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if terminated:
            raise PplaError(f"line {lineno}: content after .e")
        fields = line.split()
        if fields[0] == ".i":
            if n is not None:
                raise PplaError(f"line {lineno}: duplicate .i")
            try:
                n = int(fields[1])
            except (IndexError, ValueError):
                raise PplaError(f"line {lineno}: malformed .i") from None
            if not 1 <= n <= MAX_ARITY:
                raise PplaError(f"line {lineno}: arity must be in 1..{MAX_ARITY}")
        elif fields[0] == ".m":
            try:
                modes = int(fields[1])
            except (IndexError, ValueError):
                raise PplaError(f"line {lineno}: malformed .m") from None
            if modes != 2:
                raise PplaError(f"line {lineno}: .m must be 2")
        elif fields[0] == ".ob":
            if len(fields) != 3:
                raise PplaError(f"line {lineno}: .ob needs exactly two names")
            names = (fields[1], fields[2])
        elif fields[0] == ".e":
            terminated = True
        elif fields[0].startswith("."):
            raise PplaError(f"line {lineno}: unknown directive {fields[0]}")
        else:
            if n is None:
                raise PplaError(f"line {lineno}: data row before .i")
            if len(fields) != 2:
                raise PplaError(f"line {lineno}: expected '<bits> <b>/<b>'")
            bits, val = fields
            if len(bits) != n or any(c not in "01" for c in bits):
                raise PplaError(f"line {lineno}: input bits must be {n} characters of 0/1")
            if bits in seen:
                raise PplaError(f"line {lineno}: duplicate input row {bits}")
            seen.add(bits)
            try:
                rows.append((bits, PolyValue.parse(val)))
            except ValueError as exc:
                raise PplaError(f"line {lineno}: {exc}") from None

    if n is None:
        raise PplaError("missing .i line")
    if modes is None:
        raise PplaError("missing .m line")
    if not terminated:
        raise PplaError("missing .e terminator")
    return PplaDocument(n, tuple(sorted(rows)), names)


def serialize_ppla(doc: PplaDocument) -> str:
    doc = doc.canonicalized()
    lines = [f".i {doc.n}", ".m 2"]
    if doc.mode_names is not None:
        lines.append(f".ob {doc.mode_names[0]} {doc.mode_names[1]}")
    for bits, value in doc.rows:
        lines.append(f"{bits} {value}")
    lines.append(".e")
    return "\n".join(lines) + "\n"
