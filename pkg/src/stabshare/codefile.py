"""Hand-editable text format for schemes and classical code pairs.

A scheme file is a header of ``key value`` lines followed by row blocks::

    # superdense-coding scheme
    p 2
    mu 1
    n 2
    k 2
    C
    CMAX
    1 1 | 0 0
    0 0 | 1 1
    REPS
    1 0 | 0 0
    0 0 | 1 0

``#`` starts a comment, the ``|`` between the two halves of a row is
optional and ignored, and a ``modulus`` header line (mu + 1 coefficients,
constant term first) selects the defining polynomial for extension fields.
The C block must contain n - k independent rows; CMAX (n rows) and REPS
(k rows) are optional and default to the deterministic greedy choices.

Classical pair files for the ``css`` and ``hermitian`` constructions use the
same shape with blocks C1/C2 (rows of length n over F_q) and D/DMAX (over
F_{q^2}) respectively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .fields import FieldSpec
from .linalg import Subspace, rref
from .scheme import Scheme, build_scheme
from .symplectic import symp_inner

_HEADER_KEYS = {"p", "mu", "n", "k", "modulus"}


@dataclass(frozen=True)
class CodeFile:
    field: FieldSpec
    n: int
    k: int
    stabilizer_rows: tuple[tuple[int, ...], ...]
    lagrangian_rows: tuple[tuple[int, ...], ...] | None
    rep_rows: tuple[tuple[int, ...], ...] | None

    def to_scheme(self) -> Scheme:
        stab = Subspace(self.field, 2 * self.n, self.stabilizer_rows)
        lagr = (
            Subspace(self.field, 2 * self.n, self.lagrangian_rows)
            if self.lagrangian_rows is not None
            else None
        )
        return build_scheme(stab, lagr, self.rep_rows)


def _tokenize(text: str):
    """Yield (line_number, tokens) with comments stripped and blanks skipped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = [t for t in line.replace("|", " ").replace("=", " ").split() if t]
        yield lineno, tokens


def _parse_blocks(text: str, block_names: tuple[str, ...]):
    """Split into (header dict, {block: [(lineno, row), ...]})."""
    header: dict[str, tuple[int, list[str]]] = {}
    blocks: dict[str, list[tuple[int, list[int]]]] = {}
    current: str | None = None
    for lineno, tokens in _tokenize(text):
        key = tokens[0].upper()
        if len(tokens) == 1 and key in block_names:
            if key in blocks:
                raise ParseError(f"duplicate block {key}", lineno)
            blocks[key] = []
            current = key
            continue
        if current is None:
            name = tokens[0].lower()
            if name not in _HEADER_KEYS:
                raise ParseError(
                    f"unknown header key {tokens[0]!r} (expected one of {sorted(_HEADER_KEYS)})",
                    lineno,
                )
            if name in header:
                raise ParseError(f"duplicate header key {name}", lineno)
            header[name] = (lineno, tokens[1:])
        else:
            try:
                row = [int(t) for t in tokens]
            except ValueError:
                raise ParseError(f"non-integer symbol in row: {tokens}", lineno) from None
            blocks[current].append((lineno, row))
    return header, blocks


def _header_int(header, name: str, default: int | None = None) -> int:
    if name not in header:
        if default is not None:
            return default
        raise ParseError(f"missing header key {name!r}")
    lineno, values = header[name]
    if len(values) != 1:
        raise ParseError(f"header key {name!r} takes exactly one value", lineno)
    try:
        return int(values[0])
    except ValueError:
        raise ParseError(f"header key {name!r} must be an integer", lineno) from None


def _build_field(header) -> FieldSpec:
    p = _header_int(header, "p")
    mu = _header_int(header, "mu", 1)
    modulus = None
    if "modulus" in header:
        lineno, values = header["modulus"]
        try:
            modulus = tuple(int(v) for v in values)
        except ValueError:
            raise ParseError("modulus coefficients must be integers", lineno) from None
    try:
        return FieldSpec(p, mu, modulus)
    except ValidationError as exc:
        raise ValidationError(f"bad field header: {exc}") from exc


def _check_rows(field: FieldSpec, rows, width: int, what: str):
    out = []
    for lineno, row in rows:
        if len(row) != width:
            raise ParseError(
                f"{what} row has {len(row)} symbols, expected {width}", lineno
            )
        for x in row:
            if not 0 <= x < field.q:
                raise ParseError(
                    f"symbol {x} outside 0..{field.q - 1} in {what} row", lineno
                )
        out.append(tuple(row))
    return tuple(out)


def parse_code_file(text: str) -> CodeFile:
    """Parse and validate a scheme file; errors carry 1-based line numbers."""
    header, blocks = _parse_blocks(text, ("C", "CMAX", "REPS"))
    field = _build_field(header)
    n = _header_int(header, "n")
    k = _header_int(header, "k")
    if n < 1:
        raise ValidationError(f"n = {n} must be positive")
    if not 0 <= k <= n:
        raise ValidationError(f"k = {k} outside 0..{n}")
    if "C" not in blocks:
        raise ParseError("missing required block C")
    c_rows = _check_rows(field, blocks["C"], 2 * n, "C")
    if len(c_rows) != n - k:
        raise ValidationError(f"C block has {len(c_rows)} rows, expected n - k = {n - k}")
    reduced, _ = rref(field, c_rows, 2 * n)
    if len(reduced) != n - k:
        raise ValidationError("C rows are linearly dependent")
    for i in range(len(c_rows)):
        for j in range(i + 1, len(c_rows)):
            if symp_inner(field, c_rows[i], c_rows[j]) != 0:
                raise ValidationError(
                    f"C rows {i + 1} and {j + 1} have nonzero symplectic inner product"
                )
    lagr_rows = None
    if "CMAX" in blocks:
        lagr_rows = _check_rows(field, blocks["CMAX"], 2 * n, "CMAX")
        if len(lagr_rows) != n:
            raise ValidationError(f"CMAX block has {len(lagr_rows)} rows, expected n = {n}")
    rep_rows = None
    if "REPS" in blocks:
        rep_rows = _check_rows(field, blocks["REPS"], 2 * n, "REPS")
        if len(rep_rows) != k:
            raise ValidationError(f"REPS block has {len(rep_rows)} rows, expected k = {k}")
    return CodeFile(field, n, k, c_rows, lagr_rows, rep_rows)


def emit_code_file(s: Scheme, comment: str | None = None) -> str:
    """Serialize a scheme so that re-parsing reproduces it exactly."""
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.append(f"p {s.field.p}")
    lines.append(f"mu {s.field.mu}")
    lines.append(f"n {s.n}")
    lines.append(f"k {s.k}")
    if s.field.mu > 1:
        lines.append("modulus " + " ".join(str(c) for c in s.field.modulus))
    lines.append("C")
    lines.extend(_format_row(r, s.n) for r in s.stabilizer.rows)
    lines.append("CMAX")
    lines.extend(_format_row(r, s.n) for r in s.lagrangian.rows)
    lines.append("REPS")
    lines.extend(_format_row(r, s.n) for r in s.coset_reps)
    return "\n".join(lines) + "\n"


def _format_row(row, n: int) -> str:
    a = " ".join(str(x) for x in row[:n])
    b = " ".join(str(x) for x in row[n:])
    return f"{a} | {b}"


# ---------------------------------------------------------------------------
# Classical pair files
# ---------------------------------------------------------------------------


def parse_classical_pair(text: str, outer: str, inner: str):
    """Parse a nested classical pair file with blocks named outer/inner.

    Returns (field, n, outer Subspace, inner Subspace); rows have length n.
    """
    header, blocks = _parse_blocks(text, (outer.upper(), inner.upper()))
    field = _build_field(header)
    n = _header_int(header, "n")
    spaces = {}
    for name in (outer.upper(), inner.upper()):
        rows = _check_rows(field, blocks.get(name, []), n, name)
        spaces[name] = Subspace(field, n, rows)
    return field, n, spaces[outer.upper()], spaces[inner.upper()]
