"""Text formats: Cayley tables, Rees specs, G-set files, and report emission."""
from __future__ import annotations

import hashlib
import json

from .constructors import ReesSpec
from .gset import GSet
from .semigroup import FiniteSemigroup, validate


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def _int(tok, line, col):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col) from None


def _parse_table_lines(lines, start=1):
    """Parse a Cayley block from (lineno, text) pairs; returns (n, rows, labels, rest)."""
    it = [(i, s) for i, s in lines]
    body = [(i, s) for i, s in it if s.strip() and not s.strip().startswith("#")]
    labels = None
    for i, s in it:
        t = s.strip()
        if t.startswith("# labels:"):
            labels = t[len("# labels:"):].split()
    if not body:
        raise ParseError("empty table", start)
    ln, head = body[0]
    toks = head.split()
    if len(toks) != 1:
        raise ParseError("first line must hold the order n", ln)
    n = _int(toks[0], ln, 1)
    if n < 1:
        raise ParseError("order must be positive", ln)
    if len(body) < n + 1:
        raise ParseError(f"expected {n} rows, found {len(body) - 1}", body[-1][0])
    rows = []
    for ln, s in body[1:n + 1]:
        toks = s.split()
        if len(toks) != n:
            raise ParseError(f"row has {len(toks)} entries, expected {n}", ln)
        rows.append([_int(t, ln, j + 1) for j, t in enumerate(toks)])
    if labels is not None and len(labels) != n:
        raise ParseError(f"{len(labels)} labels for {n} elements")
    return n, rows, labels, body[n + 1:]


def parse_table(text: str) -> FiniteSemigroup:
    """Cayley format: n, then n rows of 0-based indices, optional ``# labels: ...``."""
    lines = list(enumerate(text.splitlines(), 1))
    n, rows, labels, rest = _parse_table_lines(lines)
    if rest:
        raise ParseError("trailing content after the table", rest[0][0])
    return validate(n, rows, labels)


def format_table(S: FiniteSemigroup, labels: bool = True) -> str:
    out = [str(S.n)]
    out += [" ".join(str(int(x)) for x in row) for row in S.table]
    if labels and S.element_labels is not None:
        out.append("# labels: " + " ".join(S.element_labels))
    return "\n".join(out) + "\n"


def _blocks(text):
    """Split into blank-line separated blocks of (lineno, line)."""
    blocks, cur = [], []
    for i, s in enumerate(text.splitlines(), 1):
        if s.strip():
            cur.append((i, s))
        elif cur:
            blocks.append(cur)
            cur = []
    if cur:
        blocks.append(cur)
    return blocks


def parse_rees(text: str) -> ReesSpec:
    """Group table block, blank line, ``|I| |Lambda|``, then |Lambda| sandwich rows."""
    blocks = _blocks(text)
    if len(blocks) < 2:
        raise ParseError("expected a group table, a blank line, then sizes and sandwich rows")
    n, rows, labels, rest = _parse_table_lines(blocks[0])
    if rest:
        raise ParseError("missing blank line after the group table", rest[0][0])
    group = validate(n, rows, labels)
    body = [(i, s) for blk in blocks[1:] for i, s in blk if not s.strip().startswith("#")]
    ln, head = body[0]
    toks = head.split()
    if len(toks) != 2:
        raise ParseError("sizes line must be '|I| |Lambda|'", ln)
    i_size, l_size = _int(toks[0], ln, 1), _int(toks[1], ln, 2)
    if len(body) - 1 != l_size:
        raise ParseError(f"expected {l_size} sandwich rows, found {len(body) - 1}", ln)
    sandwich = []
    for ln, s in body[1:]:
        toks = s.split()
        if len(toks) != i_size:
            raise ParseError(f"sandwich row has {len(toks)} entries, expected {i_size}", ln)
        sandwich.append([_int(t, ln, j + 1) for j, t in enumerate(toks)])
    return ReesSpec(group, i_size, l_size, tuple(map(tuple, sandwich)))


def format_rees(spec: ReesSpec) -> str:
    out = format_table(spec.group, labels=False)
    out += f"\n{spec.i_size} {spec.lambda_size}\n"
    out += "".join(" ".join(map(str, row)) + "\n" for row in spec.sandwich)
    return out


def parse_gset(text: str) -> GSet:
    """Group table block, blank line, |X|, then |G| rows of |X| action entries."""
    blocks = _blocks(text)
    if len(blocks) < 2:
        raise ParseError("expected a group table, a blank line, then the action")
    n, rows, labels, rest = _parse_table_lines(blocks[0])
    if rest:
        raise ParseError("missing blank line after the group table", rest[0][0])
    group = validate(n, rows, labels)
    body = [(i, s) for blk in blocks[1:] for i, s in blk if not s.strip().startswith("#")]
    ln, head = body[0]
    toks = head.split()
    if len(toks) != 1:
        raise ParseError("expected |X| on its own line", ln)
    x_size = _int(toks[0], ln, 1)
    if len(body) - 1 != group.n:
        raise ParseError(f"expected {group.n} action rows, found {len(body) - 1}", ln)
    action = []
    for ln, s in body[1:]:
        toks = s.split()
        if len(toks) != x_size:
            raise ParseError(f"action row has {len(toks)} entries, expected {x_size}", ln)
        action.append(tuple(_int(t, ln, j + 1) for j, t in enumerate(toks)))
    return GSet(group, x_size, tuple(action))


def format_gset(gs: GSet) -> str:
    out = format_table(gs.group, labels=False)
    out += f"\n{gs.x_size}\n"
    out += "".join(" ".join(map(str, row)) + "\n" for row in gs.action)
    return out


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


# reports -------------------------------------------------------------------


def _text_lines(value, indent=""):
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                yield f"{indent}{k}:"
                yield from _text_lines(v, indent + "  ")
            else:
                yield f"{indent}{k}: {_scalar(v)}"
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and v:
                yield f"{indent}-"
                yield from _text_lines(v, indent + "  ")
            else:
                yield f"{indent}- {_scalar(v)}"
    else:
        yield indent + _scalar(value)


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, (dict, list)):
        return "{}" if isinstance(v, dict) else "[]"
    return str(v)


def emit(report: dict, fmt: str = "text") -> bytes:
    """Canonical rendering: json with sorted keys, or an indented key: value listing."""
    if fmt == "json":
        return (json.dumps(report, sort_keys=True, indent=2) + "\n").encode()
    if fmt == "text":
        if not report:
            return b"{}\n"
        return ("\n".join(_text_lines(report)) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")
