"""Algebra files: a signature header, ``dim``, ``basis`` and ``table`` lines."""

from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from lark import Lark, Token, UnexpectedInput

from dicodim.concrete.algebra import FinDimAlgebra
from dicodim.errors import ParseError
from dicodim.formats.header import op_terminal, split_header
from dicodim.terms import Signature
from dicodim.utils.helpers import fstr

_BODY_GRAMMAR = r"""
    start: (_stmt? _NL)*
    _stmt: dim | basis | table | complete
    dim: "dim" COEFF
    basis: "basis" LABEL+
    table: "table" OP ":" LABEL LABEL "->" vector
    complete: "complete" ":" LABEL
    vector: SIGN? vterm (SIGN vterm)*
    vterm: COEFF? LABEL -> scaled
         | COEFF        -> constant
    SIGN: "+" | "-"
    COEFF: /\d+(\/\d+)?/
    LABEL: /[A-Za-z_][A-Za-z0-9_]*/
    _NL: /\n/
    COMMENT: /#[^\n]*/
    %ignore COMMENT
    %ignore /[ \t\f\r]+/
"""

COMPLETIONS = ("leibniz",)


@lru_cache(maxsize=32)
def _body_parser(sig: Signature) -> Lark:
    return Lark(_BODY_GRAMMAR + op_terminal(sig), parser="lalr", propagate_positions=True)


def _vector(node, index: dict[str, int]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    sign = 1
    for child in node.children:
        if isinstance(child, Token):
            sign = -1 if child == "-" else 1
            continue
        toks = child.children
        if child.data == "constant":
            if Fraction(str(toks[0])):
                raise ParseError("A product must be a combination of basis labels", toks[0].line, toks[0].column)
        else:
            coeff = Fraction(str(toks[0])) if len(toks) == 2 else Fraction(1)
            label = toks[-1]
            if str(label) not in index:
                raise ParseError(f"Unknown basis label {label!s}", label.line, label.column)
            k = index[str(label)]
            out[k] = out.get(k, 0) + sign * coeff
        sign = 1
    return {k: c for k, c in out.items() if c}


def parse_algebra(text: str, name: str = "") -> FinDimAlgebra:
    """
    Parse an algebra file; omitted products are zero.

    Raises:
        ParseError: On malformed lines, unknown labels or duplicate entries.
    """
    sig, header_line, lines = split_header(text)
    body = "\n" * header_line + "\n".join(lines[header_line:]) + "\n"
    try:
        tree = _body_parser(sig).parse(body)
    except UnexpectedInput as e:
        raise ParseError(f"Malformed algebra line: {e.__class__.__name__}", e.line, e.column) from None

    dim: int | None = None
    labels: tuple[str, ...] | None = None
    completion: str | None = None
    tables: list[dict] = [{} for _ in sig.ops]
    for stmt in tree.children:
        line = stmt.meta.line
        if stmt.data == "dim":
            if dim is not None:
                raise ParseError("Duplicate dim line", line, 1)
            tok = stmt.children[0]
            if "/" in tok:
                raise ParseError("dim must be a non-negative integer", tok.line, tok.column)
            dim = int(tok)
        elif stmt.data == "basis":
            if dim is None:
                raise ParseError("basis must follow dim", line, 1)
            if labels is not None:
                raise ParseError("Duplicate basis line", line, 1)
            labels = tuple(str(t) for t in stmt.children)
            if len(labels) != dim:
                raise ParseError(f"{len(labels)} basis labels for dim {dim}", line, 1)
            if len(set(labels)) != dim:
                raise ParseError("Basis labels must be distinct", line, 1)
        elif stmt.data == "complete":
            completion = str(stmt.children[0])
            if completion not in COMPLETIONS:
                raise ParseError(f"Unknown completion {completion!r}", line, 1)
        else:
            if dim is None:
                raise ParseError("table entries must follow dim", line, 1)
            if labels is None:
                labels = tuple(f"e{i + 1}" for i in range(dim))
            index = {label: i for i, label in enumerate(labels)}
            op, a, b, vec = stmt.children
            for tok in (a, b):
                if str(tok) not in index:
                    raise ParseError(f"Unknown basis label {tok!s}", tok.line, tok.column)
            key = (index[str(a)], index[str(b)])
            table = tables[sig.index(str(op))]
            if key in table:
                raise ParseError(f"Duplicate table entry {op!s}: {a!s} {b!s}", line, 1)
            table[key] = _vector(vec, index)
    if dim is None:
        raise ParseError("Missing dim line", header_line, 1)
    if labels is None:
        labels = tuple(f"e{i + 1}" for i in range(dim))
    algebra = FinDimAlgebra(sig, dim, labels, tuple(tables), name)
    if completion == "leibniz":
        algebra = algebra.complete_leibniz()
    return algebra


def load_algebra_file(path: Path | str) -> FinDimAlgebra:
    path = Path(path)
    return parse_algebra(path.read_text(encoding="utf-8"), path.stem)


def _render_vector(vec: dict[int, Fraction], labels: tuple[str, ...]) -> str:
    parts = []
    for k in sorted(vec):
        c = vec[k]
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign} {fstr(abs(c))} {labels[k]}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def emit_algebra(A: FinDimAlgebra) -> str:
    """Canonical text with every nonzero product listed, ops in signature order."""
    lines = []
    if A.name:
        lines.append(f"# {A.name}")
    lines.append(A.sig.header())
    lines.append(f"dim {A.dim}")
    if A.dim:
        lines.append("basis " + " ".join(A.labels))
    for w, op in enumerate(A.sig.ops):
        for (i, j) in sorted(A.tables[w]):
            lines.append(
                f"table {op}: {A.labels[i]} {A.labels[j]} -> {_render_vector(A.tables[w][(i, j)], A.labels)}"
            )
    return "\n".join(lines) + "\n"
