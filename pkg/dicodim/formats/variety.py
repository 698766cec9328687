"""Variety files: a signature header followed by ``identity lhs = rhs`` lines."""

from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from lark import Lark, Token, Tree, UnexpectedInput
from loguru import logger

from dicodim.errors import DegreeMismatchError, NonHomogeneousError, ParseError
from dicodim.formats.header import op_terminal, split_header
from dicodim.terms import Monomial, Poly, Signature
from dicodim.tideal import VarietyPresentation

_BODY_GRAMMAR = r"""
    start: (identity | _NL)*
    identity: "identity" expr "=" expr
    expr: SIGN? term (SIGN term)*
    term: COEFF factor -> scaled
        | COEFF        -> constant
        | factor       -> unit
    ?factor: VAR
           | "(" factor OP factor ")" -> node
    SIGN: "+" | "-"
    COEFF: /\d+(\/\d+)?/
    VAR: /x\d+/
    _NL: /\n/
    COMMENT: /#[^\n]*/
    %ignore COMMENT
    %ignore /[ \t\f\r]+/
"""


@lru_cache(maxsize=32)
def _body_parser(sig: Signature) -> Lark:
    return Lark(_BODY_GRAMMAR + op_terminal(sig), parser="lalr", propagate_positions=True)


def _monomial(node, sig: Signature) -> Monomial:
    if isinstance(node, Token):
        index = int(node[1:])
        if index < 1:
            raise ParseError("Variables are numbered from x1", node.line, node.column)
        return Monomial.leaf(index)
    left, op, right = node.children
    return Monomial.node(sig.index(str(op)), _monomial(left, sig), _monomial(right, sig))


def _expr_terms(expr: Tree, sig: Signature) -> list[tuple[Monomial, Fraction]]:
    terms: list[tuple[Monomial, Fraction]] = []
    sign = 1
    for child in expr.children:
        if isinstance(child, Token) and child.type == "SIGN":
            sign = -1 if child == "-" else 1
            continue
        if child.data == "constant":
            if Fraction(str(child.children[0])):
                tok = child.children[0]
                raise ParseError("Constant terms are not allowed", tok.line, tok.column)
        elif child.data == "scaled":
            coeff, factor = child.children
            terms.append((_monomial(factor, sig), sign * Fraction(str(coeff))))
        else:
            terms.append((_monomial(child.children[0], sig), Fraction(sign)))
        sign = 1
    return terms


def parse_variety(text: str, name: str = "") -> VarietyPresentation:
    """
    Parse a variety file.

    Raises:
        ParseError: With line and column of the first offending token.
    """
    sig, header_line, lines = split_header(text)
    # keep line numbers of the original text
    body = "\n" * header_line + "\n".join(lines[header_line:]) + "\n"
    try:
        tree = _body_parser(sig).parse(body)
    except UnexpectedInput as e:
        raise ParseError(f"Malformed identity: {e.__class__.__name__}", e.line, e.column) from None
    generators: list[Poly] = []
    for ident in tree.children:
        line = ident.meta.line
        lhs, rhs = ident.children
        terms = _expr_terms(lhs, sig) + [(m, -c) for m, c in _expr_terms(rhs, sig)]
        if not terms:
            logger.warning(f"Line {line}: identity 0 = 0 ignored")
            continue
        try:
            poly = Poly.from_terms(sig, terms)
        except DegreeMismatchError as e:
            raise ParseError(f"Identity is not homogeneous: {e}", line, 1) from None
        if not poly:
            logger.warning(f"Line {line}: identity is trivially satisfied, ignored")
            continue
        generators.append(poly)
    try:
        return VarietyPresentation(sig, tuple(generators), name)
    except NonHomogeneousError as e:
        raise ParseError(str(e), header_line, 1) from None


def load_variety_file(path: Path | str) -> VarietyPresentation:
    path = Path(path)
    return parse_variety(path.read_text(encoding="utf-8"), path.stem)


def emit_variety(V: VarietyPresentation) -> str:
    """Canonical text: header, then one ``identity <poly> = 0`` per generator."""
    lines = []
    if V.name:
        lines.append(f"# {V.name}")
    lines.append(V.sig.header())
    lines.extend(f"identity {g.render()} = 0" for g in V.generators)
    return "\n".join(lines) + "\n"