"""The signature header line shared by variety and algebra files."""

import re

from lark import Lark, UnexpectedInput

from dicodim.errors import ParseError
from dicodim.terms import Signature

_HEADER_GRAMMAR = r"""
    names: NAME ("," NAME)*
    pairs: pair ("," pair)*
    pair: "(" NAME "," NAME ")"
    NAME: /[^\s,()#=:\/]+/
    %ignore /[ \t\f\r]+/
"""

_KEYWORDS = {"ops": ("plain", "names"), "diops": ("di", "pairs"), "preops": ("pre", "pairs")}

_parsers = {
    rule: Lark(_HEADER_GRAMMAR, start=rule, parser="lalr") for rule in ("names", "pairs")
}


def split_header(text: str) -> tuple[Signature, int, list[str]]:
    """
    Parse the header and return (signature, header line number, lines).

    The header is the first line that is neither blank nor a ``#`` comment.
    """
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        return parse_header(line, lineno), lineno, lines
    raise ParseError("Missing header (ops:, diops: or preops:)", 1, 1)


def parse_header(line: str, lineno: int = 1) -> Signature:
    keyword, colon, rest = line.partition(":")
    keyword = keyword.strip()
    if not colon or keyword not in _KEYWORDS:
        raise ParseError(
            f"Header must start with one of {', '.join(k + ':' for k in _KEYWORDS)}", lineno, 1
        )
    flavor, rule = _KEYWORDS[keyword]
    try:
        tree = _parsers[rule].parse(rest)
    except UnexpectedInput as e:
        raise ParseError(f"Malformed header: {e.__class__.__name__}", lineno, e.column + len(keyword) + 1) from None
    try:
        if flavor == "plain":
            return Signature.plain(str(tok) for tok in tree.children)
        pairs = [(str(p.children[0]), str(p.children[1])) for p in tree.children]
        return Signature.from_pairs(flavor, pairs)
    except ValueError as e:
        raise ParseError(str(e), lineno, 1) from None


def op_terminal(sig: Signature) -> str:
    """A lark regexp terminal matching exactly the declared operation symbols."""
    names = sorted(sig.ops, key=len, reverse=True)
    pattern = "|".join(re.escape(name).replace("/", "\\/") for name in names)
    return f"OP: /(?:{pattern})/"
