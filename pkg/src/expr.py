"""
Group expressions.

Grammar (src/group_expr.lark, LALR):
    expr := term ("x" term)*
    term := atom | "G(" prime "," expr ")" | "Sak(" expr ")"
    atom := C<n> | D<n> | S<n> | A<n> | Q8

Whitespace is insignificant. Parsing yields a small immutable AST; render()
prints its canonical form and parse(render(e)) == e. build() turns an AST
into a TableGroup (catalog atoms and their products) or an SdGroup.

Version: 0.4.0
License: MIT
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any

from lark import Lark, Transformer, UnexpectedEOF, UnexpectedInput, UnexpectedToken
from lark.exceptions import VisitError
from sympy import isprime

# mypy: disable-error-code="no-redef"
try:
    from .catalog import atom_order, catalog_group
    from .errors import ExprSyntaxError, InvalidParameterError
    from .groups import TableGroup, direct_product
    from .models import SakDescriptor
    from .semidirect import SdGroup, build_saksonov, enumerate_group
except ImportError:
    from catalog import atom_order, catalog_group
    from errors import ExprSyntaxError, InvalidParameterError
    from groups import TableGroup, direct_product
    from models import SakDescriptor
    from semidirect import SdGroup, build_saksonov, enumerate_group

logger = logging.getLogger(__name__)

GRAMMAR_PATH = Path(__file__).with_name("group_expr.lark")


# =============================================================================
# AST
# =============================================================================


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Product:
    """Two or more factors; nested products are flattened."""

    factors: tuple["GroupExpr", ...]


@dataclass(frozen=True)
class Gp:
    p: int
    inner: "GroupExpr"


@dataclass(frozen=True)
class Sak:
    inner: "GroupExpr"


GroupExpr = Atom | Product | Gp | Sak


def render(e: GroupExpr) -> str:
    """Canonical text: "G(2, C3)", "Sak(S3)", "A5 x C2"."""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Product):
        return " x ".join(render(f) for f in e.factors)
    if isinstance(e, Gp):
        return f"G({e.p}, {render(e.inner)})"
    return f"Sak({render(e.inner)})"


# =============================================================================
# Parsing
# =============================================================================


class _ToAst(Transformer):
    def atom(self, items: list[Any]) -> Atom:
        name = str(items[0])
        atom_order(name)
        return Atom(name)

    def expr(self, items: list[GroupExpr]) -> GroupExpr:
        if len(items) == 1:
            return items[0]
        flat: list[GroupExpr] = []
        for f in items:
            flat.extend(f.factors if isinstance(f, Product) else [f])
        return Product(tuple(flat))

    def gp(self, items: list[Any]) -> Gp:
        p = int(items[0])
        if not isprime(p):
            raise InvalidParameterError(f"G({p}, ...): {p} is not prime")
        return Gp(p, items[1])

    def sak(self, items: list[GroupExpr]) -> Sak:
        return Sak(items[0])


@lru_cache(maxsize=1)
def get_parser() -> Lark:
    return Lark(GRAMMAR_PATH.read_text(), parser="lalr")


def parse_group_expr(text: str) -> GroupExpr:
    """
    Parse a group expression.

    Raises:
        ExprSyntaxError: malformed text; ``offset`` is the byte offset of the
            offending token (the end of input for a truncated expression)
        UnknownAtomError: atom parameter out of range (e.g. S7)
        InvalidParameterError: non-prime G(p, ...)
    """
    try:
        tree = get_parser().parse(text)
    except UnexpectedInput as exc:
        pos = getattr(exc, "pos_in_stream", None)
        at_end = isinstance(exc, UnexpectedEOF) or (
            isinstance(exc, UnexpectedToken) and exc.token.type == "$END"
        )
        if at_end or pos is None or pos < 0:
            pos = len(text)
        offset = len(text[:pos].encode("utf-8"))
        raise ExprSyntaxError(f"unexpected input in {text!r}", offset) from None
    try:
        return _ToAst().transform(tree)
    except VisitError as exc:
        raise exc.orig_exc from None


# =============================================================================
# Building
# =============================================================================


@dataclass
class BuiltGroup:
    """
    A parsed expression with the group it denotes.

    Attributes:
        expr: The AST
        group: TableGroup or SdGroup (for Sak, the outermost level)
        sak: Descriptor and chain when the top level is Sak(...)
    """

    expr: GroupExpr
    group: Any
    sak: SakDescriptor | None = None
    chain: list[SdGroup] | None = None


def _as_table(G: Any) -> TableGroup:
    if isinstance(G, TableGroup):
        return G
    return enumerate_group(G)[0]


def build(e: GroupExpr | str, *, max_enum: int | None = None) -> BuiltGroup:
    """
    Construct the group an expression denotes.

    Products and Sak bases must be enumerable; G(p, ...) stays lazy.

    Raises:
        LimitExceededError: an enumeration exceeds max_enum
    """
    if isinstance(e, str):
        e = parse_group_expr(e)
    if isinstance(e, Atom):
        return BuiltGroup(e, catalog_group(e.name, max_enum=max_enum))
    if isinstance(e, Product):
        if all(isinstance(f, Atom) for f in e.factors):
            return BuiltGroup(e, catalog_group(render(e), max_enum=max_enum))
        parts = [_as_table(build(f, max_enum=max_enum).group) for f in e.factors]
        group = parts[0]
        for part in parts[1:]:
            group = direct_product(group, part)
        return BuiltGroup(e, group)
    if isinstance(e, Gp):
        inner = build(e.inner, max_enum=max_enum).group
        return BuiltGroup(e, SdGroup(inner, e.p, name=render(e)))
    base = _as_table(build(e.inner, max_enum=max_enum).group)
    descriptor, chain = build_saksonov(base, name=render(e.inner))
    logger.debug("%s: levels %s", render(e), [lvl.prime for lvl in descriptor.levels])
    return BuiltGroup(e, chain[-1], sak=descriptor, chain=chain)


__all__ = [
    "Atom",
    "BuiltGroup",
    "Gp",
    "GroupExpr",
    "Product",
    "Sak",
    "build",
    "parse_group_expr",
    "render",
]
