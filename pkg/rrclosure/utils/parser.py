"""Reading and printing ideals in the command-line grammar.

Monomial ideals::

    ideal  := gen (',' gen)*
    gen    := factor (('*' | whitespace) factor)*
    factor := var ('^' uint)? | '1'

Value groups are written ``lex(Z,Q)`` and cuts ``ge m=1 rho=1/2`` or
``gt m=2 rho=0,-1``. Everything printed here parses back to the same
value.
"""
import re
from typing import List, Sequence, Tuple

from ..core.errors import ParseError
from ..core.exact import format_rational, rational
from ..models.monomial import MonomialIdeal, minimalize
from ..models.valuation import ComponentKind, CutIdeal, CutKind, ValueGroup, canonicalize

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_UINT = re.compile(r"[0-9]+")
_RATIONAL = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def location(self, pos: int) -> Tuple[int, int]:
        before = self.text[:pos]
        line = before.count("\n") + 1
        column = pos - (before.rfind("\n") + 1) + 1
        return line, column

    def error(self, message: str, pos: int = None) -> ParseError:
        line, column = self.location(self.pos if pos is None else pos)
        return ParseError(line, column, message)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_spaces(self) -> bool:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.pos > start

    def match(self, pattern: re.Pattern) -> str:
        found = pattern.match(self.text, self.pos)
        if not found:
            return ""
        self.pos = found.end()
        return found.group(0)

    def expect(self, literal: str) -> None:
        if not self.text.startswith(literal, self.pos):
            shown = self.peek() or "end of input"
            raise self.error(f"expected '{literal}', found '{shown}'")
        self.pos += len(literal)


def default_var_names(nvars: int) -> List[str]:
    if nvars <= 3:
        return ["x", "y", "z"][:nvars]
    return [f"x{i}" for i in range(1, nvars + 1)]


def parse_var_names(text: str) -> List[str]:
    cursor = _Cursor(text)
    names: List[str] = []
    while True:
        cursor.skip_spaces()
        start = cursor.pos
        name = cursor.match(_IDENT)
        if not name:
            raise cursor.error("expected a variable name")
        if name in names:
            raise cursor.error(f"variable '{name}' listed twice", start)
        names.append(name)
        cursor.skip_spaces()
        if cursor.at_end():
            return names
        cursor.expect(",")


def _parse_factor(cursor: _Cursor, names: Sequence[str], exps: List[int]) -> None:
    start = cursor.pos
    digits = cursor.match(_UINT)
    if digits:
        if int(digits) != 1:
            raise cursor.error("coefficients are not supported; only the unit monomial '1' is allowed", start)
        return
    name = cursor.match(_IDENT)
    if not name:
        shown = cursor.peek() or "end of input"
        raise cursor.error(f"expected a variable, found '{shown}'")
    if name not in names:
        raise cursor.error(f"unknown variable '{name}'", start)
    power = 1
    if cursor.peek() == "^":
        cursor.pos += 1
        if cursor.peek() == "-":
            raise cursor.error("negative exponent")
        digits = cursor.match(_UINT)
        if not digits:
            raise cursor.error("expected an exponent after '^'")
        power = int(digits)
    exps[names.index(name)] += power


def _parse_generator(cursor: _Cursor, names: Sequence[str]) -> Tuple[int, ...]:
    exps = [0] * len(names)
    cursor.skip_spaces()
    _parse_factor(cursor, names, exps)
    while True:
        cursor.skip_spaces()
        nxt = cursor.peek()
        if nxt == "*":
            cursor.pos += 1
            cursor.skip_spaces()
            _parse_factor(cursor, names, exps)
        elif nxt and (nxt.isalnum() or nxt == "_"):
            _parse_factor(cursor, names, exps)
        else:
            return tuple(exps)


def parse_poly_ideal(vars_text: str, gens_text: str) -> MonomialIdeal:
    names = parse_var_names(vars_text)
    cursor = _Cursor(gens_text)
    cursor.skip_spaces()
    if cursor.at_end():
        raise cursor.error("empty generator list")
    gens = []
    while True:
        gens.append(_parse_generator(cursor, names))
        if cursor.at_end():
            break
        cursor.expect(",")
    return minimalize(gens, len(names))


def parse_group(text: str) -> ValueGroup:
    cursor = _Cursor(text)
    cursor.skip_spaces()
    cursor.expect("lex(")
    kinds = []
    while True:
        cursor.skip_spaces()
        letter = cursor.peek()
        if letter not in ("Z", "Q"):
            raise cursor.error(f"expected Z or Q, found '{letter or 'end of input'}'")
        kinds.append(ComponentKind(letter))
        cursor.pos += 1
        cursor.skip_spaces()
        if cursor.peek() == ")":
            cursor.pos += 1
            break
        cursor.expect(",")
    cursor.skip_spaces()
    if not cursor.at_end():
        raise cursor.error("unexpected text after the group")
    return ValueGroup(tuple(kinds))


def parse_val_ideal(group_text: str, cut_text: str) -> CutIdeal:
    group = parse_group(group_text)
    cursor = _Cursor(cut_text)
    cursor.skip_spaces()
    start = cursor.pos
    word = cursor.match(_IDENT)
    if word not in (CutKind.GE.value, CutKind.GT.value):
        raise cursor.error("expected 'ge' or 'gt'", start)
    if not cursor.skip_spaces():
        raise cursor.error("expected whitespace")
    cursor.expect("m=")
    m_pos = cursor.pos
    digits = cursor.match(_UINT)
    if not digits:
        raise cursor.error("expected an integer prefix length")
    m = int(digits)
    if not 1 <= m <= group.rank:
        raise cursor.error(f"prefix length m={m} outside 1..{group.rank}", m_pos)
    if not cursor.skip_spaces():
        raise cursor.error("expected whitespace")
    cursor.expect("rho=")
    rho_pos = cursor.pos
    rho = []
    while True:
        entry = cursor.match(_RATIONAL)
        if not entry:
            raise cursor.error("expected a rational number")
        try:
            rho.append(rational(entry))
        except ValueError:
            raise cursor.error(f"not a rational number: '{entry}'", cursor.pos - len(entry))
        if cursor.peek() != ",":
            break
        cursor.pos += 1
    cursor.skip_spaces()
    if not cursor.at_end():
        raise cursor.error("unexpected text after the cut")
    if len(rho) != m:
        raise cursor.error(f"rho has {len(rho)} entries but m={m}", rho_pos)
    return canonicalize(CutIdeal(CutKind(word), m, tuple(rho), group))


def format_monomial(exps: Sequence[int], names: Sequence[str]) -> str:
    factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e]
    return "*".join(factors) or "1"


def format_poly_ideal(ideal: MonomialIdeal, names: Sequence[str] = None) -> str:
    names = names or default_var_names(ideal.nvars)
    return ", ".join(format_monomial(g, names) for g in ideal.generators)


def format_group(group: ValueGroup) -> str:
    return str(group)


def format_cut(cut: CutIdeal) -> str:
    return f"{cut.kind.value} m={cut.m} rho={','.join(format_rational(r) for r in cut.rho)}"
