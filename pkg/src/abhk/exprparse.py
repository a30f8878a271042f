"""Parser and printer for the element-expression language and the
extension spec documents: the single human/machine boundary.

Expression grammar (whitespace insensitive):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] atom ['^' ['-'] INT]
    atom   := NUMBER | IDENT | '(' expr ')'
    NUMBER := INT ['/' INT]
    IDENT  := letter (letter | digit | '_')*  |  'X+'  |  'X-'

Spec documents are line-oriented UTF-8 with nested named blocks and
"key: value" entries; '#' starts a comment. Unknown keys are rejected.
The full grammar ships in docs/spec-format.md.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .ambicore import AmbiElement, AmbiskewAlgebra
from .basehopf import (
    BaseAlgebra,
    BaseAutomorphism,
    BaseElement,
    Character,
    invert_element,
    make_base,
)
from .errors import AbhkError, NotInvertibleError
from .hopfstruct import ExtensionData, GeneralPresentation
from .scalar import CyclotomicField, Field, RationalField, RationalFunctionField, Scalar


class ParseError(AbhkError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)
        self.line = line
        self.column = column


class SpecError(AbhkError):
    """Schema violation in a spec document, with a path-addressed message."""


# ---------------------------------------------------------------------------
# expression AST


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, node) with sign in {+1, -1}


Node = Num | Name | Pow | Neg | Mul | Sum


# ---------------------------------------------------------------------------
# tokenizer


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER IDENT OP END
    text: str
    line: int
    column: int
    value: Fraction | None = None


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            num = int(src[i:j])
            if j < n and src[j] == "/" and j + 1 < n and src[j + 1].isdigit():
                j += 1
                k = j
                while k < n and src[k].isdigit():
                    k += 1
                den = int(src[j:k])
                if den == 0:
                    raise ParseError("zero denominator in literal", line, start_col)
                tokens.append(_Token("NUMBER", src[i:k], line, start_col, Fraction(num, den)))
                col += k - i
                i = k
            else:
                tokens.append(_Token("NUMBER", src[i:j], line, start_col, Fraction(num)))
                col += j - i
                i = j
            continue
        if ch.isalpha() or ch == "_":
            if ch == "X" and i + 1 < n and src[i + 1] in "+-":
                tokens.append(_Token("IDENT", src[i:i + 2], line, start_col))
                i += 2
                col += 2
                continue
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in "+-*^()":
            tokens.append(_Token("OP", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(_Token("END", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text: str) -> None:
        tok = self.take()
        if tok.kind != "OP" or tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'}",
                             tok.line, tok.column)

    def parse_expr(self) -> Node:
        terms = [(1, self.parse_term())]
        while self.peek().kind == "OP" and self.peek().text in "+-":
            sign = 1 if self.take().text == "+" else -1
            terms.append((sign, self.parse_term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def parse_term(self) -> Node:
        factors = [self.parse_factor()]
        while self.peek().kind == "OP" and self.peek().text == "*":
            self.take()
            factors.append(self.parse_factor())
        if len(factors) == 1:
            return factors[0]
        return Mul(tuple(factors))

    def parse_factor(self) -> Node:
        negate = False
        if self.peek().kind == "OP" and self.peek().text == "-":
            self.take()
            negate = True
        node = self.parse_atom()
        if self.peek().kind == "OP" and self.peek().text == "^":
            self.take()
            sign = 1
            if self.peek().kind == "OP" and self.peek().text == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok.kind != "NUMBER" or tok.value.denominator != 1:
                raise ParseError("exponent must be an integer", tok.line, tok.column)
            node = Pow(node, sign * int(tok.value))
        return Neg(node) if negate else node

    def parse_atom(self) -> Node:
        tok = self.take()
        if tok.kind == "NUMBER":
            return Num(tok.value)
        if tok.kind == "IDENT":
            return Name(tok.text)
        if tok.kind == "OP" and tok.text == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"expected a value, found {tok.text or 'end of input'}",
                         tok.line, tok.column)


def parse_expr(src: str) -> Node:
    parser = _Parser(_tokenize(src))
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "END":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.line, tok.column)
    return node


# ---------------------------------------------------------------------------
# AST printing (round-trips through parse_expr)


def format_ast(node: Node) -> str:
    return _format_node(node, parent="expr")


def _format_node(node: Node, parent: str) -> str:
    if isinstance(node, Num):
        text = str(node.value) if node.value.denominator != 1 else str(node.value.numerator)
        if "/" in text and parent == "pow":
            return f"({text})"
        return text
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, Sum):
        parts = []
        for i, (sign, term) in enumerate(node.terms):
            while isinstance(term, Neg):
                sign, term = -sign, term.operand
            body = _format_node(term, "sum")
            if i == 0:
                parts.append(body if sign > 0 else f"-{body}")
            else:
                parts.append((" + " if sign > 0 else " - ") + body)
        text = "".join(parts)
        return f"({text})" if parent in ("mul", "pow", "neg", "sum") else text
    if isinstance(node, Mul):
        text = "*".join(_format_node(f, "mul") for f in node.factors)
        return f"({text})" if parent in ("pow", "mul", "neg") else text
    if isinstance(node, Neg):
        body = _format_node(node.operand, "neg")
        text = f"-{body}"
        return f"({text})" if parent in ("mul", "pow", "sum", "neg") else text
    if isinstance(node, Pow):
        base = _format_node(node.base, "pow")
        text = f"{base}^{node.exponent}"
        return f"({text})" if parent == "pow" else text
    raise TypeError(f"not an AST node: {node!r}")


# ---------------------------------------------------------------------------
# evaluation


class EvalContext:
    """Resolves identifiers against a scalar field, an optional base
    family, and optionally the ambiskew variables X+ and X-."""

    def __init__(self, field: Field, base: BaseAlgebra | None = None,
                 algebra: AmbiskewAlgebra | None = None):
        self.field = field
        self.base = base
        self.algebra = algebra

    def scalar_generator(self, ident: str, power: int = 1) -> Scalar | None:
        if ident == "q" and isinstance(self.field, RationalFunctionField):
            return self.field.q(power)
        if ident == "zeta" and isinstance(self.field, CyclotomicField):
            return self.field.zeta(power)
        return None

    def lookup(self, ident: str, power: int = 1):
        scalar = self.scalar_generator(ident, power)
        if scalar is not None:
            return scalar
        if ident in ("X+", "X-"):
            if self.algebra is None:
                raise ParseError(f"{ident} is not available in a base-only expression")
            if power < 0:
                raise NotInvertibleError(f"{ident} is not invertible")
            return self.algebra.xplus(power) if ident == "X+" else self.algebra.xminus(power)
        if self.base is not None:
            names = {info.name for info in self.base.generator_info()}
            if ident in names:
                elem = self.base.generator(ident, power)
                return self.algebra.embed(elem) if self.algebra is not None else elem
        raise ParseError(f"unknown generator {ident!r}")


def _to_element(value, ctx: EvalContext):
    if isinstance(value, Scalar):
        if ctx.algebra is not None:
            return ctx.algebra.one().scale(value)
        if ctx.base is not None:
            return ctx.base.from_scalar(value)
    return value


def _eval(node: Node, ctx: EvalContext):
    if isinstance(node, Num):
        return ctx.field.from_fraction(node.value)
    if isinstance(node, Name):
        return ctx.lookup(node.ident)
    if isinstance(node, Neg):
        value = _eval(node.operand, ctx)
        return -value if isinstance(value, Scalar) else value.scale(ctx.field.from_int(-1))
    if isinstance(node, Pow):
        if isinstance(node.base, Name):
            return ctx.lookup(node.base.ident, node.exponent)
        value = _eval(node.base, ctx)
        if isinstance(value, Scalar):
            return value**node.exponent
        if node.exponent >= 0:
            return value**node.exponent
        return _invert_value(value) ** (-node.exponent)
    if isinstance(node, Mul):
        acc = _eval(node.factors[0], ctx)
        for factor in node.factors[1:]:
            acc = _combine(acc, _eval(factor, ctx), ctx, "*")
        return acc
    if isinstance(node, Sum):
        acc = None
        for sign, term in node.terms:
            value = _eval(term, ctx)
            if sign < 0:
                value = -value if isinstance(value, Scalar) else value.scale(ctx.field.from_int(-1))
            acc = value if acc is None else _combine(acc, value, ctx, "+")
        return acc
    raise TypeError(f"not an AST node: {node!r}")


def _combine(a, b, ctx: EvalContext, op: str):
    if isinstance(a, Scalar) and isinstance(b, Scalar):
        return a + b if op == "+" else a * b
    a2, b2 = a, b
    if isinstance(a, Scalar):
        if op == "*":
            return b.scale(a)
        a2 = _to_element(a, ctx)
    if isinstance(b, Scalar):
        if op == "*":
            return a.scale(b)
        b2 = _to_element(b, ctx)
    return a2 + b2 if op == "+" else a2 * b2


def _invert_value(value):
    if isinstance(value, BaseElement):
        return invert_element(value)
    if isinstance(value, AmbiElement):
        if not value.is_base():
            raise NotInvertibleError("element with X factors is not invertible")
        return value.algebra.embed(invert_element(value.base_part()))
    raise NotInvertibleError(f"cannot invert {value!r}")


def eval_expr(node: Node, ctx: EvalContext) -> AmbiElement:
    """Evaluate to a normal-formed element of the extension."""
    if ctx.algebra is None:
        raise ValueError("eval_expr needs an ambiskew algebra in context")
    value = _eval(node, ctx)
    result = _to_element(value, ctx)
    if isinstance(result, BaseElement):
        result = ctx.algebra.embed(result)
    return result


def eval_base_expr(node: Node, field: Field, base: BaseAlgebra) -> BaseElement:
    """Evaluate to an element of the base family (X+- not in scope)."""
    ctx = EvalContext(field, base, None)
    value = _eval(node, ctx)
    result = _to_element(value, ctx)
    if not isinstance(result, BaseElement):
        raise ParseError("expression did not evaluate to a base element")
    return result


def eval_scalar_expr(node: Node, field: Field) -> Scalar:
    ctx = EvalContext(field, None, None)
    value = _eval(node, ctx)
    if not isinstance(value, Scalar):
        raise ParseError("expression did not evaluate to a scalar")
    return value


# ---------------------------------------------------------------------------
# canonical printing of scalars and elements


def _poly_text(coeffs, symbol: str) -> tuple[str, bool]:
    """Ascending-power rendering of a Fraction/int polynomial; the flag
    says whether the result is a multi-term sum."""
    parts = []
    for i, c in enumerate(coeffs):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = _fraction_text(mag)
        else:
            sym = symbol if i == 1 else f"{symbol}^{i}"
            body = sym if mag == 1 else f"{_fraction_text(mag)}*{sym}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    if not parts:
        return "0", False
    return "".join(parts), len([c for c in coeffs if c != 0]) > 1


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def format_scalar(x: Scalar) -> tuple[str, bool]:
    """(text, atomic): atomic means usable as a factor without parens."""
    kind = x.field.kind
    if kind == "rational":
        return _fraction_text(x.data), True
    if kind == "cyclotomic":
        text, multi = _poly_text(x.data, "zeta")
        return text, not multi
    num, den = x.data
    if den == (1,):
        text, multi = _poly_text(num, "q")
        return text, not multi
    if len(den) == 1:
        # constant denominator: fold it into fractional coefficients
        text, multi = _poly_text([Fraction(c, den[0]) for c in num], "q")
        return text, not multi
    num_text, num_multi = _poly_text(num, "q")
    if num_multi:
        num_text = f"({num_text})"
    if len([c for c in den if c]) == 1 and den[-1] == 1:
        power = f"q^-{len(den) - 1}"
        if num_text == "1":
            return power, True
        if num_text == "-1":
            return f"-{power}", False
        return f"{num_text}*{power}", False
    den_text, _ = _poly_text(den, "q")
    return f"{num_text}*({den_text})^-1", False


def format_scalar_factor(x: Scalar) -> str:
    """The scalar as a standalone factor, parenthesized when needed."""
    text, atomic = format_scalar(x)
    return text if atomic else f"({text})"


def _term_text(coeff: Scalar, factors: list[tuple[str, int]]) -> tuple[int, str]:
    """(sign, body) for one monomial term."""
    sign = 1
    field = coeff.field
    if coeff == field.from_int(-1) and factors:
        sign, coeff = -1, field.one()
    else:
        text, _ = format_scalar(coeff)
        if text.startswith("-"):
            negated = -coeff
            # only strip the sign when the negation prints without one
            neg_text, _ = format_scalar(negated)
            if not neg_text.startswith("-"):
                sign, coeff = -1, negated
    parts = []
    if not coeff.is_one() or not factors:
        parts.append(format_scalar_factor(coeff))
    for name, exp in factors:
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return sign, "*".join(parts)


def _join_terms(signed_terms: list[tuple[int, str]]) -> str:
    if not signed_terms:
        return "0"
    out = []
    for i, (sign, body) in enumerate(signed_terms):
        if i == 0:
            out.append(body if sign > 0 else f"-{body}")
        else:
            out.append((" + " if sign > 0 else " - ") + body)
    return "".join(out)


def format_base_element(elem: BaseElement) -> str:
    terms = []
    for coeff, factors in elem.algebra.display_terms(elem):
        terms.append(_term_text(coeff, factors))
    return _join_terms(terms)


def format_element(elem) -> str:
    """Canonical text of a base or extension element: base monomials by
    graded-lex, then X+ power, then X- power."""
    if isinstance(elem, BaseElement):
        return format_base_element(elem)
    if isinstance(elem, Scalar):
        return format_scalar(elem)[0]
    base = elem.algebra.base
    groups: dict = {}
    for (mono, m, n), c in elem.terms():
        groups.setdefault((mono, m, n), c)
    terms = []
    for (mono, m, n), c in groups.items():
        piece = BaseElement(base, {mono: c})
        displayed = base.display_terms(piece)
        for coeff, factors in displayed:
            full = list(factors)
            if m:
                full.append(("X+", m))
            if n:
                full.append(("X-", n))
            terms.append(_term_text(coeff, full))
    return _join_terms(terms)


def format_tensor(tensor) -> str:
    """Legs joined by (x), each leg printed as an element."""
    alg = tensor.algebra
    parts = []
    for key in sorted(tensor.coeffs, key=lambda k: tuple(
            (alg.base.monomial_sort_key(mono), m, n) for (mono, m, n) in k)):
        c = tensor.coeffs[key]
        legs = []
        for idx, (mono, m, n) in enumerate(key):
            coeff = c if idx == 0 else alg.field.one()
            piece = AmbiElement(alg, {(m, n): BaseElement(alg.base, {mono: coeff})})
            legs.append(format_element(piece))
        parts.append(" (x) ".join(legs))
    return "  +  ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# spec documents


@dataclass
class SpecBlock:
    name: str
    entries: dict = dataclass_field(default_factory=dict)   # key -> str value
    blocks: dict = dataclass_field(default_factory=dict)    # name -> SpecBlock
    order: list = dataclass_field(default_factory=list)     # keys in file order


@dataclass
class SpecDocument:
    field_kind: str
    field_order: int | None
    base_family: str
    base_params: dict
    extension: SpecBlock
    options: dict
    expect: SpecBlock | None


def _parse_blocks(src: str) -> SpecBlock:
    root = SpecBlock("document")
    stack = [root]
    for lineno, raw in enumerate(src.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "}":
            if len(stack) == 1:
                raise ParseError("unmatched closing brace", lineno)
            stack.pop()
            continue
        if line.endswith("{"):
            name = line[:-1].strip()
            if not name.isidentifier() and name not in ("general_form",):
                raise ParseError(f"bad block name {name!r}", lineno)
            block = SpecBlock(name)
            parent = stack[-1]
            if name in parent.blocks:
                raise ParseError(f"duplicate block {name!r}", lineno)
            parent.blocks[name] = block
            parent.order.append(name)
            stack.append(block)
            continue
        if ":" not in line:
            raise ParseError(f"expected 'key: value', found {line!r}", lineno)
        key, value = line.split(":", 1)
        key, value = key.strip(), value.strip()
        parent = stack[-1]
        if key in parent.entries:
            raise ParseError(f"duplicate key {key!r} in {parent.name}", lineno)
        parent.entries[key] = value
        parent.order.append(key)
    if len(stack) != 1:
        raise ParseError(f"unclosed block {stack[-1].name!r}")
    return root


_FIELD_KINDS = {"rational", "cyclotomic", "rational-function"}


def parse_spec(src: str) -> SpecDocument:
    """Parse and schema-check a spec document (strict keys)."""
    root = _parse_blocks(src)
    for name in root.entries:
        raise SpecError(f"document: unexpected top-level key {name!r}")
    unknown = set(root.blocks) - {"field", "base", "extension", "options", "expect"}
    if unknown:
        raise SpecError(f"document: unknown block {sorted(unknown)[0]!r}")
    for required in ("field", "base", "extension"):
        if required not in root.blocks:
            raise SpecError(f"document: block {required!r} required")

    fblock = root.blocks["field"]
    if fblock.blocks:
        raise SpecError("field: nested blocks not allowed")
    kind = fblock.entries.get("kind")
    if kind is None:
        raise SpecError("field.kind required")
    if kind not in _FIELD_KINDS:
        raise SpecError(f"field.kind: unknown value {kind!r}")
    order = None
    extras = set(fblock.entries) - {"kind", "order"}
    if extras:
        raise SpecError(f"field: unknown key {sorted(extras)[0]!r}")
    if kind == "cyclotomic":
        if "order" not in fblock.entries:
            raise SpecError("field.order required for cyclotomic fields")
        order = _int_value("field.order", fblock.entries["order"])
    elif "order" in fblock.entries:
        raise SpecError("field.order only applies to cyclotomic fields")

    bblock = root.blocks["base"]
    if bblock.blocks:
        raise SpecError("base: nested blocks not allowed")
    family = bblock.entries.get("family")
    if family is None:
        raise SpecError("base.family required")
    params: dict = {}
    allowed = {"polynomial": set(), "laurent": set(), "group": {"rank", "torsion"},
               "uqsl2": {"q"}}
    if family not in allowed:
        raise SpecError(f"base.family: unknown value {family!r}")
    extras = set(bblock.entries) - {"family"} - allowed[family]
    if extras:
        raise SpecError(f"base: unknown key {sorted(extras)[0]!r}")
    if family == "group":
        params["rank"] = _int_value("base.rank", bblock.entries.get("rank", "0"))
        torsion = bblock.entries.get("torsion", "").strip()
        params["torsion"] = tuple(
            _int_value("base.torsion", part) for part in torsion.split(",") if part.strip()
        )
    if family == "uqsl2":
        if "q" not in bblock.entries:
            raise SpecError("base.q required for the uqsl2 family")
        params["q"] = bblock.entries["q"]

    ext = root.blocks["extension"]
    if "general_form" in ext.blocks:
        gf = ext.blocks["general_form"]
        if set(ext.entries) or set(ext.blocks) - {"general_form"}:
            raise SpecError("extension: hat-form keys not allowed with general_form")
        needed = {"xi", "h", "l_plus", "l_minus", "r_plus", "r_minus"}
        missing = needed - set(gf.entries)
        if missing:
            raise SpecError(f"extension.general_form.{sorted(missing)[0]} required")
        extras = set(gf.entries) - needed
        if extras:
            raise SpecError(f"extension.general_form: unknown key {sorted(extras)[0]!r}")
        for sub in ("sigma", "sigma_inverse"):
            if sub not in gf.blocks:
                raise SpecError(f"extension.general_form.{sub} block required")
        extras = set(gf.blocks) - {"sigma", "sigma_inverse"}
        if extras:
            raise SpecError(f"extension.general_form: unknown block {sorted(extras)[0]!r}")
    else:
        for required in ("y_plus", "y_minus", "h"):
            if required not in ext.entries:
                raise SpecError(f"extension.{required} required")
        if "chi" not in ext.blocks:
            raise SpecError("extension.chi block required")
        extras = set(ext.entries) - {"y_plus", "y_minus", "h"}
        if extras:
            raise SpecError(f"extension: unknown key {sorted(extras)[0]!r}")
        extras = set(ext.blocks) - {"chi"}
        if extras:
            raise SpecError(f"extension: unknown block {sorted(extras)[0]!r}")

    options: dict = {}
    if "options" in root.blocks:
        oblock = root.blocks["options"]
        extras = set(oblock.entries) - {"nmax"}
        if extras or oblock.blocks:
            raise SpecError("options: only 'nmax' is supported")
        if "nmax" in oblock.entries:
            options["nmax"] = _int_value("options.nmax", oblock.entries["nmax"])

    expect = root.blocks.get("expect")
    if expect is not None:
        allowed_keys = {"check", "witness", "classification", "gk_dim", "gl_dim",
                        "pi", "note"}
        extras = set(expect.entries) - allowed_keys
        if extras:
            raise SpecError(f"expect: unknown key {sorted(extras)[0]!r}")
        extras = set(expect.blocks) - {"identities", "corad"}
        if extras:
            raise SpecError(f"expect: unknown block {sorted(extras)[0]!r}")

    return SpecDocument(kind, order, family, params, ext, options, expect)


def _int_value(path: str, text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise SpecError(f"{path}: expected an integer, found {text!r}")


@dataclass
class ResolvedSpec:
    field: Field
    base: BaseAlgebra
    data: ExtensionData | None
    general: GeneralPresentation | None
    options: dict
    expect: SpecBlock | None


def make_field(kind: str, order: int | None = None) -> Field:
    if kind == "rational":
        return RationalField()
    if kind == "cyclotomic":
        if order is None:
            raise SpecError("cyclotomic field needs an order")
        return CyclotomicField(order)
    if kind == "rational-function":
        return RationalFunctionField()
    raise SpecError(f"unknown field kind {kind!r}")


def resolve_spec(doc: SpecDocument, field_override: Field | None = None) -> ResolvedSpec:
    """Instantiate the field, base family, and extension data of a parsed
    document; all scalar literals and generator names are resolved here."""
    field = field_override or make_field(doc.field_kind, doc.field_order)
    params = dict(doc.base_params)
    if doc.base_family == "uqsl2":
        params["q"] = eval_scalar_expr(parse_expr(params["q"]), field)
    base = make_base(doc.base_family, field, **params)

    ext = doc.extension
    if "general_form" in ext.blocks:
        gf = ext.blocks["general_form"]
        images = {
            name: eval_base_expr(parse_expr(text), field, base)
            for name, text in gf.blocks["sigma"].entries.items()
        }
        inverse_images = {
            name: eval_base_expr(parse_expr(text), field, base)
            for name, text in gf.blocks["sigma_inverse"].entries.items()
        }
        sigma = BaseAutomorphism(base, images, inverse_images)
        xi = eval_scalar_expr(parse_expr(gf.entries["xi"]), field)
        h = eval_base_expr(parse_expr(gf.entries["h"]), field, base)
        algebra = AmbiskewAlgebra(base, sigma, h, xi)
        general = GeneralPresentation(
            algebra,
            eval_base_expr(parse_expr(gf.entries["l_plus"]), field, base),
            eval_base_expr(parse_expr(gf.entries["l_minus"]), field, base),
            eval_base_expr(parse_expr(gf.entries["r_plus"]), field, base),
            eval_base_expr(parse_expr(gf.entries["r_minus"]), field, base),
        )
        return ResolvedSpec(field, base, None, general, doc.options, doc.expect)

    chi_values = {
        name: eval_scalar_expr(parse_expr(text), field)
        for name, text in ext.blocks["chi"].entries.items()
    }
    chi = Character(base, chi_values)
    data = ExtensionData(
        base,
        chi,
        eval_base_expr(parse_expr(ext.entries["y_plus"]), field, base),
        eval_base_expr(parse_expr(ext.entries["y_minus"]), field, base),
        eval_base_expr(parse_expr(ext.entries["h"]), field, base),
    )
    return ResolvedSpec(field, base, data, None, doc.options, doc.expect)
