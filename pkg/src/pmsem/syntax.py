"""Formulas in dot notation: AST, parser, printer, substitution.

Surface language (ASCII):

    propositional variable   p, q, r, p1, q2, ...        [p-r][0-9]*
    individual variable      x, y, z, x1, ...            [x-z][0-9]*
    predicate name           S, T, R1, Pred, ...         [A-Z][A-Za-z0-9]*
    atom                     p | S(x)       (predicates are monadic)
    negation                 ~f
    disjunction              f v g
    implication              f => g         (sugar for ~f v g)
    equivalence              f <=> g        (sugar for (f => g) . (g => f))
    conjunction              f . g          (sugar for ~(~f v ~g))
    universal                (x). f
    existential              (Ex). f
    grouping                 ( f )  or dots, see below

Dot convention.  Dots play three roles, disambiguated by position:

  1. A dot group flanking a binary connective widens its scope:
     the connective's binding force is (n, 1) where n is the larger
     of the dot counts on its two sides.  An undotted connective has
     force (0, 1).
  2. A dot group standing between two formulas (not touching any
     connective) is conjunction, with force (n, 0) for n dots.
  3. A dot group after a quantifier prefix extends the quantifier's
     scope maximally: the scope runs until the end of the enclosing
     group, stopping early only at a flanked connective with dot
     count >= n or at a conjunction dot group with more than n dots.
     A conjunction dot group with at most n dots is swallowed by the
     scope.  A quantifier written without a dot takes only the next
     operand.

Forces compare lexicographically: more dots always bind more loosely,
and at equal dot count a flanked connective is looser than conjunction
dots.  When several connectives in one group share the maximal force,
the looser kind splits first (<=> before => before v before .), and
ties of the same kind associate to the right for => and <=> and to the
left for v and conjunction.

So "p v q .=>. q v p" is (p v q) => (q v p), "p . q v r" is
p . (q v r), and "(x). S(x) v p" quantifies over the whole
disjunction while "((x).S(x) .v. p)" does not.  Likewise
"(Ex). S(x) . p" quantifies over the conjunction, but the flanked
connective in "(Ex). S(x) .=>. p" closes the scope, giving
((Ex).S(x)) => p.

The printer emits a canonical reading of every formula: binary
connectives fully parenthesized, quantifiers with a single dot, and
quantified operands wrapped in parentheses wherever the maximal-scope
rule could swallow a neighbour.  parse(print_formula(f)) == f for every
formula f.

Parsed formulas are desugared: only PropVar, PredApp, Or, Not, ForAll
and Exists nodes exist.  =>, <=> and conjunction build their expansions
at parse time.
"""
from __future__ import annotations

from dataclasses import dataclass


class FormulaSyntaxError(ValueError):
    """Raised on malformed input; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CaptureError(ValueError):
    """Raised when a substitution would capture a variable."""


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class PropVar(Formula):
    name: str


@dataclass(frozen=True)
class PredApp(Formula):
    predicate: str
    argument: str


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class ForAll(Formula):
    variable: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    variable: str
    body: Formula


def implies(antecedent: Formula, consequent: Formula) -> Formula:
    return Or(Not(antecedent), consequent)


def conjoin(left: Formula, right: Formula) -> Formula:
    return Not(Or(Not(left), Not(right)))


def equivalent(left: Formula, right: Formula) -> Formula:
    return conjoin(implies(left, right), implies(right, left))


# ---------------------------------------------------------------------------
# lexer

_PROP_START = "pqr"
_IND_START = "xyz"


def _is_ind_var(s: str) -> bool:
    return bool(s) and s[0] in _IND_START and (len(s) == 1 or s[1:].isdigit())


@dataclass(frozen=True)
class _Token:
    kind: str  # PROPVAR INDVAR PREDNAME OR IMPLIES IFF NOT DOTS LPAREN RPAREN COMMA END
    value: str
    count: int
    pos: int


def _lex(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == ".":
            j = i
            while j < n and text[j] == ".":
                j += 1
            tokens.append(_Token("DOTS", text[i:j], j - i, i))
            i = j
            continue
        if ch == "~":
            tokens.append(_Token("NOT", "~", 0, i))
            i += 1
            continue
        if ch == "(":
            tokens.append(_Token("LPAREN", "(", 0, i))
            i += 1
            continue
        if ch == ")":
            tokens.append(_Token("RPAREN", ")", 0, i))
            i += 1
            continue
        if ch == ",":
            tokens.append(_Token("COMMA", ",", 0, i))
            i += 1
            continue
        if text.startswith("<=>", i):
            tokens.append(_Token("IFF", "<=>", 0, i))
            i += 3
            continue
        if text.startswith("=>", i):
            tokens.append(_Token("IMPLIES", "=>", 0, i))
            i += 2
            continue
        if ch == "v" and not (i + 1 < n and text[i + 1].isalnum()):
            tokens.append(_Token("OR", "v", 0, i))
            i += 1
            continue
        if ch in _PROP_START:
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("PROPVAR", text[i:j], 0, i))
            i = j
            continue
        if ch in _IND_START:
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INDVAR", text[i:j], 0, i))
            i = j
            continue
        if ch.isupper():
            j = i + 1
            while j < n and text[j].isalnum():
                j += 1
            tokens.append(_Token("PREDNAME", text[i:j], 0, i))
            i = j
            continue
        raise FormulaSyntaxError(f"unknown symbol {ch!r}", i)
    tokens.append(_Token("END", "", 0, n))
    return tokens


# ---------------------------------------------------------------------------
# parser

# force of an operator: (dot count, category); category 1 for flanked
# connectives, 0 for conjunction dots.  Compared lexicographically.
_LOOSENESS = {"IFF": 3, "IMPLIES": 2, "OR": 1, "CONJ": 0}
_RIGHT_ASSOC = {"IFF", "IMPLIES"}

_OPERAND_START = {"NOT", "LPAREN", "PROPVAR", "PREDNAME"}


@dataclass
class _Op:
    kind: str
    force: tuple[int, int]
    pos: int


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self, offset: int = 0) -> _Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        if tok.kind != "END":
            self.i += 1
        return tok

    # An expression is a soup of operands and operators, resolved by force.
    # `cutoff` is set while a dotted quantifier is collecting its scope: the
    # soup stops (without consuming) at any operator of force >= cutoff.
    def parse_expr(self, cutoff: tuple[int, int] | None) -> Formula:
        items: list[object] = [self.parse_operand()]
        while True:
            op = self.peek_operator()
            if op is None:
                break
            if cutoff is not None and op.force >= cutoff:
                break
            self.consume_operator(op)
            items.append(op)
            items.append(self.parse_operand())
        return _resolve(items)

    def peek_operator(self) -> _Op | None:
        tok = self.peek()
        if tok.kind in ("END", "RPAREN"):
            return None
        if tok.kind in ("OR", "IMPLIES", "IFF"):
            right = self.peek(1)
            rdots = right.count if right.kind == "DOTS" else 0
            return _Op(tok.kind, (rdots, 1), tok.pos)
        if tok.kind == "DOTS":
            nxt = self.peek(1)
            if nxt.kind in ("OR", "IMPLIES", "IFF"):
                after = self.peek(2)
                rdots = after.count if after.kind == "DOTS" else 0
                return _Op(nxt.kind, (max(tok.count, rdots), 1), tok.pos)
            if nxt.kind in _OPERAND_START:
                return _Op("CONJ", (tok.count, 0), tok.pos)
            raise FormulaSyntaxError("dangling dots", tok.pos)
        if tok.kind == "COMMA":
            raise FormulaSyntaxError("non-monadic predicate application", tok.pos)
        raise FormulaSyntaxError(f"unexpected {tok.value!r}", tok.pos)

    def consume_operator(self, op: _Op) -> None:
        tok = self.take()
        if tok.kind == "DOTS":
            if op.kind == "CONJ":
                return
            self.take()  # the connective
            if self.peek().kind == "DOTS":
                self.take()
            return
        if self.peek().kind == "DOTS":
            self.take()

    def parse_operand(self) -> Formula:
        tok = self.peek()
        if tok.kind == "NOT":
            self.take()
            inner = self.peek()
            if inner.kind == "LPAREN" and self._quantifier_lookahead() is not None:
                raise FormulaSyntaxError(
                    "quantifier directly under ~ must be parenthesized", inner.pos
                )
            return Not(self.parse_operand())
        if tok.kind == "PROPVAR":
            self.take()
            return PropVar(tok.value)
        if tok.kind == "PREDNAME":
            return self.parse_predapp()
        if tok.kind == "LPAREN":
            quant = self._quantifier_lookahead()
            if quant is not None:
                return self.parse_quantified(quant)
            self.take()
            inner = self.parse_expr(cutoff=None)
            close = self.take()
            if close.kind != "RPAREN":
                raise FormulaSyntaxError("unbalanced parentheses", close.pos)
            return inner
        if tok.kind == "DOTS":
            raise FormulaSyntaxError("dangling dots", tok.pos)
        raise FormulaSyntaxError(f"expected a formula, found {tok.value!r}", tok.pos)

    def _quantifier_lookahead(self) -> tuple[str, str] | None:
        """At a LPAREN, detect '(x)' or '(Ex)' prefixes without consuming."""
        first = self.peek(1)
        second = self.peek(2)
        if first.kind == "INDVAR" and second.kind == "RPAREN":
            return ("forall", first.value)
        if (
            first.kind == "PREDNAME"
            and first.value[0] == "E"
            and _is_ind_var(first.value[1:])
            and second.kind == "RPAREN"
        ):
            return ("exists", first.value[1:])
        return None

    def parse_quantified(self, quant: tuple[str, str]) -> Formula:
        kind, var = quant
        self.take()  # (
        self.take()  # variable or E-variable
        self.take()  # )
        dots = 0
        if self.peek().kind == "DOTS":
            dots = self.take().count
        if dots == 0:
            body = self.parse_operand()
        else:
            body = self.parse_expr(cutoff=(dots, 1))
        return ForAll(var, body) if kind == "forall" else Exists(var, body)

    def parse_predapp(self) -> Formula:
        name = self.take()
        lp = self.take()
        if lp.kind != "LPAREN":
            raise FormulaSyntaxError(f"predicate {name.value} needs an argument", lp.pos)
        arg = self.take()
        if arg.kind != "INDVAR":
            raise FormulaSyntaxError(
                f"predicate argument must be an individual variable, found {arg.value!r}",
                arg.pos,
            )
        close = self.take()
        if close.kind == "COMMA":
            raise FormulaSyntaxError("non-monadic predicate application", close.pos)
        if close.kind != "RPAREN":
            raise FormulaSyntaxError("unbalanced parentheses", close.pos)
        return PredApp(name.value, arg.value)


def _resolve(items: list[object]) -> Formula:
    """Resolve an operand/operator soup into a tree, loosest split first."""
    if len(items) == 1:
        return items[0]  # type: ignore[return-value]
    best = None
    best_index = -1
    for idx in range(1, len(items), 2):
        op: _Op = items[idx]  # type: ignore[assignment]
        key = (op.force, _LOOSENESS[op.kind])
        if best is None or key > best:
            best, best_index = key, idx
        elif key == best and op.kind not in _RIGHT_ASSOC:
            best_index = idx  # left-assoc: split at the last occurrence
    op = items[best_index]  # type: ignore[assignment]
    left = _resolve(items[:best_index])
    right = _resolve(items[best_index + 1 :])
    if op.kind == "OR":
        return Or(left, right)
    if op.kind == "IMPLIES":
        return implies(left, right)
    if op.kind == "IFF":
        return equivalent(left, right)
    return conjoin(left, right)


def parse(text: str) -> Formula:
    parser = _Parser(_lex(text))
    formula = parser.parse_expr(cutoff=None)
    trailing = parser.take()
    if trailing.kind != "END":
        raise FormulaSyntaxError(f"unexpected trailing {trailing.value!r}", trailing.pos)
    return formula


# ---------------------------------------------------------------------------
# printer

def print_formula(f: Formula) -> str:
    """Canonical ASCII rendering; parse(print_formula(f)) == f."""
    if isinstance(f, PropVar):
        return f.name
    if isinstance(f, PredApp):
        return f"{f.predicate}({f.argument})"
    if isinstance(f, Not):
        return "~" + _operand_text(f.operand)
    if isinstance(f, Or):
        return f"({_operand_text(f.left)} v {_operand_text(f.right)})"
    if isinstance(f, ForAll):
        return f"({f.variable}).{print_formula(f.body)}"
    if isinstance(f, Exists):
        return f"(E{f.variable}).{print_formula(f.body)}"
    raise TypeError(f"not a formula: {f!r}")


def _operand_text(f: Formula) -> str:
    # Quantified operands are parenthesized so the maximal-scope rule
    # cannot swallow what follows them.
    if isinstance(f, (ForAll, Exists)):
        return f"({print_formula(f)})"
    return print_formula(f)


# ---------------------------------------------------------------------------
# variables, substitution, variants

def free_variables(f: Formula) -> frozenset[str]:
    """Free individual variables of f."""
    if isinstance(f, PropVar):
        return frozenset()
    if isinstance(f, PredApp):
        return frozenset({f.argument})
    if isinstance(f, Not):
        return free_variables(f.operand)
    if isinstance(f, Or):
        return free_variables(f.left) | free_variables(f.right)
    if isinstance(f, (ForAll, Exists)):
        return free_variables(f.body) - {f.variable}
    raise TypeError(f"not a formula: {f!r}")


def prop_variables(f: Formula) -> frozenset[str]:
    if isinstance(f, PropVar):
        return frozenset({f.name})
    if isinstance(f, PredApp):
        return frozenset()
    if isinstance(f, Not):
        return prop_variables(f.operand)
    if isinstance(f, Or):
        return prop_variables(f.left) | prop_variables(f.right)
    if isinstance(f, (ForAll, Exists)):
        return prop_variables(f.body)
    raise TypeError(f"not a formula: {f!r}")


def predicates(f: Formula) -> frozenset[str]:
    if isinstance(f, PropVar):
        return frozenset()
    if isinstance(f, PredApp):
        return frozenset({f.predicate})
    if isinstance(f, Not):
        return predicates(f.operand)
    if isinstance(f, Or):
        return predicates(f.left) | predicates(f.right)
    if isinstance(f, (ForAll, Exists)):
        return predicates(f.body)
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, var: str, replacement: str) -> Formula:
    """Replace free occurrences of individual variable var by replacement.

    Raises CaptureError if a free occurrence sits under a quantifier
    binding the replacement variable.
    """
    if isinstance(f, (PropVar,)):
        return f
    if isinstance(f, PredApp):
        return PredApp(f.predicate, replacement) if f.argument == var else f
    if isinstance(f, Not):
        return Not(substitute(f.operand, var, replacement))
    if isinstance(f, Or):
        return Or(substitute(f.left, var, replacement), substitute(f.right, var, replacement))
    if isinstance(f, (ForAll, Exists)):
        if f.variable == var:
            return f
        if f.variable == replacement and var in free_variables(f.body):
            raise CaptureError(
                f"substituting {replacement} for {var} is captured by ({f.variable})"
            )
        body = substitute(f.body, var, replacement)
        return type(f)(f.variable, body)
    raise TypeError(f"not a formula: {f!r}")


@dataclass(frozen=True)
class VariantSet:
    """The variants of f obtained by renaming free variable `variable`."""

    base: Formula
    variable: str
    members: tuple[tuple[str, Formula], ...]


def variants(f: Formula, var: str, pool: tuple[str, ...] | list[str]) -> VariantSet:
    if not pool:
        raise ValueError("variant pool is empty")
    if var not in free_variables(f):
        raise ValueError(f"{var} is not free in the formula")
    members = tuple((z, substitute(f, var, z)) for z in pool)
    return VariantSet(base=f, variable=var, members=members)
