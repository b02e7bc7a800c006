"""Boolean expressions and their translation to Fredkin-gate circuits.

Expression ASTs have five node kinds: ``Var``, ``Const``, ``Not``, ``And``,
``Or``.  ``compile_expr`` lowers an AST to a circuit using the standard
controlled-swap constructions:

* NOT/COPY: ``F(x, 1, 0) -> (x, NOT x, x)`` -- one gate yields both the
  negation and a fan-out copy on fresh ancillae.
* AND:      ``F(x, y, 0) -> (x, _, x AND y)`` -- conjunction lands on the
  fresh zero ancilla; the ``y`` operand wire is consumed.
* OR:       rewritten as ``NOT(NOT a AND NOT b)``.

Operand wires that must survive (circuit inputs) are fanned out before
being consumed as swap data, so expressions may reuse variables freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .circuit import Circuit, CircuitError, FredkinGate, Wire


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    bit: int


@dataclass(frozen=True)
class Not:
    e: "BooleanExpr"


@dataclass(frozen=True)
class And:
    a: "BooleanExpr"
    b: "BooleanExpr"


@dataclass(frozen=True)
class Or:
    a: "BooleanExpr"
    b: "BooleanExpr"


BooleanExpr = Var | Const | Not | And | Or


class UnboundVariableError(CircuitError):
    """An expression uses a variable the input list does not bind."""


def eval_expr(expr: BooleanExpr, env: dict[str, int]) -> int:
    """Direct AST truth value; the independent oracle for compiled circuits."""
    match expr:
        case Var(name):
            return env[name] & 1
        case Const(bit):
            return bit & 1
        case Not(e):
            return 1 - eval_expr(e, env)
        case And(a, b):
            return eval_expr(a, env) & eval_expr(b, env)
        case Or(a, b):
            return eval_expr(a, env) | eval_expr(b, env)
    raise CircuitError(f"not a boolean expression node: {expr!r}")


def expr_vars(expr: BooleanExpr) -> set[str]:
    match expr:
        case Var(name):
            return {name}
        case Const(_):
            return set()
        case Not(e):
            return expr_vars(e)
        case And(a, b) | Or(a, b):
            return expr_vars(a) | expr_vars(b)
    raise CircuitError(f"not a boolean expression node: {expr!r}")


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(&|\band\b|∧)|(\||\bor\b|∨)|(!|~|\bnot\b)|([01])|([A-Za-z_][A-Za-z0-9_]*))")


def parse_expr(text: str) -> BooleanExpr:
    """Parse ``A & !B | (C and 1)`` style expressions into an AST."""
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise CircuitError(f"cannot tokenize expression at: {text[pos:]!r}")
            break
        pos = m.end()
        kinds = ("lpar", "rpar", "and", "or", "not", "const", "name")
        for k, g in zip(kinds, m.groups()):
            if g is not None:
                tokens.append((k, g))
                break
    i = 0

    def peek():
        return tokens[i][0] if i < len(tokens) else None

    def take(kind):
        nonlocal i
        if peek() != kind:
            raise CircuitError(f"expected {kind} in expression, got {tokens[i:i+1]}")
        i += 1
        return tokens[i - 1][1]

    def p_or():
        e = p_and()
        while peek() == "or":
            take("or")
            e = Or(e, p_and())
        return e

    def p_and():
        e = p_unary()
        while peek() == "and":
            take("and")
            e = And(e, p_unary())
        return e

    def p_unary():
        if peek() == "not":
            take("not")
            return Not(p_unary())
        return p_atom()

    def p_atom():
        if peek() == "lpar":
            take("lpar")
            e = p_or()
            take("rpar")
            return e
        if peek() == "const":
            return Const(int(take("const")))
        if peek() == "name":
            return Var(take("name"))
        raise CircuitError(f"unexpected end of expression near token {i}")

    expr = p_or()
    if i != len(tokens):
        raise CircuitError(f"trailing tokens in expression: {tokens[i:]}")
    return expr


class CircuitBuilder:
    """Incrementally assemble a circuit from controlled-swap primitives.

    Returned wire ids hold the named values after the gates emitted so far.
    Primitives never clobber a wire used as a control; data operands are
    consumed unless the primitive makes a fan-out copy first.
    """

    def __init__(self, name: str):
        self.name = name
        self._wires: list[Wire] = []
        self._gates: list[FredkinGate] = []
        self._inputs: list[str] = []
        self._n = 0

    def _fresh(self, kind: str, label: str | None = None) -> str:
        wid = f"w{self._n}"
        self._n += 1
        self._wires.append(Wire(wid, kind, label))
        return wid

    def input_(self, label: str) -> str:
        wid = self._fresh("input", label)
        self._inputs.append(wid)
        return wid

    def zero(self) -> str:
        return self._fresh("ancilla_zero")

    def one(self) -> str:
        return self._fresh("ancilla_one")

    def gate(self, control: str, data_a: str, data_b: str) -> None:
        self._gates.append(FredkinGate(control, data_a, data_b))

    def not_copy(self, w: str) -> tuple[str, str]:
        """Emit F(w, 1, 0); returns (NOT w, copy of w) on fresh ancillae."""
        a1, a0 = self.one(), self.zero()
        self.gate(w, a1, a0)
        return a1, a0

    def not_(self, w: str) -> str:
        return self.not_copy(w)[0]

    def copy(self, w: str) -> str:
        return self.not_copy(w)[1]

    def and_(self, x: str, y: str, consume_y: bool = False) -> str:
        """x AND y on a fresh wire; y survives unless consume_y is set."""
        ya = y if consume_y else self.copy(y)
        z = self.zero()
        self.gate(x, ya, z)
        return z

    def or_(self, x: str, y: str, consume_y: bool = False) -> str:
        """x OR y on a fresh wire; x always survives (control use only)."""
        nx = self.not_(x)
        ya = y if consume_y else self.copy(y)
        o = self.one()
        self.gate(nx, ya, o)
        return o

    def xor_xnor(self, x: str, y: str) -> tuple[str, str]:
        """(x XOR y, x XNOR y) on fresh wires; both operands survive."""
        ny, cy = self.not_copy(y)
        self.gate(x, ny, cy)
        return cy, ny

    def xor(self, x: str, y: str) -> str:
        return self.xor_xnor(x, y)[0]

    def mux(self, sel: str, when_one: str, when_zero: str) -> str:
        """``sel ? when_one : when_zero``; consumes both data operands."""
        self.gate(sel, when_one, when_zero)
        return when_zero

    def build(self, outputs: list[tuple[str, str]]) -> Circuit:
        circ = Circuit(
            name=self.name,
            wires=list(self._wires),
            gates=list(self._gates),
            inputs=list(self._inputs),
            outputs=list(outputs),
        )
        circ.validate()
        return circ


def compile_expr(expr: BooleanExpr, var_order: list[str], name: str = "expr") -> Circuit:
    """Lower an expression AST to a circuit over the given input ordering.

    The designated output wire carries the expression's truth value for any
    assignment of the inputs.  Unused variables still occupy input slots.
    """
    missing = sorted(expr_vars(expr) - set(var_order))
    if missing:
        raise UnboundVariableError(
            f"variable {missing[0]!r} is not bound by the input list {var_order}"
        )
    b = CircuitBuilder(name)
    env = {v: b.input_(v) for v in var_order}

    def rec(e: BooleanExpr) -> tuple[str, bool]:
        # Returns (wire, consumable): interior results are used exactly once
        # and may be swallowed as swap data; input wires must be copied.
        match e:
            case Var(nm):
                return env[nm], False
            case Const(bit):
                return (b.one() if bit & 1 else b.zero()), True
            case Not(inner):
                w, _ = rec(inner)
                return b.not_(w), True
            case And(lhs, rhs):
                wl, _ = rec(lhs)
                wr, consumable = rec(rhs)
                return b.and_(wl, wr, consume_y=consumable), True
            case Or(lhs, rhs):
                na = b.not_(rec(lhs)[0])
                nb = b.not_(rec(rhs)[0])
                both = b.and_(na, nb, consume_y=True)
                return b.not_(both), True
        raise CircuitError(f"not a boolean expression node: {e!r}")

    out, _ = rec(expr)
    return b.build(outputs=[(out, "out")])
