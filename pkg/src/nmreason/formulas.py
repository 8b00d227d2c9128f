"""Propositional formula trees over named atoms.

Formulas are immutable: the constants ``TRUE``/``FALSE``, atoms, and the
connectives ``Not``, ``And``, ``Or``, ``Implies``, ``Iff``.  Structural
equality and hashability let formulas serve as dictionary keys; every
transformation returns a fresh tree.  ``simplify`` is a light normalizer
(constant propagation, double negation, idempotent merge) used to contain
growth during atom forgetting; logical equivalence, never syntax, is the
contract of the operations built on top.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

_ATOM_NAME = re.compile(r"[a-z][A-Za-z0-9_]*\Z")
_RESERVED = ("true", "false")


class Formula:
    """Base class of all formula nodes."""

    __slots__ = ()

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __invert__(self) -> "Formula":
        return Not(self)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Const(Formula):
    value: bool


TRUE = Const(True)
FALSE = Const(False)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    """A propositional atom; its name is its sole identity."""

    name: str

    def __post_init__(self) -> None:
        if not _ATOM_NAME.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")
        if self.name in _RESERVED:
            raise ValueError(f"atom name {self.name!r} is reserved")


@dataclass(frozen=True, slots=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Iff(Formula):
    left: Formula
    right: Formula


_BINARY = (And, Or, Implies, Iff)


@lru_cache(maxsize=65536)
def atoms_of(formula: Formula) -> tuple[Atom, ...]:
    """Atoms of ``formula`` in first-occurrence (left to right) order."""
    out: list[Atom] = []
    seen: set[Atom] = set()
    stack = [formula]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            if node not in seen:
                seen.add(node)
                out.append(node)
        elif isinstance(node, Not):
            stack.append(node.operand)
        elif isinstance(node, _BINARY):
            stack.append(node.right)
            stack.append(node.left)
    return tuple(out)


# Smart constructors: propagate constants, drop double negation, and merge
# syntactically identical operands.  They keep forgetting from blowing up.

def make_not(f: Formula) -> Formula:
    if isinstance(f, Const):
        return FALSE if f.value else TRUE
    if isinstance(f, Not):
        return f.operand
    return Not(f)


def make_and(left: Formula, right: Formula) -> Formula:
    if isinstance(left, Const):
        return right if left.value else FALSE
    if isinstance(right, Const):
        return left if right.value else FALSE
    if left == right:
        return left
    return And(left, right)


def make_or(left: Formula, right: Formula) -> Formula:
    if isinstance(left, Const):
        return TRUE if left.value else right
    if isinstance(right, Const):
        return left if right.value else TRUE
    if left == right:
        return left
    return Or(left, right)


def make_implies(left: Formula, right: Formula) -> Formula:
    if isinstance(left, Const):
        return right if left.value else TRUE
    if isinstance(right, Const):
        return TRUE if right.value else make_not(left)
    if left == right:
        return TRUE
    return Implies(left, right)


def make_iff(left: Formula, right: Formula) -> Formula:
    if isinstance(left, Const):
        return right if left.value else make_not(right)
    if isinstance(right, Const):
        return left if right.value else make_not(left)
    if left == right:
        return TRUE
    return Iff(left, right)


def simplify(f: Formula) -> Formula:
    """Bottom-up pass through the smart constructors."""
    if isinstance(f, (Const, Atom)):
        return f
    if isinstance(f, Not):
        return make_not(simplify(f.operand))
    if isinstance(f, And):
        return make_and(simplify(f.left), simplify(f.right))
    if isinstance(f, Or):
        return make_or(simplify(f.left), simplify(f.right))
    if isinstance(f, Implies):
        return make_implies(simplify(f.left), simplify(f.right))
    if isinstance(f, Iff):
        return make_iff(simplify(f.left), simplify(f.right))
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, atom: Atom, replacement: Formula) -> Formula:
    """Replace every occurrence of ``atom``, simplifying on the way up."""
    if isinstance(f, Const):
        return f
    if isinstance(f, Atom):
        return replacement if f == atom else f
    if isinstance(f, Not):
        return make_not(substitute(f.operand, atom, replacement))
    if isinstance(f, And):
        return make_and(substitute(f.left, atom, replacement),
                        substitute(f.right, atom, replacement))
    if isinstance(f, Or):
        return make_or(substitute(f.left, atom, replacement),
                       substitute(f.right, atom, replacement))
    if isinstance(f, Implies):
        return make_implies(substitute(f.left, atom, replacement),
                            substitute(f.right, atom, replacement))
    if isinstance(f, Iff):
        return make_iff(substitute(f.left, atom, replacement),
                        substitute(f.right, atom, replacement))
    raise TypeError(f"not a formula: {f!r}")


def conj_all(formulas: Iterable[Formula]) -> Formula:
    """Conjunction of ``formulas``; TRUE when empty."""
    out: Formula = TRUE
    for f in formulas:
        out = make_and(out, f)
    return out


def disj_all(formulas: Iterable[Formula]) -> Formula:
    """Disjunction of ``formulas``; FALSE when empty."""
    out: Formula = FALSE
    for f in formulas:
        out = make_or(out, f)
    return out


def evaluate(f: Formula, true_atoms: frozenset[Atom] | set[Atom]) -> bool:
    """Truth value under the assignment making exactly ``true_atoms`` true."""
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Atom):
        return f in true_atoms
    if isinstance(f, Not):
        return not evaluate(f.operand, true_atoms)
    if isinstance(f, And):
        return evaluate(f.left, true_atoms) and evaluate(f.right, true_atoms)
    if isinstance(f, Or):
        return evaluate(f.left, true_atoms) or evaluate(f.right, true_atoms)
    if isinstance(f, Implies):
        return (not evaluate(f.left, true_atoms)) or evaluate(f.right, true_atoms)
    if isinstance(f, Iff):
        return evaluate(f.left, true_atoms) == evaluate(f.right, true_atoms)
    raise TypeError(f"not a formula: {f!r}")


# Rendering.  Levels: <-> 1, -> 2, | 3, & 4, ! 5, atoms/constants 6.
# `->` and `<->` associate to the right, `&` and `|` to the left; a child
# is parenthesized whenever its level falls below the required floor, so
# printing then reparsing reproduces the identical tree.

def _render(f: Formula, floor: int) -> str:
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return "!" + _render(f.operand, 5)
    if isinstance(f, And):
        text = f"{_render(f.left, 4)} & {_render(f.right, 5)}"
        level = 4
    elif isinstance(f, Or):
        text = f"{_render(f.left, 3)} | {_render(f.right, 4)}"
        level = 3
    elif isinstance(f, Implies):
        text = f"{_render(f.left, 3)} -> {_render(f.right, 2)}"
        level = 2
    elif isinstance(f, Iff):
        text = f"{_render(f.left, 2)} <-> {_render(f.right, 1)}"
        level = 1
    else:
        raise TypeError(f"not a formula: {f!r}")
    return f"({text})" if level < floor else text


def to_text(f: Formula) -> str:
    """Concrete syntax; reparsing yields a structurally identical tree."""
    return _render(f, 0)
