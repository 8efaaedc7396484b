"""Syntactic unification with occurs check."""

from __future__ import annotations

from typing import Mapping, Union

from ..ir import Atom, Const, Func, LpLiteral, Term, Var

Substitution = dict[str, Term]
Unifiable = Union[Term, Atom, LpLiteral, tuple]


def substitute(t: Term, s: Mapping[str, Term]) -> Term:
    if isinstance(t, Var):
        return s.get(t.name, t)
    if isinstance(t, Func):
        return Func(t.name, tuple(substitute(a, s) for a in t.args))
    return t


def _walk(t: Term, s: Mapping[str, Term]) -> Term:
    while isinstance(t, Var) and t.name in s:
        t = s[t.name]
    return t


def _occurs(name: str, t: Term, s: Mapping[str, Term]) -> bool:
    t = _walk(t, s)
    if isinstance(t, Var):
        return t.name == name
    if isinstance(t, Func):
        return any(_occurs(name, a, s) for a in t.args)
    return False


def _resolve(t: Term, s: Mapping[str, Term]) -> Term:
    t = _walk(t, s)
    if isinstance(t, Func):
        return Func(t.name, tuple(_resolve(a, s) for a in t.args))
    return t


def _split(x: Unifiable) -> tuple[object, tuple[Term, ...]]:
    if isinstance(x, (Atom, LpLiteral)):
        head = (x.predicate, getattr(x, "positive", True), len(x.args))
        return head, x.args
    if isinstance(x, tuple):
        return ("", True, len(x)), x
    raise TypeError(f"cannot unify {x!r}")


def unify_terms(a: Term, b: Term, s: Substitution) -> bool:
    """Extend the triangular substitution ``s`` in place; False on clash."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        x, y = _walk(x, s), _walk(y, s)
        if x == y:
            continue
        if isinstance(x, Var):
            if _occurs(x.name, y, s):
                return False
            s[x.name] = y
        elif isinstance(y, Var):
            if _occurs(y.name, x, s):
                return False
            s[y.name] = x
        elif isinstance(x, Func) and isinstance(y, Func):
            if x.name != y.name or len(x.args) != len(y.args):
                return False
            stack.extend(zip(x.args, y.args))
        else:
            return False
    return True


def unify(a: Unifiable, b: Unifiable) -> Substitution | None:
    """Most general unifier of two terms, atoms or argument tuples.

    Returns an idempotent substitution, or ``None`` when the inputs do not
    unify (clash or occurs check).
    """
    if isinstance(a, (Var, Const, Func)) or isinstance(b, (Var, Const, Func)):
        pairs = [(a, b)]
    else:
        (ha, args_a), (hb, args_b) = _split(a), _split(b)
        if ha != hb:
            return None
        pairs = list(zip(args_a, args_b))
    s: Substitution = {}
    for x, y in pairs:
        if not unify_terms(x, y, s):
            return None
    return {k: _resolve(v, s) for k, v in s.items()}


def match(pattern: Term, target: Term, s: Substitution) -> bool:
    """One-way matching: bind variables of ``pattern`` only. Extends ``s`` in place."""
    if isinstance(pattern, Var):
        bound = s.get(pattern.name)
        if bound is None:
            s[pattern.name] = target
            return True
        return bound == target
    if isinstance(pattern, Func):
        if not isinstance(target, Func) or target.name != pattern.name:
            return False
        if len(target.args) != len(pattern.args):
            return False
        return all(match(p, t, s) for p, t in zip(pattern.args, target.args))
    return pattern == target
