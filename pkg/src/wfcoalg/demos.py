"""Worked examples shipped with the tool.

Each builder returns plain library objects so tests and the CLI share one
fixture set: the four-vertex graph G, the pair-or-point counterexample
coalgebra, Quicksort as a hylomorphism, factorial and Fibonacci as
parametric recursion, a deterministic automaton, and a labelled
transition system for the next-time operator.
"""

from __future__ import annotations

from itertools import product
from typing import Any, Tuple

from .finset import Carrier, Subobject
from .functor import (Const, ConstVal, Exp, FuncVal, Id, IdVal, InjVal,
                      PowFin, Prod, RFunctor, RPair, SetVal, Sum, TupleVal)
from .coalgebra import Algebra, Coalgebra

UNIT = Carrier(("u0",))


def graph_g() -> Coalgebra:
    """The graph a -> b; c <-> d as a powerset coalgebra."""
    carrier = Carrier(("a", "b", "c", "d"))
    table = {"a": {"b"}, "b": set(), "c": {"d"}, "d": {"c"}}
    return Coalgebra.from_dict(PowFin(Id()), carrier, {
        v: SetVal.of(IdVal(s) for s in table[v]) for v in carrier})


def r_coalgebra() -> Coalgebra:
    """Two states, both mapped to the pair (0, 1): recursive, not well-founded."""
    carrier = Carrier((0, 1))
    return Coalgebra(RFunctor(), carrier, (RPair(0, 1), RPair(0, 1)))


def quicksort_functor(alphabet: Carrier):
    return Sum((Const(UNIT), Prod((Const(alphabet), Id(), Id()))))


def lists_up_to(alphabet: Carrier, max_len: int) -> Carrier:
    words = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (a,) for w in frontier for a in alphabet]
        words.extend(frontier)
    return Carrier(tuple(words))


def quicksort(alphabet: Tuple[Any, ...], max_len: int):
    """The split coalgebra and merge algebra over lists up to a length bound."""
    alpha_carrier = Carrier(alphabet)
    functor = quicksort_functor(alpha_carrier)
    lists = lists_up_to(alpha_carrier, max_len)

    def split(w):
        if not w:
            return InjVal(0, ConstVal("u0"))
        head, rest = w[0], w[1:]
        small = tuple(x for x in rest if x <= head)
        large = tuple(x for x in rest if x > head)
        return InjVal(1, TupleVal((ConstVal(head), IdVal(small), IdVal(large))))

    def merge(v):
        if v.index == 0:
            return ()
        head, left, right = v.value.items
        out = left.element + (head.atom,) + right.element
        return out if out in lists else ()

    coalg = Coalgebra(functor, lists, tuple(split(w) for w in lists))
    alg = Algebra(functor, lists, merge)
    return coalg, alg


def predecessor(n_max: int) -> Coalgebra:
    """The coalgebra n -> n-1 (halting at 0) for X + 1."""
    functor = Sum((Id(), Const(UNIT)))
    carrier = Carrier(tuple(range(n_max + 1)))
    return Coalgebra(functor, carrier, tuple(
        InjVal(1, ConstVal("u0")) if n == 0 else InjVal(0, IdVal(n - 1))
        for n in carrier))


def factorial_scheme(n_max: int):
    """Predecessor coalgebra plus the parametric step computing n!."""
    import math

    coalg = predecessor(n_max)
    target = Carrier(tuple(range(math.factorial(n_max) + 1)))

    def step(v, n):
        if v.index == 0:
            return v.value.element * n
        return 1

    return coalg, target, step


def fibonacci_coalgebra(n_max: int) -> Coalgebra:
    """n -> (n-1, n-2) with halting states 0 and 1, for X*X + 1."""
    functor = Sum((Prod((Id(), Id())), Const(UNIT)))
    carrier = Carrier(tuple(range(n_max + 1)))
    return Coalgebra(functor, carrier, tuple(
        InjVal(1, ConstVal("u0")) if n <= 1
        else InjVal(0, TupleVal((IdVal(n - 1), IdVal(n - 2))))
        for n in carrier))


def fibonacci_scheme(n_max: int, a0: int, a1: int):
    coalg = fibonacci_coalgebra(n_max)
    fib = [a0, a1]
    while len(fib) <= n_max:
        fib.append(fib[-1] + fib[-2])
    target = Carrier(tuple(range(max(fib) + 1)))

    def step(v, n):
        if v.index == 0:
            i, j = v.value.items
            return i.element + j.element
        return a0 if n == 0 else a1 if n == 1 else 0

    return coalg, target, step


def automaton() -> Coalgebra:
    """A two-state deterministic automaton: nonempty, hence not well-founded."""
    sigma = Carrier(("p", "q"))
    flags = Carrier(("0", "1"))
    functor = Prod((Const(flags), Exp(sigma, Id())))
    carrier = Carrier(("s0", "s1"))
    delta = {("s0", "p"): "s1", ("s0", "q"): "s0",
             ("s1", "p"): "s1", ("s1", "q"): "s0"}
    final = {"s0": "0", "s1": "1"}
    return Coalgebra(functor, carrier, tuple(
        TupleVal((ConstVal(final[s]),
                  FuncVal(tuple((a, IdVal(delta[(s, a)])) for a in sigma))))
        for s in carrier))


def transition_system():
    """A labelled transition system plus a subset for the next-time demo."""
    sigma = Carrier(("p", "q"))
    functor = PowFin(Prod((Const(sigma), Id())))
    carrier = Carrier(("s0", "s1", "s2"))
    steps = {"s0": [("p", "s1"), ("q", "s2")], "s1": [("p", "s2")], "s2": []}
    coalg = Coalgebra(functor, carrier, tuple(
        SetVal.of(TupleVal((ConstVal(a), IdVal(t))) for a, t in steps[s])
        for s in carrier))
    subset = Subobject.of_members(carrier, ("s2",))
    return coalg, subset
