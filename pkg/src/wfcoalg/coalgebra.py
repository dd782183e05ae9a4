"""Coalgebras, algebras, the next-time operator, and canonical graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from .errors import (CapExceeded, CarrierMismatch, FunctorMismatch,
                     IncompatibleQuotient)
from .finset import Carrier, FinMap, Subobject, all_maps, element_key
from .functor import (DEFAULT_ENUM_CAP, FunctorExpr, FValue, check_value,
                      eval_map, eval_obj, support)

DEFAULT_HOM_CAP = 10_000_000


@dataclass(frozen=True)
class Coalgebra:
    """A carrier together with a total structure map into F(carrier)."""

    functor: FunctorExpr
    carrier: Carrier
    structure: Tuple[FValue, ...]  # aligned with carrier order

    def __post_init__(self):
        if len(self.structure) != len(self.carrier):
            raise ValueError("structure table does not cover the carrier")
        for v in self.structure:
            check_value(self.functor, self.carrier, v)
        object.__setattr__(self, "_alpha",
                           dict(zip(self.carrier.elements, self.structure)))

    @staticmethod
    def from_dict(functor: FunctorExpr, carrier: Carrier, table: Dict[Any, FValue]) -> "Coalgebra":
        return Coalgebra(functor, carrier, tuple(table[a] for a in carrier))

    def alpha(self, a: Any) -> FValue:
        return self._alpha[a]


@dataclass(eq=False)
class Algebra:
    """A carrier together with e: F(carrier) -> carrier.

    The operation may be given as an explicit table over the whole of
    eval_obj(F, carrier) (see ``from_table``) or as a total callable for
    carriers too large to tabulate.
    """

    functor: FunctorExpr
    carrier: Carrier
    operation: Callable[[FValue], Any]
    table: Optional[Dict[FValue, Any]] = field(default=None, repr=False)

    @staticmethod
    def from_table(functor: FunctorExpr, carrier: Carrier,
                   table: Dict[FValue, Any], cap: int = DEFAULT_ENUM_CAP) -> "Algebra":
        domain = eval_obj(functor, carrier, cap=cap)
        missing = [v for v in domain if v not in table]
        if missing:
            raise ValueError(f"algebra table is not total; missing {missing[0]!r}")
        for v, x in table.items():
            if x not in carrier:
                raise ValueError(f"algebra result {x!r} outside the carrier")
        return Algebra(functor, carrier, table.__getitem__, dict(table))

    def apply(self, v: FValue) -> Any:
        return self.operation(v)


@dataclass(frozen=True)
class CanonicalGraph:
    """Successor structure extracted from a coalgebra via least supports."""

    vertices: Carrier
    succ: Tuple[Tuple[Any, frozenset], ...]  # aligned with vertex order

    def __post_init__(self):
        object.__setattr__(self, "_succ", dict(self.succ))

    def successors(self, a: Any) -> frozenset:
        return self._succ[a]

    def find_cycle(self) -> Optional[List[Any]]:
        """A vertex cycle if one exists, by deterministic DFS; else None."""
        color: Dict[Any, int] = {}  # 0 absent, 1 on stack, 2 done
        parent: Dict[Any, Any] = {}
        for root in self.vertices:
            if color.get(root):
                continue
            stack = [(root, iter(sorted(self.successors(root), key=element_key)))]
            color[root] = 1
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    c = color.get(nxt, 0)
                    if c == 1:
                        cycle = [node]
                        while cycle[-1] != nxt:
                            cycle.append(parent[cycle[-1]])
                        cycle.reverse()
                        return cycle
                    if c == 0:
                        color[nxt] = 1
                        parent[nxt] = node
                        stack.append((nxt, iter(sorted(self.successors(nxt),
                                                       key=element_key))))
                        advanced = True
                        break
                if not advanced:
                    color[node] = 2
                    stack.pop()
        return None

    def is_acyclic(self) -> bool:
        return self.find_cycle() is None

    def topological_order(self) -> List[Any]:
        """Vertices ordered successors-first; raises on a cycle."""
        cycle = self.find_cycle()
        if cycle is not None:
            raise ValueError(f"graph has a cycle through {cycle[0]!r}")
        seen: Dict[Any, bool] = {}
        order: List[Any] = []

        def visit(node):
            if node in seen:
                return
            seen[node] = True
            for nxt in sorted(self.successors(node), key=element_key):
                visit(nxt)
            order.append(node)

        for v in self.vertices:
            visit(v)
        return order


def _require_same_functor(a: Coalgebra, b) -> None:
    if a.functor != b.functor:
        raise FunctorMismatch("objects are over different functors")


def is_coalgebra_hom(f: FinMap, src: Coalgebra, dst: Coalgebra) -> bool:
    _require_same_functor(src, dst)
    if f.dom != src.carrier or f.cod != dst.carrier:
        raise CarrierMismatch("map endpoints do not match the coalgebras")
    return all(eval_map(src.functor, f, src.alpha(a)) == dst.alpha(f(a))
               for a in src.carrier)


def next_time(coalg: Coalgebra, s: Subobject) -> Subobject:
    """States whose structure value is supported inside s."""
    if s.of != coalg.carrier:
        raise CarrierMismatch("subobject is not of the coalgebra carrier")
    return Subobject(coalg.carrier, frozenset(
        a for a in coalg.carrier
        if support(coalg.functor, coalg.carrier, coalg.alpha(a)).members <= s.members))


def canonical_graph(coalg: Coalgebra) -> CanonicalGraph:
    return CanonicalGraph(coalg.carrier, tuple(
        (a, support(coalg.functor, coalg.carrier, coalg.alpha(a)).members)
        for a in coalg.carrier))


def induced_subcoalgebra(coalg: Coalgebra, s: Subobject) -> Optional[Coalgebra]:
    """The restriction of the structure to s when s <= next_time(s), else None."""
    if not s <= next_time(coalg, s):
        return None
    sub = s.as_carrier()
    return Coalgebra(coalg.functor, sub, tuple(coalg.alpha(a) for a in sub))


def is_subcoalgebra(coalg: Coalgebra, s: Subobject) -> bool:
    return s <= next_time(coalg, s)


def is_cartesian(coalg: Coalgebra, s: Subobject) -> bool:
    """Is s a fixed point of the next-time operator?"""
    return s == next_time(coalg, s)


def quotient(coalg: Coalgebra, e: FinMap) -> Coalgebra:
    """The strong quotient along a compatible surjection e."""
    if e.dom != coalg.carrier:
        raise CarrierMismatch("surjection domain is not the coalgebra carrier")
    if not e.is_surjective():
        raise ValueError("quotient map must be surjective")
    pushed: Dict[Any, Tuple[Any, FValue]] = {}
    for a in coalg.carrier:
        image = eval_map(coalg.functor, e, coalg.alpha(a))
        b = e(a)
        if b in pushed and pushed[b][1] != image:
            raise IncompatibleQuotient(pushed[b][0], a)
        pushed.setdefault(b, (a, image))
    return Coalgebra(coalg.functor, e.cod, tuple(pushed[b][1] for b in e.cod))


def coproduct(c1: Coalgebra, c2: Coalgebra) -> Tuple[Coalgebra, FinMap, FinMap]:
    """Disjoint union with injected structures; returns both injections."""
    _require_same_functor(c1, c2)
    elems = tuple((0, a) for a in c1.carrier) + tuple((1, b) for b in c2.carrier)
    carrier = Carrier(elems)
    in1 = FinMap(c1.carrier, carrier, tuple((0, a) for a in c1.carrier))
    in2 = FinMap(c2.carrier, carrier, tuple((1, b) for b in c2.carrier))
    structure = tuple(eval_map(c1.functor, in1, c1.alpha(a)) for a in c1.carrier) + \
        tuple(eval_map(c2.functor, in2, c2.alpha(b)) for b in c2.carrier)
    return Coalgebra(c1.functor, carrier, structure), in1, in2


def enumerate_homs(src: Coalgebra, dst: Coalgebra,
                   cap: int = DEFAULT_HOM_CAP) -> Iterator[FinMap]:
    """All coalgebra homomorphisms src -> dst, in lexicographic table order."""
    _require_same_functor(src, dst)
    candidates = len(dst.carrier) ** len(src.carrier)
    if candidates > cap:
        raise CapExceeded("homomorphism search", candidates, cap)
    for f in all_maps(src.carrier, dst.carrier):
        if is_coalgebra_hom(f, src, dst):
            yield f
