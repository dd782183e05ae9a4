"""Well-founded parts, the well-foundedness decision, and coreflection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .errors import InternalConsistencyError, NotAHomomorphism, NotWellFounded
from .finset import FinMap, Subobject
from .coalgebra import (Coalgebra, canonical_graph, induced_subcoalgebra,
                        is_coalgebra_hom, next_time)


@dataclass(frozen=True)
class WfPartResult:
    """Least fixed point of next-time with its iteration trace."""

    part: Subobject
    structure: Coalgebra
    chain: tuple  # of Subobject; strictly increasing, last two equal


def wf_part(coalg: Coalgebra) -> WfPartResult:
    """Iterate next-time from the empty subset up to its least fixed point."""
    current = Subobject.empty(coalg.carrier)
    chain: List[Subobject] = [current]
    while True:
        nxt = next_time(coalg, current)
        chain.append(nxt)
        if nxt == current:
            break
        current = nxt
    structure = induced_subcoalgebra(coalg, current)
    assert structure is not None  # fixed points are subcoalgebras
    return WfPartResult(current, structure, tuple(chain))


def is_wellfounded(coalg: Coalgebra) -> bool:
    """Is the full subset the only fixed point of next-time?

    Cross-checked against acyclicity of the canonical graph; the two
    verdicts agree for every functor of the grammar.
    """
    by_fixpoint = wf_part(coalg).part.is_full()
    by_graph = canonical_graph(coalg).is_acyclic()
    if by_fixpoint != by_graph:
        raise InternalConsistencyError(
            f"fixed-point verdict {by_fixpoint} vs graph verdict {by_graph}")
    return by_fixpoint


def coreflect(f: FinMap, src: Coalgebra, dst: Coalgebra) -> FinMap:
    """Factor a homomorphism from a well-founded coalgebra through wf_part(dst).

    Returns the corestriction of f onto the well-founded part of dst; it
    is the unique homomorphism g with inclusion . g = f.
    """
    if not is_wellfounded(src):
        raise NotWellFounded("source coalgebra is not well-founded")
    if not is_coalgebra_hom(f, src, dst):
        raise NotAHomomorphism("map does not commute with the structures")
    result = wf_part(dst)
    part_carrier = result.part.as_carrier()
    for b in src.carrier:
        if f(b) not in result.part:
            # cannot happen: images of well-founded coalgebras land in the part
            raise InternalConsistencyError(
                f"homomorphism image {f(b)!r} escapes the well-founded part")
    return FinMap(src.carrier, part_carrier, f.values)
