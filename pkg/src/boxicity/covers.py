"""Edge covers of a complement graph by co-interval bags, and their verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graph import Edge, Graph, _norm
from .interval import edges_co_interval, edges_union_co_interval

PLAIN = "C"
UNION = "Cbar"
CLASSES = (PLAIN, UNION)


class CoverError(ValueError):
    """A cover failed verification; the message names the first violated invariant."""


class CoverStats(NamedTuple):
    t: int  # globality: number of bags
    s: int  # locality: max number of bags whose support contains one vertex


def class_check(class_flag: str):
    if class_flag == PLAIN:
        return edges_co_interval
    if class_flag == UNION:
        return edges_union_co_interval
    raise ValueError(f"unknown cover class {class_flag!r}")


@dataclass(frozen=True)
class CoCover:
    """Bags of edges of ``host``; ``host`` is the complement of the graph being studied."""

    host: Graph
    bags: tuple[frozenset[Edge], ...]
    class_flag: str = PLAIN

    @classmethod
    def build(cls, host: Graph, bags: Iterable[Iterable[Iterable[int]]], class_flag: str = PLAIN):
        return cls(host, tuple(frozenset(_norm(*e) for e in bag) for bag in bags), class_flag)

    def support(self, i: int) -> frozenset[int]:
        return frozenset(x for e in self.bags[i] for x in e)

    def vertex_load(self) -> list[int]:
        load = [0] * self.host.n
        for i in range(len(self.bags)):
            for v in self.support(i):
                load[v] += 1
        return load

    def stats(self) -> CoverStats:
        return CoverStats(len(self.bags), max(self.vertex_load(), default=0))

    def to_json(self) -> dict:
        return {
            "class": self.class_flag,
            "bags": [[list(e) for e in sorted(bag)] for bag in self.bags],
        }

    @classmethod
    def from_json(cls, host: Graph, data: dict) -> "CoCover":
        return cls.build(host, data["bags"], data.get("class", PLAIN))


def verify_cover(c: CoCover) -> CoverStats:
    """Check every cover invariant from scratch and return ``(t, s)``.

    Raises :class:`CoverError` on the first failure: a foreign or empty bag,
    an uncovered host edge, or a bag outside the cover class.
    """
    check = class_check(c.class_flag)
    covered: set[Edge] = set()
    for i, bag in enumerate(c.bags):
        if not bag:
            raise CoverError(f"bag {i} is empty")
        foreign = sorted(bag - c.host.edges)
        if foreign:
            raise CoverError(f"bag {i} contains non-host edge {foreign[0]}")
        covered |= bag
    missing = sorted(c.host.edges - covered)
    if missing:
        raise CoverError(f"uncovered edge {missing[0]}")
    for i, bag in enumerate(c.bags):
        if not check(bag):
            kind = "co-interval" if c.class_flag == PLAIN else "a union of co-interval graphs"
            raise CoverError(f"bag {i} is not {kind}")
    return c.stats()
