from abc import ABC, abstractmethod
from functools import lru_cache
from typing import ClassVar, Iterable, List, Optional, Sequence, Tuple

from ..canon import CanonicalLabel, canonical_form
from ..errors import FamilyError
from ..graph import Graph
from ..structure import Partition
from ..types import FamilyTag

Edge = Tuple[int, int]


def clique_edges(vertices: Sequence[int]) -> List[Edge]:
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]


def join_edges(hub: int, vertices: Iterable[int]) -> List[Edge]:
    return [(hub, v) for v in vertices]


def consecutive_blocks(sizes: Sequence[int]) -> List[range]:
    """Vertex ranges for blocks laid out one after another from vertex 0."""
    blocks, start = [], 0
    for size in sizes:
        blocks.append(range(start, start + size))
        start += size
    return blocks


class BaseFamily(ABC):
    """
    A parameterized graph family. Plugins subclass this; the family loader
    instantiates every concrete subclass found in plugins/*.py.
    """

    name: ClassVar[str]
    aliases: ClassVar[Tuple[str, ...]] = ()
    param_names: ClassVar[Tuple[str, ...]] = ()
    min_values: ClassVar[Tuple[int, ...]] = ()
    variadic: ClassVar[bool] = False
    # Families the classifier may tag; lower values are tried first.
    recognition_order: ClassVar[Optional[int]] = None

    def check_params(self, params: Sequence[int]) -> Tuple[int, ...]:
        params = tuple(int(p) for p in params)
        if not self.variadic and len(params) != len(self.param_names):
            raise FamilyError(
                f"{self.name} takes {len(self.param_names)} parameter(s) "
                f"({', '.join(self.param_names)}), got {len(params)}"
            )
        for name, value, low in zip(self.param_names, params, self.min_values):
            if value < low:
                raise FamilyError(f"{self.name}: {name} must be at least {low}, got {value}")
        return params

    def tag(self, *params: int) -> FamilyTag:
        return FamilyTag(family=self.name, params=tuple(params))

    @abstractmethod
    def build(self, *params: int) -> Graph:
        """Construct the family member; cliques first, special vertices last."""

    def lemma_partition(self, *params: int) -> Partition:
        raise FamilyError(f"{self.name} has no quotient partition")

    def params_for_order(self, n: int) -> List[Tuple[int, ...]]:
        """Parameter tuples whose member has n vertices (template families only)."""
        return []

    @lru_cache(maxsize=None)
    def template_key(self, params: Tuple[int, ...]) -> Tuple[Tuple[int, ...], CanonicalLabel]:
        template = self.build(*params)
        return tuple(sorted(template.degrees)), canonical_form(template)

    def recognize(self, g: Graph) -> Optional[FamilyTag]:
        """Template isomorphism against every member of order g.n."""
        for params in self.params_for_order(g.n):
            degrees, key = self.template_key(params)
            if tuple(sorted(g.degrees)) != degrees:
                continue
            if canonical_form(g) == key:
                return self.tag(*params)
        return None
