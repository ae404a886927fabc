"""
Family registry and the public constructor/recognizer API.
Families come from plugins/*.py via FamilyLoader; the registry is built once per process.
"""
from typing import Dict, List, Optional, Sequence

from .errors import FamilyError, GraphError, InconsistencyError
from .families.base_family import BaseFamily
from .family_loader import FamilyLoader
from .graph import Graph, bits, complement_clique_sizes, is_connected
from .paths import resolve_resource_path
from .structure import Partition
from .types import FamilyTag


class FamilyManager:
    def __init__(self):
        self.families: Dict[str, BaseFamily] = {}
        self._names: Dict[str, str] = {}

    def register_family(self, family: BaseFamily):
        self.families[family.name] = family
        for alias in (family.name,) + tuple(family.aliases):
            self._names[alias.lower()] = family.name

    def get(self, name: str) -> BaseFamily:
        key = self._names.get(name.lower())
        if key is None:
            raise FamilyError(f"Unknown family '{name}' (known: {', '.join(sorted(self.families))})")
        return self.families[key]

    def build(self, name: str, *params: int) -> Graph:
        return self.get(name).build(*params)

    def lemma_partition(self, name: str, *params: int) -> Partition:
        return self.get(name).lemma_partition(*params)

    def recognizers(self) -> List[BaseFamily]:
        tagged = [f for f in self.families.values() if f.recognition_order is not None]
        return sorted(tagged, key=lambda f: f.recognition_order)

    def recognize(self, g: Graph) -> Optional[FamilyTag]:
        tags = [tag for tag in (f.recognize(g) for f in self.recognizers()) if tag is not None]
        if len(tags) > 1:
            raise InconsistencyError(f"graph matches several families: {', '.join(map(str, tags))}")
        return tags[0] if tags else None


_manager: Optional[FamilyManager] = None


def get_manager() -> FamilyManager:
    global _manager
    if _manager is None:
        manager = FamilyManager()
        loader = FamilyLoader(resolve_resource_path("plugins"))
        for classes in loader.load_all_plugins().values():
            for cls in classes:
                manager.register_family(cls())
        _manager = manager
    return _manager


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def build_complete_graph(n: int) -> Graph:
    return get_manager().build("CompleteGraph", n)


def build_complete_multipartite(parts: Sequence[int]) -> Graph:
    return get_manager().build("CompleteMultipartite", *parts)


def build_kn_minus_e(n: int) -> Graph:
    return get_manager().build("KnMinusE", n)


def build_G1(t: int) -> Graph:
    return get_manager().build("G1", t)


def build_Gamma1(s: int, t: int, p: int) -> Graph:
    return get_manager().build("Gamma1", s, t, p)


def build_G2(t: int) -> Graph:
    return get_manager().build("G2", t)


def build_Gamma2(p: int, s: int, t: int) -> Graph:
    return get_manager().build("Gamma2", p, s, t)


def build_G3(t: int) -> Graph:
    return get_manager().build("G3", t)


def build_Gamma3(p: int, s: int, t: int) -> Graph:
    return get_manager().build("Gamma3", p, s, t)


def lemma_partition(family: str, params: Sequence[int]) -> Partition:
    """Quotient partition in constructor order (cliques, then hub singletons)."""
    return get_manager().lemma_partition(family, *params)


# ---------------------------------------------------------------------------
# Recognizers
# ---------------------------------------------------------------------------

def recognize_complete_multipartite(g: Graph) -> Optional[List[int]]:
    """Sorted part sizes when g is complete multipartite, else None."""
    return complement_clique_sizes(g)


def recognize_family(g: Graph) -> Optional[FamilyTag]:
    if not is_connected(g):
        raise GraphError("recognize_family() expects a connected graph")
    return get_manager().recognize(g)


def _hub_params(family: str, params: Sequence[int]):
    name = get_manager().get(family).name
    if name == "G2":
        t, = params
        return "Gamma2", (t, t - 1, t)
    if name == "G3":
        t, = params
        return "Gamma3", (t, t, t)
    if name in ("Gamma2", "Gamma3"):
        return name, tuple(params)
    raise FamilyError(f"degree identities are defined for Gamma2/Gamma3 and G2/G3, not {family}")


def gamma_degree_identities(g: Graph, family: str, params: Sequence[int]) -> Dict[str, bool]:
    """
    Degree identities of the hub templates, evaluated on g with the vertex
    layout of the family constructor: u, v, w are the first members of the
    three cliques and x, y (and z) the hubs.
    """
    base, (p, s, t) = _hub_params(family, params)
    blocks = [next(bits(b)) for b in lemma_partition(base, (p, s, t))]
    d = g.degree
    u, v, w = blocks[:3]
    if base == "Gamma2":
        x, y = blocks[3:5]
    else:
        z, x, y = blocks[3:6]
    checks = {
        "d_x = d_u + d_v": d(x) == d(u) + d(v),
        "d_y = d_v + d_w": d(y) == d(v) + d(w),
    }
    if base == "Gamma2":
        checks.update({
            "d_u = p": d(u) == p,
            "d_v = s + 1": d(v) == s + 1,
            "d_w = t": d(w) == t,
        })
    else:
        checks["d_z = d_u + d_w"] = d(z) == d(u) + d(w)
    return checks
