"""
CUSTOM FAMILY PLUGIN TEMPLATE
Copy this file to add your own graph family!

Instructions:
1. Copy this file to plugins/your_family_plugin.py (no leading underscore)
2. Rename the class and set `name`, `param_names` and `min_values`
3. Implement build(); add lemma_partition() if the family has an equitable partition
4. Set recognition_order and params_for_order() only if the classifier
   should tag members of this family
5. Run `python main.py build --family YourName ...` - it is auto-discovered!

Example families in plugins/:
- complete_multipartite_plugin.py (custom recognizer)
- gamma1_plugin.py (template recognizer through params_for_order)
"""
from typing import List, Tuple

from core.families import BaseFamily, clique_edges
from core.graph import Graph, new_graph


class TemplateFamily(BaseFamily):
    """
    Replace this docstring with the family description.
    Example: "Friendship graph F_k: k triangles sharing one vertex"
    """

    name = "Template"
    param_names = ("k",)
    min_values = (1,)

    def build(self, k: int) -> Graph:
        k, = self.check_params((k,))
        # Vertex layout: cliques first, special vertices last.
        return new_graph(k + 1, clique_edges(range(k + 1)))

    def params_for_order(self, n: int) -> List[Tuple[int, ...]]:
        # Only consulted when recognition_order is set.
        return [(n - 1,)] if n >= 2 else []
