"""Sum graphs over magmas: labellings, constructions, bounded searches and exact checks."""
from .graphs import Graph, parse_graph6, emit_graph6
from .labelling import Labelling, Verdict, verify, is_strong, induced_graph
from .magmas import MagmaSpec, parse_spec

__all__ = ["Graph", "parse_graph6", "emit_graph6", "Labelling", "Verdict", "verify",
           "is_strong", "induced_graph", "MagmaSpec", "parse_spec"]
__version__ = "0.1.0"
