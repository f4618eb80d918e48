"""Brick polytopes of cluster words, cluster variables of finite type and
the checks that tie them together."""

from .brick import BrickGeometry
from .cluster import ClusterVariableRecord, cluster_records
from .coxeter import CartanType, RootSystem
from .polyhedra import Fan, VPolytope, g_vector_fan, hull_vertices, minkowski_sum
from .subword import SubwordComplex

__all__ = ["BrickGeometry", "CartanType", "ClusterVariableRecord", "Fan", "RootSystem",
           "SubwordComplex", "VPolytope", "cluster_records", "g_vector_fan", "hull_vertices",
           "minkowski_sum"]

__version__ = "0.1.0"
