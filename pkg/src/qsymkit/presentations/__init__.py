from qsymkit.presentations.graph import edge_orthogonality_presentation
from qsymkit.presentations.limits import (
    ConnectingMap,
    cantor_inductive_system,
    inductive_limit_assemble,
    tree_inductive_system,
)
from qsymkit.presentations.magic import magic_grid, magic_unitary_presentation
from qsymkit.presentations.metric import (
    metric_commutation_presentation,
    qiso_quadratic_presentation,
)
from qsymkit.presentations.tree import (
    cantor_level_presentation,
    cantor_limit_presentation,
    cantor_reconstruction,
    tree_diagram_presentation,
)

__all__ = [
    "ConnectingMap",
    "cantor_inductive_system",
    "cantor_level_presentation",
    "cantor_limit_presentation",
    "cantor_reconstruction",
    "edge_orthogonality_presentation",
    "inductive_limit_assemble",
    "magic_grid",
    "magic_unitary_presentation",
    "metric_commutation_presentation",
    "qiso_quadratic_presentation",
    "tree_diagram_presentation",
    "tree_inductive_system",
]
