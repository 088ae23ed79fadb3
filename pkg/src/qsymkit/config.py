import os
from os.path import exists

root_dir = os.path.dirname(os.path.abspath(__file__))
parent_dir = os.path.dirname(root_dir)

log_dir = os.environ.get("QSYMKIT_LOG_DIR", f"{parent_dir}/logs")

if not exists(log_dir):
    os.makedirs(log_dir)

log_file_path = f"{log_dir}/qsymkit.log"

DEFAULT_DEGREE_BOUND = 4
DEFAULT_SIZE_CAP = 12

# inductive-limit validation always reduces at this bound
ASSEMBLY_DEGREE_BOUND = 4

# connecting maps into larger targets are checked by rewriting with the target
# relations as given and the solved linear relations only
ASSEMBLY_FULL_REDUCTION_CAP = 32

# the closure stage of reduction multiplies by every free letter up to this many
# free letters, above it only by the letters reachable from the remainder
FULL_SUPPORT_LETTER_CAP = 12
SUPPORT_EXPANSION_ROUNDS = 3

# largest target presentation searched for classical counterpoints when a
# connecting map relation cannot be confirmed by reduction
CLASSICAL_REFUTATION_CAP = 96

# closure of a permutation set is checked pairwise up to this many elements
FULL_CLOSURE_CHECK_LIMIT = 1024

DEFAULT_WITNESS_PARAMETERS = ("0", "1")
DEFAULT_WITNESS_BLOCKS = 2

magic_unitary_builder_name = "magic_unitary_presentation"
metric_commutation_builder_name = "metric_commutation_presentation"
qiso_quadratic_builder_name = "qiso_quadratic_presentation"
edge_orthogonality_builder_name = "edge_orthogonality_presentation"
tree_diagram_builder_name = "tree_diagram_presentation"
cantor_level_builder_name = "cantor_level_presentation"
cantor_limit_builder_name = "cantor_limit_presentation"
inductive_limit_builder_name = "inductive_limit_assemble"
