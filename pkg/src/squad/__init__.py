"""s-quadrangular digraphs, cycle factors and Hamilton cycles."""

from .cycles import (
    CycleFactor,
    HallViolator,
    find_cycle_factor,
    hall_check,
    hamilton_cycle,
    hamilton_cycle_graph,
    merge_pair,
    theorem23_hamilton,
)
from .errors import CapacityError, GraphFormatError, PreconditionError
from .graph import (
    Digraph,
    UGraph,
    complete_biorientation,
    is_eulerian,
    is_s_quadrangular,
    is_strong,
    kronecker_digraph,
    line_digraph,
    max_semidegree,
    q_set_check,
)
from .matrices import digraph_of_matrix, gen_matrix, is_unitary, kronecker_matrix, random_unitary
from .tutte import (
    TuttePartition,
    TutteViolator,
    build_partition,
    find_2_factor,
    find_f_factor,
    q_count,
    tutte_check,
    verify_partition,
)
from .verify import EnumSpace, VerificationReport, sample_verify, verify_conjecture

__version__ = "0.1.0"
