from .groups import (GradingGroup, DegreeGrading, InvolutiveGrading,
                     check_rule_homogeneity, degree_decompose,
                     involutive_decompose)
from .tensor import TensorElement, tensor_mu, tensor_sandwich
from .connection import (AnsatzTerm, ConnectionAnsatz, solve_connection,
                         connection_power, connection_matrix_det,
                         poch_expand, search_connection)
