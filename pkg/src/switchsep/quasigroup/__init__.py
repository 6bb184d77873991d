from .qlambda import direct_product, q_lambda
from .reducibility import Decomposition, is_reducible, kappa
from .table import (QuasigroupTable, RetractSpec, check_scale, is_latin,
                    iterated_group, retract)
