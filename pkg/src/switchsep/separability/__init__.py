from switchsep.separability.decider import (SeparationWitness, closed_sets,
                                            is_separable, least_isolable_set,
                                            separable_rows, witness_for_part)
from switchsep.separability.isolable import is_isolable, isolating_switching
from switchsep.separability.oracle import (brute_force_separable,
                                           isolable_by_definition,
                                           isolable_by_switching_scan,
                                           isolable_sets)
from switchsep.separability.patterns import (find_forbidden_pattern,
                                             find_twins, has_forbidden_pattern)
