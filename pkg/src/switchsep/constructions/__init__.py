from switchsep.constructions.circulant import (CirculantSpec, GnReport,
                                               circulant_gn, jump_sequence,
                                               deletion_switching,
                                               verify_gn)
