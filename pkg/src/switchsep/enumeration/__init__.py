from .representatives import (class_representative, counter_of, free_pairs,
                              num_representatives, representative,
                              switching_class_representatives)
from .search import (SearchReport, oracle_nonseparable_count,
                     read_checkpoint, run_search, search_conjecture,
                     truncate_dump, verify_theorem1, write_checkpoint)
