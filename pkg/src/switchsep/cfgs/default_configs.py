from yacs.config import CfgNode as CN

from switchsep.utils.common import env_int

_C = CN()

# one of 'debug', 'info', 'warn', 'error', 'critical'
_C.LOG_LEVEL = 'info'

_C.SEARCH = CN()
# number of worker processes for the exhaustive searches,
# the SWITCHSEP_JOBS environment variable overrides it
_C.SEARCH.JOBS = 1
# a checkpoint (and a progress line) is written every
# CHECKPOINT_INTERVAL representatives
_C.SEARCH.CHECKPOINT_INTERVAL = 2 ** 20
# representatives are only streamed for orders in [4, MAX_REPRESENTATIVE_ORDER]
_C.SEARCH.MAX_REPRESENTATIVE_ORDER = 10

_C.SEPARABILITY = CN()
# the subset scan of the brute-force oracle is exponential
_C.SEPARABILITY.BRUTE_FORCE_MAX_ORDER = 16

_C.QUASIGROUP = CN()
# exclusive bound on the number of cells of any table we build or scan
_C.QUASIGROUP.MAX_TABLE_CELLS = 2 ** 16


def get_cfg_defaults():
    """
    Return a copy of the default configuration with environment
    overrides applied.

    Returns:
        YACS CfgNode: the configuration.
    """
    cfg = _C.clone()
    cfg.SEARCH.JOBS = env_int('SWITCHSEP_JOBS', cfg.SEARCH.JOBS)
    return cfg


def get_cfg(cfg_file=None):
    """
    Return the default configuration, optionally merged with a YAML file.

    Args:
        cfg_file (str): path to a YAML file with overrides.

    Returns:
        YACS CfgNode: the frozen configuration.
    """
    cfg = get_cfg_defaults()
    if cfg_file is not None:
        cfg.merge_from_file(cfg_file)
    cfg.freeze()
    return cfg
