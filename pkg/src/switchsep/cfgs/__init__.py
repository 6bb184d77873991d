from switchsep.cfgs.default_configs import get_cfg, get_cfg_defaults
