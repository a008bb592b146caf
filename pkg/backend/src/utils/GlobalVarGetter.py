import copy
from collections import defaultdict

DEFAULT_GLOBAL = {
    "threads": 1,
    "mode": "process",
    "enumeration_cap": 10 ** 7,
    "milgram_bound": 10 ** 6,
    "iso_bound": 10 ** 4,
    "group_cap": 10 ** 6,
    "glue_choices": 8,
}


class GlobalVarGetter:
    global_var = defaultdict(dict)

    @staticmethod
    def set(global_var):
        GlobalVarGetter.global_var = defaultdict(dict, copy.deepcopy(global_var))
        return GlobalVarGetter.global_var

    @staticmethod
    def get():
        return GlobalVarGetter.global_var

    @staticmethod
    def reset():
        GlobalVarGetter.global_var = defaultdict(dict)

    @staticmethod
    def option(key, default=None):
        """Reads ``global.<key>``, falling back to the built-in defaults."""
        global_config = GlobalVarGetter.global_var.get('global', {}) or {}
        if key in global_config and global_config[key] is not None:
            return global_config[key]
        if default is not None:
            return default
        return DEFAULT_GLOBAL.get(key)
