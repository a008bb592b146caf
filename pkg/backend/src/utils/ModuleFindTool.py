import importlib
from functools import reduce

from core.Errors import InputError


def find_class_by_path(path: str):
    """Resolve ``package.Module.Class`` using the longest importable module prefix."""
    parts = path.split(".")
    for cut in range(len(parts), 0, -1):
        try:
            module = importlib.import_module(".".join(parts[:cut]))
        except ModuleNotFoundError:
            continue
        try:
            return reduce(getattr, parts[cut:], module)
        except AttributeError:
            raise InputError(f"{path}: {'.'.join(parts[:cut])} has no attribute {'.'.join(parts[cut:])}")
    raise InputError(f"{path}: no importable module")


def generate_object_by_path(path: str, params: dict = None, else_params=None):
    target_class = find_class_by_path(path)
    params = {**(params or {}), **(else_params or {})}
    return target_class(**params)
