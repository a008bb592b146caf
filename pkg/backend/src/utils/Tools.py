import json
import os
from enum import Enum
from fractions import Fraction

import yaml


def getJson(filename):
    with open(filename, 'r', encoding='utf8') as fp:
        config = json.load(fp)
    return config


def getYaml(filename):
    with open(filename, 'r', encoding='utf8') as f:
        return yaml.safe_load(f)


def getConfig(config_file, default=None):
    """
    Loads a yaml or json configuration.

    A path without a known extension is tried as ``.yaml`` and then ``.json``.
    """
    if config_file == '' or config_file is None:
        config_file = default
    if config_file.endswith('.yaml') or config_file.endswith('.yml'):
        return getYaml(config_file)
    elif config_file.endswith('.json'):
        return getJson(config_file)
    yaml_path = os.path.splitext(config_file)[0] + '.yaml'
    json_path = os.path.splitext(config_file)[0] + '.json'
    if os.path.exists(yaml_path):
        return getYaml(yaml_path)
    elif os.path.exists(json_path):
        return getJson(json_path)
    raise FileNotFoundError(f"Configuration file {config_file} does not exist")


def to_jsonable(data):
    if isinstance(data, dict):
        return {str(k): to_jsonable(v) for k, v in data.items()}
    elif isinstance(data, (list, tuple)):
        return [to_jsonable(v) for v in data]
    elif isinstance(data, Enum):
        return data.value
    elif isinstance(data, Fraction):
        if data.denominator == 1:
            return data.numerator
        return f"{data.numerator}/{data.denominator}"
    elif hasattr(data, "to_record"):
        return to_jsonable(data.to_record())
    return data


def dumps(result):
    """Canonical JSON text: sorted keys, fixed separators."""
    return json.dumps(to_jsonable(result), sort_keys=True, indent=2)
