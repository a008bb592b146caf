import argparse
import json
import logging
import os
import sys

import yaml

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cli.Commands import COMMANDS, verify
from core.Errors import InputError, LatticeError, PropertyViolation
from utils.GlobalVarGetter import GlobalVarGetter
from utils.Tools import dumps, getConfig

logger = logging.getLogger("cli")

DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), "../../../config.yaml")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lattice", description='LatticeModule toolkit')
    parser.add_argument('--config', type=str, default='', help='config file path (yaml or json)')
    parser.add_argument('--input', type=str, default='', help='lattice record file')
    parser.add_argument('--output', type=str, default='', help='write the JSON result to this file')
    parser.add_argument('--threads', type=int, default=None, help='parallel workers for enumeration')
    parser.add_argument('--cap', type=int, default=None, help='enumeration safety cap')
    parser.add_argument('--format', choices=['json'], default='json')
    parser.add_argument('--seed', type=int, default=None, help='accepted and ignored')
    parser.add_argument('-v', '--verbose', action='store_true')
    parser.add_argument('-q', '--quiet', action='store_true')
    sub = parser.add_subparsers(dest='command', required=True)

    construct = sub.add_parser('construct', help='build a catalog lattice')
    construct.add_argument('name')
    construct.add_argument('--verify', action='store_true', help='add det, minimal norm and root count')

    analyze = sub.add_parser('analyze', help='invariants of a lattice')
    analyze.add_argument('--input', type=str, default=argparse.SUPPRESS, help='lattice record file')
    analyze.add_argument('--lattice', type=str, default='', help='catalog name')
    for flag in ('signature', 'det', 'even', 'disc', 'milgram', 'min', 'roots', 'two-modular'):
        analyze.add_argument(f'--{flag}', action='store_true')
    analyze.add_argument('--census', type=int, default=None, metavar='B', help='norm census up to |q| ≤ B')
    analyze.add_argument('--up-to-sign', action='store_true')

    autos = sub.add_parser('autos', help='isometries and (co)invariant lattices')
    autos_sub = autos.add_subparsers(dest='autos_command', required=True)
    coinvariant = autos_sub.add_parser('coinvariant')
    coinvariant.add_argument('--lattice', required=True)
    coinvariant.add_argument('--gens', required=True, help='JSON list of isometry matrices')
    zoo = autos_sub.add_parser('zoo')
    zoo.add_argument('--entry', type=str, default='')

    walls = sub.add_parser('walls', help='wall divisors and realizability')
    walls_sub = walls.add_subparsers(dest='walls_command', required=True)
    check = walls_sub.add_parser('check')
    check.add_argument('--n', type=int, required=True)
    check.add_argument('--lattice', type=str, default='', help='Mukai-type lattice; default U^4⊕E8(-1)^2')
    check.add_argument('--v', type=str, default=None, help='v in the coordinates of --lattice')
    check.add_argument('--divisor', type=str, required=True, help='comma-separated coordinates of D in L_n')
    check.add_argument('--ambient', action='store_true', help='--divisor is given in L_M coordinates')
    realize = walls_sub.add_parser('realize')
    realize.add_argument('--lattice', required=True)
    realize.add_argument('--n', type=int, required=True)
    realize.add_argument('--complement', action='append', default=[])
    obstruction = walls_sub.add_parser('obstruction')
    obstruction.add_argument('--lattice', required=True)
    obstruction.add_argument('--n', type=int, required=True)
    embeddings = walls_sub.add_parser('embeddings')
    embeddings.add_argument('--lattice', required=True)

    classify = sub.add_parser('classify', help='minimal n table')
    classify_sub = classify.add_subparsers(dest='classify_command', required=True)
    classify_sub.add_parser('table')
    prime = classify_sub.add_parser('prime')
    prime.add_argument('--p', type=int, required=True)
    minimal = classify_sub.add_parser('minimal')
    minimal.add_argument('--lattice', required=True)

    suite = sub.add_parser('verify', help='run a verification suite')
    suite.add_argument('--suite', type=str, default='fast')
    return parser


def configure_logging(verbose: bool, quiet: bool):
    level = logging.DEBUG if verbose else (logging.WARNING if quiet else logging.INFO)
    logging.basicConfig(stream=sys.stderr, level=level, force=True,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def load_config(path: str) -> dict:
    if path == '':
        if not os.path.exists(DEFAULT_CONFIG):
            return {}
        path = DEFAULT_CONFIG
    try:
        config = getConfig(path)
    except FileNotFoundError as e:
        raise InputError(str(e))
    except (yaml.YAMLError, json.JSONDecodeError) as e:
        raise InputError(f"{path}: {e}")
    if not isinstance(config, dict):
        raise InputError(f"{path}: configuration must be a mapping")
    return config


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure_logging(args.verbose, args.quiet)
    try:
        config = load_config(args.config)
        global_config = config.setdefault('global', {}) or {}
        config['global'] = global_config
        if args.threads is not None:
            if args.threads < 1:
                raise InputError("--threads must be a positive integer")
            global_config['threads'] = args.threads
        if args.cap is not None:
            global_config['enumeration_cap'] = args.cap
        GlobalVarGetter.set(config)
        if args.command == 'verify':
            result, code = verify(args, config)
        else:
            result, code = COMMANDS[args.command](args)
    except PropertyViolation as e:
        logger.error("check failed: %s", e)
        return 1
    except InputError as e:
        logger.error("input error: %s", e)
        return 2
    except LatticeError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return 2
    text = dumps(result)
    if args.output:
        with open(args.output, 'w', encoding='utf8') as fp:
            fp.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
