import logging

from joblib import Parallel, delayed

from core.Errors import InputError
from utils import ModuleFindTool
from utils.GlobalVarGetter import GlobalVarGetter

logger = logging.getLogger(__name__)


class ModeFactory:
    """Builds the joblib executor used for embarrassingly parallel work."""

    @staticmethod
    def create_executor(mode='process', n_jobs=1, params=None):
        if params is None:
            params = {}
        if mode == "process":
            return Parallel(n_jobs=n_jobs, backend="loky", **params)
        elif mode == "thread":
            return Parallel(n_jobs=n_jobs, backend="threading", **params)
        else:
            return ModuleFindTool.find_class_by_path(mode)(n_jobs=n_jobs, **params)


def running_mode(config=None):
    """
    Returns the (mode, n_jobs, params) triple of the current run.

    The triple comes from the ``global`` section of ``config`` or, when no
    config is given, from the configuration published in GlobalVarGetter.
    """
    if config is None:
        config = GlobalVarGetter.get()
    global_config = config.get('global', {}) if config else {}
    threads = int(global_config.get('threads', 1))
    if threads < 1:
        raise InputError('threads must be a positive integer')
    mode_config = global_config.get('mode', 'process')
    if isinstance(mode_config, dict):
        return mode_config['path'], threads, mode_config.get('params', {})
    elif isinstance(mode_config, str):
        if mode_config in ('thread', 'process'):
            return mode_config, threads, {}
        raise InputError('if mode isinstance str, mode must be "thread" or "process"')
    raise InputError('mode config must be a dict or a str')


def parallel_map(function, tasks, n_jobs=None):
    """
    Applies ``function`` to every task and returns the results in task order.

    ``n_jobs`` overrides the configured thread count; one job runs in the
    calling process without touching joblib.
    """
    mode, threads, params = running_mode()
    if n_jobs is not None:
        threads = n_jobs
    tasks = list(tasks)
    if threads == 1 or len(tasks) <= 1:
        return [function(*task) for task in tasks]
    logger.debug("Running %d tasks with %d %s workers", len(tasks), threads, mode)
    executor = ModeFactory.create_executor(mode, threads, params)
    return executor(delayed(function)(*task) for task in tasks)
