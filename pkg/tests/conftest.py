import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "backend", "src"))

from utils.GlobalVarGetter import GlobalVarGetter


@pytest.fixture(autouse=True)
def reset_global_var():
    GlobalVarGetter.reset()
    yield
    GlobalVarGetter.reset()
