"""Kernel selection: compiled core if available, numpy fallback otherwise.

``de_fixed_point`` is the single hot entry point; both backends share its
contract (see ``_de_core_py``).  ``BACKEND`` reports which one is active;
force the fallback by setting ``SCLDPCL_FORCE_PYTHON_KERNEL=1`` before
import (used by the parity tests and the benchmark).
"""

import os

from . import _de_core_py

if os.environ.get("SCLDPCL_FORCE_PYTHON_KERNEL"):
    de_fixed_point = _de_core_py.de_fixed_point
    BACKEND = "python"
else:
    try:
        from . import _de_core

        de_fixed_point = _de_core.de_fixed_point
        BACKEND = _de_core.BACKEND
    except ImportError:
        de_fixed_point = _de_core_py.de_fixed_point
        BACKEND = "python"
