"""Exact kernel for finite-rank Lie conformal superalgebras."""

try:
    from lcsk._lcsk import *  # noqa: F401,F403  (installed layout)
    from lcsk._lcsk import __version__  # noqa: F401
except ImportError:  # in-tree build: extension sits on PYTHONPATH
    from _lcsk import *  # noqa: F401,F403
    from _lcsk import __version__  # noqa: F401
