try:
    from ._lplane import *  # noqa: F401,F403
    from ._lplane import __doc__  # noqa: F401
except ImportError:  # running against a plain CMake build dir
    from _lplane import *  # noqa: F401,F403
