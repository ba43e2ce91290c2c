"""Fitness dependent optimizer (FDO / M-IFDO) with benchmark suites.

The heavy lifting lives in the compiled ``_fdo`` extension; this package
re-exports its surface.
"""

try:
    from ._fdo import *  # noqa: F401,F403  (installed wheel layout)
    from . import _fdo as _impl
except ImportError:  # in-tree builds put _fdo next to the package
    from _fdo import *  # noqa: F401,F403
    import _fdo as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
