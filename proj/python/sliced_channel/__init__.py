"""Codec for unordered sets of bit strings under substitution or deletion/insertion errors."""

try:
    from ._sliced import *  # noqa: F401,F403  (installed package layout)
    from ._sliced import __doc__ as _doc
except ImportError:  # in-tree builds put the extension on PYTHONPATH directly
    from _sliced import *  # noqa: F401,F403
    from _sliced import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
