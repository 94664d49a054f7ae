"""Moduli-space volumes of crowned boundaries and cusped discs."""

try:
    from ._crownvol import *  # noqa: F401,F403  (installed package layout)
    from ._crownvol import __doc__  # noqa: F401
except ImportError:  # build-tree layout: module sits next to us on sys.path
    from _crownvol import *  # noqa: F401,F403
