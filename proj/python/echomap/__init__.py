"""Impact-echo defect mapping: slab synthesis, spectral analysis, defect
masks and evaluation metrics. The heavy lifting lives in the C++ core;
this package is a thin re-export of the extension module."""

from echomap._core import *  # noqa: F401,F403
from echomap._core import __version__  # noqa: F401
