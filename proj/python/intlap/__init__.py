"""Integer Laplacian eigenvalues from graph structure."""

from ._intlap import *  # noqa: F401,F403
from ._intlap import __version__  # noqa: F401
