from krongraph._core import *  # noqa: F401,F403
from krongraph._core import __version__  # noqa: F401
