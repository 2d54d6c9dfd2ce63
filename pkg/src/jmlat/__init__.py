"""Exact verification toolkit for join-meet ideals of finite lattices."""

__version__ = "0.1.0"

from .errors import *  # noqa: E402,F401,F403
from .lattice import *  # noqa: E402,F401,F403
from .families import *  # noqa: E402,F401,F403
from .polyring import *  # noqa: E402,F401,F403
from .groebner import *  # noqa: E402,F401,F403
from .joinmeet import *  # noqa: E402,F401,F403
from .decomposition import *  # noqa: E402,F401,F403
from .structure import *  # noqa: E402,F401,F403
from .certificates import *  # noqa: E402,F401,F403
from .claims import *  # noqa: E402,F401,F403
from .bench import bench  # noqa: E402,F401
