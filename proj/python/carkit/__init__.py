"""Selfdual CAR algebra toolkit: even-subalgebra isomorphisms, Bogoliubov
endomorphisms, left inverses, a Jordan-Wigner matrix backend, and the
verification suites behind the car-verify CLI."""

from carkit import _core
from carkit._core import *  # noqa: F401,F403

__version__ = "1.0.0"
__all__ = [name for name in dir(_core) if not name.startswith("_")]
