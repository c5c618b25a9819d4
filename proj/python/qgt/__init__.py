from ._qgt import *  # noqa: F401,F403
