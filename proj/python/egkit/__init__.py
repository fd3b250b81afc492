"""Edelman-Greene insertion, sorting networks, and word posets."""

try:
    from ._egkit import *  # noqa: F401,F403
    from ._egkit import __version__  # noqa: F401
except ImportError:  # running against a build tree
    from _egkit import *  # noqa: F401,F403
    from _egkit import __version__  # noqa: F401
