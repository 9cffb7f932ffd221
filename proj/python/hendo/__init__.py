try:
    from ._hend import *  # noqa: F401,F403
except ImportError:  # source checkout: the extension sits next to the package
    from _hend import *  # noqa: F401,F403
