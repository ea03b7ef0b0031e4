"""Word-type co-occurrence counts for bitexts.

Thin package wrapper around the _cooc extension module.
"""

from ._cooc import *  # noqa: F401,F403
from ._cooc import oracle  # noqa: F401
