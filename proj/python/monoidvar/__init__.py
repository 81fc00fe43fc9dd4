"""Python access to the monoidvar workbench.

Words use one character per letter: a-z plus the band letters A-Z, ``x^k``
for powers and ``1`` for the empty word. Identities are written ``u = v``.
Most functions return decoded JSON reports.
"""

import json

from . import _core

__all__ = [
    "normalize",
    "decompose",
    "criterion",
    "derive",
    "check",
    "includes",
    "varieties",
    "rees",
    "rigid",
    "replay",
]

normalize = _core.normalize
varieties = _core.varieties


def decompose(word):
    return json.loads(_core.decompose(word))


def criterion(which, identity, n=2):
    """Decide ``identity`` in F, Q, SL, trivial or comm (commutative, x^n = x^(n+1))."""
    return json.loads(_core.criterion(which, identity, n))


def derive(identity, system, len_cap=0, max_states=200000):
    """Search for a derivation. ``system`` uses the system file format."""
    return json.loads(_core.derive(identity, system, len_cap, max_states))


def check(variety, identity):
    return json.loads(_core.check(variety, identity))


def includes(v, w):
    return json.loads(_core.includes(v, w))


def rees(words, table=False):
    return json.loads(_core.rees(list(words), table))


def rigid(identity, n, j=0):
    return json.loads(_core.rigid(identity, n, j))


def replay():
    return json.loads(_core.replay())
