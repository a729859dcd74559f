import numpy as np


class ScriptedRng:
    """Duck-typed stand-in for RngStream returning preset draws.

    ``script`` is a list consumed front to back: scalars for scalar
    draws, arrays for vector draws. ``uniform``/``random`` pop the next
    entry regardless of the requested range (tests pick entries already
    inside it).
    """

    def __init__(self, script):
        self.script = list(script)

    def _next(self, size):
        value = self.script.pop(0)
        if size is None:
            return float(value)
        out = np.asarray(value, dtype=float)
        assert out.shape == (size,) or out.shape == tuple(np.atleast_1d(size))
        return out

    def random(self, size=None):
        return self._next(size)

    def uniform(self, low, high, size=None):
        return self._next(size)

    def integers(self, n):
        return int(self.script.pop(0))
