"""Named example functions."""
import numpy as np

from .core import FunctionTable


def chain_indicator(n):
    """1 on the n + 1 points (1,...,1,0,...,0), 0 elsewhere.

    Exactly 2-locally monotone for n >= 3, yet its lattice derivatives are
    fully permutable.
    """
    return FunctionTable.from_function(
        n, lambda x: int(all(x[i] >= x[i + 1] for i in range(n - 1))))


def parity(n, u=0, v=1):
    """u on points of even weight and v on points of odd weight."""
    return FunctionTable.from_function(n, lambda x: v if sum(x) % 2 else u)


def boolean_tables(n):
    """All 2**(2**n) Boolean functions of arity n as rows of an int64 array,
    row r being the function whose table bits are the binary digits of r."""
    size = 1 << n
    rows = np.arange(1 << size, dtype=np.int64)
    return ((rows[:, None] >> np.arange(size)[None, :]) & 1).astype(np.int64)
