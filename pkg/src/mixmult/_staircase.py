"""Boolean membership arrays of monomial ideals on a bounding box.

``arr[a]`` is True iff the monomial with exponent vector ``a`` lies in the
ideal.  Products with an ideal become OR-ed shifted copies, which keeps the
length counts for large powers cheap.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


def ideal_array(gens: Iterable[Sequence[int]], shape: tuple[int, ...]) -> np.ndarray:
    arr = np.zeros(shape, dtype=bool)
    for g in gens:
        if all(e < s for e, s in zip(g, shape)):
            arr[tuple(g)] = True
    for axis in range(len(shape)):
        np.logical_or.accumulate(arr, axis=axis, out=arr)
    return arr


def shift(arr: np.ndarray, g: Sequence[int]) -> np.ndarray:
    """Array of ``g * L`` given the array of ``L``."""
    out = np.zeros_like(arr)
    if any(e >= s for e, s in zip(g, arr.shape)):
        return out
    dst = tuple(slice(e, None) for e in g)
    src = tuple(slice(0, s - e) for e, s in zip(g, arr.shape))
    out[dst] = arr[src]
    return out


def dilate(arr: np.ndarray, gens: Iterable[Sequence[int]]) -> np.ndarray:
    """Array of ``G * L`` for the ideal G generated by ``gens``."""
    out = np.zeros_like(arr)
    for g in gens:
        out |= shift(arr, g)
    return out


def unit_array(shape: tuple[int, ...]) -> np.ndarray:
    return np.ones(shape, dtype=bool)
