"""Per-DMU fan-out. Results always come back in DMU order."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any, Callable, Iterable


def map_dmus(func: Callable[..., Any], matrix: Any, dmus: Iterable[int], jobs: int = 1, **kwargs: Any) -> list[Any]:
    dmus = list(dmus)
    call = partial(_apply, func, matrix, kwargs)
    if jobs <= 1 or len(dmus) < 2:
        return [call(p) for p in dmus]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(call, dmus))


def _apply(func, matrix, kwargs, p):
    return func(matrix, p, **kwargs)
