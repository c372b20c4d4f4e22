"""Kernel selection: compiled Cython backend when importable, else pure Python.

BARIC_KERNEL=pure (or compiled) pins the choice; select_backend() switches at
runtime, which the benchmark uses to compare both on identical workloads.
"""

import os

from baric import _poly_py

_BACKENDS = {"pure": _poly_py}
try:
    from baric import _poly_cy

    _BACKENDS["compiled"] = _poly_cy
except ImportError:
    _poly_cy = None

ZERO_T = _poly_py.ZERO_T
ONE_T = _poly_py.ONE_T

fe_norm = None
fe_add = None
fe_mul = None
fe_neg = None
poly_add = None
poly_sub = None
poly_mul = None
poly_scale = None
BACKEND = None

_EXPORTED = ("fe_norm", "fe_add", "fe_mul", "fe_neg",
             "poly_add", "poly_sub", "poly_mul", "poly_scale")


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def select_backend(name: str) -> str:
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; available: {available_backends()}")
    mod = _BACKENDS[name]
    g = globals()
    for fn in _EXPORTED:
        g[fn] = getattr(mod, fn)
    g["BACKEND"] = mod.BACKEND
    return mod.BACKEND


_env = os.environ.get("BARIC_KERNEL", "").strip().lower()
if _env:
    select_backend(_env)
else:
    select_backend("compiled" if "compiled" in _BACKENDS else "pure")
