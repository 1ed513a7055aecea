"""Hybrid next-occupation recommender.

Thin Python facade over the compiled extension module.  In an installed wheel
the extension lives inside this package; in a plain CMake build tree it is a
top-level module on ``PYTHONPATH`` (``<build>/bindings``) — support both.
"""

try:
    from ._talentrec import *  # noqa: F401,F403
    from ._talentrec import __doc__ as _core_doc
except ImportError:  # pragma: no cover - CMake build tree layout
    from _talentrec import *  # type: ignore # noqa: F401,F403
    from _talentrec import __doc__ as _core_doc

__all__ = [
    "prepare",
    "synth",
    "preset_names",
    "package_info",
    "evaluate",
    "sensitivity",
    "explain",
    "stats_from_metrics",
    "wilcoxon_exact",
    "metrics_at_5",
    "rank_target",
]

if _core_doc:
    __doc__ = __doc__ + "\n\n" + _core_doc
