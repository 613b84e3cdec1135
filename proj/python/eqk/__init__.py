"""Equivariant K-theory of complete symmetric varieties of minimal rank."""

from ._core import EqkError, Variety, congruent_mod, verbs
from ._core import run as _run


def run(spec, verb, box=2):
    """Run one verb on a job dict and return its report; raises EqkError on failure."""
    code, report = _run(spec, verb, box)
    if code == 2:
        err = report["error"]
        raise EqkError(f"{err['code']}: {err['message']}")
    return report


__all__ = ["EqkError", "Variety", "congruent_mod", "run", "verbs"]
