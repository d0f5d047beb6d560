"""Value semigroups, dual value sets, residue modules and Poincare polynomials
of reduced curve singularity germs, over exact rational arithmetic.

Documents and reports are plain dicts mirroring the JSON formats of the
``logres`` command-line tool; strings holding JSON text are accepted too.
"""

import json as _json

from logres._core import (
    ComputationError,
    InputError,
    InvariantViolation,
    TruncationError,
    __version__,
    analyze_json as _analyze_json,
    dual_json as _dual_json,
    markdown_json as _markdown_json,
    poincare_json as _poincare_json,
    strata_json as _strata_json,
)

__all__ = [
    "ComputationError",
    "InputError",
    "InvariantViolation",
    "TruncationError",
    "__version__",
    "analyze",
    "dual",
    "markdown",
    "poincare",
    "strata",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def _ideal_text(ideal):
    return "" if ideal is None else _json.dumps(ideal)


def analyze(doc, verify="cross-check", truncation=0, dmax=128):
    """Invariants, value sets and checks for the curve germ in ``doc``."""
    return _json.loads(_analyze_json(_text(doc), verify, truncation, dmax))


def dual(doc, ideal=None, verify="cross-check", truncation=0):
    """Value set of a fractional ideal of the curve in ``doc`` and of its dual.

    ``ideal`` is a preset name or a ``{"generators": [...]}`` dict; ``None``
    uses the document's "ideal" entry, falling back to the ring itself.
    """
    return _json.loads(_dual_json(_text(doc), _ideal_text(ideal), verify, truncation))


def poincare(doc, ideal=None, truncation=0):
    """Poincare polynomial of a fractional ideal, of its dual, and the
    symmetry verdict."""
    return _json.loads(_poincare_json(_text(doc), _ideal_text(ideal), truncation))


def strata(doc, truncation=0, threads=1):
    """Analyze the samples of a deformation plan and group them into strata by
    (Tjurina number, negative residue values)."""
    return _json.loads(_strata_json(_text(doc), truncation, threads))


def markdown(report):
    """Render a report returned by the functions above as markdown."""
    return _markdown_json(_text(report))
