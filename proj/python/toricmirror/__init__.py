"""Python access to the toricmirror C++ core.

Every operation takes and returns plain JSON-compatible data; see ``run``.
"""

import json
import os

from . import _core

__all__ = ["commands", "run", "period", "check_fixture", "DomainError"]


class DomainError(ValueError):
    """A library precondition failed; ``kind`` is the machine-readable tag."""

    def __init__(self, kind, detail):
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail


def _wrap(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ValueError as e:
        kind, _, detail = str(e).partition(": ")
        raise DomainError(kind, detail) from None


def _document(value):
    if isinstance(value, (str, os.PathLike)) and os.path.exists(value):
        with open(value) as fh:
            return fh.read()
    if isinstance(value, str):
        return value
    return json.dumps(value)


def commands():
    return list(_core.commands())


def run(command, omega=None, max_degree=10, drop_constant=False, **inputs):
    """Run a subcommand. Inputs are dicts, JSON strings or file paths, keyed
    like the CLI flags (``f``, ``scaffolding``, ``git``, ``polytope``,
    ``mutation``, ``input``)."""
    docs = {k: _document(v) for k, v in inputs.items()}
    out = _wrap(_core.run, command, docs, omega, max_degree, drop_constant)
    return json.loads(out)


def period(expr, vars, max_degree):
    return [int(c) for c in _wrap(_core.period, expr, list(vars), max_degree)]


def check_fixture(fixture):
    return json.loads(_wrap(_core.check_fixture, _document(fixture)))
