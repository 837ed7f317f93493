"""Census of regular elementary abelian subgroups acting on p^3 points.

Thin wrapper over the C++ core. Each command returns the same JSON documents
the command line tool emits, parsed into dictionaries.
"""

import json as _json

from ._regcensus import CapExceeded, enumerate_params, ideal_dimension, run_raw

DEFAULT_ENUM_CAP = 10_000_000
DEFAULT_CLOSURE_CAP = 1_000_000

__all__ = [
    "CapExceeded",
    "census",
    "enumerate_params",
    "ideal_dimension",
    "oracle",
    "orbits",
    "run",
    "verify",
]


def run(command, p, k=None, *, enum_cap=DEFAULT_ENUM_CAP, closure_cap=DEFAULT_CLOSURE_CAP):
    """Run one subcommand; returns (exit_code, parsed report documents).

    Exit codes follow the CLI: 0 ok, 1 check failed, 3 cap exceeded. Usage
    errors raise ValueError instead.
    """
    code, out, err = run_raw(
        command, p, -1 if k is None else int(k), int(enum_cap), int(closure_cap), "json"
    )
    if code == 2:
        raise ValueError(err.strip())
    return code, _json.loads(out) if out else []


def census(p, k=None, **caps):
    return run("census", p, k, **caps)[1]


def orbits(p, k=None, **caps):
    return run("orbits", p, k, **caps)[1]


def oracle(p, k=None, **caps):
    return run("oracle", p, k, **caps)[1]


def verify(p, k=None, **caps):
    return run("verify", p, k, **caps)[1]
