"""Cyclic locally repairable codes: construction, certification, repair."""

import json

from ._cyclrc import (
    Code,
    CyclrcError,
    bch_bound,
    conjugacy_closure,
    construct,
    feasible_parameters,
    from_descriptor,
)

__all__ = [
    "Code",
    "CyclrcError",
    "bch_bound",
    "certificate",
    "conjugacy_closure",
    "construct",
    "descriptor",
    "feasible_parameters",
    "from_descriptor",
    "repair_cost",
]


def certificate(code, exhaustive=False, cap=10_000_000, jobs=1):
    return json.loads(code.certify(exhaustive=exhaustive, cap=cap, jobs=jobs))


def descriptor(code, with_certificate=True):
    return json.loads(code.descriptor(with_certificate=with_certificate))


def repair_cost(code, erased):
    return json.loads(code.repair_cost(list(erased)))
