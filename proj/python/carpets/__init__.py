"""Self-similar carpets over finite fields.

Fields are given by descriptor strings ("5", "3^2", "19^2/1,0,1") and field
elements by their integer encodings.
"""

import json

from ._carpets import (
    CapacityError,
    DomainError,
    Field,
    aperiodicity_witness,
    assemble,
    closed_form_f,
    entries,
    entry_at,
    fundamental_block,
    generate,
    has_zeros,
    mirror,
    pbm,
    ppm,
    row_rescale_O,
    scan,
)
from . import _carpets


def analyze(field, m, scan=False):
    return json.loads(_carpets._analysis_report(field, m, scan))


def classify(field, m):
    return json.loads(_carpets._classify(field, m))


def tiles(field, m):
    return json.loads(_carpets._tiles(field, m))


def verify(check=""):
    return json.loads(_carpets._verify(check))


def central_sum_S(n):
    return int(_carpets.central_sum_S(n))


def delannoy(n, k):
    return int(_carpets.delannoy(n, k))


__all__ = [
    "CapacityError",
    "DomainError",
    "Field",
    "analyze",
    "aperiodicity_witness",
    "assemble",
    "central_sum_S",
    "classify",
    "closed_form_f",
    "delannoy",
    "entries",
    "entry_at",
    "fundamental_block",
    "generate",
    "has_zeros",
    "mirror",
    "pbm",
    "ppm",
    "row_rescale_O",
    "scan",
    "tiles",
    "verify",
]
