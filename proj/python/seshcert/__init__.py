"""Exact exclusion certificates for multipoint Seshadri bounds on fake projective planes."""

import json

from ._seshcert import (  # noqa: F401
    all_ones_excluded,
    ceil_sqrt,
    compare_thm_vs_szsz,
    f_value,
    is_below_threshold,
    k_cutoff,
    optimize_delta,
    q_decimal,
    q_sign,
    ratio,
    run_cli,
    szemberg_floor,
    tail_threshold,
    xu_floor,
)
from . import _seshcert


def verify_delta(r, delta, filters=None, k_max=None, threads=1):
    """Certificate for 1/(sqrt(r)+delta) as a dict (same schema as the CLI's JSON)."""
    return json.loads(_seshcert.verify_delta_json(r, str(delta), filters, k_max, threads))


def comparison_table(r_from=2, r_to=16, digits="four"):
    return json.loads(_seshcert.comparison_table_json(r_from, r_to, digits))
