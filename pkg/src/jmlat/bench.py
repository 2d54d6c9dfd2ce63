"""Timing suites: S-pair counts are deterministic, wall times are not."""

from __future__ import annotations

import time

from .decomposition import DEFAULT_INSTANCES, verify_decomposition
from .errors import InvalidParams, ResourceLimit
from .families import build_Lk, build_On
from .groebner import DEFAULT_BUDGET, Budget, buchberger
from .joinmeet import joinmeet_generators, on_generators_closed_form, paper_order, rank_order

__all__ = ["SUITES", "COLUMNS", "bench"]

COLUMNS = ("instance", "vars", "generators", "spairs", "seconds", "status")
SUITES = ("l2-scaling", "l3-decompose", "on-scaling")


def _gb_row(label, L, order, budget, extra_status=""):
    I = joinmeet_generators(L)
    start = time.perf_counter()
    try:
        gb = buchberger(I, order, budget)
        pairs, status = gb.stats["pairs_processed"], "ok"
    except ResourceLimit:
        pairs, status = None, "ResourceLimit"
    secs = time.perf_counter() - start
    if extra_status and status == "ok":
        status = extra_status
    return {
        "instance": label,
        "vars": len(L),
        "generators": len(I.generators),
        "spairs": pairs,
        "seconds": round(secs, 4),
        "status": status,
    }


def bench(suite: str, budget: Budget = DEFAULT_BUDGET) -> list[dict]:
    """Rows with keys ``COLUMNS``.  A pair budget of 0 yields no rows."""
    if suite not in SUITES:
        raise InvalidParams(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if budget.max_pairs == 0:
        return []
    rows = []
    if suite == "l2-scaling":
        for n in range(2, 9):
            L = build_Lk(n, n)
            rows.append(_gb_row(f"L2({n},{n})", L, paper_order(L), budget))
    elif suite == "on-scaling":
        for n in range(2, 11):
            L = build_On(n)
            closed = len(on_generators_closed_form(n))
            row = _gb_row(f"O({n})", L, rank_order(L), budget)
            if closed != row["generators"]:
                row["status"] = f"count-mismatch({closed})"
            rows.append(row)
    else:
        for n, m, r in DEFAULT_INSTANCES:
            L = build_Lk(n, m, r)
            row = _gb_row(f"L3({n},{m},{r})", L, paper_order(L), budget)
            start = time.perf_counter()
            try:
                row["status"] = verify_decomposition(n, m, r, budget).conclusion
            except ResourceLimit:
                row["status"] = "ResourceLimit"
            row["seconds"] = round(row["seconds"] + time.perf_counter() - start, 4)
            rows.append(row)
    return rows
