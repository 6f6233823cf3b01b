"""Extremal families and scan experiments.

Family realizations are labeled graphs numbered block by block, in the order
the blocks appear in the construction: for ``K_a + (coK_b u K_c)`` vertices
``0..a-1`` form the clique ``K_a``, the next ``b`` the independent set and the
last ``c`` the clique ``K_c``.  Extra joining edges go from the independent
block to the clique block, pairing their first vertices.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .conditions import forcibly_k_factor, forcibly_t_tough
from .enumeration import SEQUENCE_CAP, all_graphical_sequences
from .errors import BadK, NotGraphical, RangeError, TooLarge
from .graph import MAX_VERTICES, SmallGraph
from .report import Report, verdict_record
from .seqcore import DegreeSequence, is_graphical, render

log = logging.getLogger(__name__)

CHECKPOINT_EVERY = 100


class FamilyId(str, Enum):
    DEFICIENCY = "deficiency"
    TWO_FACTOR = "two-factor"
    PI_N = "pi-n"
    PI_N_PRIME = "pi-n-prime"


@dataclass(frozen=True)
class FamilyInstance:
    family: FamilyId
    parameters: dict[str, int | str]
    sequence: DegreeSequence
    realization: SmallGraph | None = None

    def __post_init__(self):
        if not is_graphical(self.sequence):
            raise NotGraphical(f"{render(self.sequence)} is not graphical")
        if self.realization is not None and self.realization.degree_sequence() != self.sequence.degrees:
            raise ValueError("realization does not match the sequence")


def _blocks(*terms: tuple[int, int]) -> DegreeSequence:
    return DegreeSequence(v for v, m in terms for _ in range(m))


def _clique_join(a: int, rest: SmallGraph) -> SmallGraph:
    return SmallGraph.complete(a).join(rest)


def _joining_edges(g: SmallGraph, first_indep: int, first_clique: int, count: int) -> SmallGraph:
    return g.with_edges((first_indep + j, first_clique + j) for j in range(count))


def _instance(family: FamilyId, params: dict, seq: DegreeSequence, build) -> FamilyInstance:
    g = build() if seq.n <= MAX_VERTICES else None
    return FamilyInstance(family, params, seq, g)


def family_deficiency(n: int, i: int, beta: int) -> FamilyInstance:
    """``(i-b)^{i+1} (n-i-2)^{n-2i+b-1} (n-1)^{i-b}``, realized with deficiency ``b+2``."""
    if beta < 0 or i < beta or n - 2 * i + beta - 1 < 1 or (n - beta) % 2:
        raise RangeError(f"need 0 <= beta <= i, n - 2i + beta - 1 >= 1, beta = n mod 2; got n={n}, i={i}, beta={beta}")
    a, b, c = i - beta, i + 1, n - 2 * i + beta - 1
    seq = _blocks((i - beta, b), (n - i - 2, c), (n - 1, a))
    build = lambda: _clique_join(a, SmallGraph.empty(b).union(SmallGraph.complete(c)))
    return _instance(FamilyId.DEFICIENCY, {"n": n, "i": i, "beta": beta}, seq, build)


def family_two_factor(n: int, clause: str, i: int | None = None) -> FamilyInstance:
    """Majorizing sequence, with a realization lacking a 2-factor, for one failed clause."""
    params: dict[str, int | str] = {"n": n, "clause": clause}
    if clause in ("iii", "iv"):
        if i is None:
            raise RangeError(f"clause ({clause}) needs an index i")
        params["i"] = i
    elif i is not None:
        raise RangeError(f"clause ({clause}) takes no index")

    if clause == "i":
        if n < 3 or n % 2 == 0:
            raise RangeError("clause (i) needs odd n >= 3")
        h = (n - 1) // 2
        seq = _blocks((h, h + 1), (n - 1, h))
        build = lambda: _clique_join(h, SmallGraph.empty(h + 1))
    elif clause == "ii":
        if n < 4 or n % 2:
            raise RangeError("clause (ii) needs even n >= 4")
        h = (n - 2) // 2
        seq = _blocks((h, h), (n // 2, 2), (n - 1, h))
        build = lambda: _clique_join(h, SmallGraph.empty(h).union(SmallGraph.complete(2)))
    elif clause == "iii":
        # At i = (n-2)/2 the (n-i-2) block is empty and the sequence meets
        # clause (iii); any sequence failing (iii) there also fails (ii).
        if n < 3 or not 0 <= 2 * i <= n - 3:
            raise RangeError("clause (iii) family needs n >= 3 and 0 <= i <= (n-3)/2")
        c = n - 2 * i - 1
        seq = _blocks((i, i), (i + 1, 1), (n - i - 2, c - 1), (n - i - 1, 1), (n - 1, i))
        build = lambda: _joining_edges(
            _clique_join(i, SmallGraph.empty(i + 1).union(SmallGraph.complete(c))), i, 2 * i + 1, 1
        )
    elif clause == "iv":
        if n < 7 or not 1 <= i <= (n - 5) // 2:
            raise RangeError("clause (iv) needs 1 <= i <= (n-5)/2")
        c = n - 2 * i - 2
        seq = _blocks((i, i - 1), (i + 1, 3), (n - i - 3, c - 3), (n - i - 2, 3), (n - 1, i))
        build = lambda: _joining_edges(
            _clique_join(i, SmallGraph.empty(i + 2).union(SmallGraph.complete(c))), i, 2 * i + 2, 3
        )
    else:
        raise RangeError(f"unknown clause {clause!r}")
    return _instance(FamilyId.TWO_FACTOR, params, seq, build)


def family_pi_n(n: int) -> tuple[FamilyInstance, FamilyInstance, int]:
    """``(pi_n, pi'_n, k)`` with ``k = (n+2)/4``; ``pi'_n`` sits two below ``pi_n``."""
    if n < 6 or n % 4 != 2:
        raise RangeError(f"need n = 2 mod 4 and n >= 6, got {n}")
    h = n // 2
    k = (n + 2) // 4
    pi = _blocks((h, h + 1), (n - 1, h - 1))
    prime = _blocks((h - 1, 2), (h, h - 1), (n - 1, h - 1))

    def matching(pairs: int) -> SmallGraph:
        return SmallGraph.from_edges(2 * pairs, ((2 * j, 2 * j + 1) for j in range(pairs)))

    first = _instance(FamilyId.PI_N, {"n": n, "k": k}, pi, lambda: _clique_join(h - 1, matching(k)))
    second = _instance(
        FamilyId.PI_N_PRIME,
        {"n": n, "k": k},
        prime,
        lambda: _clique_join(h - 1, SmallGraph.empty(2).union(matching((n - 2) // 4))),
    )
    return first, second, k


# -- scans -------------------------------------------------------------------------


def _jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get("FACTORSEQ_JOBS", "0") or 0) or (os.cpu_count() or 1)
    return max(1, jobs)


def _map(fn, items, jobs: int):
    if jobs == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _check_pi_n(n: int) -> dict:
    pi, _, k = family_pi_n(n)
    t0 = time.perf_counter()
    verdict = forcibly_k_factor(pi.sequence, k)
    return verdict_record(pi.sequence, "k-factor", {"n": n, "k": k}, verdict, 1000 * (time.perf_counter() - t0))


def _load_checkpoint(path: Path | None, scan: str, params: dict) -> list[dict]:
    if path is None or not path.exists():
        return []
    data = json.loads(path.read_text())
    if data.get("scan") != scan or data.get("params") != params:
        log.warning("ignoring checkpoint %s written for a different scan", path)
        return []
    return data["records"]


def _save_checkpoint(path: Path | None, report: Report):
    if path is None:
        return
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(report.to_json())
    tmp.replace(path)


def scan_pi_n(n_max: int, *, jobs: int | None = 1, checkpoint: str | Path | None = None) -> Report:
    """Run the k-factor condition on ``pi_n``, ``k = (n+2)/4``, for n = 6, 10, ..., <= n_max.

    With ``checkpoint`` the partial report is saved every 100 instances and a
    rerun resumes from it.
    """
    path = Path(checkpoint) if checkpoint is not None else None
    params = {"n_max": n_max}
    report = Report("pi-n", params)
    report.records = _load_checkpoint(path, "pi-n", params)
    done = {r["params"]["n"] for r in report.records}
    todo = [n for n in range(6, n_max + 1, 4) if n not in done]
    workers = _jobs(jobs)
    for start in range(0, len(todo), CHECKPOINT_EVERY):
        report.records.extend(_map(_check_pi_n, todo[start : start + CHECKPOINT_EVERY], workers))
        _save_checkpoint(path, report)
    report.records.sort(key=lambda r: r["params"]["n"])
    failures = [r["params"]["n"] for r in report.records if r["verdict"] == "fails"]
    report.summary = {"checked": len(report.records), "failures": len(failures), "failed_n": failures}
    report.summary_line = f"{len(report.records)} checked, {len(failures)} failures"
    return report


def _tough_factor_one(args: tuple[tuple[int, ...], int]) -> dict | None:
    degrees, k = args
    pi = DegreeSequence(degrees)
    if not forcibly_t_tough(pi, k).holds:
        return None
    t0 = time.perf_counter()
    verdict = forcibly_k_factor(pi, k)
    return verdict_record(pi, "tough-implies-factor", {"k": k}, verdict, 1000 * (time.perf_counter() - t0))


def scan_tough_implies_factor(n_max: int, k: int, *, jobs: int | None = 1) -> Report:
    """Look for sequences the toughness condition accepts at ``t = k`` but the k-factor one rejects.

    One record per sequence passing the toughness condition; a ``fails``
    record is a counterexample to the conjectured implication.
    """
    if k < 2:
        raise BadK("k must be at least 2")
    if n_max > SEQUENCE_CAP:
        raise TooLarge(f"n_max={n_max} exceeds the sequence sweep cap {SEQUENCE_CAP}")
    items = []
    for n in range(1, n_max + 1):
        if n <= k + 1:
            log.info("n=%d skipped: needs n > k + 1", n)
            continue
        if (k * n) % 2:
            log.info("n=%d skipped: k*n is odd", n)
            continue
        items.extend((pi.degrees, k) for pi in all_graphical_sequences(n))
    report = Report("tough-factor", {"n_max": n_max, "k": k})
    report.records = [r for r in _map(_tough_factor_one, items, _jobs(jobs)) if r is not None]
    report.records.sort(key=lambda r: (r["n"], r["sequence"]))
    bad = [r["sequence"] for r in report.records if r["verdict"] == "fails"]
    report.summary = {
        "sequences": len(items),
        "tough": len(report.records),
        "counterexamples": len(bad),
        "counterexample_sequences": bad,
    }
    report.summary_line = f"{len(items)} sequences, {len(report.records)} tough, {len(bad)} counterexamples"
    return report
