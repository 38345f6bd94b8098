"""
Exhaustive cross-checks over S_n: tower algorithms against brute-force
enumeration and against Schubert polynomial identities.  Cases are spread
over worker processes; ``SCHUBERT_TOWERS_THREADS`` caps how many.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .monk import monk_oracle, monk_products
from .permcore import Permutation, all_perms, inverse, lehmer_code
from .pieri import chain_oracle, pieri
from .schuboracle import verify_monk, verify_pieri
from .towerdiag import diagram_of_perm, perm_of_diagram

__all__ = ["SCOPES", "VerifyReport", "run_verify", "worker_count"]

SCOPES = ("roundtrip", "monk", "pieri-row", "pieri-col")


@dataclass
class VerifyReport:
    scope: str
    n: int
    perms: int = 0
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        what = "permutations" if self.scope == "roundtrip" else f"cases over {self.perms} permutations"
        count = self.perms if self.scope == "roundtrip" else self.cases
        status = "OK" if self.ok else f"FAILED ({len(self.failures)} mismatches)"
        return f"{self.scope}: {count} {what} {status}"


def worker_count() -> int:
    env = os.environ.get("SCHUBERT_TOWERS_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _check_perm(args: tuple[str, tuple[int, ...], int]) -> tuple[int, list[str]]:
    scope, imgs, max_m = args
    w = Permutation(imgs)
    n = max(len(imgs), 1)
    cases, failures = 0, []
    if scope == "roundtrip":
        T = diagram_of_perm(w)
        cases = 1
        if perm_of_diagram(T) != w:
            failures.append(f"roundtrip {w}: got {perm_of_diagram(T)}")
        if T.heights != lehmer_code(inverse(w)):
            failures.append(f"inverse-code {w}: heights {T.heights}")
    elif scope == "monk":
        T = diagram_of_perm(w)
        for k in range(1, n + 1):
            cases += 1
            got = {p.perm for p in monk_products(T, k)}
            if got != monk_oracle(w, k):
                failures.append(f"monk {w} k={k}: algorithm != enumeration")
            if not verify_monk(w, k, got):
                failures.append(f"monk {w} k={k}: polynomial identity fails")
    else:
        mode = "row" if scope == "pieri-row" else "col"
        T = diagram_of_perm(w)
        for k in range(1, n):
            top = max_m if mode == "row" else min(max_m, k)
            for m in range(1, top + 1):
                cases += 1
                got = [L.perm for L in pieri(T, k, m, mode)]
                if set(got) != chain_oracle(w, k, m, mode):
                    failures.append(f"{scope} {w} k={k} m={m}: algorithm != chain enumeration")
                if not verify_pieri(w, k, m, mode, got):
                    failures.append(f"{scope} {w} k={k} m={m}: polynomial identity fails")
    return cases, failures


def run_verify(scope: str, n: int, *, max_m: int = 3, workers: int | None = None,
               sample: int | None = None, seed: int = 0) -> VerifyReport:
    """Check ``scope`` on every permutation of S_n (or a seeded random sample).

    Monk checks every ``k <= n``; Pieri checks ``k < n`` with ``m <= max_m``
    (and ``m <= k`` for columns).
    """
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}, got {scope!r}")
    if n < 1:
        raise ValueError("n must be positive")
    perms = [w.one_line(n) for w in all_perms(n)]
    if sample is not None and sample < len(perms):
        perms = random.Random(seed).sample(perms, sample)
    jobs = [(scope, imgs, max_m) for imgs in perms]
    workers = worker_count() if workers is None else workers
    report = VerifyReport(scope, n, perms=len(jobs))
    if workers <= 1 or len(jobs) < 200:
        results = map(_check_perm, jobs)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_check_perm, jobs, chunksize=max(1, len(jobs) // (8 * workers)))
    try:
        for cases, failures in results:
            report.cases += cases
            report.failures.extend(failures)
    finally:
        if workers > 1 and len(jobs) >= 200:
            pool.shutdown()
    return report
