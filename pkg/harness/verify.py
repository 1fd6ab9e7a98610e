"""
Differential verification

Runs every registered algorithm on each case and compares distances
against the first one (brute force when present). Cases run concurrently
on a thread pool; lines are printed in suite order.
"""
import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Union

import config
from algorithms import DiameterAlgorithm, DiameterReport, algorithm_registry
from core.errors import DiameterError
from datagen import PointSource
from .suites import VerifyCase

logger = logging.getLogger(__name__)

Case = Union[VerifyCase, PointSource]


@dataclass
class VerifyResult:
    label: str
    passed: bool
    reports: Dict[str, DiameterReport] = field(default_factory=dict)
    error: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.error:
            return f"{status} {self.label}: {self.error}"
        dists = " ".join(f"{name}={r.dist!r}" for name, r in self.reports.items())
        return f"{status} {self.label} {dists}"


def distances_agree(a: DiameterReport, b: DiameterReport, rtol: float, exact: bool = False) -> bool:
    if exact:
        return a.sq_dist == b.sq_dist
    scale = max(abs(a.dist), abs(b.dist))
    return abs(a.dist - b.dist) <= rtol * scale


def check_case(case: VerifyCase, algorithms: Mapping[str, DiameterAlgorithm], rtol: float) -> VerifyResult:
    """Run one case through every algorithm; never raises for library errors."""
    try:
        points = case.load()
        reports = {name: algo.compute(points) for name, algo in algorithms.items()}
    except DiameterError as e:
        logger.error(f"Verify case {case.label} failed: {e}")
        return VerifyResult(case.label, False, error=f"{type(e).__name__}: {e}")

    reference = next(iter(reports.values()))
    passed = all(distances_agree(reference, r, rtol, case.exact) for r in reports.values())
    if not passed:
        logger.warning(f"Mismatch on {case.label}: " + ", ".join(f"{k}={r.sq_dist!r}" for k, r in reports.items()))
    return VerifyResult(case.label, passed, reports)


async def verify_cases(
    cases: Sequence[VerifyCase],
    algorithms: Mapping[str, DiameterAlgorithm],
    rtol: float,
    workers: int,
) -> List[VerifyResult]:
    """Run cases concurrently, results in input order."""
    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="verify") as pool:
        tasks = [loop.run_in_executor(pool, check_case, case, algorithms, rtol) for case in cases]
        return list(await asyncio.gather(*tasks))


def _as_case(case: Case) -> VerifyCase:
    return VerifyCase.from_source(case) if isinstance(case, PointSource) else case


def cmd_verify(
    cases: Sequence[Case],
    *,
    algorithms: Optional[Mapping[str, DiameterAlgorithm]] = None,
    rtol: Optional[float] = None,
    workers: Optional[int] = None,
    echo: Callable[[str], None] = print,
) -> int:
    """Print one PASS/FAIL line per case and a summary; exit status 0 iff all pass."""
    algorithms = algorithms or {a.name: a for a in algorithm_registry.get_all()}
    rtol = config.VERIFY_RTOL if rtol is None else rtol
    workers = workers or config.VERIFY_WORKERS
    normalized = [_as_case(c) for c in cases]

    logger.info(f"Verifying {len(normalized)} cases with {', '.join(algorithms)} (rtol={rtol:g}, workers={workers})")
    results = asyncio.run(verify_cases(normalized, algorithms, rtol, workers))

    failed = 0
    for result in results:
        echo(result.line())
        failed += not result.passed

    echo(f"{len(results) - failed} passed, {failed} failed")
    if failed:
        logger.error(f"❌ Verification failed on {failed} of {len(results)} cases")
        return 1
    logger.info(f"✅ All {len(results)} cases passed")
    return 0
