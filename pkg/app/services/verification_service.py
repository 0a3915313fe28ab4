# app/services/verification_service.py

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple

from app.algebra import ratpoly_interpolate
from app.combinatorics import (
    CycleType,
    Partition,
    SkewShape,
    cycle_types_of,
    first_row_extend,
    partitions_of,
)
from app.exceptions import ConsistencyError, GuardError
from app.models import CheckRecord, ReportSummary, VerificationReport
from app.oracle import MAX_SYT_CELLS, count_syt
from app.services.character_service import (
    SHARED_CACHE,
    CharacterEvaluator,
    IrreducibleCharacter,
    degree_hook,
    degree_skew,
    induced_degree,
    induced_value,
)
from app.services.jacobi_trudi_service import verify_minor_identity, verify_schur_identity
from app.services.stable_character_service import StableCharacterService, StableClassSpec
from app.timing_util import log_duration

logger = logging.getLogger(__name__)

# Hard limits of the sweeps
K_MAX = 8
N_MAX = 20
STABLE_K_MAX = 6
INDUCED_N_MAX = 8
CLASSES_K_MAX = 6
CLASSES_N_MAX = 10
SYT_LEG_LIMIT = 20
EXTRA_STABLE_POINTS = 9

Task = Tuple[tuple, Callable[[], CheckRecord]]


def _status(ok: bool) -> str:
    return "OK" if ok else "FAIL"


def _partitions_up_to(k_max: int) -> Iterable[Partition]:
    for k in range(k_max + 1):
        yield from partitions_of(k)


def _guard(name: str, value: int, low: int, high: int) -> None:
    if not low <= value <= high:
        logger.warning(f"refusing {name}={value}, supported range is {low}..{high}")
        raise GuardError(f"{name}={value} outside the supported range {low}..{high}")


class VerificationService:
    """Exhaustive sweeps over the expansion formulas, reported one record per instance."""

    def __init__(self, threads: int = 1, cache_policy: str = "per-call"):
        self.threads = max(1, int(threads))
        self.cache_policy = cache_policy
        logger.info(f"Verification service initialized - threads: {self.threads}, cache: {self.cache_policy}")

    def _stable_service(self) -> StableCharacterService:
        return StableCharacterService(CharacterEvaluator.for_policy(self.cache_policy))

    def _run(self, suite: str, tasks: List[Task]) -> VerificationReport:
        """Run every check, sort by instance key and summarize."""
        logger.debug(f"{suite}: running {len(tasks)} checks on {self.threads} thread(s)")
        if self.threads > 1 and len(tasks) > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                records = list(pool.map(lambda task: task[1](), tasks))
        else:
            records = [check() for _, check in tasks]
        ordered = [record for _, record in sorted(zip((key for key, _ in tasks), records), key=lambda pair: pair[0])]
        failures = [r for r in ordered if r.status != "OK"]
        summary = ReportSummary(
            suite=suite,
            total=str(len(ordered)),
            passed=str(len(ordered) - len(failures)),
            failed=str(len(failures)),
            first_failure=failures[0].instance if failures else None,
        )
        if failures:
            logger.error(f"{suite}: {len(failures)} of {len(ordered)} checks failed, first: {failures[0].instance}")
        else:
            logger.info(f"{suite}: all {len(ordered)} checks passed")
        if self.cache_policy == "shared":
            logger.debug(f"shared cache: {len(SHARED_CACHE)} entries, {SHARED_CACHE.hits} hits, {SHARED_CACHE.misses} misses")
        return VerificationReport(records=ordered, summary=summary)

    @log_duration(60)
    def verify_cz(self, k_max: int, n_max: int) -> VerificationReport:
        """
        cz_degree(lambda, n) against the hook length formula and, for n+k <= 20, tableau counting.

        Args:
            k_max: largest |lambda| swept, at most K_MAX
            n_max: largest n swept, at most N_MAX

        Returns:
            VerificationReport with one record per (lambda, n), sorted by instance
        """
        _guard("k_max", k_max, 0, K_MAX)
        _guard("n_max", n_max, 0, N_MAX)
        service = self._stable_service()
        tasks: List[Task] = []
        for lam in _partitions_up_to(k_max):
            for n in range(max(lam.first, 1), n_max + 1):
                tasks.append(((lam.size, lam.parts, n), self._cz_check(service, lam, n)))
        return self._run("cz", tasks)

    @staticmethod
    def _cz_check(service: StableCharacterService, lam: Partition, n: int) -> Callable[[], CheckRecord]:
        def check() -> CheckRecord:
            lhs = service.cz_degree(lam, n)
            extended = first_row_extend(lam, n)
            rhs = degree_hook(extended)
            witness = None
            ok = lhs == rhs
            if extended.size <= min(SYT_LEG_LIMIT, MAX_SYT_CELLS):
                syt = count_syt(SkewShape.straight(extended))
                if syt != rhs:
                    ok = False
                    witness = [f"count_syt={syt}"]
            return CheckRecord(instance=f"lambda={lam} n={n}", lhs=str(lhs), rhs=str(rhs), status=_status(ok), witness=witness)
        return check

    @log_duration(60)
    def verify_jt(self, k_max: int, n_max: int) -> VerificationReport:
        """The first-row Schur expansion for every (lambda, n) plus the minor identity for every (lambda, j)."""
        _guard("k_max", k_max, 0, K_MAX)
        _guard("n_max", n_max, 0, N_MAX)
        tasks: List[Task] = []
        for lam in _partitions_up_to(k_max):
            for n in range(max(lam.first, 1), n_max + 1):
                tasks.append(((0, lam.size, lam.parts, n), self._schur_check(lam, n)))
            if lam.length:
                for j in range(lam.length + 1):
                    tasks.append(((1, lam.size, lam.parts, j), self._minor_check(lam, j)))
        return self._run("jt", tasks)

    @staticmethod
    def _schur_check(lam: Partition, n: int) -> Callable[[], CheckRecord]:
        def check() -> CheckRecord:
            result = verify_schur_identity(lam, n)
            return CheckRecord(
                instance=f"lambda={lam} n={n}",
                lhs=str(result.lhs),
                rhs=str(result.rhs),
                status=_status(result.holds),
                witness=result.witness or None,
            )
        return check

    @staticmethod
    def _minor_check(lam: Partition, j: int) -> Callable[[], CheckRecord]:
        def check() -> CheckRecord:
            result = verify_minor_identity(lam, j)
            return CheckRecord(
                instance=f"minor lambda={lam} j={j}",
                lhs=str(result.lhs),
                rhs=str(result.rhs),
                status=_status(result.holds),
                witness=result.witness or None,
            )
        return check

    @log_duration(60)
    def verify_rclass(self, k_max: int, n_max: int, rs: Sequence[int] = (1, 2, 3, 4)) -> VerificationReport:
        """rect_class_value and its polynomial against Murnaghan-Nakayama on (n, lambda) at r^{(n+k)/r}."""
        _guard("k_max", k_max, 0, K_MAX)
        _guard("n_max", n_max, 0, N_MAX)
        for r in rs:
            _guard("r", r, 1, N_MAX + K_MAX)
        tasks: List[Task] = []
        for lam in _partitions_up_to(k_max):
            for r in sorted(set(rs)):
                for n in range(max(lam.first, 1), n_max + 1):
                    if (n + lam.size) % r == 0:
                        tasks.append(((lam.size, lam.parts, r, n), self._rclass_check(lam, n, r)))
        return self._run("rclass", tasks)

    def _rclass_check(self, lam: Partition, n: int, r: int) -> Callable[[], CheckRecord]:
        def check() -> CheckRecord:
            service = self._stable_service()
            lhs = service.rect_class_value(lam, n, r)
            alpha = CycleType.rectangular(r, (n + lam.size) // r)
            rhs = service.evaluator.value(SkewShape.straight(first_row_extend(lam, n)), alpha)
            from_poly = service.rect_class_poly(lam, r)(n)
            ok = lhs == rhs and from_poly == lhs
            witness = None if from_poly == lhs else [f"polynomial value {from_poly}"]
            return CheckRecord(instance=f"lambda={lam} r={r} n={n}", lhs=str(lhs), rhs=str(rhs), status=_status(ok), witness=witness)
        return check

    @log_duration(120)
    def verify_stablepoly(self, k_max: int, m_max: int) -> VerificationReport:
        """
        For every lambda |- k <= k_max and nu |- m <= m_max the constructed
        polynomial is compared with the interpolation of direct values from
        valid_from up to valid_from + k + 9.

        Args:
            k_max: largest |lambda|
            m_max: largest |nu|

        Returns:
            VerificationReport; a formula that disagrees with the interpolation
            becomes a failed record rather than an exception
        """
        _guard("k_max", k_max, 0, STABLE_K_MAX)
        _guard("m_max", m_max, 0, STABLE_K_MAX)
        tasks: List[Task] = []
        for lam in _partitions_up_to(k_max):
            for nu in _partitions_up_to(m_max):
                tasks.append(((lam.size, lam.parts, nu.size, nu.parts), self._stable_check(StableClassSpec(lam, nu))))
        return self._run("stablepoly", tasks)

    def _stable_check(self, spec: StableClassSpec) -> Callable[[], CheckRecord]:
        def check() -> CheckRecord:
            instance = f"lambda={spec.lam} nu={spec.nu}"
            service = self._stable_service()
            try:
                stable = service.stable_char_poly(spec)
            except ConsistencyError as e:
                return CheckRecord(instance=instance, lhs="", rhs="", status="FAIL", witness=[str(e)])
            nodes = range(stable.valid_from, stable.valid_from + spec.k + EXTRA_STABLE_POINTS + 1)
            direct = ratpoly_interpolate([(n, Fraction(service.direct_value(spec, n))) for n in nodes])
            return CheckRecord(instance=instance, lhs=str(stable.poly), rhs=str(direct), status=_status(direct == stable.poly))
        return check

    @log_duration(60)
    def verify_induced(self, n_max: int) -> VerificationReport:
        """Induced characters of chi^nu x chi^tau at the identity against C(n, m) f^nu f^tau."""
        _guard("n_max", n_max, 0, INDUCED_N_MAX)
        tasks: List[Task] = []
        for n in range(n_max + 1):
            for m in range(n + 1):
                for nu in partitions_of(m):
                    for tau in partitions_of(n - m):
                        tasks.append(((n, m, nu.parts, tau.parts), self._induced_check(nu, tau)))
        return self._run("induced", tasks)

    def _induced_check(self, nu: Partition, tau: Partition) -> Callable[[], CheckRecord]:
        def check() -> CheckRecord:
            evaluator = CharacterEvaluator.for_policy(self.cache_policy)
            psi = IrreducibleCharacter.of(nu, evaluator)
            phi = IrreducibleCharacter.of(tau, evaluator)
            n = nu.size + tau.size
            lhs = induced_value(psi, phi, CycleType.identity(n))
            rhs = induced_degree(nu.size, n, degree_skew(psi.shape), degree_skew(phi.shape))
            return CheckRecord(instance=f"nu={nu} tau={tau}", lhs=str(lhs), rhs=str(rhs), status=_status(lhs == rhs))
        return check

    @log_duration(120)
    def verify_classes(self, k_max: int, n_max: int) -> VerificationReport:
        """The induced-character expansion of chi^{(n, lambda)} at every class of S_{n+k}."""
        _guard("k_max", k_max, 0, CLASSES_K_MAX)
        _guard("n_max", n_max, 0, CLASSES_N_MAX)
        tasks: List[Task] = []
        for lam in _partitions_up_to(k_max):
            for n in range(max(lam.first, 1), n_max + 1):
                for alpha in cycle_types_of(n + lam.size):
                    key = (lam.size, lam.parts, n, alpha.parts())
                    tasks.append((key, self._class_check(lam, n, alpha)))
        return self._run("classes", tasks)

    def _class_check(self, lam: Partition, n: int, alpha: CycleType) -> Callable[[], CheckRecord]:
        def check() -> CheckRecord:
            service = self._stable_service()
            lhs = service.cz_class_value(lam, n, alpha)
            rhs = service.evaluator.value(SkewShape.straight(first_row_extend(lam, n)), alpha)
            return CheckRecord(instance=f"lambda={lam} n={n} alpha={alpha}", lhs=str(lhs), rhs=str(rhs), status=_status(lhs == rhs))
        return check
