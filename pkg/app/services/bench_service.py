# app/services/bench_service.py

import logging
from typing import Callable, Dict, List, Sequence, Tuple

from app.combinatorics import Partition, SkewShape, CycleType, first_row_extend, partitions_of
from app.exceptions import ConsistencyError, DomainError
from app.models import BenchResult, BenchRow
from app.services.character_service import CharacterEvaluator, degree_hook
from app.services.stable_character_service import StableCharacterService, StableClassSpec
from app.timing_util import measure

logger = logging.getLogger(__name__)

STABLE_STRATEGIES = ("naive", "memo", "poly")
DEGREE_STRATEGIES = ("hook", "cz", "poly", "memo")

# (value, calls spent on this instance)
Outcome = Tuple[int, int]


class _Strategy:
    """A named way to produce one value per instance, reporting the calls it spent."""

    def __init__(self, name: str, run: Callable[..., Outcome]):
        self.name = name
        self.run = run


class BenchService:
    """
    Times several strategies over the same instances.

    Every strategy runs once on the first instance before timing, and the
    values of all strategies must agree instance by instance before any
    timing is reported. When both the naive and the memoized recursion are
    benchmarked, the memoized one must not spend more calls on any instance.
    """

    def run_stable(self, lam: Partition, nu: Partition, ns: Sequence[int], strategies: Sequence[str] = STABLE_STRATEGIES) -> BenchResult:
        """
        Benchmark chi^(n, lambda) on the classes (nu, 1^{n+k-m}).

        Args:
            lam: the fixed partition lambda
            nu: the non-trivial part of the class
            ns: values of n to evaluate, each at least valid_from
            strategies: any of "naive", "memo", "poly"

        Returns:
            BenchResult with one row per strategy; each row carries the total
            and the per-instance call counts
        """
        spec = StableClassSpec(lam, nu)
        ns = list(ns)
        if ns and min(ns) < spec.valid_from:
            raise DomainError(f"stable family needs n >= {spec.valid_from}, got {min(ns)}")
        built: List[_Strategy] = []
        for name in strategies:
            if name not in STABLE_STRATEGIES:
                raise DomainError(f"unknown stable strategy {name!r}; choose from {', '.join(STABLE_STRATEGIES)}")
            built.append(self._stable_strategy(name, spec))
        return self._time("stable", built, [(n,) for n in ns])

    def _stable_strategy(self, name: str, spec: StableClassSpec) -> _Strategy:
        if name == "poly":
            service = StableCharacterService()
            cache: Dict[str, object] = {}

            def run(n: int) -> Outcome:
                if "poly" not in cache:
                    cache["poly"] = service.stable_char_poly(spec).poly
                return int(cache["poly"](n)), 1
            return _Strategy(name, run)

        def run(n: int) -> Outcome:
            # memo tables are per instance
            evaluator = CharacterEvaluator(memoize=(name == "memo"))
            value = evaluator.value(SkewShape.straight(first_row_extend(spec.lam, n)), spec.class_at(n))
            return value, evaluator.calls
        return _Strategy(name, run)

    def run_degree(self, k: int, ns: Sequence[int], strategies: Sequence[str] = DEGREE_STRATEGIES) -> BenchResult:
        """Benchmark f^(n, lambda) for every lambda of size k and every n in ns with n >= lambda_1."""
        lams = list(partitions_of(k))
        instances = [(lam, n) for n in ns for lam in lams if n >= max(lam.first, 1)]
        built: List[_Strategy] = []
        for name in strategies:
            if name not in DEGREE_STRATEGIES:
                raise DomainError(f"unknown degree strategy {name!r}; choose from {', '.join(DEGREE_STRATEGIES)}")
            built.append(self._degree_strategy(name))
        return self._time("degree", built, instances)

    def _degree_strategy(self, name: str) -> _Strategy:
        service = StableCharacterService()
        polys: Dict[Partition, object] = {}

        def run(lam: Partition, n: int) -> Outcome:
            if name == "hook":
                return degree_hook(first_row_extend(lam, n)), 1
            if name == "cz":
                return service.cz_degree(lam, n), 1
            if name == "poly":
                if lam not in polys:
                    polys[lam] = service.cz_degree_poly(lam)
                return int(polys[lam](n)), 1
            evaluator = CharacterEvaluator(memoize=True)
            extended = first_row_extend(lam, n)
            value = evaluator.value(SkewShape.straight(extended), CycleType.identity(extended.size))
            return value, evaluator.calls
        return _Strategy(name, run)

    def _time(self, family: str, strategies: List[_Strategy], instances: List[Tuple]) -> BenchResult:
        if not instances or not strategies:
            return BenchResult(family=family, rows=[])
        for strategy in strategies:
            strategy.run(*instances[0])  # warm-up

        rows: List[BenchRow] = []
        values: Dict[str, List[int]] = {}
        calls: Dict[str, List[int]] = {}
        for strategy in strategies:
            outcomes, seconds = measure(lambda: [strategy.run(*args) for args in instances])
            values[strategy.name] = [value for value, _ in outcomes]
            calls[strategy.name] = [spent for _, spent in outcomes]
            rows.append(BenchRow(
                strategy=strategy.name,
                instances=str(len(instances)),
                calls=str(sum(calls[strategy.name])),
                per_instance_calls=[str(spent) for spent in calls[strategy.name]],
                wall_seconds=round(seconds, 6),
            ))

        reference_name = strategies[0].name
        for name, results in values.items():
            for args, expected, got in zip(instances, values[reference_name], results):
                if expected != got:
                    raise ConsistencyError(
                        f"{family} benchmark: strategy {name} gives {got} but {reference_name} gives {expected} at {args}"
                    )
        if "naive" in calls and "memo" in calls:
            self._check_memo_calls(family, instances, calls["naive"], calls["memo"])
        logger.info(f"{family} benchmark: {len(strategies)} strategies agree on {len(instances)} instances")
        return BenchResult(family=family, rows=rows)

    @staticmethod
    def _check_memo_calls(family: str, instances: List[Tuple], naive: List[int], memo: List[int]) -> None:
        for args, naive_calls, memo_calls in zip(instances, naive, memo):
            if memo_calls > naive_calls:
                logger.error(f"{family} benchmark: memo spent {memo_calls} calls at {args}, naive {naive_calls}")
                raise ConsistencyError(
                    f"{family} benchmark: memoized recursion made {memo_calls} calls but naive made {naive_calls} at {args}"
                )
