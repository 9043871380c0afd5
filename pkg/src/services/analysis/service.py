"""Сервис анализа.

Этот модуль содержит сценарии команд: загрузка входного файла через репозитории,
вызов вычислительных сервисов и сохранение артефактов.
"""

import math
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel

from src.core import ProblemKind, Verdict, settings
from src.core.exceptions import InputFormatError, UsageError
from src.core.logger import get_logger
from src.infrastructure.storage import (
    DimacsRepository,
    JsonRepository,
    NetworkRepository,
    TrajectoryRepository,
    instance_repository,
    load_json,
    read_text,
)
from src.services.analysis.models import (
    AutomatonDocument,
    EquivalenceCheck,
    ReductionDocument,
    SolveDocument,
    ValidationDocument,
)
from src.services.automata import Nfa, distinguishing_word, nfa_from_network, subset_construction
from src.services.dynamics import SimConfig, StabilityReport, simulate, stability_probe
from src.services.measures import MeasureReport, measure
from src.services.network import validate
from src.services.problems import (
    InterdictionInstance,
    SatResult,
    ShortestPathInstance,
    TspInstance,
    check_assignment,
    interdict,
    path_cost,
    sat_classify,
    shortest_path,
    solve_2sat,
    solve_sat_bruteforce,
    sssp_oracle,
    tour_cost,
    tsp_annealing,
    tsp_exact,
    tsp_greedy_mepp,
)
from src.services.reduction import contract_chains

logger = get_logger(__name__)

DIMACS_PROBLEMS = {ProblemKind.SAT_CLASSIFY, ProblemKind.TWO_SAT, ProblemKind.SAT}


class AnalysisService:
    """Сервис, выполняющий команды над файлами.

    Каждый метод читает вход, ничего не меняя в нём, и возвращает краткую сводку
    для строки диагностики.

    Attributes:
        network_repo: Репозиторий сетей.
        trajectory_repo: Репозиторий CSV траекторий.
        dimacs_repo: Репозиторий формул DIMACS.
        logger: Логгер сервиса.
    """

    def __init__(
        self,
        network_repo: NetworkRepository | None = None,
        trajectory_repo: TrajectoryRepository | None = None,
        dimacs_repo: DimacsRepository | None = None,
    ):
        """Инициализирует сервис.

        Args:
            network_repo: Репозиторий сетей.
            trajectory_repo: Репозиторий траекторий.
            dimacs_repo: Репозиторий DIMACS.
        """
        self.network_repo = network_repo or NetworkRepository()
        self.trajectory_repo = trajectory_repo or TrajectoryRepository()
        self.dimacs_repo = dimacs_repo or DimacsRepository()
        self.logger = logger

    def _write(self, path: Path, document: BaseModel) -> None:
        JsonRepository(type(document)).write(path, document)

    def simulate(self, input_path: Path, output_path: Path, config: SimConfig | None = None) -> Dict[str, Any]:
        """Симулирует сеть и записывает траекторию в CSV.

        Returns:
            Dict[str, Any]: Причина остановки, число шагов, финальные S и L.
        """
        config = config or settings.simulation
        log = self.logger.bind(input=str(input_path))
        network = self.network_repo.read(input_path)
        trajectory = simulate(network, config)
        self.trajectory_repo.write(output_path, trajectory)
        log.info("Simulation saved", output=str(output_path))
        return {
            "terminated": trajectory.terminated.value,
            "steps": len(trajectory.snapshots) - 1,
            "final_entropy": trajectory.final.entropy,
            "final_generator": trajectory.final.generator,
        }

    def probe(
        self,
        input_path: Path,
        output_path: Path,
        relative_perturbation: float,
        config: SimConfig | None = None,
    ) -> StabilityReport:
        """Доводит сеть до стационара, возмущает её и записывает StabilityReport в JSON."""
        config = config or settings.simulation
        network = self.network_repo.read(input_path)
        steady = simulate(network, config).final_network()
        report = stability_probe(steady, relative_perturbation, config)
        self._write(output_path, report)
        return report

    def measure(self, input_path: Path, output_path: Path) -> MeasureReport:
        """Вычисляет меры сети и записывает MeasureReport."""
        report = measure(self.network_repo.read(input_path))
        self._write(output_path, report)
        self.logger.info("Measure saved", class_label=report.class_label.value)
        return report

    def reduce(self, input_path: Path, output_path: Path) -> ReductionDocument:
        """Стягивает цепочки и записывает сеть, журнал и меры до и после."""
        network = self.network_repo.read(input_path)
        before = measure(network)
        reduced, trace = contract_chains(network)
        document = ReductionDocument(network=reduced, trace=trace, before=before, after=measure(reduced))
        self._write(output_path, document)
        return document

    def _load_automaton(self, input_path: Path) -> Nfa:
        data = load_json(read_text(input_path), str(input_path))
        if isinstance(data, dict) and "states" in data:
            return JsonRepository(Nfa).from_data(data, str(input_path))
        return nfa_from_network(self.network_repo.from_data(data, str(input_path)))

    def automaton(self, input_path: Path, output_path: Path, max_len: Optional[int] = None) -> AutomatonDocument:
        """Строит НКА (из сети или документа автомата), его ДКА и проверяет эквивалентность.

        Args:
            input_path: Сеть или документ автомата.
            output_path: Путь для AutomatonDocument.
            max_len: Длина ограниченной проверки эквивалентности (не выполняется, если None).
        """
        nfa = self._load_automaton(input_path)
        dfa = subset_construction(nfa)
        equivalence = None
        if max_len is not None:
            witness = distinguishing_word(nfa, dfa, max_len)
            equivalence = EquivalenceCheck(max_len=max_len, equivalent=witness is None, witness=witness)
        document = AutomatonDocument(nfa=nfa, dfa=dfa, equivalence=equivalence)
        self._write(output_path, document)
        return document

    def solve(
        self,
        input_path: Path,
        output_path: Path,
        problem: ProblemKind,
        seed: Optional[int] = None,
        budget: Optional[int] = None,
    ) -> SolveDocument:
        """Решает экземпляр задачи и записывает результат с сертификатом.

        Args:
            input_path: JSON-экземпляр или DIMACS-формула.
            output_path: Путь для SolveDocument.
            problem: Тип задачи.
            seed: Зерно для отжига (по умолчанию SIM_SEED).
            budget: Переопределяет бюджет интердикции.

        Raises:
            UsageError: Если budget превышает число удаляемых рёбер.
        """
        log = self.logger.bind(problem=problem.value, input=str(input_path))
        if problem in DIMACS_PROBLEMS:
            result, verified = self._solve_cnf(input_path, problem)
        else:
            instance = instance_repository(problem).read(input_path)
            result, verified = self._solve_instance(instance, problem, seed, budget)
        document = SolveDocument(problem=problem, result=result.model_dump(mode="json"), verified=verified)
        self._write(output_path, document)
        log.info("Problem solved", verified=verified)
        return document

    def _solve_instance(
        self, instance: Any, problem: ProblemKind, seed: Optional[int], budget: Optional[int]
    ) -> tuple[BaseModel, bool]:
        if isinstance(instance, InterdictionInstance):
            if budget is not None:
                if budget > len(instance.removable_edges):
                    raise UsageError(
                        message="--budget превышает число удаляемых рёбер",
                        details={"budget": budget, "removable": len(instance.removable_edges)},
                    )
                instance = JsonRepository(InterdictionInstance).from_data(
                    {**instance.model_dump(by_alias=True), "budget": budget}, "--budget"
                )
            result = interdict(instance)
            check = shortest_path(instance.graph.without(set(result.removed)), instance.source, instance.target)
            return result, check.reachable == result.reachable and check.cost == result.cost
        if isinstance(instance, ShortestPathInstance):
            solver = sssp_oracle if problem == ProblemKind.SSSP_ORACLE else shortest_path
            path = solver(instance.graph, instance.source, instance.target)
            verified = not path.reachable or (
                path.path[0] == instance.source
                and path.path[-1] == instance.target
                and math.isclose(path_cost(instance.graph, path.path), path.value, rel_tol=1e-12, abs_tol=1e-12)
            )
            return path, verified
        if isinstance(instance, TspInstance):
            if problem == ProblemKind.TSP_GREEDY:
                tour = tsp_greedy_mepp(instance)
            elif problem == ProblemKind.TSP_ANNEAL:
                tour = tsp_annealing(instance, seed=settings.SIM_SEED if seed is None else seed)
            else:
                tour = tsp_exact(instance)
            return tour, math.isclose(tour_cost(instance, tour.tour), tour.cost, rel_tol=1e-12, abs_tol=1e-12)
        raise InputFormatError(message=f"Неизвестный тип экземпляра для задачи '{problem.value}'")

    def _solve_cnf(self, input_path: Path, problem: ProblemKind) -> tuple[BaseModel, bool]:
        parsed = self.dimacs_repo.read(input_path)
        formula = parsed.formula
        if problem == ProblemKind.SAT_CLASSIFY:
            return sat_classify(formula), True
        if parsed.empty_clause:
            self.logger.info("Empty clause in input, formula is unsatisfiable")
            return SatResult(verdict=Verdict.UNSATISFIABLE), True
        result = solve_2sat(formula) if problem == ProblemKind.TWO_SAT else solve_sat_bruteforce(formula)
        if result.verdict == Verdict.SATISFIABLE and result.assignment is not None:
            return result, check_assignment(formula, result.assignment)
        return result, True

    def validate(self, input_path: Path, output_path: Optional[Path] = None) -> ValidationDocument:
        """Проверяет инварианты сети; отчёт пишется, если задан output_path."""
        violations = tuple(validate(self.network_repo.read(input_path)))
        document = ValidationDocument(valid=not violations, violations=violations)
        if output_path is not None:
            self._write(output_path, document)
        return document

