"""Точка входа командной строки.

Этот модуль разбирает аргументы, собирает конфигурацию интегратора, передаёт
команду сервису анализа и превращает исключения в коды завершения:
0 — успех, 1 — ошибка предметной области, 2 — ошибка использования.
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from pydantic import ValidationError as SchemaError

from src.core import ProblemKind, settings
from src.core.exceptions import AppError, UsageError
from src.core.logger import get_logger, render_diagnostic, setup_logger
from src.services.analysis import AnalysisService
from src.services.dynamics import SimConfig

logger = get_logger(__name__)

VERBS = ("simulate", "measure", "reduce", "automaton", "solve", "validate")


def build_parser() -> argparse.ArgumentParser:
    """Создаёт парсер с подкомандами и фиксированным набором флагов."""
    parser = argparse.ArgumentParser(
        prog="thermocomplexity",
        description="Симулятор диссипативных сетей и анализ вычислительной сложности",
    )
    commands = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        command = commands.add_parser(verb)
        command.add_argument("--input", type=Path, required=True)
        command.add_argument("--output", type=Path, required=verb != "validate")
        if verb == "simulate":
            command.add_argument("--dt", type=float)
            command.add_argument("--epsilon", type=float)
            command.add_argument("--window", type=int)
            command.add_argument("--max-steps", type=int)
        if verb in ("simulate", "solve"):
            command.add_argument("--seed", type=int)
        if verb == "solve":
            command.add_argument("--problem", type=ProblemKind, choices=list(ProblemKind), required=True)
            command.add_argument("--budget", type=int)
        if verb == "automaton":
            command.add_argument("--max-len", type=int)
    return parser


def simulation_config(args: argparse.Namespace) -> SimConfig:
    """Собирает SimConfig из настроек и флагов.

    Raises:
        UsageError: Если значения флагов нарушают ограничения конфигурации.
    """
    values: Dict[str, Any] = settings.simulation.model_dump()
    if args.dt is not None:
        values["dt_initial"] = args.dt
        values["dt_max"] = max(values["dt_max"], args.dt)
    for flag, field in (("epsilon", "epsilon"), ("window", "window"), ("max_steps", "max_steps"), ("seed", "seed")):
        if getattr(args, flag) is not None:
            values[field] = getattr(args, flag)
    try:
        return SimConfig.model_validate(values)
    except SchemaError as e:
        first = e.errors()[0]
        raise UsageError(
            message=f"Недопустимое значение параметра: {first['msg']}",
            details={"field": ".".join(str(part) for part in first["loc"]) or "<root>"},
        ) from e


def _non_negative(value: Optional[int], flag: str, minimum: int) -> None:
    if value is not None and value < minimum:
        raise UsageError(message=f"Флаг {flag} должен быть не меньше {minimum}", details={"flag": flag})


def dispatch(args: argparse.Namespace, service: AnalysisService) -> tuple[int, Dict[str, Any]]:
    """Выполняет команду.

    Args:
        args: Разобранные аргументы.
        service: Сервис анализа.

    Returns:
        tuple[int, Dict[str, Any]]: Код завершения и поля строки диагностики.
    """
    verb = args.verb
    if verb == "simulate":
        return 0, service.simulate(args.input, args.output, simulation_config(args))
    if verb == "measure":
        report = service.measure(args.input, args.output)
        return 0, {"class_label": report.class_label.value, "mu_diff": report.mu_diff}
    if verb == "reduce":
        document = service.reduce(args.input, args.output)
        return 0, {
            "removed": len(document.trace.removed_nodes),
            "rounds": document.trace.rounds,
            "before": document.before.class_label.value,
            "after": document.after.class_label.value,
        }
    if verb == "automaton":
        _non_negative(args.max_len, "--max-len", 0)
        automaton = service.automaton(args.input, args.output, args.max_len)
        fields: Dict[str, Any] = {"nfa_states": len(automaton.nfa.states), "dfa_states": len(automaton.dfa.states)}
        if automaton.equivalence is not None:
            fields["equivalent"] = automaton.equivalence.equivalent
        return 0, fields
    if verb == "solve":
        _non_negative(args.budget, "--budget", 1)
        document = service.solve(args.input, args.output, args.problem, seed=args.seed, budget=args.budget)
        summary = {key: document.result[key] for key in ("cost", "verdict", "sat_class") if key in document.result}
        return 0, {"problem": document.problem.value, **summary, "verified": document.verified}
    validation = service.validate(args.input, args.output)
    return (0 if validation.valid else 1), {"valid": validation.valid, "violations": len(validation.violations)}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Запускает команду и возвращает код завершения.

    Args:
        argv: Аргументы командной строки (по умолчанию sys.argv[1:]).

    Returns:
        int: 0 при успехе, 1 при ошибке предметной области, 2 при ошибке использования.
    """
    setup_logger()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    log = logger.bind(verb=args.verb)
    try:
        code, fields = dispatch(args, AnalysisService())
    except AppError as e:
        log.warning("Command failed", code=e.code, details=e.details)
        print(render_diagnostic(status="error", code=e.code, message=e.message), file=sys.stderr)
        return e.exit_code
    except Exception as e:
        log.exception("Unhandled error")
        print(render_diagnostic(status="error", code="internal_error", message=str(e)), file=sys.stderr)
        return 1

    status = "ok" if code == 0 else "error"
    print(render_diagnostic(status=status, command=args.verb, **fields), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
