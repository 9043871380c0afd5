"""Репозитории экземпляров задач: JSON для графов и TSP, DIMACS CNF для формул."""

from pathlib import Path
from typing import List, Type

from pydantic import ValidationError as SchemaError

from src.core import ProblemKind
from src.core.exceptions import InputFormatError
from src.core.logger import get_logger
from src.core.schemas import FrozenModel
from src.infrastructure.storage.base import JsonRepository, schema_details
from src.services.problems import CnfFormula, InterdictionInstance, ShortestPathInstance, TspInstance

logger = get_logger(__name__)

INSTANCE_MODELS: dict[ProblemKind, Type[FrozenModel]] = {
    ProblemKind.SSSP: ShortestPathInstance,
    ProblemKind.SSSP_ORACLE: ShortestPathInstance,
    ProblemKind.TSP: TspInstance,
    ProblemKind.TSP_GREEDY: TspInstance,
    ProblemKind.TSP_ANNEAL: TspInstance,
    ProblemKind.INTERDICTION: InterdictionInstance,
}


class ParsedCnf(FrozenModel):
    """Результат разбора DIMACS.

    Attributes:
        formula: Формула без пустых клоз.
        empty_clause: Во входе встретилась пустая клоза (формула тривиально невыполнима).
    """
    formula: CnfFormula
    empty_clause: bool = False


def instance_repository(kind: ProblemKind) -> JsonRepository:
    """JSON-репозиторий экземпляра задачи данного типа.

    Raises:
        InputFormatError: Если задача читается не из JSON.
    """
    model = INSTANCE_MODELS.get(kind)
    if model is None:
        raise InputFormatError(message=f"Задача '{kind.value}' читается из DIMACS, а не из JSON")
    return JsonRepository(model)


class DimacsRepository:
    """Чтение и запись формул в формате DIMACS CNF.

    Attributes:
        logger: Логгер репозитория.
    """

    def __init__(self) -> None:
        self.logger = logger.bind(format="dimacs")

    def parse(self, text: str, source: str = "<string>") -> ParsedCnf:
        """Разбирает DIMACS CNF.

        Строки ``c`` и ``%`` пропускаются, заголовок ``p cnf <vars> <clauses>`` обязателен
        до первой клозы, клозы завершаются нулём и могут занимать несколько строк.

        Args:
            text: Содержимое файла.
            source: Имя источника для сообщений.

        Returns:
            ParsedCnf: Формула и признак пустой клозы.

        Raises:
            InputFormatError: С номером строки при нарушении формата.
        """
        variables: int | None = None
        declared = 0
        clauses: List[tuple[int, ...]] = []
        pending: List[int] = []
        empty_clause = False

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith(("c", "%")):
                continue
            if line.startswith("p"):
                parts = line.split()
                if variables is not None or len(parts) != 4 or parts[1] != "cnf":
                    raise InputFormatError(
                        message=f"Некорректный заголовок в {source}, строка {number}",
                        details={"source": source, "line": number},
                    )
                try:
                    variables, declared = int(parts[2]), int(parts[3])
                except ValueError as e:
                    raise InputFormatError(
                        message=f"Нечисловой заголовок в {source}, строка {number}",
                        details={"source": source, "line": number},
                    ) from e
                continue
            if variables is None:
                raise InputFormatError(
                    message=f"Клоза до заголовка в {source}, строка {number}",
                    details={"source": source, "line": number},
                )
            for token in line.split():
                try:
                    literal = int(token)
                except ValueError as e:
                    raise InputFormatError(
                        message=f"Нечисловой литерал '{token}' в {source}, строка {number}",
                        details={"source": source, "line": number, "token": token},
                    ) from e
                if abs(literal) > variables:
                    raise InputFormatError(
                        message=f"Литерал {literal} вне диапазона переменных в {source}, строка {number}",
                        details={"source": source, "line": number, "literal": literal},
                    )
                if literal == 0:
                    if pending:
                        clauses.append(tuple(pending))
                    else:
                        empty_clause = True
                    pending = []
                else:
                    pending.append(literal)

        if variables is None:
            raise InputFormatError(message=f"В {source} нет заголовка p cnf", details={"source": source})
        if pending:
            clauses.append(tuple(pending))
        if declared != len(clauses) + int(empty_clause):
            self.logger.warning("Clause count differs from header", declared=declared, parsed=len(clauses))
        try:
            formula = CnfFormula(variables=variables, clauses=tuple(clauses))
        except SchemaError as e:
            raise InputFormatError(
                message=f"Формула в {source} некорректна", details={"source": source, **schema_details(e)}
            ) from e
        return ParsedCnf(formula=formula, empty_clause=empty_clause)

    def read(self, path: Path) -> ParsedCnf:
        """Читает DIMACS-файл.

        Raises:
            InputFormatError: Если файл не читается или не разбирается.
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise InputFormatError(message=f"Не удалось прочитать файл {path}", details={"error": str(e)}) from e
        return self.parse(text, source=str(path))

    def dumps(self, formula: CnfFormula) -> str:
        """Сериализует формулу в DIMACS."""
        lines = [f"p cnf {formula.variables} {len(formula.clauses)}"]
        lines.extend(" ".join(str(literal) for literal in clause) + " 0" for clause in formula.clauses)
        return "\n".join(lines) + "\n"

    def write(self, path: Path, formula: CnfFormula) -> None:
        """Записывает формулу в DIMACS-файл."""
        try:
            Path(path).write_text(self.dumps(formula), encoding="utf-8")
        except OSError as e:
            raise InputFormatError(message=f"Не удалось записать файл {path}", details={"error": str(e)}) from e
