"""Экспорт траектории в CSV: ``time,S,L,<узлы...>``, 17 значащих цифр."""

import csv
import io
from pathlib import Path
from typing import List

from src.core.exceptions import InputFormatError
from src.core.logger import get_logger
from src.services.dynamics import Trajectory

logger = get_logger(__name__)


def _format(value: float) -> str:
    return format(value, ".17g")


class TrajectoryRepository:
    """Запись траекторий в CSV и чтение их обратно в виде строк чисел."""

    def dumps(self, trajectory: Trajectory) -> str:
        """Сериализует траекторию: одна строка на принятый снимок."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        node_ids = list(trajectory.snapshots[0].node_ids)
        writer.writerow(["time", "S", "L", *node_ids])
        for snapshot in trajectory.snapshots:
            writer.writerow(
                [
                    _format(snapshot.time),
                    _format(snapshot.entropy),
                    _format(snapshot.generator),
                    *(_format(float(value)) for value in snapshot.occupancy_values),
                ]
            )
        return buffer.getvalue()

    def write(self, path: Path, trajectory: Trajectory) -> None:
        """Записывает траекторию в файл.

        Raises:
            InputFormatError: Если файл не удаётся записать.
        """
        try:
            Path(path).write_text(self.dumps(trajectory), encoding="utf-8")
        except OSError as e:
            raise InputFormatError(message=f"Не удалось записать файл {path}", details={"error": str(e)}) from e
        logger.info("Trajectory written", path=str(path), rows=len(trajectory.snapshots))

    def read(self, path: Path) -> tuple[List[str], List[List[float]]]:
        """Читает CSV траектории.

        Returns:
            tuple[List[str], List[List[float]]]: Заголовок и строки значений.

        Raises:
            InputFormatError: Если файл не читается или значение не число.
        """
        try:
            with Path(path).open(encoding="utf-8", newline="") as handle:
                reader = csv.reader(handle)
                header = next(reader)
                rows = [[float(value) for value in row] for row in reader]
        except (OSError, StopIteration, ValueError) as e:
            raise InputFormatError(message=f"Некорректный CSV траектории {path}", details={"error": str(e)}) from e
        return header, rows
