"""Базовый файловый репозиторий.

Этот модуль предоставляет обобщённый репозиторий для чтения и записи Pydantic-моделей
в JSON-файлы. Низкоуровневые ошибки (ввод-вывод, синтаксис JSON, схема) заворачиваются
в InputFormatError.
"""

import json
from pathlib import Path
from typing import Any, Generic, Type, TypeVar

from pydantic import BaseModel
from pydantic import ValidationError as SchemaError

from src.core.exceptions import InputFormatError
from src.core.logger import get_logger

logger = get_logger(__name__)
ModelType = TypeVar("ModelType", bound=BaseModel)


def schema_details(error: SchemaError) -> dict[str, Any]:
    """Первое нарушение схемы: путь к полю и сообщение."""
    first = error.errors()[0]
    return {"field": ".".join(str(part) for part in first["loc"]) or "<root>", "error": first["msg"]}


def read_text(path: Path) -> str:
    """Читает текстовый файл.

    Raises:
        InputFormatError: Если файл не читается.
    """
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        logger.error("Failed to read file", path=str(path), error=str(e))
        raise InputFormatError(message=f"Не удалось прочитать файл {path}", details={"error": str(e)}) from e


def load_json(text: str, source: str = "<string>") -> Any:
    """Разбирает JSON, указывая строку и столбец ошибки.

    Raises:
        InputFormatError: При синтаксической ошибке.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(
            message=f"Некорректный JSON в {source}: строка {e.lineno}, столбец {e.colno}",
            details={"source": source, "line": e.lineno, "column": e.colno},
        ) from e


class JsonRepository(Generic[ModelType]):
    """Репозиторий JSON-документов одной модели.

    Attributes:
        model: Класс Pydantic-модели документа.
        logger: Логгер с контекстом модели.
    """

    def __init__(self, model: Type[ModelType]):
        """Инициализирует репозиторий.

        Args:
            model: Класс Pydantic-модели.
        """
        self.model = model
        self.logger = logger.bind(model=model.__name__)

    def parse(self, text: str, source: str = "<string>") -> ModelType:
        """Разбирает документ из строки.

        Args:
            text: Содержимое JSON.
            source: Имя источника для сообщений.

        Returns:
            ModelType: Провалидированная модель.

        Raises:
            InputFormatError: При синтаксической ошибке или несоответствии схеме.
        """
        return self.from_data(load_json(text, source), source)

    def from_data(self, data: Any, source: str = "<string>") -> ModelType:
        """Валидирует уже разобранный JSON.

        Raises:
            InputFormatError: При несоответствии схеме.
        """
        try:
            return self.model.model_validate(data)
        except SchemaError as e:
            details = schema_details(e)
            raise InputFormatError(
                message=f"Документ {source} не соответствует схеме {self.model.__name__}: {details['field']}",
                details={"source": source, **details},
            ) from e

    def read(self, path: Path) -> ModelType:
        """Читает документ из файла.

        Raises:
            InputFormatError: Если файл не читается или не разбирается.
        """
        instance = self.parse(read_text(path), source=str(path))
        self.logger.debug("Document loaded", path=str(path))
        return instance

    def dumps(self, instance: ModelType) -> str:
        """Сериализует модель по псевдонимам полей."""
        return json.dumps(instance.model_dump(mode="json", by_alias=True), indent=2, ensure_ascii=False) + "\n"

    def write(self, path: Path, instance: ModelType) -> None:
        """Записывает документ в файл.

        Raises:
            InputFormatError: Если файл не удаётся записать.
        """
        try:
            Path(path).write_text(self.dumps(instance), encoding="utf-8")
        except OSError as e:
            self.logger.error("Failed to write document", path=str(path), error=str(e))
            raise InputFormatError(message=f"Не удалось записать файл {path}", details={"error": str(e)}) from e
        self.logger.info("Document written", path=str(path))
