from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1


class Document(BaseModel):
    """Базовая схема JSON-документа верхнего уровня.

    Каждый документ несет поле ``"schema"`` с версией формата.
    """
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias='schema')


class ErrorReport(Document):
    detail: str
