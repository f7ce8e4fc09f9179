from pydantic import BaseModel


class BasisDescriptor(BaseModel):
    q: int
    elements: list[str]
