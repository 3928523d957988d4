from typing import Any

from pydantic import BaseModel, Extra

from driftpool.services.formatters import format_dict_key_to_camel_case


class BaseSchemaConfig(BaseModel):
    class Config:
        extra = Extra.forbid
        use_enum_values: bool = True
        validate_assignment: bool = True
        allow_population_by_field_name: bool = True


class BaseSchemaResult(BaseModel):
    class Config:
        use_enum_values: bool = True
        allow_population_by_field_name: bool = True
        alias_generator: Any = format_dict_key_to_camel_case
