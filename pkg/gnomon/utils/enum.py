from enum import Enum


class StrEnum(str, Enum):
    """
    String-valued enum whose ``auto()`` values are the lower-cased member names.

    Values go straight into JSON reports and CLI text, so they must stay stable.
    """

    @staticmethod
    def _generate_next_value_(name: str, start: int, count: int, last_values: list) -> str:
        return name.lower()

    def __str__(self) -> str:
        return self.value
