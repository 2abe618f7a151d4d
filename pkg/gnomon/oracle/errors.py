class OracleError(Exception):
    """Internal disagreement between the two constructibility criteria."""

    code: str = "oracle_error"

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class OutOfRange(OracleError):
    code = "out_of_range"
