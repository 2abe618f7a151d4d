class CliError(RuntimeError):
    pass


class InvalidViewport(CliError):
    def __init__(self, size: int) -> None:
        super().__init__(f"invalid viewport size {size}: must be a positive number of pixels")
        self.size = size
