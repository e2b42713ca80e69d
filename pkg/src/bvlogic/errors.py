class SizeGuardError(ValueError):
    """An input exceeds the bound a procedure is willing to enumerate."""


def guard(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise SizeGuardError(f"{what} = {value} exceeds limit {limit}")
