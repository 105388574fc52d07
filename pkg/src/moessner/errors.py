class ParameterError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


def check_nat(name, value):
    # bool is an int subclass; reject it so True/False never sneak in as 1/0
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParameterError(f"{name} must be a non-negative integer, got {value!r}")
    if value < 0:
        raise ParameterError(f"{name} must be >= 0, got {value}")
    return value
