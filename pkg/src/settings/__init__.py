from os import environ

budget = 10 ** 6
workers = 1
log_level = 'WARNING'

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def _positive_int(name: str, default: int) -> int:
    value = environ.get(name)
    if value is None or value == '':
        return default
    try:
        number = int(value)
    except ValueError:
        raise ValueError(f'{name} must be an integer, got {value!r}') from None
    if number < 1:
        raise ValueError(f'{name} must be at least 1, got {number}')
    return number


def init_settings() -> None:
    """
    Read settings from the environment. Put them in a .env file in the project root folder, see .env.example.
    :return: None
    """
    global budget, workers, log_level

    budget = _positive_int('WES_BUDGET', 10 ** 6)
    workers = _positive_int('WES_WORKERS', 1)
    log_level = environ.get('WES_LOG_LEVEL', 'WARNING').upper()
    if log_level not in LOG_LEVELS:
        raise ValueError(f'WES_LOG_LEVEL must be one of {", ".join(LOG_LEVELS)}, got {log_level!r}')
