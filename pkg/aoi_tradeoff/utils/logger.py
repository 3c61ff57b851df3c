import sys
import logging

log_levels = {
    "debug":logging.DEBUG,
    "info":logging.INFO,
    "warn":logging.WARN,
    "warning":logging.WARNING,
    "error":logging.ERROR,
    "critical":logging.CRITICAL,
    "crit":logging.CRITICAL,
}

DEFAULT_LOG_FORMAT = '%(asctime)-15s [%(levelname)s] %(name)s: %(message)s'


def setup_logger(name: str, log_level: str = "critical", log_format: str = DEFAULT_LOG_FORMAT) -> logging.Logger:
    """Return the logger `name` set to `log_level`.

    A stderr handler is attached only if the logger has nothing but the
    library NullHandler, so configuring the same logger twice does not
    duplicate the output."""
    if log_level.lower() not in log_levels:
        raise ValueError((
            "The log level '{}' is not supported. The available ones are '{}'."
        ).format(log_level, list(log_levels.keys())))

    logger = logging.getLogger(name)
    if all(isinstance(handler, logging.NullHandler) for handler in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(log_format))
        logger.addHandler(handler)
    logger.setLevel(log_levels[log_level.lower()])
    return logger
