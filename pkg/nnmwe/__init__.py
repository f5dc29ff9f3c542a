import logging

from dotenv import load_dotenv

from nnmwe.exceptions import ConfigError

__version__ = "0.1.0"

# Load environment variables
load_dotenv()


def configure_logging(config):
    """
    Configure the package logger from a Config object.

    Args:
        config (Config): The configuration carrying LOG_LEVEL and LOG_FILE

    Returns:
        logging.Logger: The configured package logger

    Raises:
        ConfigError: If LOG_LEVEL is not a logging level name
    """
    level = config.LOG_LEVEL.upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigError(f"Unknown log level '{config.LOG_LEVEL}'")

    logger = logging.getLogger("nnmwe")
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.close()
    logger.handlers.clear()

    formatter = logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")

    console = logging.StreamHandler()
    console.setFormatter(formatter)
    logger.addHandler(console)

    if config.LOG_FILE:
        file_handler = logging.FileHandler(config.LOG_FILE, encoding="utf-8")
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger
