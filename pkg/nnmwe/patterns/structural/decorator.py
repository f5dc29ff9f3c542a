import logging
import time
from functools import wraps

from nnmwe.exceptions import ConfigError, NnmweError

logger = logging.getLogger(__name__)

# Exit codes carried by failed stage results
EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_CONFIG_ERROR = 2


class StageDecorator:
    """
    Decorator Pattern Implementation

    This class wraps pipeline stages with cross-cutting behaviour: timing
    and logging, and turning domain errors into result dictionaries.
    """

    @staticmethod
    def log_stage(stage):
        """
        Decorator to log the start, outcome and duration of a stage.

        Args:
            stage (str): The stage name used in log lines

        Returns:
            function: The decorator
        """
        def decorator(func):
            @wraps(func)
            def wrapper(*args, **kwargs):
                logger.info("Stage %s started", stage)
                started = time.perf_counter()
                result = func(*args, **kwargs)
                elapsed = time.perf_counter() - started
                if result.get("success", False):
                    logger.info("Stage %s finished in %.3fs", stage, elapsed)
                else:
                    logger.error("Stage %s failed after %.3fs: %s", stage, elapsed, result.get("message"))
                return result
            return wrapper
        return decorator

    @staticmethod
    def result_on_error(func):
        """
        Decorator to return a failed result instead of raising.

        Configuration problems and missing files give exit code 2; malformed
        input data and broken invariants give exit code 1.
        """
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                result = func(*args, **kwargs)
            except ConfigError as e:
                return {"success": False, "message": str(e), "exit_code": EXIT_CONFIG_ERROR}
            except OSError as e:
                return {"success": False, "message": f"{e.strerror or e}: {e.filename}", "exit_code": EXIT_CONFIG_ERROR}
            except (NnmweError, ValueError) as e:
                return {"success": False, "message": str(e), "exit_code": EXIT_DATA_ERROR}
            result.setdefault("exit_code", EXIT_OK)
            return result
        return wrapper


log_stage = StageDecorator.log_stage
result_on_error = StageDecorator.result_on_error
