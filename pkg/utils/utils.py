import sys
from datetime import datetime
from zoneinfo import ZoneInfo

from utils.settings import get_settings


class Utils():

    # Interruptor global de logs (el CLI lo ajusta con --quiet / --verbose)
    _verbose = None

    @staticmethod
    def dateprint() -> str:
        """
        Returns the current date and time in the format "dd/mm/yyyy HH:MM:SS.sss".
        The timezone comes from ANTIDIM_TIMEZONE (UTC by default).
        """
        return datetime.now(ZoneInfo(get_settings().timezone)).strftime("%d/%m/%Y %H:%M:%S.%f")[:-3]

    @staticmethod
    def set_verbose(verbose: bool) -> None:
        Utils._verbose = verbose

    @staticmethod
    def is_verbose() -> bool:
        if Utils._verbose is None:
            return get_settings().verbose
        return Utils._verbose

    @staticmethod
    def log(component: str, message: str) -> None:
        """
        Writes a timestamped log line to stderr. Stdout is reserved for payloads.

        Args:
            component: Short tag shown in brackets, e.g. "Sweep".
            message: Log text.
        """
        if not Utils.is_verbose():
            return
        print(f"{Utils.dateprint()} - [{component}] {message}", file=sys.stderr, flush=True)

    @staticmethod
    def log_error(component: str, message: str) -> None:
        """Like log, but written even in quiet mode."""
        print(f"{Utils.dateprint()} - [{component}] ❌ {message}", file=sys.stderr, flush=True)
