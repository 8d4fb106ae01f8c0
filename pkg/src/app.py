import logging
import os
import sys
import time
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from .cli import CommandEngine, RequestError, parse_request, render_output
from .parallel import resolve_workers

LOGGER = logging.getLogger(__name__)

LOG_LEVEL_ENV = "TAUTCHERN_LOG_LEVEL"

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DISAGREEMENT = 3


def resolve_log_level(name: Any) -> int:
    """Numeric logging level for a name such as "debug"."""
    level = logging.getLevelName(str(name).upper())
    if not isinstance(level, int):
        raise RequestError(f"unknown log level {name!r}")
    return level


class TautChernApp:
    """Main application controller: parse, dispatch, render."""

    DEFAULT_CONFIG: Dict[str, Any] = {
        'smax': None,        # None = dimension of the space
        'mode': None,        # None = the command's default mode
        'format': 'json',
        'workers': None,     # None = TAUTCHERN_THREADS or cpu count
        'log_level': 'INFO',
        'timing': False,
    }

    def __init__(self):
        self.command_engine = CommandEngine()

        # Application state
        self.initialized = False
        self.last_command: Optional[str] = None
        self.last_exit_code: Optional[int] = None
        self.last_elapsed = 0.0
        self.last_document = None

        # Configuration
        self.config: Dict[str, Any] = dict(self.DEFAULT_CONFIG)

    def initialize(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the application.

        Args:
            config: Optional configuration dictionary
        """
        if config:
            self.config.update(config)
        env_level = os.environ.get(LOG_LEVEL_ENV)
        if env_level and not (config and 'log_level' in config):
            self.config['log_level'] = env_level
        self.initialized = True
        LOGGER.debug("🧮 %d commands available: %s", len(self.command_engine.get_available_commands()),
                     ", ".join(self.command_engine.get_available_commands()))

    def run(self, argv: Sequence[str]) -> int:
        """
        Run one command line.

        Args:
            argv: Arguments without the program name

        Returns:
            Exit code: 0 success, 2 invalid input, 3 theorem/oracle disagreement
        """
        if not self.initialized:
            self.initialize()
        root = logging.getLogger()
        previous_level = root.level
        try:
            return self._run(argv)
        finally:
            root.setLevel(previous_level)

    def _run(self, argv: Sequence[str]) -> int:
        start = time.perf_counter()
        try:
            request = parse_request(argv, self.config)
            if request.options.log_level:
                logging.getLogger().setLevel(resolve_log_level(request.options.log_level))
            workers = resolve_workers(request.options.workers if request.options.workers is not None
                                      else self.config.get('workers'))
            self.last_command = request.command
            doc = self.command_engine.execute(request, workers)
        except ValueError as exc:
            kind = "request" if isinstance(exc, RequestError) else "input"
            LOGGER.error("❌ invalid %s: %s", kind, exc)
            self.last_exit_code = EXIT_VALIDATION
            return EXIT_VALIDATION

        self.last_elapsed = time.perf_counter() - start
        if request.options.timing:
            doc.metadata["elapsed"] = round(self.last_elapsed, 3)
        self.last_document = doc

        payload = render_output(doc, request.format)
        if request.options.out:
            Path(request.options.out).write_bytes(payload)
            LOGGER.info("💾 wrote %s", request.options.out)
        else:
            sys.stdout.buffer.write(payload)
            sys.stdout.flush()

        if doc.agreement is False:
            self.last_exit_code = EXIT_DISAGREEMENT
        elif doc.data.get("valid") is False:
            self.last_exit_code = EXIT_VALIDATION
        else:
            self.last_exit_code = EXIT_OK
        return self.last_exit_code

    def get_status(self) -> Dict[str, Any]:
        """Get status information about the last run."""
        return {
            'initialized': self.initialized,
            'last_command': self.last_command,
            'last_exit_code': self.last_exit_code,
            'elapsed': self.last_elapsed,
            'available_commands': self.command_engine.get_available_commands(),
        }
