#!/usr/bin/env python3
"""
tautchern
Main entry point for the command line tool.
"""

import logging
import sys

from src.app import TautChernApp

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def main(argv=None) -> int:
    """Main application entry point."""
    logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr, level=logging.INFO)

    # Create application instance
    app = TautChernApp()

    try:
        app.initialize()
        return app.run(sys.argv[1:] if argv is None else argv)
    except KeyboardInterrupt:
        logging.getLogger(__name__).warning("Received interrupt signal...")
        return 130
    except Exception:
        logging.getLogger(__name__).exception("Unexpected failure")
        raise


if __name__ == "__main__":
    sys.exit(main())
