from __future__ import annotations

import sys

from src.controllers.experiment_controller import main


def run() -> None:
    """Entry point used by the ``z2metts`` console script."""
    sys.exit(main())


if __name__ == "__main__":
    run()
