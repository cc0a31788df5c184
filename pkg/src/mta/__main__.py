"""Allow running the CLI as `python -m mta`."""

import sys

from .cli import main

sys.exit(main())
