"""Allow `python -m orbit_atlas`."""

import sys

from .cli import main

sys.exit(main())
