"""Run the command line interface with python -m pygrassmannph."""

import sys

from pygrassmannph.cli import main

sys.exit(main())
