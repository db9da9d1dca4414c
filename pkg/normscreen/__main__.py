"""Entry point of ``python -m normscreen``."""
import sys

from normscreen.report.cli import main

sys.exit(main())
