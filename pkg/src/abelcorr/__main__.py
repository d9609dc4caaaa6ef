"""Module entry point so `python -m abelcorr` behaves like the console script."""

import sys

from abelcorr.cli import main

if __name__ == "__main__":
    sys.exit(main())
