"""Entry point for running unruh-bench as a module.

Allows the package to be run as:
    python -m unruh_bench
"""

import sys

from unruh_bench.cli import main

if __name__ == "__main__":
    sys.exit(main())
