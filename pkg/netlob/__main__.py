"""
Entry point for running netlob as a module: python -m netlob
"""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
