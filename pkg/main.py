"""
Main entry point for qgain.
"""

import sys

from qgain.main import main

if __name__ == "__main__":
    sys.exit(main())
