#!/usr/bin/env python
"""
Run the emovec command-line tool without installing the package.

Usage:
    python run_emovec.py calibrate --input benchmark/ --out calibration.json
    python run_emovec.py analyze --calibration calibration.json --input solos/ --out solos.csv
    python run_emovec.py compare --a famous.csv --b generated.csv --out-prefix report
"""

import sys

from src.cli.main import main


if __name__ == "__main__":
    sys.exit(main())
