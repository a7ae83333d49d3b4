#!/usr/bin/env python3
"""
BCN Analysis Script

Runs the ``bcn`` command line without installing the package, e.g.::

    python scripts/bcn.py decompose data/models/flip_flops.bcn --all
"""

import sys
from pathlib import Path

# Add the source tree to the path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root / 'src'))

from bcn_cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
