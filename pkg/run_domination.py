#!/usr/bin/env python3
"""
Command-line launcher for the cactus domination tools.
Run `python run_domination.py --help` for the list of commands.
"""

import sys
import os

# Add the repository root to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from config.solver_config import solver_config
from src.cli import main

if __name__ == "__main__":
    # Log records go to stderr; stdout carries command output only
    solver_config.configure_logging()
    sys.exit(main())
