# app.py
"""
Command-line entry point.

    python app.py detect --config run.cfg
    python app.py optimize --view global --set epsilon=0.2 --set p_m=1
    python app.py sweep --axis epsilon --config sweep.cfg --output eps.csv
"""

# imports built-in modules
import sys

# imports local modules
from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
